#include "pinterp/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace pinterp {

namespace {

using std::numbers::pi;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

double safe_log(double v) {
  return v > 0.0 ? std::log(v) : std::log(std::numeric_limits<double>::min());
}

double gk_integrate(const std::function<double(double)>& f, double a, double b) {
  double err = 0.0;
  const double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-14, &err);
  if (!(err <= 1e-10)) throw QuadratureError("moment quadrature did not converge");
  return v;
}

cplx monomial(const Point& z, const MultiIndex& alpha) {
  cplx v = 1.0;
  for (int c = 0; c < alpha.dim(); ++c) v *= std::pow(z(c), alpha[c]);
  return v;
}

std::pair<double, double> linear_fit(std::span<const int> x, std::span<const double> y) {
  require(x.size() == y.size() && x.size() >= 2, "fit: need at least two matching samples");
  const double m = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  require(sxx > 0.0, "fit: degrees must not all coincide");
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

} // namespace

double lebesgue_constant(const NodeArrayStage& stage, const Mesh& eval_mesh) {
  require(eval_mesh.dim == stage.dim(), "lebesgue_constant: mesh dimension mismatch");
  return stage.system().lebesgue_max(eval_mesh.points);
}

double lebesgue_function(const NodeArrayStage& stage, const Point& z) {
  return stage.system().lebesgue_function(z);
}

Eigen::VectorXd lebesgue_function(const NodeArrayStage& stage, std::span<const Point> z) {
  return stage.system().lebesgue_function(z);
}

GrowthReport growth_report(std::vector<int> degrees, std::vector<double> lebesgue_constants) {
  require(degrees.size() == lebesgue_constants.size(), "growth_report: length mismatch");
  GrowthReport r;
  r.degrees = std::move(degrees);
  r.lebesgue_constants = std::move(lebesgue_constants);
  for (std::size_t i = 0; i < r.degrees.size(); ++i) {
    const double n = r.degrees[i];
    const double lam = r.lebesgue_constants[i];
    r.root_scale.push_back(n >= 1 ? std::pow(lam, 1.0 / n) : kNaN);
    r.poly_scale.push_back(n >= 2 ? std::log(lam) / std::log(n) : kNaN);
    const double l2 = std::log(n + 2.0);
    r.loglog_scale.push_back(lam / (l2 * l2));
  }
  return r;
}

GrowthReport growth_report(std::span<const NodeArrayStage> stages, std::span<const Mesh> eval_meshes) {
  require(eval_meshes.size() == 1 || eval_meshes.size() == stages.size(),
          "growth_report: need one mesh or one mesh per stage");
  std::vector<int> deg;
  std::vector<double> lam;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    if (i > 0) require(stages[i].degree() > stages[i - 1].degree(), "growth_report: degrees must increase");
    deg.push_back(stages[i].degree());
    lam.push_back(lebesgue_constant(stages[i], eval_meshes.size() == 1 ? eval_meshes[0] : eval_meshes[i]));
  }
  return growth_report(std::move(deg), std::move(lam));
}

DiscreteMeasure empirical_measure(const PointSet& points) {
  require(!points.empty(), "empirical_measure: no points");
  DiscreteMeasure mu;
  mu.support = points;
  mu.weights.assign(points.size(), 1.0 / static_cast<double>(points.size()));
  mu.mass = 1.0;
  return mu;
}

DiscreteMeasure empirical_measure(const NodeArrayStage& stage) { return empirical_measure(stage.points()); }

EquilibriumReference EquilibriumReference::arcsine() {
  return {"interval", [](const MultiIndex& a) -> cplx {
            require(a.dim() == 1, "arcsine moments are univariate");
            if (a[0] % 2 == 1) return 0.0;
            const int k = a[0];
            return gk_integrate([k](double t) { return std::pow(std::cos(t), k); }, 0.0, pi) / pi;
          }};
}

EquilibriumReference EquilibriumReference::circle() {
  return {"disk_boundary", [](const MultiIndex& a) -> cplx {
            require(a.dim() == 1, "circle moments are univariate");
            return a[0] == 0 ? 1.0 : 0.0;
          }};
}

EquilibriumReference EquilibriumReference::real_disk() {
  return {"real_disk_B2", [](const MultiIndex& a) -> cplx {
            require(a.dim() == 2, "real-disk moments are bivariate");
            const int p = a[0], q = a[1];
            if (p % 2 == 1 || q % 2 == 1) return 0.0;
            // r = sin(phi) turns r^(p+q+1)/sqrt(1-r^2) dr into sin^(p+q+1)(phi) dphi
            const double radial =
                gk_integrate([p, q](double phi) { return std::pow(std::sin(phi), p + q + 1); }, 0.0, pi / 2);
            const double angular = gk_integrate(
                [p, q](double t) { return std::pow(std::cos(t), p) * std::pow(std::sin(t), q); }, 0.0, 2 * pi);
            return radial * angular / (2 * pi);
          }};
}

double moment_distance(const DiscreteMeasure& mu, const EquilibriumReference& ref, int max_total_degree) {
  require(!mu.support.empty(), "moment_distance: empty measure");
  require(max_total_degree >= 0, "moment_distance: negative degree");
  const int d = static_cast<int>(mu.support.front().size());
  double worst = 0.0;
  for (const auto& alpha : graded_indices(d, max_total_degree)) {
    cplx m = 0.0;
    for (std::size_t j = 0; j < mu.support.size(); ++j) m += mu.weights[j] * monomial(mu.support[j], alpha);
    worst = std::max(worst, std::abs(m - ref.moment_oracle(alpha)));
  }
  return worst;
}

double l_functional(const RadialDistribution& G, double tol) {
  G.validate();
  require(tol > 0.0, "l_functional: tolerance must be positive");
  boost::math::quadrature::tanh_sinh<double> inner_rule;
  boost::math::quadrature::tanh_sinh<double> outer_rule;
  double worst_inner = 0.0;
  auto inner = [&](double x) {
    const double b = 1.0 - x;
    if (!(b > 0.0)) return 0.0;
    double err = 0.0;
    const double v = inner_rule.integrate([&](double u) { return safe_log(G.difference(x, u)); }, 0.0, b,
                                          0.1 * tol, &err);
    worst_inner = std::max(worst_inner, err * b);
    return v;
  };
  double err = 0.0;
  const double v = outer_rule.integrate(
      [&](double x) { return x * x * safe_log(G(x)) + 2.0 * x * inner(x); }, 0.0, 1.0, tol, &err);
  if (!std::isfinite(v) || err > 1e3 * tol || worst_inner > 1e3 * tol)
    throw QuadratureError("l_functional: quadrature did not converge");
  return v;
}

double bos_vdm_limit_from_l(double L) { return std::exp(0.75 * L) / std::numbers::sqrt2; }

double bos_vdm_limit(const RadialDistribution& G) { return bos_vdm_limit_from_l(l_functional(G)); }

double tdiam_ball_closed_form(int d) {
  require(d >= 1, "tdiam_ball_closed_form: d must be >= 1");
  double h = 0.0, alt = 0.0;
  for (int j = 1; j <= d; ++j) {
    h += 1.0 / j;
    alt += (j % 2 == 0 ? 1.0 : -1.0) / j;
  }
  const double dd = d;
  double e = -0.25 * (2 * dd + 1) / dd * h + 0.5;
  if (d % 2 == 0) e += 0.5 * std::numbers::ln2 + alt / (4 * dd);
  else e += (dd - 1) / (2 * dd) * std::numbers::ln2 - alt / (4 * dd);
  return 0.5 * std::exp(e);
}

double tdiam_simplex_closed_form(int d) {
  const double b = tdiam_ball_closed_form(d);
  return b * b;
}

TriangularPolynomial::TriangularPolynomial(const PointSet& points, int s) : s_(s) {
  require(s >= 0, "triangular polynomial: s must be >= 0");
  require(static_cast<int>(points.size()) >= s, "triangular polynomial: fewer than s points");
  require(!points.empty(), "triangular polynomial: no points");
  const int d = static_cast<int>(points.front().size());
  int n = 0;
  while (dim_pn(d, n) <= s) ++n;
  alpha_ = graded_indices(d, n)[static_cast<std::size_t>(s)];
  nodes_.assign(points.begin(), points.begin() + s);
  if (s > 0) {
    system_ = std::make_shared<LagrangeSystem>(GradedBasis::conditioned_for(d, n, nodes_), nodes_);
    if (system_->degenerate()) throw DegenerateError("triangular polynomial: prefix is not unisolvent");
  }
}

cplx TriangularPolynomial::operator()(const Point& z) const {
  cplx v = monomial(z, alpha_);
  if (!system_) return v;
  const Eigen::VectorXcd l = system_->flips(z);
  for (std::size_t j = 0; j < nodes_.size(); ++j) v -= monomial(nodes_[j], alpha_) * l(static_cast<Eigen::Index>(j));
  return v;
}

double TriangularPolynomial::sup_norm(std::span<const Point> mesh) const {
  double m = 0.0;
  for (const auto& z : mesh) m = std::max(m, std::abs((*this)(z)));
  return m;
}

TriangularPolynomial triangular_g_polynomial(const PointSet& points, int s) { return {points, s}; }

double vk_lebesgue(const NodeArrayStage& stage, const Point& z) {
  require(stage.degree() >= 1, "vk_lebesgue: degree must be >= 1");
  return std::log(lebesgue_function(stage, z)) / stage.degree();
}

double vk_triangular(const TriangularPolynomial& g, const Point& z, std::span<const Point> mesh) {
  require(g.degree() >= 1, "vk_triangular: leading degree must be >= 1");
  const double norm = g.sup_norm(mesh);
  if (!(norm > 0.0)) throw DegenerateError("vk_triangular: polynomial vanishes on the mesh");
  return std::log(std::abs(g(z)) / norm) / g.degree();
}

double norming_constant_estimate(const Mesh& mesh) {
  const auto stage = approx_fekete_greedy(mesh, mesh.degree);
  const Mesh ref = reference_mesh(mesh);
  const Eigen::MatrixXcd on_mesh = stage.system().flips(mesh.points);
  const Eigen::MatrixXcd on_ref = stage.system().flips(ref.points);
  double worst = 1.0;
  for (Eigen::Index j = 0; j < on_mesh.rows(); ++j) {
    const double a = on_mesh.row(j).cwiseAbs().maxCoeff();
    const double b = on_ref.row(j).cwiseAbs().maxCoeff();
    worst = std::max(worst, b / a);
  }
  return worst;
}

double trend_slope(std::span<const int> degrees, std::span<const double> values) {
  return linear_fit(degrees, values).first;
}

double geometric_rate(std::span<const int> degrees, std::span<const double> values) {
  std::vector<double> logs;
  for (double v : values) {
    require(v > 0.0, "geometric_rate: values must be positive");
    logs.push_back(std::log(v));
  }
  return std::exp(linear_fit(degrees, logs).first);
}

} // namespace pinterp
