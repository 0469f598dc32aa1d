#include "pinterp/kergin.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace pinterp {

namespace {

// exactness of the simplex rule for integrands that are not polynomials
constexpr int kSmoothExactness = 21;

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

int node_dim(const KerginNodes& a) {
  require(!a.empty(), "kergin: need at least one node");
  const auto d = a.front().size();
  for (const auto& p : a) require(p.size() == d, "kergin: nodes of mixed dimension");
  return static_cast<int>(d);
}

// y = sum_{i=0}^k t_i a_i with t_0 = 1 - sum t_i
Point simplex_point(const KerginNodes& a, const Eigen::VectorXd& t) {
  Point y = a[0];
  for (Eigen::Index i = 0; i < t.size(); ++i) y += t(i) * (a[static_cast<std::size_t>(i + 1)] - a[0]);
  return y;
}

int rule_exactness(const JetOracle& f, int k) {
  if (const auto* p = f.as_polynomial()) return std::max(0, p->effective_degree() - k);
  return kSmoothExactness;
}

double relative_gap(cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

std::vector<std::vector<int>> multisets(int d, int k) {
  std::vector<std::vector<int>> out;
  for (const auto& m : homogeneous_indices(d, k)) out.push_back(m.exponents);
  return out;
}

std::string describe(const Point& p) {
  std::ostringstream s;
  s << "(";
  for (Eigen::Index c = 0; c < p.size(); ++c) s << (c ? ", " : "") << p(c).real();
  s << ")";
  return s.str();
}

} // namespace

cplx JetOracle::partial(const Point& y, const MultiIndex& beta) const {
  std::vector<Point> dirs;
  for (int c = 0; c < beta.dim(); ++c)
    for (int r = 0; r < beta[c]; ++r) {
      Point e = Point::Zero(beta.dim());
      e(c) = 1.0;
      dirs.push_back(e);
    }
  return jet(y, dirs);
}

UnivariateJet UnivariateJet::exp() {
  return {"exp", [](cplx t, int) { return std::exp(t); }};
}

UnivariateJet UnivariateJet::sin() {
  return {"sin", [](cplx t, int k) {
            switch (k % 4) {
            case 0: return std::sin(t);
            case 1: return std::cos(t);
            case 2: return -std::sin(t);
            default: return -std::cos(t);
            }
          }};
}

UnivariateJet UnivariateJet::inverse(cplx c) {
  // d^k/dt^k (c - t)^{-1} = k! (c - t)^{-(k+1)}
  return {"inverse", [c](cplx t, int k) {
            double fact = 1.0;
            for (int j = 2; j <= k; ++j) fact *= j;
            return fact / std::pow(c - t, k + 1);
          }};
}

UnivariateJet UnivariateJet::power(int p) {
  require(p >= 0, "UnivariateJet::power: exponent must be >= 0");
  return {"power", [p](cplx t, int k) -> cplx {
            if (k > p) return 0.0;
            double fall = 1.0;
            for (int j = 0; j < k; ++j) fall *= p - j;
            return fall * std::pow(t, p - k);
          }};
}

RidgeJet::RidgeJet(Point lambda, UnivariateJet h) : lambda_(std::move(lambda)), h_(std::move(h)) {
  require(lambda_.size() >= 1, "RidgeJet: empty direction");
}

cplx RidgeJet::jet(const Point& y, std::span<const Point> dirs) const {
  cplx v = h_.derivative((lambda_.transpose() * y)(0), static_cast<int>(dirs.size()));
  for (const auto& u : dirs) v *= (lambda_.transpose() * u)(0);
  return v;
}

cplx RidgeJet::partial(const Point& y, const MultiIndex& beta) const {
  cplx v = h_.derivative((lambda_.transpose() * y)(0), beta.degree());
  for (int c = 0; c < beta.dim(); ++c) v *= std::pow(lambda_(c), beta[c]);
  return v;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_jacobi_unit(int points, double alpha) {
  require(points >= 1, "gauss_jacobi_unit: need at least one point");
  require(alpha > -1.0, "gauss_jacobi_unit: alpha must exceed -1");
  // Golub-Welsch for the Jacobi weight (1-x)^alpha on [-1,1], then u = (1+x)/2
  const double b = 0.0;
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(points, points);
  for (int n = 0; n < points; ++n) {
    const double s = 2.0 * n + alpha + b;
    j(n, n) = n == 0 ? (b - alpha) / (alpha + b + 2.0) : (b * b - alpha * alpha) / (s * (s + 2.0));
    if (n + 1 < points) {
      const double m = n + 1;
      const double t = 2.0 * m + alpha + b;
      const double beta_n = 4.0 * m * (m + alpha) * (m + b) * (m + alpha + b) / (t * t * (t + 1.0) * (t - 1.0));
      j(n, n + 1) = j(n + 1, n) = std::sqrt(beta_n);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j);
  const double mu0 = std::pow(2.0, alpha + 1.0) / (alpha + 1.0);
  Eigen::VectorXd x = es.eigenvalues();
  Eigen::VectorXd w = mu0 * es.eigenvectors().row(0).transpose().array().square();
  x = (x.array() + 1.0) / 2.0;
  w *= std::pow(2.0, -alpha - 1.0);
  return {x, w};
}

SimplexRule simplex_rule(int k, int exactness) {
  require(k >= 0, "simplex_rule: dimension must be >= 0");
  require(exactness >= 0, "simplex_rule: exactness must be >= 0");
  SimplexRule rule;
  if (k == 0) {
    rule.nodes.emplace_back(0);
    rule.weights.push_back(1.0);
    return rule;
  }
  const int m = exactness / 2 + 1;
  // coordinate i carries the collapse Jacobian (1 - u_i)^(k-1-i)
  std::vector<std::pair<Eigen::VectorXd, Eigen::VectorXd>> lines;
  for (int i = 0; i < k; ++i) lines.push_back(gauss_jacobi_unit(m, static_cast<double>(k - 1 - i)));
  std::vector<int> idx(static_cast<std::size_t>(k), 0);
  while (true) {
    Eigen::VectorXd t(k);
    double w = 1.0, rest = 1.0;
    for (int i = 0; i < k; ++i) {
      const double u = lines[static_cast<std::size_t>(i)].first(idx[static_cast<std::size_t>(i)]);
      w *= lines[static_cast<std::size_t>(i)].second(idx[static_cast<std::size_t>(i)]);
      t(i) = rest * u;
      rest *= 1.0 - u;
    }
    rule.nodes.push_back(std::move(t));
    rule.weights.push_back(w);
    int c = k - 1;
    while (c >= 0 && ++idx[static_cast<std::size_t>(c)] == m) idx[static_cast<std::size_t>(c--)] = 0;
    if (c < 0) break;
  }
  return rule;
}

cplx kergin_eval(const KerginNodes& a, const JetOracle& f, const Point& x) {
  const int d = node_dim(a);
  require(f.dim() == d && x.size() == d, "kergin_eval: dimension mismatch");
  const int n = static_cast<int>(a.size()) - 1;
  cplx total = f(a[0]);
  for (int k = 1; k <= n; ++k) {
    std::vector<Point> dirs;
    for (int m = 0; m < k; ++m) dirs.push_back(x - a[static_cast<std::size_t>(m)]);
    const SimplexRule rule = simplex_rule(k, rule_exactness(f, k));
    if (const auto* p = f.as_polynomial()) {
      Polynomial q = *p;
      for (const auto& v : dirs) q = q.directional(v);
      for (std::size_t r = 0; r < rule.nodes.size(); ++r) total += rule.weights[r] * q(simplex_point(a, rule.nodes[r]));
    } else {
      for (std::size_t r = 0; r < rule.nodes.size(); ++r)
        total += rule.weights[r] * f.jet(simplex_point(a, rule.nodes[r]), dirs);
    }
  }
  return total;
}

Polynomial kergin_polynomial(const KerginNodes& a, const JetOracle& f) {
  const int d = node_dim(a);
  require(f.dim() == d, "kergin_polynomial: dimension mismatch");
  const int n = static_cast<int>(a.size()) - 1;
  Polynomial out = Polynomial::constant(d, f(a[0])).raised(n);
  for (int k = 1; k <= n; ++k) {
    const SimplexRule rule = simplex_rule(k, rule_exactness(f, k));
    std::vector<Point> ys;
    for (const auto& t : rule.nodes) ys.push_back(simplex_point(a, t));
    // I_beta = int_{S_k} d^beta f(y(t)) dt for every |beta| = k
    std::map<std::vector<int>, cplx> integral;
    for (const auto& beta : multisets(d, k)) {
      cplx s = 0.0;
      if (const auto* p = f.as_polynomial()) {
        const Polynomial q = p->derivative(MultiIndex(beta));
        for (std::size_t r = 0; r < ys.size(); ++r) s += rule.weights[r] * q(ys[r]);
      } else {
        const MultiIndex mb(beta);
        for (std::size_t r = 0; r < ys.size(); ++r) s += rule.weights[r] * f.partial(ys[r], mb);
      }
      integral[beta] = s;
    }
    // D^k f(y)(v_1..v_k) = sum over coordinate tuples of d_{i_1..i_k} f prod_m v_m[i_m]
    std::vector<int> tuple(static_cast<std::size_t>(k), 0);
    while (true) {
      std::vector<int> beta(static_cast<std::size_t>(d), 0);
      for (int i : tuple) ++beta[static_cast<std::size_t>(i)];
      const cplx weight = integral[beta];
      if (weight != cplx(0.0)) {
        Polynomial term = Polynomial::constant(d, weight);
        for (int m = 0; m < k; ++m) {
          const int c = tuple[static_cast<std::size_t>(m)];
          term = term * Polynomial::coordinate(d, c, a[static_cast<std::size_t>(m)](c));
        }
        out = out + term;
      }
      int c = k - 1;
      while (c >= 0 && ++tuple[static_cast<std::size_t>(c)] == d) tuple[static_cast<std::size_t>(c--)] = 0;
      if (c < 0) break;
    }
  }
  return out;
}

NewtonHermite::NewtonHermite(std::vector<cplx> nodes, const UnivariateJet& h, double tol) {
  require(!nodes.empty(), "NewtonHermite: no nodes");
  // group equal nodes, snapping near-equal ones to the first representative
  std::vector<char> placed(nodes.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (placed[i]) continue;
    placed[i] = 1;
    nodes_.push_back(nodes[i]);
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (!placed[j] && std::abs(nodes[j] - nodes[i]) <= tol * std::max(1.0, std::abs(nodes[i]))) {
        placed[j] = 1;
        nodes_.push_back(nodes[i]);
      }
  }
  const std::size_t m = nodes_.size();
  std::vector<cplx> col(m);
  for (std::size_t i = 0; i < m; ++i) col[i] = h(nodes_[i]);
  coeffs_.push_back(col[0]);
  double fact = 1.0;
  for (std::size_t j = 1; j < m; ++j) {
    fact *= static_cast<double>(j);
    for (std::size_t i = 0; i + j < m; ++i) {
      if (nodes_[i + j] == nodes_[i])
        col[i] = h.derivative(nodes_[i], static_cast<int>(j)) / fact;
      else
        col[i] = (col[i + 1] - col[i]) / (nodes_[i + j] - nodes_[i]);
    }
    coeffs_.push_back(col[0]);
  }
}

cplx NewtonHermite::operator()(cplx s) const {
  cplx v = coeffs_.back();
  for (std::size_t j = coeffs_.size() - 1; j-- > 0;) v = v * (s - nodes_[j]) + coeffs_[j];
  return v;
}

void CheckReport::record(double err, double tol, const std::string& what) {
  if (!(err <= tol)) {
    passed = false;
    failures.push_back(what + ": error " + std::to_string(err));
  }
  if (std::isnan(err) || err > max_error) max_error = err;
}

CheckReport kergin_interpolation_check(const KerginNodes& a, const JetOracle& f, double tol) {
  const int d = node_dim(a);
  CheckReport rep;
  rep.name = "interpolation";
  const Polynomial k = kergin_polynomial(a, f);
  std::vector<char> seen(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    int mult = 0;
    for (std::size_t j = i; j < a.size(); ++j)
      if ((a[j] - a[i]).cwiseAbs().maxCoeff() <= 1e-12) {
        seen[j] = 1;
        ++mult;
      }
    for (int order = 0; order < mult; ++order)
      for (const auto& beta : multisets(d, order)) {
        const MultiIndex mb(beta);
        const double err = relative_gap(k.derivative(mb)(a[i]), f.partial(a[i], mb));
        rep.record(err, tol, "derivative order " + std::to_string(order) + " at " + describe(a[i]));
      }
  }
  return rep;
}

CheckReport ridge_identity_check(const KerginNodes& a, const Point& lambda, const UnivariateJet& h,
                                 const Point& x, double tol) {
  CheckReport rep;
  rep.name = "ridge";
  const RidgeJet f(lambda, h);
  std::vector<cplx> t;
  for (const auto& p : a) t.push_back((lambda.transpose() * p)(0));
  const NewtonHermite lip(t, h);
  const cplx lhs = kergin_eval(a, f, x);
  const cplx rhs = lip((lambda.transpose() * x)(0));
  rep.record(relative_gap(lhs, rhs), tol, "ridge identity at " + describe(x));
  return rep;
}

CheckReport kergin_algebra_checks(const KerginNodes& a, const std::vector<std::size_t>& b_indices,
                                  const JetOracle& f, std::uint64_t seed, double tol) {
  const int d = node_dim(a);
  CheckReport rep;
  rep.name = "algebra";
  std::mt19937_64 rng(seed);
  // probe points in the node bounding box, widened by 0.5
  Eigen::VectorXd lo = Eigen::VectorXd::Constant(d, std::numeric_limits<double>::infinity());
  Eigen::VectorXd hi = -lo;
  for (const auto& p : a) {
    lo = lo.cwiseMin(p.real());
    hi = hi.cwiseMax(p.real());
  }
  std::vector<Point> probes;
  for (int r = 0; r < 20; ++r) {
    Point x(d);
    for (int c = 0; c < d; ++c) x(c) = std::uniform_real_distribution<double>(lo(c) - 0.5, hi(c) + 0.5)(rng);
    probes.push_back(x);
  }
  const Polynomial ka = kergin_polynomial(a, f);

  KerginNodes perm = a;
  std::shuffle(perm.begin(), perm.end(), rng);
  const Polynomial kp = kergin_polynomial(perm, f);
  for (const auto& x : probes) rep.record(relative_gap(kp(x), ka(x)), tol, "permutation invariance at " + describe(x));

  KerginNodes b;
  for (auto i : b_indices) {
    require(i < a.size(), "kergin_algebra_checks: sub-tuple index out of range");
    b.push_back(a[i]);
  }
  if (!b.empty()) {
    const Polynomial kb = kergin_polynomial(b, f);
    const Polynomial kba = kergin_polynomial(b, PolynomialJet(ka));
    for (const auto& x : probes) rep.record(relative_gap(kba(x), kb(x)), tol, "projection identity at " + describe(x));
  }
  return rep;
}

std::vector<CheckReport> kergin_suite(const std::string& suite, int instances, std::uint64_t seed) {
  static const std::vector<std::string> known{"polynomial", "hermite", "ridge", "algebra", "univariate"};
  if (suite == "all") {
    std::vector<CheckReport> out;
    for (const auto& s : known) {
      auto part = kergin_suite(s, instances, seed);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  require(std::find(known.begin(), known.end(), suite) != known.end(), "kergin_suite: unknown suite " + suite);
  require(instances >= 0, "kergin_suite: negative instance count");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::uniform_int_distribution<int> pick_d(1, 3), pick_n(0, 5);
  auto random_point = [&](int d) {
    Point p(d);
    for (int c = 0; c < d; ++c) p(c) = unit(rng);
    return p;
  };
  auto random_poly = [&](int d, int deg) {
    Polynomial p(d, deg);
    Eigen::VectorXcd c(p.coefficients().size());
    for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = unit(rng);
    return Polynomial(d, deg, c);
  };
  auto random_direction = [&](int d) {
    Point l = random_point(d);
    while (l.norm() < 1e-3) l = random_point(d);
    return Point(l / l.norm());
  };
  const std::vector<UnivariateJet> profiles{UnivariateJet::exp(), UnivariateJet::sin(), UnivariateJet::inverse(4.0)};

  std::vector<CheckReport> out;
  for (int inst = 0; inst < instances; ++inst) {
    const int d = suite == "univariate" ? 1 : pick_d(rng);
    const int n = pick_n(rng);
    KerginNodes a;
    for (int i = 0; i <= n; ++i) a.push_back(random_point(d));
    CheckReport rep;
    const std::string tag = " [d=" + std::to_string(d) + ", n=" + std::to_string(n) + "]";

    if (suite == "polynomial") {
      // projection onto P_n: polynomials of degree <= n are reproduced
      const Polynomial p = random_poly(d, n);
      const PolynomialJet f(p);
      rep = kergin_interpolation_check(a, f);
      const Polynomial k = kergin_polynomial(a, f);
      for (int r = 0; r < 20; ++r) {
        const Point x = random_point(d);
        rep.record(relative_gap(k(x), p(x)), 1e-8, "reproduction at " + describe(x));
        rep.record(relative_gap(kergin_eval(a, f, x), p(x)), 1e-8, "direct evaluation at " + describe(x));
      }
      rep.name = "polynomial";
    } else if (suite == "hermite") {
      // collapse random nodes onto earlier ones
      for (std::size_t i = 1; i < a.size(); ++i)
        if (unit(rng) < 0.0) a[i] = a[std::uniform_int_distribution<std::size_t>(0, i - 1)(rng)];
      const RidgeJet f(random_direction(d), profiles[static_cast<std::size_t>(inst) % profiles.size()]);
      rep = kergin_interpolation_check(a, f, 1e-8);
      rep.name = "hermite";
    } else if (suite == "ridge") {
      const Point lambda = random_direction(d);
      const auto& h = profiles[static_cast<std::size_t>(inst) % profiles.size()];
      rep = ridge_identity_check(a, lambda, h, random_point(d));
    } else if (suite == "algebra") {
      std::vector<std::size_t> b;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (unit(rng) < 0.0) b.push_back(i);
      if (b.empty()) b.push_back(0);
      rep = kergin_algebra_checks(a, b, PolynomialJet(random_poly(d, n + 2)), rng(), 1e-8);
    } else {
      for (std::size_t i = 1; i < a.size(); ++i)
        if (unit(rng) < -0.5) a[i] = a[i - 1];
      const auto& h = profiles[static_cast<std::size_t>(inst) % profiles.size()];
      const RidgeJet f(make_point({1.0}), h);
      const Polynomial k = kergin_polynomial(a, f);
      std::vector<cplx> t;
      for (const auto& p : a) t.push_back(p(0));
      const NewtonHermite newton(t, h);
      rep.name = "univariate";
      for (int r = 0; r < 20; ++r) {
        const Point x = random_point(1);
        rep.record(relative_gap(k(x), newton(x(0))), 1e-9, "univariate collapse at " + describe(x));
      }
    }
    for (auto& f : rep.failures) f += tag;
    out.push_back(std::move(rep));
  }
  return out;
}

} // namespace pinterp
