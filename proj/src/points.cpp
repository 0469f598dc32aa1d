#include "pinterp/points.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "pinterp/basis.hpp"

namespace pinterp {

namespace {

using std::numbers::pi;

constexpr double kTieTolerance = 1e-12;

void require(bool ok, const std::string& what) {
  if (!ok) throw InvalidArgument(what);
}

// cos and sin of pi*num/den, reduced to the first quadrant
std::pair<double, double> cis_pi_frac(long long num, long long den) {
  if (den <= 0) throw InvalidArgument("cos_pi_frac: denominator must be positive");
  long long r = num % (2 * den);
  if (r < 0) r += 2 * den;
  const long long q = (2 * r) / den;
  const long long rem = 2 * r - q * den;
  double c = 1.0, s = 0.0;
  if (rem != 0) {
    const double base = 0.5 * pi * static_cast<double>(rem) / static_cast<double>(den);
    c = std::cos(base);
    s = std::sin(base);
  }
  // + 0.0 turns negative zeros positive
  switch (q) {
  case 0: return {c + 0.0, s + 0.0};
  case 1: return {-s + 0.0, c + 0.0};
  case 2: return {-c + 0.0, -s + 0.0};
  default: return {s + 0.0, -c + 0.0};
  }
}

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

// N x M basis matrix with rows scaled to unit sup norm over the mesh
template <typename Scalar>
Mat<Scalar> scaled_matrix(const GradedBasis& basis, const Mesh& mesh) {
  Mat<Scalar> a = basis.evaluate_matrix<Scalar>(mesh.points);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    const double s = a.row(i).cwiseAbs().maxCoeff();
    if (s > 0.0) a.row(i) /= Scalar(s);
  }
  return a;
}

// first index attaining the maximum within the relative tie tolerance
template <typename Values, typename Allowed>
Eigen::Index argmax_first(const Values& v, Allowed&& allowed) {
  Eigen::Index best = -1;
  double bv = -1.0;
  for (Eigen::Index j = 0; j < v.size(); ++j) {
    if (!allowed(j)) continue;
    if (best < 0 || v(j) > bv * (1.0 + kTieTolerance)) {
      best = j;
      bv = v(j);
    }
  }
  return best;
}

template <typename Scalar>
std::vector<Eigen::Index> greedy_columns(Mat<Scalar> r, Eigen::Index count) {
  const Eigen::Index m = r.cols();
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  std::vector<Eigen::Index> chosen;
  const double scale = r.colwise().norm().maxCoeff();
  for (Eigen::Index k = 0; k < count; ++k) {
    const Eigen::VectorXd norms = r.colwise().norm().transpose();
    const Eigen::Index p = argmax_first(norms, [&](Eigen::Index j) { return !used[static_cast<std::size_t>(j)]; });
    if (p < 0 || !(norms(p) > kDegeneracyTolerance * scale))
      throw DegenerateError("approx_fekete_greedy: mesh does not determine P_n");
    used[static_cast<std::size_t>(p)] = 1;
    chosen.push_back(p);
    const Eigen::Matrix<Scalar, Eigen::Dynamic, 1> q = r.col(p) / Scalar(norms(p));
    // two projection passes keep the residuals orthogonal
    for (int pass = 0; pass < 2; ++pass) r -= q * (q.adjoint() * r);
  }
  return chosen;
}

template <typename Scalar>
std::vector<Eigen::Index> leja_rows(Mat<Scalar> a, const Eigen::VectorXd& row_weight, Eigen::Index count) {
  // a is M x N; partial pivoting over rows, column by column
  const Eigen::Index m = a.rows();
  std::vector<char> used(static_cast<std::size_t>(m), 0);
  std::vector<Eigen::Index> chosen;
  for (Eigen::Index i = 0; i < m; ++i) a.row(i) *= Scalar(row_weight(i));
  for (Eigen::Index k = 0; k < count; ++k) {
    const Eigen::VectorXd mod = a.col(k).cwiseAbs();
    const Eigen::Index p = argmax_first(mod, [&](Eigen::Index i) { return !used[static_cast<std::size_t>(i)]; });
    if (p < 0 || !(mod(p) > kDegeneracyTolerance))
      throw DegenerateError("discrete_leja: mesh does not determine P_n");
    used[static_cast<std::size_t>(p)] = 1;
    chosen.push_back(p);
    if (k + 1 == count) break;
    const Eigen::Index rest = a.cols() - k - 1;
    const Eigen::Matrix<Scalar, 1, Eigen::Dynamic> pivot_row = a.row(p).tail(rest) / a(p, k);
    a.rightCols(rest) -= a.col(k) * pivot_row;
  }
  return chosen;
}

LejaSequence leja_from_mesh(const Mesh& mesh, int n, const Eigen::VectorXd& weight) {
  require(n >= 0, "discrete_leja: n must be >= 0");
  const int d = mesh.dim;
  const Eigen::Index count = dim_pn(d, n);
  require(mesh.size() >= count, "discrete_leja: mesh has fewer than dim P_n points");
  const auto basis = GradedBasis::conditioned_for(d, n, mesh.points);
  LejaSequence out;
  out.mesh_indices = is_real(mesh.points)
                         ? leja_rows<double>(scaled_matrix<double>(basis, mesh).transpose(), weight, count)
                         : leja_rows<cplx>(scaled_matrix<cplx>(basis, mesh).transpose(), weight, count);
  for (auto i : out.mesh_indices) out.points.push_back(mesh.points[static_cast<std::size_t>(i)]);
  out.origin_mesh = std::make_shared<const Mesh>(mesh);
  return out;
}

// base-2 radical inverse as num / 2^bits
std::pair<long long, long long> radical_inverse(long long k) {
  long long num = 0, den = 1;
  while (k > 0) {
    num = 2 * num + (k & 1);
    den *= 2;
    k >>= 1;
  }
  return {num, den};
}

Eigen::VectorXd hatted_chebyshev(int n, double u) {
  Eigen::VectorXd t(n + 1);
  t(0) = 1.0;
  if (n >= 1) t(1) = u;
  for (int k = 2; k <= n; ++k) t(k) = 2.0 * u * t(k - 1) - t(k - 2);
  t.tail(n) *= std::numbers::sqrt2;
  return t;
}

double chebyshev_t(int n, double u) {
  double a = 1.0, b = u;
  if (n == 0) return 1.0;
  for (int k = 2; k <= n; ++k) {
    const double c = 2.0 * u * b - a;
    a = b;
    b = c;
  }
  return b;
}

} // namespace

double cos_pi_frac(long long num, long long den) { return cis_pi_frac(num, den).first; }
double sin_pi_frac(long long num, long long den) { return cis_pi_frac(num, den).second; }

NodeArrayStage LejaSequence::stage(int n) const {
  require(!points.empty(), "LejaSequence::stage: empty sequence");
  const int d = static_cast<int>(points.front().size());
  const long long count = dim_pn(d, n);
  require(count <= size(), "LejaSequence::stage: sequence too short for degree " + std::to_string(n));
  return NodeArrayStage(n, PointSet(points.begin(), points.begin() + count), Provenance::leja);
}

void RadialDistribution::validate() const {
  require(static_cast<bool>(G), "RadialDistribution: no function");
  constexpr int steps = 1000;
  double prev = G(0.0);
  require(prev >= -1e-12, "RadialDistribution: G(0) < 0");
  for (int k = 1; k <= steps; ++k) {
    const double v = G(static_cast<double>(k) / steps);
    if (!(v > prev)) throw InvalidArgument("RadialDistribution: G is not strictly increasing");
    prev = v;
  }
  if (std::abs(prev - 1.0) > 1e-12) throw InvalidArgument("RadialDistribution: G(1) != 1");
}

RadialDistribution RadialDistribution::linear() {
  return {"linear", [](double x) { return x; }, [](double, double u) { return u; }, "smooth"};
}

RadialDistribution RadialDistribution::chebyshev() {
  return {"chebyshev",
          [](double x) {
            const double h = std::sin(0.5 * pi * x);
            return h * h;
          },
          [](double x, double u) { return std::sin(0.5 * pi * u) * std::sin(0.5 * pi * (2.0 * x + u)); },
          "smooth"};
}

RadialDistribution RadialDistribution::equilibrium() {
  return {"equilibrium",
          [](double x) { return x * x * (2.0 - x * x); },
          [](double x, double u) {
            const double y = x + u;
            return u * (2.0 * x + u) * (2.0 - x * x - y * y);
          },
          "smooth"};
}

RadialDistribution RadialDistribution::power(double p) {
  require(p > 0.0, "RadialDistribution::power: exponent must be positive");
  return {"power", [p](double x) { return std::pow(x, p); }, {}, p == std::floor(p) ? "smooth" : "finite"};
}

RadialDistribution RadialDistribution::custom(std::string name, std::function<double(double)> G) {
  return {std::move(name), std::move(G), {}, "unknown"};
}

NodeArrayStage fekete_bruteforce(const Mesh& mesh, int n, double budget) {
  require(n >= 0, "fekete_bruteforce: n must be >= 0");
  const int d = mesh.dim;
  const Eigen::Index N = dim_pn(d, n);
  const Eigen::Index M = mesh.size();
  require(M >= N, "fekete_bruteforce: mesh has fewer than dim P_n points");
  double subsets = 1.0;
  for (Eigen::Index k = 0; k < N; ++k) subsets = subsets * static_cast<double>(M - k) / static_cast<double>(k + 1);
  if (subsets > budget * (1.0 + 1e-12))
    throw BudgetExceeded("fekete_bruteforce: " + std::to_string(static_cast<long long>(subsets)) +
                         " subsets exceed the budget");
  const auto basis = GradedBasis::conditioned_for(d, n, mesh.points);
  const bool real = is_real(mesh.points);
  const Eigen::MatrixXd ar = real ? scaled_matrix<double>(basis, mesh) : Eigen::MatrixXd();
  const Eigen::MatrixXcd ac = real ? Eigen::MatrixXcd() : scaled_matrix<cplx>(basis, mesh);

  std::vector<Eigen::Index> idx(static_cast<std::size_t>(N));
  for (Eigen::Index k = 0; k < N; ++k) idx[static_cast<std::size_t>(k)] = k;
  std::vector<Eigen::Index> best;
  double best_value = -std::numeric_limits<double>::infinity();
  Eigen::MatrixXd sr(N, N);
  Eigen::MatrixXcd sc(N, N);
  while (true) {
    for (Eigen::Index k = 0; k < N; ++k) {
      if (real) sr.col(k) = ar.col(idx[static_cast<std::size_t>(k)]);
      else sc.col(k) = ac.col(idx[static_cast<std::size_t>(k)]);
    }
    const LogAbsDet r = real ? log_abs_det(sr) : log_abs_det(sc);
    if (!r.degenerate && (best.empty() || r.log_modulus > best_value + kTieTolerance * std::max(1.0, std::abs(best_value)))) {
      best_value = r.log_modulus;
      best = idx;
    }
    // next combination in lexicographic order
    Eigen::Index k = N - 1;
    while (k >= 0 && idx[static_cast<std::size_t>(k)] == M - N + k) --k;
    if (k < 0) break;
    ++idx[static_cast<std::size_t>(k)];
    for (Eigen::Index j = k + 1; j < N; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  if (best.empty()) throw DegenerateError("fekete_bruteforce: every subset is degenerate");
  PointSet pts;
  for (auto i : best) pts.push_back(mesh.points[static_cast<std::size_t>(i)]);
  return NodeArrayStage(n, std::move(pts), Provenance::fekete);
}

NodeArrayStage approx_fekete_greedy(const Mesh& mesh, int n) {
  require(n >= 0, "approx_fekete_greedy: n must be >= 0");
  const int d = mesh.dim;
  const Eigen::Index N = dim_pn(d, n);
  require(mesh.size() >= N, "approx_fekete_greedy: mesh has fewer than dim P_n points");
  const auto basis = GradedBasis::conditioned_for(d, n, mesh.points);
  const auto chosen = is_real(mesh.points) ? greedy_columns<double>(scaled_matrix<double>(basis, mesh), N)
                                           : greedy_columns<cplx>(scaled_matrix<cplx>(basis, mesh), N);
  PointSet pts;
  for (auto i : chosen) pts.push_back(mesh.points[static_cast<std::size_t>(i)]);
  return NodeArrayStage(n, std::move(pts), Provenance::fekete);
}

LejaSequence discrete_leja(const Mesh& mesh, int n) {
  return leja_from_mesh(mesh, n, Eigen::VectorXd::Ones(mesh.size()));
}

LejaSequence discrete_leja(const Mesh& mesh, int n, const WeightFunction& w) {
  require(n >= 0, "discrete_leja: n must be >= 0");
  Eigen::VectorXd weight(mesh.size());
  for (Eigen::Index i = 0; i < mesh.size(); ++i) {
    const double v = w(mesh.points[static_cast<std::size_t>(i)]);
    require(v >= 0.0 && std::isfinite(v), "discrete_leja: weight must be finite and non-negative");
    weight(i) = std::pow(v, n);
  }
  return leja_from_mesh(mesh, n, weight);
}

LejaSequence leja_disk_exact(int count) {
  require(count >= 0, "leja_disk_exact: count must be >= 0");
  LejaSequence out;
  out.exact_structure = true;
  for (long long k = 0; k < count; ++k) {
    const auto [num, den] = radical_inverse(k);
    const auto [c, s] = cis_pi_frac(2 * num, den);
    out.points.push_back(make_point({cplx(c, s)}));
  }
  return out;
}

LejaSequence r_leja(int count) {
  require(count >= 0, "r_leja: count must be >= 0");
  LejaSequence out;
  out.exact_structure = true;
  for (long long k = 0; static_cast<int>(out.points.size()) < count; ++k) {
    const auto [num, den] = radical_inverse(k);
    const double x = cos_pi_frac(2 * num, den);
    const bool seen = std::any_of(out.points.begin(), out.points.end(),
                                  [x](const Point& p) { return std::abs(p(0).real() - x) <= 1e-14; });
    if (!seen) out.points.push_back(make_point({x}));
  }
  return out;
}

NodeArrayStage padua_points(int n) {
  require(n >= 1, "padua_points: n must be >= 1");
  PointSet pts;
  for (long long i = 0; i <= n; ++i)
    for (long long j = 0; j + i <= n; ++j) {
      // n t = pi (n i/(n+1) + j), (n+1) t = pi ((n+1) j/n + i)
      const double x = cos_pi_frac(n * i + j * (n + 1), n + 1);
      const double y = cos_pi_frac((n + 1) * j + i * n, n);
      pts.push_back(make_point({x, y}));
    }
  return NodeArrayStage(n, std::move(pts), Provenance::padua);
}

PaduaKernel::PaduaKernel(int n) : n_(n), points_(padua_points(n).points()) {
  weights_.resize(static_cast<Eigen::Index>(points_.size()));
  for (std::size_t a = 0; a < points_.size(); ++a) {
    const double tn = chebyshev_t(n_, points_[a](1).real());
    weights_(static_cast<Eigen::Index>(a)) = 1.0 / (kernel(points_[a], points_[a]) - tn * tn);
  }
}

std::optional<Eigen::Index> PaduaKernel::find(const Point& a, double tol) const {
  for (std::size_t k = 0; k < points_.size(); ++k)
    if ((points_[k] - a).cwiseAbs().maxCoeff() <= tol) return static_cast<Eigen::Index>(k);
  return std::nullopt;
}

double PaduaKernel::kernel(const Point& u, const Point& v) const {
  require(u.size() == 2 && v.size() == 2, "PaduaKernel: points must be in R^2");
  const Eigen::VectorXd p = hatted_chebyshev(n_, u(0).real()).cwiseProduct(hatted_chebyshev(n_, v(0).real()));
  const Eigen::VectorXd q = hatted_chebyshev(n_, u(1).real()).cwiseProduct(hatted_chebyshev(n_, v(1).real()));
  double acc = 0.0, prefix = 0.0;
  // sum_i p_i sum_{j <= n-i} q_j, accumulated from i = n down
  for (int i = n_; i >= 0; --i) {
    prefix += q(n_ - i);
    acc += p(i) * prefix;
  }
  return acc;
}

double PaduaKernel::flip(Eigen::Index a, const Point& z) const {
  require(a >= 0 && a < static_cast<Eigen::Index>(points_.size()), "PaduaKernel::flip: index out of range");
  const Point& pa = points_[static_cast<std::size_t>(a)];
  return weights_(a) * (kernel(pa, z) - chebyshev_t(n_, z(1).real()) * chebyshev_t(n_, pa(1).real()));
}

double padua_flip_kernel(int n, const Point& a, const Point& z) {
  const PaduaKernel k(n);
  const auto idx = k.find(a);
  if (!idx) throw InvalidArgument("padua_flip_kernel: a is not a Padua point of degree " + std::to_string(n));
  return k.flip(*idx, z);
}

NodeArrayStage intertwine(const std::vector<std::vector<cplx>>& tuples, int n) {
  require(!tuples.empty(), "intertwine: need at least one coordinate tuple");
  require(n >= 0, "intertwine: n must be >= 0");
  const int d = static_cast<int>(tuples.size());
  for (const auto& t : tuples) {
    require(static_cast<int>(t.size()) >= n + 1, "intertwine: every tuple needs n+1 entries");
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j < i; ++j)
        if (t[static_cast<std::size_t>(i)] == t[static_cast<std::size_t>(j)])
          throw InvalidArgument("intertwine: duplicate entry within a tuple");
  }
  PointSet pts;
  for (const auto& alpha : graded_indices(d, n)) {
    Point p(d);
    for (int c = 0; c < d; ++c) p(c) = tuples[static_cast<std::size_t>(c)][static_cast<std::size_t>(alpha[c])];
    pts.push_back(std::move(p));
  }
  return NodeArrayStage(n, std::move(pts), Provenance::intertwined);
}

std::vector<double> bos_radii(int s, const RadialDistribution& G) {
  require(s >= 0, "bos_radii: s must be >= 0");
  std::vector<double> r;
  for (int j = 0; j <= s; ++j) {
    const double g = G(static_cast<double>(j + 1) / (s + 1));
    require(g >= 0.0, "bos_radii: G must be non-negative");
    r.push_back(std::sqrt(g));
  }
  return r;
}

LogAbsDet bos_log_abs_vdm(const std::vector<double>& radii) {
  require(!radii.empty(), "bos_log_abs_vdm: no rings");
  const int s = static_cast<int>(radii.size()) - 1;
  const int n = 2 * s;
  for (std::size_t j = 1; j < radii.size(); ++j)
    if (!(radii[j] > radii[j - 1])) return LogAbsDet::singular();
  double total = 0.0;
  // Fourier mode m is carried by every ring j with 2j >= |m|
  for (int m = -n; m <= n; ++m) {
    const int am = std::abs(m);
    const int j0 = (am + 1) / 2;
    for (int j = j0; j <= s; ++j) {
      const double R = radii[static_cast<std::size_t>(j)];
      if (am > 0 && !(R > 0.0)) return LogAbsDet::singular();
      total += std::log(4.0 * j + 1.0) + (am > 0 ? am * std::log(R) : 0.0);
      for (int k = j + 1; k <= s; ++k) {
        const double Rk = radii[static_cast<std::size_t>(k)];
        total += std::log(Rk * Rk - R * R);
      }
    }
  }
  for (int j = 0; j <= s; ++j) total -= 0.5 * (4.0 * j + 1.0) * std::log(4.0 * j + 1.0);
  for (int k = 0; k <= n; ++k) total -= 0.5 * k * (k + 1) * std::numbers::ln2;
  return {total, false, std::numeric_limits<double>::quiet_NaN()};
}

NodeArrayStage bos_array(int n, const RadialDistribution& G) {
  require(n >= 0 && n % 2 == 0, "bos_array: n must be even and >= 0");
  const int s = n / 2;
  const auto radii = bos_radii(s, G);
  PointSet pts;
  for (int j = 0; j <= s; ++j) {
    const long long count = 4LL * j + 1;
    const double R = radii[static_cast<std::size_t>(j)];
    for (long long t = 0; t < count; ++t) {
      const auto [c, sn] = cis_pi_frac(2 * t, count);
      pts.push_back(make_point({R * c, R * sn}));
    }
  }
  return NodeArrayStage::with_known_vdm(n, std::move(pts), Provenance::bos, bos_log_abs_vdm(radii));
}

NodeArrayStage roots_of_unity(int n) {
  require(n >= 0, "roots_of_unity: n must be >= 0");
  PointSet pts;
  for (long long k = 0; k <= n; ++k) {
    const auto [c, s] = cis_pi_frac(2 * k, n + 1);
    pts.push_back(make_point({cplx(c, s)}));
  }
  return NodeArrayStage(n, std::move(pts), Provenance::custom);
}

NodeArrayStage chebyshev_points(int n) {
  require(n >= 0, "chebyshev_points: n must be >= 0");
  PointSet pts;
  for (long long k = 0; k <= n; ++k) pts.push_back(make_point({cos_pi_frac(2 * k + 1, 2 * (n + 1))}));
  return NodeArrayStage(n, std::move(pts), Provenance::custom);
}

} // namespace pinterp
