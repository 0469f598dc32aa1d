#include "pinterp/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pinterp {

MultiIndex::MultiIndex(std::vector<int> e) : exponents(std::move(e)) {
  for (int v : exponents)
    if (v < 0) throw InvalidArgument("MultiIndex: negative exponent");
}

int MultiIndex::degree() const {
  int s = 0;
  for (int v : exponents) s += v;
  return s;
}

long long dim_pn(int d, int n) {
  if (d <= 0) throw InvalidArgument("dim_pn: d must be >= 1");
  if (n < 0) throw InvalidArgument("dim_pn: n must be >= 0");
  // binomial(n+d, d), built incrementally so every partial product is exact
  long long r = 1;
  for (int k = 1; k <= d; ++k) r = r * (n + k) / k;
  return r;
}

long long ln_sum(int d, int n) {
  const long long N = dim_pn(d, n);
  return static_cast<long long>(d) * n * N / (d + 1);
}

namespace {

void homogeneous_rec(int d, int pos, int remaining, std::vector<int>& cur,
                     std::vector<MultiIndex>& out) {
  if (pos == d - 1) {
    cur[static_cast<std::size_t>(pos)] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[static_cast<std::size_t>(pos)] = e;
    homogeneous_rec(d, pos + 1, remaining - e, cur, out);
  }
}

} // namespace

std::vector<MultiIndex> homogeneous_indices(int d, int k) {
  if (d <= 0 || k < 0) throw InvalidArgument("homogeneous_indices: bad arguments");
  std::vector<MultiIndex> out;
  std::vector<int> cur(static_cast<std::size_t>(d), 0);
  homogeneous_rec(d, 0, k, cur, out);
  return out;
}

std::vector<MultiIndex> graded_indices(int d, int n) {
  const long long N = dim_pn(d, n);
  std::vector<MultiIndex> out;
  out.reserve(static_cast<std::size_t>(N));
  for (int k = 0; k <= n; ++k) {
    auto block = homogeneous_indices(d, k);
    out.insert(out.end(), block.begin(), block.end());
  }
  return out;
}

GradedBasis::GradedBasis(int d, int n)
    : GradedBasis(d, n, std::vector<Family>(static_cast<std::size_t>(std::max(d, 0)), Family::monomial)) {}

GradedBasis::GradedBasis(int d, int n, std::vector<Family> families)
    : d_(d), n_(n), families_(std::move(families)) {
  if (d <= 0) throw InvalidArgument("GradedBasis: d must be >= 1");
  if (n < 0) throw InvalidArgument("GradedBasis: n must be >= 0");
  if (static_cast<int>(families_.size()) != d)
    throw InvalidArgument("GradedBasis: one family per coordinate required");
  indices_ = graded_indices(d, n);
  for (std::size_t i = 0; i < indices_.size(); ++i)
    lookup_.emplace(indices_[i].exponents, static_cast<Eigen::Index>(i));
}

GradedBasis GradedBasis::conditioned_for(int d, int n, const PointSet& pts) {
  std::vector<Family> fam(static_cast<std::size_t>(d), Family::chebyshev);
  for (const auto& p : pts) {
    if (p.size() != d) throw InvalidArgument("conditioned_for: point dimension mismatch");
    for (int c = 0; c < d; ++c)
      if (p(c).imag() != 0.0) fam[static_cast<std::size_t>(c)] = Family::monomial;
  }
  return GradedBasis(d, n, std::move(fam));
}

Eigen::Index GradedBasis::position(const MultiIndex& alpha) const {
  auto it = lookup_.find(alpha.exponents);
  if (it == lookup_.end()) throw InvalidArgument("GradedBasis::position: index not in basis");
  return it->second;
}

bool GradedBasis::is_monomial() const {
  return std::all_of(families_.begin(), families_.end(),
                     [](Family f) { return f == Family::monomial; });
}

double GradedBasis::log_leading_coefficient(Eigen::Index i) const {
  const auto& a = index(i);
  double s = 0.0;
  for (int c = 0; c < d_; ++c) {
    if (families_[static_cast<std::size_t>(c)] == Family::chebyshev && a[c] >= 1)
      s += (a[c] - 1) * std::numbers::ln2;
  }
  return s;
}

double GradedBasis::log_leading_sum(Eigen::Index m) const {
  double s = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) s += log_leading_coefficient(i);
  return s;
}

template <typename Scalar>
void GradedBasis::fill_column(const Point& z, Eigen::Index m, Scalar* out,
                              Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& table) const {
  // table(k, c) = phi_k(z_c), built by recurrence
  for (int c = 0; c < d_; ++c) {
    Scalar x;
    if constexpr (std::is_same_v<Scalar, double>)
      x = z(c).real();
    else
      x = z(c);
    table(0, c) = Scalar(1);
    if (n_ >= 1) table(1, c) = x;
    if (families_[static_cast<std::size_t>(c)] == Family::monomial) {
      for (int k = 2; k <= n_; ++k) table(k, c) = table(k - 1, c) * x;
    } else {
      for (int k = 2; k <= n_; ++k) table(k, c) = Scalar(2) * x * table(k - 1, c) - table(k - 2, c);
    }
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& a = indices_[static_cast<std::size_t>(i)];
    Scalar v = table(a[0], 0);
    for (int c = 1; c < d_; ++c) v *= table(a[c], c);
    out[i] = v;
  }
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> GradedBasis::evaluate(const Point& z, Eigen::Index m) const {
  if (z.size() != d_) throw InvalidArgument("basis evaluation: point dimension mismatch");
  if (m < 0) m = size();
  if (m > size()) throw InvalidArgument("basis evaluation: more elements requested than available");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> table(n_ + 1, d_);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out(m);
  fill_column<Scalar>(z, m, out.data(), table);
  return out;
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>
GradedBasis::evaluate_matrix(std::span<const Point> pts, Eigen::Index m) const {
  if (m < 0) m = size();
  if (m > size()) throw InvalidArgument("basis evaluation: more elements requested than available");
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(m, static_cast<Eigen::Index>(pts.size()));
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> table(n_ + 1, d_);
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (pts[j].size() != d_) throw InvalidArgument("basis evaluation: point dimension mismatch");
    fill_column<Scalar>(pts[j], m, out.col(static_cast<Eigen::Index>(j)).data(), table);
  }
  return out;
}

template Eigen::VectorXd GradedBasis::evaluate<double>(const Point&, Eigen::Index) const;
template Eigen::VectorXcd GradedBasis::evaluate<cplx>(const Point&, Eigen::Index) const;
template Eigen::MatrixXd GradedBasis::evaluate_matrix<double>(std::span<const Point>, Eigen::Index) const;
template Eigen::MatrixXcd GradedBasis::evaluate_matrix<cplx>(std::span<const Point>, Eigen::Index) const;

Eigen::VectorXcd basis_vector(const GradedBasis& basis, const Point& z) {
  return basis.evaluate<cplx>(z);
}

Eigen::VectorXcd scaled_basis_vector(const GradedBasis& basis, const Point& z,
                                     const Eigen::VectorXd& sup_norms) {
  if (sup_norms.size() != basis.size())
    throw InvalidArgument("scaled_basis_vector: one scale per basis element required");
  if ((sup_norms.array() <= 0.0).any() || !sup_norms.allFinite())
    throw InvalidArgument("scaled_basis_vector: scales must be positive and finite");
  return basis.evaluate<cplx>(z).cwiseQuotient(sup_norms.cast<cplx>());
}

Eigen::VectorXd basis_sup_norms(const GradedBasis& basis, std::span<const Point> pts) {
  Eigen::VectorXd s = Eigen::VectorXd::Zero(basis.size());
  for (const auto& p : pts) s = s.cwiseMax(basis.evaluate<cplx>(p).cwiseAbs());
  return s;
}

} // namespace pinterp
