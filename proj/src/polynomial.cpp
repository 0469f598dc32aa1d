#include "pinterp/polynomial.hpp"

#include <algorithm>

namespace pinterp {

namespace {

// monomial coefficients of T_0..T_n, row k holds T_k
Eigen::MatrixXd chebyshev_table(int n) {
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n + 1, n + 1);
  t(0, 0) = 1.0;
  if (n >= 1) t(1, 1) = 1.0;
  for (int k = 2; k <= n; ++k) {
    t.row(k).tail(n) = 2.0 * t.row(k - 1).head(n);
    t.row(k) -= t.row(k - 2);
  }
  return t;
}

} // namespace

Polynomial::Polynomial(int d, int n)
    : basis_(std::make_shared<const GradedBasis>(d, n)), coeffs_(Eigen::VectorXcd::Zero(basis_->size())) {}

Polynomial::Polynomial(int d, int n, Eigen::VectorXcd coefficients)
    : basis_(std::make_shared<const GradedBasis>(d, n)), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != basis_->size()) throw InvalidArgument("Polynomial: need dim P_n coefficients");
}

Polynomial Polynomial::constant(int d, cplx c) {
  Polynomial p(d, 0);
  p.coeffs_(0) = c;
  return p;
}

Polynomial Polynomial::monomial(const MultiIndex& alpha, cplx c) {
  Polynomial p(alpha.dim(), alpha.degree());
  p.add_to(alpha, c);
  return p;
}

Polynomial Polynomial::coordinate(int d, int c, cplx shift) {
  if (c < 0 || c >= d) throw InvalidArgument("Polynomial::coordinate: index out of range");
  Polynomial p(d, 1);
  p.coeffs_(0) = -shift;
  p.coeffs_(1 + c) = 1.0;
  return p;
}

Polynomial Polynomial::from_basis(const GradedBasis& basis, const Eigen::VectorXcd& coefficients) {
  if (coefficients.size() > basis.size()) throw InvalidArgument("Polynomial::from_basis: too many coefficients");
  const int d = basis.dim();
  const int n = basis.degree();
  const Eigen::MatrixXd t = chebyshev_table(n);
  Polynomial p(d, n);
  std::vector<int> e(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < coefficients.size(); ++i) {
    if (coefficients(i) == cplx(0.0)) continue;
    const MultiIndex& alpha = basis.index(i);
    // odometer over exponent choices j_c <= alpha_c, coordinate by coordinate
    std::fill(e.begin(), e.end(), 0);
    while (true) {
      double w = 1.0;
      for (int c = 0; c < d && w != 0.0; ++c) {
        const int a = alpha[c], j = e[static_cast<std::size_t>(c)];
        w *= basis.family(c) == Family::chebyshev ? t(a, j) : (a == j ? 1.0 : 0.0);
      }
      if (w != 0.0) p.add_to(MultiIndex(e), w * coefficients(i));
      int c = 0;
      while (c < d && ++e[static_cast<std::size_t>(c)] > alpha[c]) e[static_cast<std::size_t>(c++)] = 0;
      if (c == d) break;
    }
  }
  return p;
}

int Polynomial::effective_degree(double tol) const {
  int deg = -1;
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i)
    if (std::abs(coeffs_(i)) > tol) deg = std::max(deg, basis_->index(i).degree());
  return deg;
}

cplx Polynomial::coefficient(const MultiIndex& alpha) const {
  if (alpha.dim() != dim()) throw InvalidArgument("Polynomial: multi-index dimension mismatch");
  if (alpha.degree() > degree()) return 0.0;
  return coeffs_(basis_->position(alpha));
}

void Polynomial::add_to(const MultiIndex& alpha, cplx c) {
  if (alpha.dim() != dim() || alpha.degree() > degree())
    throw InvalidArgument("Polynomial: multi-index outside the coefficient space");
  coeffs_(basis_->position(alpha)) += c;
}

cplx Polynomial::operator()(const Point& z) const {
  if (z.size() != dim()) throw InvalidArgument("Polynomial: point dimension mismatch");
  return basis_->evaluate<cplx>(z).cwiseProduct(coeffs_).sum();
}

Polynomial Polynomial::derivative(const MultiIndex& beta) const {
  if (beta.dim() != dim()) throw InvalidArgument("Polynomial::derivative: dimension mismatch");
  const int n = std::max(0, degree() - beta.degree());
  Polynomial out(dim(), n);
  std::vector<int> e(static_cast<std::size_t>(dim()));
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) {
    const MultiIndex& alpha = basis_->index(i);
    double factor = 1.0;
    for (int c = 0; c < dim() && factor != 0.0; ++c) {
      if (alpha[c] < beta[c]) {
        factor = 0.0;
        break;
      }
      for (int k = 0; k < beta[c]; ++k) factor *= alpha[c] - k;
      e[static_cast<std::size_t>(c)] = alpha[c] - beta[c];
    }
    if (factor != 0.0) out.add_to(MultiIndex(e), factor * coeffs_(i));
  }
  return out;
}

Polynomial Polynomial::directional(const Point& v) const {
  if (v.size() != dim()) throw InvalidArgument("Polynomial::directional: dimension mismatch");
  Polynomial out(dim(), std::max(0, degree() - 1));
  for (int c = 0; c < dim(); ++c) {
    if (v(c) == cplx(0.0)) continue;
    std::vector<int> b(static_cast<std::size_t>(dim()), 0);
    b[static_cast<std::size_t>(c)] = 1;
    out = out + derivative(MultiIndex(b)) * v(c);
  }
  return out;
}

cplx Polynomial::jet(const Point& y, std::span<const Point> dirs) const {
  Polynomial q = *this;
  for (const auto& v : dirs) q = q.directional(v);
  return q(y);
}

Polynomial Polynomial::raised(int n) const {
  if (n < degree()) throw InvalidArgument("Polynomial::raised: target degree too small");
  Polynomial out(dim(), n);
  out.coeffs_.head(coeffs_.size()) = coeffs_;
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (o.dim() != dim()) throw InvalidArgument("Polynomial: dimension mismatch");
  const int n = std::max(degree(), o.degree());
  Polynomial out = raised(n);
  out.coeffs_.head(o.coeffs_.size()) += o.coeffs_;
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * cplx(-1.0); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (o.dim() != dim()) throw InvalidArgument("Polynomial: dimension mismatch");
  Polynomial out(dim(), degree() + o.degree());
  std::vector<int> e(static_cast<std::size_t>(dim()));
  for (Eigen::Index i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_(i) == cplx(0.0)) continue;
    for (Eigen::Index j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_(j) == cplx(0.0)) continue;
      for (int c = 0; c < dim(); ++c) e[static_cast<std::size_t>(c)] = basis_->index(i)[c] + o.basis_->index(j)[c];
      out.add_to(MultiIndex(e), coeffs_(i) * o.coeffs_(j));
    }
  }
  return out;
}

Polynomial Polynomial::operator*(cplx c) const {
  Polynomial out = *this;
  out.coeffs_ *= c;
  return out;
}

} // namespace pinterp
