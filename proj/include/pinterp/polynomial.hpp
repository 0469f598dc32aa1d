#pragma once

#include <memory>
#include <span>

#include "pinterp/basis.hpp"

namespace pinterp {

/// Dense polynomial in d complex variables, coefficients on the graded
/// monomial basis of P_n.
class Polynomial {
public:
  Polynomial(int d, int n);
  Polynomial(int d, int n, Eigen::VectorXcd coefficients);

  static Polynomial constant(int d, cplx c);
  static Polynomial monomial(const MultiIndex& alpha, cplx c = 1.0);
  /// z_c - shift.
  static Polynomial coordinate(int d, int c, cplx shift = 0.0);
  /// Expand a combination of a (possibly Chebyshev) graded basis into monomials.
  static Polynomial from_basis(const GradedBasis& basis, const Eigen::VectorXcd& coefficients);

  int dim() const { return basis_->dim(); }
  /// Nominal degree n of the coefficient space.
  int degree() const { return basis_->degree(); }
  /// Largest |alpha| with a coefficient above tol in modulus; -1 for zero.
  int effective_degree(double tol = 0.0) const;

  const GradedBasis& basis() const { return *basis_; }
  const Eigen::VectorXcd& coefficients() const { return coeffs_; }
  cplx coefficient(const MultiIndex& alpha) const;
  void add_to(const MultiIndex& alpha, cplx c);

  cplx operator()(const Point& z) const;

  /// d^beta / dz^beta.
  Polynomial derivative(const MultiIndex& beta) const;
  /// sum_c v_c d/dz_c.
  Polynomial directional(const Point& v) const;
  /// D^k p(y)(v_1, ..., v_k).
  cplx jet(const Point& y, std::span<const Point> dirs) const;

  /// Same polynomial in the coefficient space of degree n >= degree().
  Polynomial raised(int n) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(cplx c) const;

private:
  std::shared_ptr<const GradedBasis> basis_;
  Eigen::VectorXcd coeffs_;
};

} // namespace pinterp
