#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pinterp/polynomial.hpp"

namespace pinterp {

/// Nodes a_0, ..., a_n of a Kergin interpolant; repeats carry Hermite data.
using KerginNodes = std::vector<Point>;

/// f together with its total derivatives: jet(y, v) = D^k f(y)(v_1, ..., v_k).
class JetOracle {
public:
  virtual ~JetOracle() = default;

  virtual int dim() const = 0;
  virtual cplx jet(const Point& y, std::span<const Point> dirs) const = 0;
  /// d^beta f(y).
  virtual cplx partial(const Point& y, const MultiIndex& beta) const;
  /// Non-null when f is a polynomial.
  virtual const Polynomial* as_polynomial() const { return nullptr; }

  cplx operator()(const Point& y) const { return jet(y, {}); }
};

class PolynomialJet final : public JetOracle {
public:
  explicit PolynomialJet(Polynomial p) : p_(std::move(p)) {}

  int dim() const override { return p_.dim(); }
  cplx jet(const Point& y, std::span<const Point> dirs) const override { return p_.jet(y, dirs); }
  cplx partial(const Point& y, const MultiIndex& beta) const override { return p_.derivative(beta)(y); }
  const Polynomial* as_polynomial() const override { return &p_; }

private:
  Polynomial p_;
};

/// Univariate h with derivatives: derivative(t, k) = h^(k)(t).
struct UnivariateJet {
  std::string name;
  std::function<cplx(cplx, int)> derivative;

  cplx operator()(cplx t) const { return derivative(t, 0); }

  static UnivariateJet exp();
  static UnivariateJet sin();
  /// 1/(c - t).
  static UnivariateJet inverse(cplx c);
  /// t^p for an integer p >= 0.
  static UnivariateJet power(int p);
};

/// Ridge function h(<lambda, y>), <u, v> = sum u_c v_c.
class RidgeJet final : public JetOracle {
public:
  RidgeJet(Point lambda, UnivariateJet h);

  int dim() const override { return static_cast<int>(lambda_.size()); }
  cplx jet(const Point& y, std::span<const Point> dirs) const override;
  cplx partial(const Point& y, const MultiIndex& beta) const override;

  const Point& direction() const { return lambda_; }
  const UnivariateJet& profile() const { return h_; }

private:
  Point lambda_;
  UnivariateJet h_;
};

/// Collapsed Gauss-Jacobi rule on {t >= 0, t_1 + ... + t_k <= 1} with plain
/// Lebesgue measure (total mass 1/k!), exact for polynomials of degree <= exactness.
struct SimplexRule {
  std::vector<Eigen::VectorXd> nodes;
  std::vector<double> weights;
};

SimplexRule simplex_rule(int k, int exactness);

/// Gauss-Jacobi nodes and weights on [0,1] for the weight (1-u)^alpha.
std::pair<Eigen::VectorXd, Eigen::VectorXd> gauss_jacobi_unit(int points, double alpha);

/// K[A]f(x) = sum_k int_{S_k} D^k f(sum t_i a_i)(x - a_0, ..., x - a_{k-1}) dt,
/// summed term by term at x.
cplx kergin_eval(const KerginNodes& a, const JetOracle& f, const Point& x);

/// The same operator returned as an explicit polynomial of degree n.
Polynomial kergin_polynomial(const KerginNodes& a, const JetOracle& f);

/// Univariate Lagrange-Hermite interpolant of h at t in Newton form; equal
/// nodes (within tol) use derivatives.
class NewtonHermite {
public:
  NewtonHermite(std::vector<cplx> nodes, const UnivariateJet& h, double tol = 1e-10);

  cplx operator()(cplx s) const;
  const std::vector<cplx>& nodes() const { return nodes_; }
  const std::vector<cplx>& coefficients() const { return coeffs_; }

private:
  std::vector<cplx> nodes_;
  std::vector<cplx> coeffs_;
};

struct CheckReport {
  std::string name;
  bool passed = true;
  double max_error = 0.0;
  std::vector<std::string> failures;

  void record(double err, double tol, const std::string& what);
};

/// f(a_j) at every node and D^j f(a) for j below the multiplicity of a.
CheckReport kergin_interpolation_check(const KerginNodes& a, const JetOracle& f, double tol = 1e-9);

/// K[A](h(<lambda, .>))(x) against the univariate interpolant of h at <lambda, a_i>.
CheckReport ridge_identity_check(const KerginNodes& a, const Point& lambda, const UnivariateJet& h,
                                 const Point& x, double tol = 1e-8);

/// Permutation invariance and K[B] K[A] = K[B], each at 20 random points.
CheckReport kergin_algebra_checks(const KerginNodes& a, const std::vector<std::size_t>& b_indices,
                                  const JetOracle& f, std::uint64_t seed = 0, double tol = 1e-9);

/// Randomised check suites: "polynomial", "hermite", "ridge", "algebra".
std::vector<CheckReport> kergin_suite(const std::string& suite, int instances, std::uint64_t seed = 0);

} // namespace pinterp
