#pragma once

#include <functional>
#include <span>
#include <vector>

#include "pinterp/meshes.hpp"
#include "pinterp/polynomial.hpp"
#include "pinterp/vandermonde.hpp"

namespace pinterp {

using ScalarFunction = std::function<cplx(const Point&)>;

/// L_n f = sum_j f(A_j) l_j, stored by its coefficients in the stage's
/// conditioned basis.
class Interpolant {
public:
  Interpolant(NodeArrayStage stage, Eigen::VectorXcd coefficients);

  const NodeArrayStage& stage() const { return stage_; }
  const Eigen::VectorXcd& coefficients() const { return coeffs_; }

  cplx operator()(const Point& z) const;
  Eigen::VectorXcd evaluate(std::span<const Point> z) const;

  /// The interpolant on the graded monomial basis.
  Polynomial monomial_form() const;

private:
  NodeArrayStage stage_;
  Eigen::VectorXcd coeffs_;
};

Interpolant lagrange_interpolate(const NodeArrayStage& stage, const Eigen::VectorXcd& samples);
Interpolant lagrange_interpolate(const NodeArrayStage& stage, const ScalarFunction& f);

/// max over the mesh of |f - L_n f|.
double sup_error(const Interpolant& p, const ScalarFunction& f, const Mesh& eval_mesh);

/// Max residual of the discrete least-squares fit from P_n on the mesh: an
/// upper-bound proxy for the best approximation error d_n(f, K).
double least_squares_error(const ScalarFunction& f, int n, const Mesh& mesh);

struct ConvergenceSample {
  int n = 0;
  double error = 0.0;
  double root_rate = 0.0; // error^(1/n)
};

/// Errors of L_n f on each stage, one evaluation mesh per stage or one shared.
std::vector<ConvergenceSample> holo_convergence_probe(std::span<const NodeArrayStage> stages,
                                                      const ScalarFunction& f,
                                                      std::span<const Mesh> eval_meshes);

} // namespace pinterp
