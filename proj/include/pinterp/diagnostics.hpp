#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pinterp/meshes.hpp"
#include "pinterp/points.hpp"
#include "pinterp/vandermonde.hpp"

namespace pinterp {

/// max over eval_mesh of sum_j |l_j(z)|.
double lebesgue_constant(const NodeArrayStage& stage, const Mesh& eval_mesh);
double lebesgue_function(const NodeArrayStage& stage, const Point& z);
Eigen::VectorXd lebesgue_function(const NodeArrayStage& stage, std::span<const Point> z);

/// Lebesgue constants of a sequence of stages with the usual growth scalings.
/// Entries whose scaling is undefined (n = 0 for the root, n <= 1 for log n)
/// are NaN.
struct GrowthReport {
  std::vector<int> degrees;
  std::vector<double> lebesgue_constants;
  std::vector<double> root_scale;   // Lambda^(1/n)
  std::vector<double> poly_scale;   // log Lambda / log n
  std::vector<double> loglog_scale; // Lambda / log(n+2)^2
};

GrowthReport growth_report(std::vector<int> degrees, std::vector<double> lebesgue_constants);

/// One evaluation mesh per stage, or a single mesh shared by all stages.
GrowthReport growth_report(std::span<const NodeArrayStage> stages, std::span<const Mesh> eval_meshes);

struct DiscreteMeasure {
  PointSet support;
  std::vector<double> weights;
  double mass = 0.0;
};

/// Uniform probability measure on the points of a stage.
DiscreteMeasure empirical_measure(const NodeArrayStage& stage);
DiscreteMeasure empirical_measure(const PointSet& points);

/// Equilibrium measure given through its monomial moments.
struct EquilibriumReference {
  std::string compact_id;
  std::function<cplx(const MultiIndex&)> moment_oracle;

  /// dx / (pi sqrt(1 - x^2)) on [-1,1].
  static EquilibriumReference arcsine();
  /// Normalised arc length on |z| = 1, holomorphic moments.
  static EquilibriumReference circle();
  /// (1/2pi) r / sqrt(1 - r^2) dr dtheta on the real unit disk.
  static EquilibriumReference real_disk();
};

/// max over |alpha| <= max_total_degree of |int z^alpha dmu - moment(alpha)|.
double moment_distance(const DiscreteMeasure& mu, const EquilibriumReference& ref, int max_total_degree);

/// L(G) = int x^2 log G + 2 int_0^1 x int_x^1 log(G(y) - G(x)) dy dx by
/// nested tanh-sinh quadrature, inner variable u = y - x.
double l_functional(const RadialDistribution& G, double tol = 1e-10);

/// (1/sqrt 2) exp((3/4) L(G)).
double bos_vdm_limit(const RadialDistribution& G);
double bos_vdm_limit_from_l(double L);

double tdiam_ball_closed_form(int d);
double tdiam_simplex_closed_form(int d);

/// G_s(z) = e_s(z) - L(e_s)(z): the monic polynomial with leading monomial
/// z^alpha(s) (graded position s, 0-based) vanishing at the first s points.
class TriangularPolynomial {
public:
  TriangularPolynomial(const PointSet& points, int s);

  int position() const { return s_; }
  const MultiIndex& leading() const { return alpha_; }
  int degree() const { return alpha_.degree(); }

  cplx operator()(const Point& z) const;
  double sup_norm(std::span<const Point> mesh) const;

private:
  int s_;
  MultiIndex alpha_;
  PointSet nodes_;
  std::shared_ptr<LagrangeSystem> system_;
};

TriangularPolynomial triangular_g_polynomial(const PointSet& points, int s);

/// (1/n) log Lambda_n(z).
double vk_lebesgue(const NodeArrayStage& stage, const Point& z);
/// (1/|alpha(s)|) log(|G_s(z)| / ||G_s||_mesh).
double vk_triangular(const TriangularPolynomial& g, const Point& z, std::span<const Point> mesh);

/// Empirical lower bound for the norming constant of a mesh: the largest
/// ratio ||p||_ref / ||p||_mesh over the FLIPs of approximate Fekete points
/// extracted from the mesh, with ref the 10x reference mesh.
double norming_constant_estimate(const Mesh& mesh);

/// exp of the least-squares slope of log(values) against degrees.
double geometric_rate(std::span<const int> degrees, std::span<const double> values);

/// Least-squares slope of values against degrees.
double trend_slope(std::span<const int> degrees, std::span<const double> values);

} // namespace pinterp
