#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pinterp/meshes.hpp"
#include "pinterp/vandermonde.hpp"

namespace pinterp {

/// Nested greedy maximisers of the incremental Vandermonde modulus.
struct LejaSequence {
  PointSet points;
  /// Positions in origin_mesh, empty for closed-form sequences.
  std::vector<Eigen::Index> mesh_indices;
  std::shared_ptr<const Mesh> origin_mesh;
  bool exact_structure = false;

  Eigen::Index size() const { return static_cast<Eigen::Index>(points.size()); }
  /// The first dim P_n terms as a degree-n stage.
  NodeArrayStage stage(int n) const;
};

/// Asymptotic distribution of squared radii for Bos arrays.
struct RadialDistribution {
  std::string name;
  std::function<double(double)> G;
  /// G(x+u) - G(x) without cancellation; falls back to the plain difference.
  std::function<double(double, double)> gap;
  std::string smoothness = "smooth";

  double operator()(double x) const { return G(x); }
  double difference(double x, double u) const { return gap ? gap(x, u) : G(x + u) - G(x); }

  /// Monotone on a 1000-interval probe grid, G(1) = 1 within 1e-12, values in [0,1].
  void validate() const;

  static RadialDistribution linear();
  /// G(x) = (1 - cos(pi x))/2: Chebyshev-distributed radii.
  static RadialDistribution chebyshev();
  /// G(x) = 1 - (x^2 - 1)^2: radii distributed like the equilibrium measure of B_2.
  static RadialDistribution equilibrium();
  static RadialDistribution power(double p);
  static RadialDistribution custom(std::string name, std::function<double(double)> G);
};

/// Exact Fekete points of the mesh: the N-subset maximising |VDM|, searched
/// exhaustively. Ties keep the lexicographically smallest index tuple.
NodeArrayStage fekete_bruteforce(const Mesh& mesh, int n, double budget = 1e6);

/// Approximate Fekete points: greedy volume maximisation over the columns of
/// the scaled basis matrix (column-pivoted Gram-Schmidt).
NodeArrayStage approx_fekete_greedy(const Mesh& mesh, int n);

/// Discrete Leja points: row-pivoted elimination on the transposed basis
/// matrix, N = dim P_n terms.
LejaSequence discrete_leja(const Mesh& mesh, int n);

/// Weighted variant: maximises |VDM(x_1..x_m, x)| w(x)^n at every step.
LejaSequence discrete_leja(const Mesh& mesh, int n, const WeightFunction& w);

/// Canonical Leja sequence of the unit disk: e_k = exp(2 pi i phi(k)) with phi
/// the base-2 radical inverse, e_0 = 1.
LejaSequence leja_disk_exact(int count);

/// Real parts of leja_disk_exact, dropping repeats within 1e-14.
LejaSequence r_leja(int count);

/// The binomial(n+2, 2) Padua points gamma_n(i pi/(n+1) + j pi/n), i + j <= n,
/// on the Lissajous curve gamma_n(t) = (cos nt, cos (n+1)t).
NodeArrayStage padua_points(int n);

/// Padua FLIPs through the reproducing kernel of the product arcsine measure:
/// l_a(z) = w_a (K_n(a; z) - T_n(z_2) T_n(a_2)).
class PaduaKernel {
public:
  explicit PaduaKernel(int n);

  int degree() const { return n_; }
  const PointSet& points() const { return points_; }
  double weight(Eigen::Index a) const { return weights_(a); }

  /// Index of a Padua point, or nullopt.
  std::optional<Eigen::Index> find(const Point& a, double tol = 1e-12) const;

  /// K_n(u; v) = sum_{i+j<=n} T^_i(u1) T^_j(u2) T^_i(v1) T^_j(v2).
  double kernel(const Point& u, const Point& v) const;
  double flip(Eigen::Index a, const Point& z) const;

private:
  int n_;
  PointSet points_;
  Eigen::VectorXd weights_;
};

double padua_flip_kernel(int n, const Point& a, const Point& z);

/// {(a_{i_1 1}, ..., a_{i_d d}) : i_1 + ... + i_d <= n} in graded order of
/// the index tuples. Input order matters.
NodeArrayStage intertwine(const std::vector<std::vector<cplx>>& tuples, int n);

/// Radii R_j = sqrt(G((j+1)/(s+1))), j = 0..s.
std::vector<double> bos_radii(int s, const RadialDistribution& G);

/// Exact log|VDM| of a Bos array with the given ring radii (monomial
/// normalisation), independent of ring phases.
LogAbsDet bos_log_abs_vdm(const std::vector<double>& radii);

/// Bos array of degree n = 2s: ring j carries 4j+1 equispaced points, phase 0.
NodeArrayStage bos_array(int n, const RadialDistribution& G);

/// The n+1 (n+1)-st roots of unity starting at 1.
NodeArrayStage roots_of_unity(int n);

/// Chebyshev points of the first kind cos((2k+1) pi/(2n+2)), k = 0..n.
NodeArrayStage chebyshev_points(int n);

/// cos(pi num/den) and sin(pi num/den) with exact values on the axes.
double cos_pi_frac(long long num, long long den);
double sin_pi_frac(long long num, long long den);

} // namespace pinterp
