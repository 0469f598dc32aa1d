#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pinterp/types.hpp"

namespace pinterp {

enum class CompactId { interval, disk_boundary, square, real_disk, real_ball, simplex, product };

std::string to_string(CompactId id);
CompactId compact_from_string(const std::string& s);

/// Finite norming set for P_n on a reference compact:
/// ||p||_K <= C_n ||p||_mesh for every p of degree <= degree.
struct Mesh {
  PointSet points;
  CompactId compact = CompactId::interval;
  int dim = 1;
  int degree = 1;
  /// C_n when a classical bound is available; empty for empirical-only meshes.
  std::optional<double> norming_constant;

  // generator parameters, kept so a denser reference mesh can be rebuilt
  int density = 2;
  int angular_density = 0;
  std::vector<Mesh> factors;

  Eigen::Index size() const { return static_cast<Eigen::Index>(points.size()); }
};

/// Chebyshev-Lobatto points cos(pi k/m), k = 0..m, m = density*n, ordered
/// from +1 down to -1. C_n = 1/cos(pi/(2 density)).
Mesh interval_mesh(int n, int density);

/// density*n + 1 equally spaced points on |z| = 1 starting at 1. Norming for
/// holomorphic polynomials on the closed disk by the maximum principle.
Mesh disk_boundary_mesh(int n, int density);

/// Polar grid on the real disk x^2 + y^2 <= 1: radii cos(pi k/(2R)),
/// R = radial_density*n (so radii cluster at r = 1), times A =
/// 2*angular_density*n equispaced angles, plus the origin once.
Mesh real_disk_mesh(int n, int radial_density, int angular_density);

/// Tensor Chebyshev-Lobatto grid on [-1,1]^2.
Mesh square_mesh(int n, int density);

/// Barycentric lattice {k/m : k in N^d, |k| <= m}, m = density*n, on the
/// simplex {x >= 0, sum x <= 1}.
Mesh simplex_mesh(int d, int n, int density);

/// Tensor Lobatto grid of [-1,1]^d restricted to the unit ball, plus the
/// radial projections of the outside grid points onto the sphere.
Mesh real_ball_mesh(int d, int n, int density);

/// Cartesian product; C_n is the product of the factor constants.
Mesh product_mesh(std::span<const Mesh> factors);

/// The same generator at `factor` times the density.
Mesh refine(const Mesh& mesh, int factor);

/// The designated sup-norm surrogate: refine(mesh, 10).
inline Mesh reference_mesh(const Mesh& mesh) { return refine(mesh, 10); }

} // namespace pinterp
