#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "pinterp/diagnostics.hpp"
#include "pinterp/meshes.hpp"
#include "pinterp/polynomial.hpp"

namespace pinterp {

/// [int e_i conj(e_j) dmu] for the first N elements of the basis.
Eigen::MatrixXcd gram_matrix(const GradedBasis& basis, const DiscreteMeasure& mu);

/// q = T e with T lower triangular and positive diagonal, so that the q_j are
/// orthonormal in L^2(mu) and q_j has positive leading coefficient.
class OrthonormalBasis {
public:
  OrthonormalBasis(GradedBasis basis, Eigen::MatrixXcd cholesky_factor,
                   std::shared_ptr<const DiscreteMeasure> measure = nullptr);

  const GradedBasis& basis() const { return basis_; }
  int degree() const { return basis_.degree(); }
  Eigen::Index size() const { return factor_.rows(); }
  const std::shared_ptr<const DiscreteMeasure>& measure() const { return measure_; }

  /// Lower-triangular L with Gram = L L^*; the transform is L^{-1}.
  const Eigen::MatrixXcd& cholesky_factor() const { return factor_; }
  Eigen::MatrixXcd transform() const;

  /// (q_1(z), ..., q_N(z)).
  Eigen::VectorXcd evaluate(const Point& z) const;
  /// q_j on the graded monomial basis.
  Polynomial polynomial(Eigen::Index j) const;

  /// B_n(z) = sum_j |q_j(z)|^2, one value per point.
  Eigen::VectorXd bergman(std::span<const Point> z) const;

private:
  GradedBasis basis_;
  Eigen::MatrixXcd factor_;
  std::shared_ptr<const DiscreteMeasure> measure_;
};

/// Cholesky of a Gram matrix; a pivot below 1e-12 trace/N raises
/// DegenerateError naming its index.
OrthonormalBasis orthonormalize(const GradedBasis& basis, const Eigen::MatrixXcd& gram);

/// Orthonormal basis of P_n in L^2(mu), computed in a conditioned basis.
OrthonormalBasis orthonormal_basis(const DiscreteMeasure& mu, int n);

double bergman_function(const OrthonormalBasis& onb, const Point& z);

/// max over the mesh of sqrt(B_n): the best Bernstein-Markov constant M_n
/// for the mesh sup norm.
double bm_constant(const OrthonormalBasis& onb, const Mesh& eval_mesh);

/// Truncated Bernstein-Markov measure nu = c sum_{k=3}^{k_max} mu_k/(k log^2 k),
/// mu_k uniform on approximate Fekete points of order k.
struct BMConstruction {
  DiscreteMeasure measure;
  int k_max = 3;
  double c = 1.0;
  /// sum_{k > k_max} 1/(k log^2 k) <= 1/log(k_max): mass missing from the
  /// untruncated series relative to 1/c.
  double tail_bound = 0.0;
  std::vector<int> degrees;          // k
  std::vector<long long> dims;       // m_k = dim P_k
  std::vector<double> flip_sup;      // max_j ||l_j^(k)|| on the reference mesh

  /// min over k in [max(n,3), k_max] of k m_k log^2(k) a_k / c, the bound on
  /// M_n; infinite when n > k_max.
  double envelope(int n) const;
};

BMConstruction bm_measure_construct(const std::function<Mesh(int)>& mesh_for_degree, int k_max);

/// moment_distance between (1/N) B_n dnu and the equilibrium reference.
double bergman_weakstar_probe(const OrthonormalBasis& onb, const DiscreteMeasure& nu,
                              const EquilibriumReference& ref, int max_deg);

/// Uniform measure on the m-th roots of unity.
DiscreteMeasure roots_of_unity_measure(int m);

/// Gauss-Chebyshev nodes cos((2j+1) pi/(2m)) with weights 1/m: exact for the
/// arcsine measure on polynomials of degree < 2m.
DiscreteMeasure arcsine_measure(int m);

} // namespace pinterp
