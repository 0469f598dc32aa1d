#pragma once

#include <compare>
#include <map>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "pinterp/types.hpp"

namespace pinterp {

/// Exponent tuple alpha of a monomial z^alpha.
struct MultiIndex {
  std::vector<int> exponents;

  MultiIndex() = default;
  explicit MultiIndex(std::vector<int> e);

  int dim() const { return static_cast<int>(exponents.size()); }
  int degree() const;
  int operator[](int i) const { return exponents[static_cast<std::size_t>(i)]; }

  auto operator<=>(const MultiIndex&) const = default;
};

/// dim P_n in d variables, binomial(n+d, d).
long long dim_pn(int d, int n);

/// l_n = sum of the degrees of the graded basis of P_n = d n N / (d+1).
long long ln_sum(int d, int n);

/// All multi-indices of total degree <= n in graded order; within a degree
/// block the tuples are sorted lexicographically descending, so x precedes y.
std::vector<MultiIndex> graded_indices(int d, int n);

/// Multi-indices of total degree exactly k, in the same order as above.
std::vector<MultiIndex> homogeneous_indices(int d, int k);

/// Univariate family used along one coordinate of a product basis.
enum class Family { monomial, chebyshev };

/// Graded basis of P_n. Entry i is prod_c phi_{alpha(i)_c}(z_c) with phi_k the
/// coordinate family (z^k or T_k). The monomial basis is the reference
/// normalisation for every reported determinant; the Chebyshev family exists
/// for conditioning on real coordinates and is related to it by a triangular
/// change of basis whose diagonal holds the leading coefficients.
class GradedBasis {
public:
  GradedBasis(int d, int n);
  GradedBasis(int d, int n, std::vector<Family> families);

  /// Chebyshev on every coordinate whose values are real across `pts`,
  /// monomial elsewhere.
  static GradedBasis conditioned_for(int d, int n, const PointSet& pts);

  int dim() const { return d_; }
  int degree() const { return n_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(indices_.size()); }

  const std::vector<MultiIndex>& indices() const { return indices_; }
  const MultiIndex& index(Eigen::Index i) const { return indices_[static_cast<std::size_t>(i)]; }
  Eigen::Index position(const MultiIndex& alpha) const;

  Family family(int coord) const { return families_[static_cast<std::size_t>(coord)]; }
  const std::vector<Family>& families() const { return families_; }
  bool is_monomial() const;

  /// log of the leading coefficient of element i expressed in monomials.
  double log_leading_coefficient(Eigen::Index i) const;
  /// Sum of log leading coefficients over the first m elements.
  double log_leading_sum(Eigen::Index m) const;

  /// Values of the first m elements (all if m < 0) at z. Scalar = double
  /// reads only the real parts of z.
  template <typename Scalar>
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> evaluate(const Point& z, Eigen::Index m = -1) const;

  /// m x |pts| matrix, one column per point.
  template <typename Scalar>
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> evaluate_matrix(std::span<const Point> pts,
                                                                       Eigen::Index m = -1) const;

private:
  template <typename Scalar>
  void fill_column(const Point& z, Eigen::Index m, Scalar* out,
                   Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& table) const;

  int d_;
  int n_;
  std::vector<Family> families_;
  std::vector<MultiIndex> indices_;
  std::map<std::vector<int>, Eigen::Index> lookup_;
};

/// A graded basis in the monomial normalisation.
using GradedMonomialBasis = GradedBasis;

/// (e_1(z), ..., e_N(z)) for the basis.
Eigen::VectorXcd basis_vector(const GradedBasis& basis, const Point& z);

/// basis_vector divided entrywise by positive scales (mesh sup norms).
Eigen::VectorXcd scaled_basis_vector(const GradedBasis& basis, const Point& z,
                                     const Eigen::VectorXd& sup_norms);

/// Max modulus of each basis element over a point set.
Eigen::VectorXd basis_sup_norms(const GradedBasis& basis, std::span<const Point> pts);

} // namespace pinterp
