#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <variant>

#include <Eigen/Core>
#include <Eigen/LU>

#include "pinterp/basis.hpp"

namespace pinterp {

/// Pivot threshold, relative to unit row scale after equilibration.
inline constexpr double kDegeneracyTolerance = 1e-13;

/// log|det| without forming the determinant.
struct LogAbsDet {
  double log_modulus = -std::numeric_limits<double>::infinity();
  bool degenerate = true;
  double condition_estimate = std::numeric_limits<double>::infinity();

  static LogAbsDet singular() { return {}; }
};

/// log|det A| by partial-pivot LU after scaling every row to unit max modulus.
/// Degenerate when a pivot of the equilibrated matrix falls below
/// kDegeneracyTolerance; degenerate results carry log_modulus = -inf.
template <typename Derived>
LogAbsDet log_abs_det(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (a.rows() != a.cols()) throw InvalidArgument("log_abs_det: matrix must be square");
  if (a.rows() == 0) return {0.0, false, 1.0};
  Matrix m = a;
  double log_scale = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const double s = m.row(i).cwiseAbs().maxCoeff();
    if (!(s > 0.0) || !std::isfinite(s)) return LogAbsDet::singular();
    m.row(i) /= Scalar(s);
    log_scale += std::log(s);
  }
  Eigen::PartialPivLU<Matrix> lu(m);
  const auto& packed = lu.matrixLU();
  double acc = 0.0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    const double p = std::abs(packed(i, i));
    if (!(p >= kDegeneracyTolerance)) return LogAbsDet::singular();
    acc += std::log(p);
  }
  return {acc + log_scale, false, 1.0 / lu.rcond()};
}

/// Square interpolation system [e_i(zeta_j)] in a given basis, factorised once.
/// Holds a real factorisation when every node is real, a complex one otherwise.
class LagrangeSystem {
public:
  LagrangeSystem(GradedBasis basis, PointSet nodes);

  const GradedBasis& basis() const { return basis_; }
  const PointSet& nodes() const { return nodes_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(nodes_.size()); }
  bool real() const { return std::holds_alternative<Factor<double>>(factor_); }

  /// log|det| in the normalisation of basis().
  const LogAbsDet& log_det() const { return log_det_; }
  bool degenerate() const { return log_det_.degenerate; }

  /// Fundamental Lagrange polynomials (l_1(z), ..., l_N(z)).
  Eigen::VectorXcd flips(const Point& z) const;
  /// N x |z| matrix of FLIP values, one column per evaluation point.
  Eigen::MatrixXcd flips(std::span<const Point> z) const;

  /// Coefficients (in basis()) of the interpolant of `samples`.
  Eigen::VectorXcd coefficients(const Eigen::VectorXcd& samples) const;

  /// sum_j |l_j(z)|.
  double lebesgue_function(const Point& z) const;
  Eigen::VectorXd lebesgue_function(std::span<const Point> z) const;
  /// max over z of sum_j |l_j(z)|, evaluated in blocks.
  double lebesgue_max(std::span<const Point> z) const;

private:
  template <typename Scalar>
  struct Factor {
    using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    Eigen::VectorXd row_scale;
    Matrix inverse; // of the row-equilibrated system
  };

  template <typename Scalar>
  void factorise();
  template <typename Scalar, typename Visit>
  void for_each_block(std::span<const Point> z, Visit&& visit) const;
  void require_regular() const;

  GradedBasis basis_;
  PointSet nodes_;
  LogAbsDet log_det_;
  std::variant<Factor<double>, Factor<cplx>> factor_;
};

/// Provenance label of a node array.
enum class Provenance { fekete, leja, padua, bos, intertwined, custom };

std::string to_string(Provenance p);
Provenance provenance_from_string(const std::string& s);

/// Degree-n unisolvent node set A_n with N = dim P_n points. Construction
/// checks unisolvency; the factorisation used for FLIPs is built on first use
/// and shared between copies.
class NodeArrayStage {
public:
  NodeArrayStage(int n, PointSet points, Provenance provenance = Provenance::custom);

  /// For generators that know |VDM| in closed form (Bos arrays). The
  /// factorisation is deferred until FLIPs are requested.
  static NodeArrayStage with_known_vdm(int n, PointSet points, Provenance provenance,
                                       LogAbsDet monomial_log_vdm);

  int degree() const { return impl_->n; }
  int dim() const { return impl_->d; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(impl_->points.size()); }
  const PointSet& points() const { return impl_->points; }
  Provenance provenance() const { return impl_->provenance; }

  /// log|VDM| in the monomial normalisation.
  const LogAbsDet& log_vdm() const { return impl_->log_vdm; }

  /// Conditioned basis used for all numerics on this stage.
  const GradedBasis& basis() const { return impl_->basis; }
  const LagrangeSystem& system() const;

private:
  struct Impl {
    int n = 0;
    int d = 0;
    PointSet points;
    Provenance provenance = Provenance::custom;
    GradedBasis basis{1, 0};
    LogAbsDet log_vdm;
    mutable std::once_flag once;
    mutable std::unique_ptr<LagrangeSystem> system;
  };
  explicit NodeArrayStage(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  static std::shared_ptr<Impl> make_impl(int n, PointSet points, Provenance provenance);

  std::shared_ptr<Impl> impl_;
};

/// Non-negative weight w on K, used as W = VDM * prod w(zeta_j)^n.
struct WeightFunction {
  std::function<double(const Point&)> evaluator;
  bool admissible = true;

  double operator()(const Point& z) const { return evaluator(z); }
};

/// [e_i(zeta_j)] for the first m = |points| elements of `basis`.
Eigen::MatrixXcd vdm_matrix(const GradedBasis& basis, const PointSet& points);

/// log|VDM| of the first m = |points| basis elements, computed in a
/// conditioned basis and reported in the normalisation of `basis`.
LogAbsDet log_abs_vdm(const GradedBasis& basis, const PointSet& points);

/// log|VDM| + n sum_j log w(zeta_j).
LogAbsDet weighted_log_abs_vdm(const GradedBasis& basis, const PointSet& points,
                               const WeightFunction& w, int n);

/// (l_{n1}(z), ..., l_{nN}(z)) by linear solve.
Eigen::VectorXcd flip_values(const NodeArrayStage& stage, const Point& z);

/// exp(log|VDM| (d+1)/(d n N)); 0 for a degenerate stage.
double tdiam_estimate(const NodeArrayStage& stage);

} // namespace pinterp
