#include "pinterp/vandermonde.hpp"

#include <algorithm>
#include <mutex>

namespace pinterp {

namespace {

constexpr Eigen::Index kBlock = 2048;

} // namespace

LagrangeSystem::LagrangeSystem(GradedBasis basis, PointSet nodes)
    : basis_(std::move(basis)), nodes_(std::move(nodes)) {
  if (size() > basis_.size())
    throw InvalidArgument("LagrangeSystem: more nodes than basis elements");
  for (const auto& p : nodes_)
    if (p.size() != basis_.dim()) throw InvalidArgument("LagrangeSystem: node dimension mismatch");
  if (is_real(nodes_))
    factorise<double>();
  else
    factorise<cplx>();
}

template <typename Scalar>
void LagrangeSystem::factorise() {
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Factor<Scalar> f;
  Matrix v = basis_.evaluate_matrix<Scalar>(nodes_, size());
  f.row_scale.resize(v.rows());
  double log_scale = 0.0;
  bool zero_row = false;
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    const double s = v.row(i).cwiseAbs().maxCoeff();
    if (!(s > 0.0) || !std::isfinite(s)) {
      zero_row = true;
      f.row_scale(i) = 1.0;
      continue;
    }
    f.row_scale(i) = s;
    v.row(i) /= Scalar(s);
    log_scale += std::log(s);
  }
  if (zero_row) {
    log_det_ = LogAbsDet::singular();
    factor_ = std::move(f);
    return;
  }
  Eigen::PartialPivLU<Matrix> lu(v);
  const auto& packed = lu.matrixLU();
  double acc = 0.0;
  bool singular = false;
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    const double p = std::abs(packed(i, i));
    if (!(p >= kDegeneracyTolerance)) singular = true;
    else acc += std::log(p);
  }
  if (singular) {
    log_det_ = LogAbsDet::singular();
  } else {
    log_det_ = {acc + log_scale, false, 1.0 / lu.rcond()};
    f.inverse = lu.inverse();
  }
  factor_ = std::move(f);
}

void LagrangeSystem::require_regular() const {
  if (degenerate()) throw DegenerateError("interpolation nodes are not unisolvent");
}

template <typename Scalar, typename Visit>
void LagrangeSystem::for_each_block(std::span<const Point> z, Visit&& visit) const {
  // visit(first column index, N x block matrix of FLIP values)
  const auto& f = std::get<Factor<Scalar>>(factor_);
  const Eigen::Index total = static_cast<Eigen::Index>(z.size());
  for (Eigen::Index start = 0; start < total; start += kBlock) {
    const Eigen::Index len = std::min(kBlock, total - start);
    auto chunk = z.subspan(static_cast<std::size_t>(start), static_cast<std::size_t>(len));
    auto b = basis_.evaluate_matrix<Scalar>(chunk, size());
    b = f.row_scale.cwiseInverse().template cast<Scalar>().asDiagonal() * b;
    visit(start, (f.inverse * b).eval());
  }
}

Eigen::VectorXcd LagrangeSystem::flips(const Point& z) const {
  std::span<const Point> one(&z, 1);
  return flips(one).col(0);
}

Eigen::MatrixXcd LagrangeSystem::flips(std::span<const Point> z) const {
  require_regular();
  Eigen::MatrixXcd out(size(), static_cast<Eigen::Index>(z.size()));
  if (real() && std::all_of(z.begin(), z.end(), [](const Point& p) { return is_real(p); })) {
    for_each_block<double>(z, [&](Eigen::Index s, const Eigen::MatrixXd& l) {
      out.middleCols(s, l.cols()) = l.cast<cplx>();
    });
  } else if (real()) {
    // real nodes, complex evaluation points
    const auto& f = std::get<Factor<double>>(factor_);
    const Eigen::MatrixXcd inv = f.inverse.cast<cplx>();
    auto b = basis_.evaluate_matrix<cplx>(z, size());
    b = f.row_scale.cwiseInverse().cast<cplx>().asDiagonal() * b;
    out = inv * b;
  } else {
    for_each_block<cplx>(z, [&](Eigen::Index s, const Eigen::MatrixXcd& l) {
      out.middleCols(s, l.cols()) = l;
    });
  }
  return out;
}

Eigen::VectorXcd LagrangeSystem::coefficients(const Eigen::VectorXcd& samples) const {
  require_regular();
  if (samples.size() != size()) throw InvalidArgument("coefficients: one sample per node required");
  // V = diag(s) Vs, V^T a = f  =>  a = diag(1/s) Vs^{-T} f
  return std::visit(
      [&](const auto& f) -> Eigen::VectorXcd {
        Eigen::VectorXcd a = f.inverse.transpose().template cast<cplx>() * samples;
        return f.row_scale.cwiseInverse().template cast<cplx>().cwiseProduct(a);
      },
      factor_);
}

double LagrangeSystem::lebesgue_function(const Point& z) const {
  return flips(z).cwiseAbs().sum();
}

Eigen::VectorXd LagrangeSystem::lebesgue_function(std::span<const Point> z) const {
  require_regular();
  Eigen::VectorXd out(static_cast<Eigen::Index>(z.size()));
  const bool all_real = std::all_of(z.begin(), z.end(), [](const Point& p) { return is_real(p); });
  if (real() && all_real) {
    for_each_block<double>(z, [&](Eigen::Index s, const Eigen::MatrixXd& l) {
      out.segment(s, l.cols()) = l.cwiseAbs().colwise().sum().transpose();
    });
  } else if (!real()) {
    for_each_block<cplx>(z, [&](Eigen::Index s, const Eigen::MatrixXcd& l) {
      out.segment(s, l.cols()) = l.cwiseAbs().colwise().sum().transpose();
    });
  } else {
    out = flips(z).cwiseAbs().colwise().sum().transpose();
  }
  return out;
}

double LagrangeSystem::lebesgue_max(std::span<const Point> z) const {
  if (z.empty()) throw InvalidArgument("lebesgue_max: empty evaluation set");
  return lebesgue_function(z).maxCoeff();
}

std::string to_string(Provenance p) {
  switch (p) {
  case Provenance::fekete: return "fekete";
  case Provenance::leja: return "leja";
  case Provenance::padua: return "padua";
  case Provenance::bos: return "bos";
  case Provenance::intertwined: return "intertwined";
  case Provenance::custom: return "custom";
  }
  return "custom";
}

Provenance provenance_from_string(const std::string& s) {
  for (auto p : {Provenance::fekete, Provenance::leja, Provenance::padua, Provenance::bos,
                 Provenance::intertwined, Provenance::custom})
    if (to_string(p) == s) return p;
  throw InvalidArgument("unknown provenance: " + s);
}

std::shared_ptr<NodeArrayStage::Impl> NodeArrayStage::make_impl(int n, PointSet points,
                                                                Provenance provenance) {
  if (points.empty()) throw InvalidArgument("NodeArrayStage: no points");
  if (n < 0) throw InvalidArgument("NodeArrayStage: negative degree");
  const int d = static_cast<int>(points.front().size());
  if (d < 1) throw InvalidArgument("NodeArrayStage: zero-dimensional points");
  for (const auto& p : points)
    if (p.size() != d) throw InvalidArgument("NodeArrayStage: mixed point dimensions");
  if (static_cast<long long>(points.size()) != dim_pn(d, n))
    throw InvalidArgument("NodeArrayStage: point count must equal dim P_n");
  auto impl = std::make_shared<Impl>();
  impl->n = n;
  impl->d = d;
  impl->provenance = provenance;
  impl->basis = GradedBasis::conditioned_for(d, n, points);
  impl->points = std::move(points);
  return impl;
}

NodeArrayStage::NodeArrayStage(int n, PointSet points, Provenance provenance)
    : impl_(make_impl(n, std::move(points), provenance)) {
  auto& im = *impl_;
  std::call_once(im.once, [&] {
    im.system = std::make_unique<LagrangeSystem>(im.basis, im.points);
  });
  if (im.system->degenerate())
    throw DegenerateError("NodeArrayStage: points are not unisolvent for degree " + std::to_string(n));
  im.log_vdm = im.system->log_det();
  im.log_vdm.log_modulus -= im.basis.log_leading_sum(im.basis.size());
}

NodeArrayStage NodeArrayStage::with_known_vdm(int n, PointSet points, Provenance provenance,
                                              LogAbsDet monomial_log_vdm) {
  if (monomial_log_vdm.degenerate)
    throw DegenerateError("NodeArrayStage: points are not unisolvent for degree " + std::to_string(n));
  auto impl = make_impl(n, std::move(points), provenance);
  impl->log_vdm = monomial_log_vdm;
  return NodeArrayStage(std::move(impl));
}

const LagrangeSystem& NodeArrayStage::system() const {
  auto& im = *impl_;
  std::call_once(im.once, [&] {
    im.system = std::make_unique<LagrangeSystem>(im.basis, im.points);
  });
  if (im.system->degenerate()) throw DegenerateError("NodeArrayStage: factorisation is singular");
  return *im.system;
}

Eigen::MatrixXcd vdm_matrix(const GradedBasis& basis, const PointSet& points) {
  if (static_cast<Eigen::Index>(points.size()) > basis.size())
    throw InvalidArgument("vdm_matrix: more points than basis elements");
  return basis.evaluate_matrix<cplx>(points, static_cast<Eigen::Index>(points.size()));
}

LogAbsDet log_abs_vdm(const GradedBasis& basis, const PointSet& points) {
  const auto m = static_cast<Eigen::Index>(points.size());
  if (m > basis.size()) throw InvalidArgument("log_abs_vdm: more points than basis elements");
  const auto cond = GradedBasis::conditioned_for(basis.dim(), basis.degree(), points);
  LogAbsDet r = is_real(points) ? log_abs_det(cond.evaluate_matrix<double>(points, m))
                                : log_abs_det(cond.evaluate_matrix<cplx>(points, m));
  if (!r.degenerate) r.log_modulus += basis.log_leading_sum(m) - cond.log_leading_sum(m);
  return r;
}

LogAbsDet weighted_log_abs_vdm(const GradedBasis& basis, const PointSet& points,
                               const WeightFunction& w, int n) {
  if (n < 0) throw InvalidArgument("weighted_log_abs_vdm: negative weight exponent");
  double log_w = 0.0;
  for (const auto& p : points) {
    const double v = w(p);
    if (!(v > 0.0) || !std::isfinite(v)) return LogAbsDet::singular();
    log_w += std::log(v);
  }
  LogAbsDet r = log_abs_vdm(basis, points);
  if (!r.degenerate) r.log_modulus += n * log_w;
  return r;
}

Eigen::VectorXcd flip_values(const NodeArrayStage& stage, const Point& z) {
  return stage.system().flips(z);
}

double tdiam_estimate(const NodeArrayStage& stage) {
  if (stage.degree() < 1) throw InvalidArgument("tdiam_estimate: degree must be >= 1");
  const auto& v = stage.log_vdm();
  if (v.degenerate) return 0.0;
  const double d = stage.dim();
  const double N = static_cast<double>(stage.size());
  return std::exp(v.log_modulus * (d + 1.0) / (d * stage.degree() * N));
}

} // namespace pinterp
