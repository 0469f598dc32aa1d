#include "pinterp/interp.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/QR>

namespace pinterp {

namespace {

constexpr Eigen::Index kBlock = 2048;

Eigen::VectorXcd sample(const ScalarFunction& f, std::span<const Point> pts) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) v(static_cast<Eigen::Index>(i)) = f(pts[i]);
  return v;
}

} // namespace

Interpolant::Interpolant(NodeArrayStage stage, Eigen::VectorXcd coefficients)
    : stage_(std::move(stage)), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != stage_.size()) throw InvalidArgument("Interpolant: one coefficient per node required");
}

cplx Interpolant::operator()(const Point& z) const {
  return stage_.basis().evaluate<cplx>(z, coeffs_.size()).cwiseProduct(coeffs_).sum();
}

Eigen::VectorXcd Interpolant::evaluate(std::span<const Point> z) const {
  const auto total = static_cast<Eigen::Index>(z.size());
  Eigen::VectorXcd out(total);
  for (Eigen::Index s = 0; s < total; s += kBlock) {
    const Eigen::Index len = std::min(kBlock, total - s);
    const auto b = stage_.basis().evaluate_matrix<cplx>(
        z.subspan(static_cast<std::size_t>(s), static_cast<std::size_t>(len)), coeffs_.size());
    out.segment(s, len) = b.transpose() * coeffs_;
  }
  return out;
}

Polynomial Interpolant::monomial_form() const { return Polynomial::from_basis(stage_.basis(), coeffs_); }

Interpolant lagrange_interpolate(const NodeArrayStage& stage, const Eigen::VectorXcd& samples) {
  return Interpolant(stage, stage.system().coefficients(samples));
}

Interpolant lagrange_interpolate(const NodeArrayStage& stage, const ScalarFunction& f) {
  return lagrange_interpolate(stage, sample(f, stage.points()));
}

double sup_error(const Interpolant& p, const ScalarFunction& f, const Mesh& eval_mesh) {
  if (eval_mesh.points.empty()) throw InvalidArgument("sup_error: empty mesh");
  return (sample(f, eval_mesh.points) - p.evaluate(eval_mesh.points)).cwiseAbs().maxCoeff();
}

double least_squares_error(const ScalarFunction& f, int n, const Mesh& mesh) {
  const auto basis = GradedBasis::conditioned_for(mesh.dim, n, mesh.points);
  if (mesh.size() < basis.size()) throw InvalidArgument("least_squares_error: mesh smaller than dim P_n");
  const Eigen::MatrixXcd a = basis.evaluate_matrix<cplx>(mesh.points).transpose();
  const Eigen::VectorXcd b = sample(f, mesh.points);
  const Eigen::VectorXcd c = a.colPivHouseholderQr().solve(b);
  return (a * c - b).cwiseAbs().maxCoeff();
}

std::vector<ConvergenceSample> holo_convergence_probe(std::span<const NodeArrayStage> stages,
                                                      const ScalarFunction& f,
                                                      std::span<const Mesh> eval_meshes) {
  if (eval_meshes.size() != 1 && eval_meshes.size() != stages.size())
    throw InvalidArgument("holo_convergence_probe: need one mesh or one mesh per stage");
  std::vector<ConvergenceSample> out;
  for (std::size_t i = 0; i < stages.size(); ++i) {
    const auto& mesh = eval_meshes.size() == 1 ? eval_meshes[0] : eval_meshes[i];
    ConvergenceSample s;
    s.n = stages[i].degree();
    s.error = sup_error(lagrange_interpolate(stages[i], f), f, mesh);
    s.root_rate = s.n >= 1 ? std::pow(s.error, 1.0 / s.n) : s.error;
    out.push_back(s);
  }
  return out;
}

} // namespace pinterp
