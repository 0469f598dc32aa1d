#include "pinterp/bergman.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "pinterp/points.hpp"

namespace pinterp {

namespace {

constexpr Eigen::Index kBlock = 2048;

} // namespace

Eigen::MatrixXcd gram_matrix(const GradedBasis& basis, const DiscreteMeasure& mu) {
  if (mu.support.size() != mu.weights.size()) throw InvalidArgument("gram_matrix: weights/support mismatch");
  const Eigen::MatrixXcd e = basis.evaluate_matrix<cplx>(mu.support);
  const Eigen::Map<const Eigen::VectorXd> w(mu.weights.data(), static_cast<Eigen::Index>(mu.weights.size()));
  Eigen::MatrixXcd g = e * w.cast<cplx>().asDiagonal() * e.adjoint();
  // exact Hermitian symmetry
  g = (0.5 * (g + g.adjoint())).eval();
  return g;
}

OrthonormalBasis::OrthonormalBasis(GradedBasis basis, Eigen::MatrixXcd cholesky_factor,
                                   std::shared_ptr<const DiscreteMeasure> measure)
    : basis_(std::move(basis)), factor_(std::move(cholesky_factor)), measure_(std::move(measure)) {
  if (factor_.rows() != factor_.cols() || factor_.rows() > basis_.size())
    throw InvalidArgument("OrthonormalBasis: factor does not match the basis");
}

Eigen::MatrixXcd OrthonormalBasis::transform() const {
  return factor_.triangularView<Eigen::Lower>().solve(Eigen::MatrixXcd::Identity(size(), size()));
}

Eigen::VectorXcd OrthonormalBasis::evaluate(const Point& z) const {
  return factor_.triangularView<Eigen::Lower>().solve(basis_.evaluate<cplx>(z, size()));
}

Polynomial OrthonormalBasis::polynomial(Eigen::Index j) const {
  if (j < 0 || j >= size()) throw InvalidArgument("OrthonormalBasis::polynomial: index out of range");
  const Eigen::VectorXcd row = transform().row(j).transpose();
  return Polynomial::from_basis(basis_, row);
}

Eigen::VectorXd OrthonormalBasis::bergman(std::span<const Point> z) const {
  const auto total = static_cast<Eigen::Index>(z.size());
  Eigen::VectorXd out(total);
  for (Eigen::Index s = 0; s < total; s += kBlock) {
    const Eigen::Index len = std::min(kBlock, total - s);
    Eigen::MatrixXcd e = basis_.evaluate_matrix<cplx>(
        z.subspan(static_cast<std::size_t>(s), static_cast<std::size_t>(len)), size());
    factor_.triangularView<Eigen::Lower>().solveInPlace(e);
    out.segment(s, len) = e.colwise().squaredNorm().transpose();
  }
  return out;
}

OrthonormalBasis orthonormalize(const GradedBasis& basis, const Eigen::MatrixXcd& gram) {
  const Eigen::Index n = gram.rows();
  if (gram.cols() != n || n > basis.size()) throw InvalidArgument("orthonormalize: Gram matrix has the wrong shape");
  const double threshold = 1e-12 * gram.diagonal().real().sum() / static_cast<double>(std::max<Eigen::Index>(n, 1));
  Eigen::MatrixXcd l = Eigen::MatrixXcd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    cplx diag = gram(j, j);
    for (Eigen::Index k = 0; k < j; ++k) diag -= l(j, k) * std::conj(l(j, k));
    const double pivot = diag.real();
    if (!(pivot > threshold))
      throw DegenerateError("orthonormalize: Gram matrix is singular at pivot " + std::to_string(j));
    const double ljj = std::sqrt(pivot);
    l(j, j) = ljj;
    for (Eigen::Index i = j + 1; i < n; ++i) {
      cplx v = gram(i, j);
      for (Eigen::Index k = 0; k < j; ++k) v -= l(i, k) * std::conj(l(j, k));
      l(i, j) = v / ljj;
    }
  }
  return OrthonormalBasis(basis, std::move(l));
}

OrthonormalBasis orthonormal_basis(const DiscreteMeasure& mu, int n) {
  if (mu.support.empty()) throw InvalidArgument("orthonormal_basis: empty measure");
  const int d = static_cast<int>(mu.support.front().size());
  const auto basis = GradedBasis::conditioned_for(d, n, mu.support);
  auto onb = orthonormalize(basis, gram_matrix(basis, mu));
  return OrthonormalBasis(onb.basis(), onb.cholesky_factor(), std::make_shared<const DiscreteMeasure>(mu));
}

double bergman_function(const OrthonormalBasis& onb, const Point& z) {
  return onb.evaluate(z).squaredNorm();
}

double bm_constant(const OrthonormalBasis& onb, const Mesh& eval_mesh) {
  if (eval_mesh.points.empty()) throw InvalidArgument("bm_constant: empty mesh");
  return std::sqrt(onb.bergman(eval_mesh.points).maxCoeff());
}

double BMConstruction::envelope(int n) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    const int k = degrees[i];
    if (k < n) continue;
    const double lk = std::log(static_cast<double>(k));
    best = std::min(best, k * static_cast<double>(dims[i]) * lk * lk * flip_sup[i] / c);
  }
  return best;
}

BMConstruction bm_measure_construct(const std::function<Mesh(int)>& mesh_for_degree, int k_max) {
  if (k_max < 3) throw InvalidArgument("bm_measure_construct: k_max must be >= 3");
  BMConstruction out;
  out.k_max = k_max;
  double total = 0.0;
  for (int k = 3; k <= k_max; ++k) {
    const double lk = std::log(static_cast<double>(k));
    total += 1.0 / (k * lk * lk);
  }
  out.c = 1.0 / total;
  out.tail_bound = 1.0 / std::log(static_cast<double>(k_max));

  // merge repeated support points so the weights stay on distinct atoms
  std::map<std::vector<double>, std::size_t> atoms;
  for (int k = 3; k <= k_max; ++k) {
    const Mesh mesh = mesh_for_degree(k);
    const auto stage = approx_fekete_greedy(mesh, k);
    const Mesh ref = reference_mesh(mesh);
    const Eigen::MatrixXcd l = stage.system().flips(ref.points);
    out.degrees.push_back(k);
    out.dims.push_back(stage.size());
    out.flip_sup.push_back(l.cwiseAbs().rowwise().maxCoeff().maxCoeff());

    const double lk = std::log(static_cast<double>(k));
    const double w = out.c / (k * lk * lk) / static_cast<double>(stage.size());
    for (const auto& p : stage.points()) {
      std::vector<double> key;
      for (Eigen::Index c = 0; c < p.size(); ++c) {
        key.push_back(p(c).real());
        key.push_back(p(c).imag());
      }
      auto [it, fresh] = atoms.emplace(key, out.measure.support.size());
      if (fresh) {
        out.measure.support.push_back(p);
        out.measure.weights.push_back(w);
      } else {
        out.measure.weights[it->second] += w;
      }
    }
  }
  out.measure.mass = 0.0;
  for (double w : out.measure.weights) out.measure.mass += w;
  return out;
}

double bergman_weakstar_probe(const OrthonormalBasis& onb, const DiscreteMeasure& nu,
                              const EquilibriumReference& ref, int max_deg) {
  DiscreteMeasure rho;
  rho.support = nu.support;
  const Eigen::VectorXd b = onb.bergman(nu.support);
  const double N = static_cast<double>(onb.size());
  for (std::size_t j = 0; j < nu.support.size(); ++j) {
    rho.weights.push_back(nu.weights[j] * b(static_cast<Eigen::Index>(j)) / N);
    rho.mass += rho.weights.back();
  }
  return moment_distance(rho, ref, max_deg);
}

DiscreteMeasure roots_of_unity_measure(int m) {
  if (m < 1) throw InvalidArgument("roots_of_unity_measure: m must be >= 1");
  DiscreteMeasure mu;
  for (int k = 0; k < m; ++k)
    mu.support.push_back(make_point({cplx(cos_pi_frac(2LL * k, m), sin_pi_frac(2LL * k, m))}));
  mu.weights.assign(static_cast<std::size_t>(m), 1.0 / m);
  mu.mass = 1.0;
  return mu;
}

DiscreteMeasure arcsine_measure(int m) {
  if (m < 1) throw InvalidArgument("arcsine_measure: m must be >= 1");
  DiscreteMeasure mu;
  for (int j = 0; j < m; ++j) mu.support.push_back(make_point({cos_pi_frac(2LL * j + 1, 2LL * m)}));
  mu.weights.assign(static_cast<std::size_t>(m), 1.0 / m);
  mu.mass = 1.0;
  return mu;
}

} // namespace pinterp
