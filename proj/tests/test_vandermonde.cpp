#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pinterp/vandermonde.hpp"

using namespace pinterp;

namespace {

PointSet line(const std::vector<cplx>& xs) {
  PointSet p;
  for (auto x : xs) p.push_back(make_point({x}));
  return p;
}

oracle::cl monomial_value(const MultiIndex& a, const Point& z) {
  oracle::cl v = 1.0L;
  for (int c = 0; c < a.dim(); ++c) v *= std::pow(oracle::cl(z(c)), a[c]);
  return v;
}

// [e_i(zeta_j)] in long double, for the determinant-ratio oracle
std::vector<std::vector<oracle::cl>> monomial_matrix(int d, int n, const PointSet& pts) {
  const auto idx = graded_indices(d, n);
  std::vector<std::vector<oracle::cl>> m(idx.size(), std::vector<oracle::cl>(pts.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) m[i][j] = monomial_value(idx[i], pts[j]);
  return m;
}

PointSet random_points(int d, int count, std::mt19937_64& rng, bool complex) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  PointSet p;
  for (int k = 0; k < count; ++k) {
    Point z(d);
    for (int c = 0; c < d; ++c) z(c) = complex ? cplx(u(rng), u(rng)) : cplx(u(rng));
    p.push_back(z);
  }
  return p;
}

} // namespace

TEST_CASE("univariate log|VDM| matches the product of differences") {
  std::mt19937_64 rng(1);
  for (int n : {1, 3, 6, 12}) {
    for (bool complex : {false, true}) {
      const auto pts = random_points(1, n + 1, rng, complex);
      std::vector<cplx> xs;
      for (const auto& p : pts) xs.push_back(p(0));
      const auto r = log_abs_vdm(GradedBasis(1, n), pts);
      REQUIRE_FALSE(r.degenerate);
      CHECK(r.log_modulus == doctest::Approx(oracle::log_vdm_1d(xs)).epsilon(1e-11));
    }
  }
}

TEST_CASE("multivariate log|VDM| matches a long-double determinant") {
  std::mt19937_64 rng(2);
  for (int d : {2, 3})
    for (int n : {1, 2, 3}) {
      const int N = static_cast<int>(dim_pn(d, n));
      const auto pts = random_points(d, N, rng, d == 3);
      const auto det = oracle::determinant(monomial_matrix(d, n, pts));
      const auto r = log_abs_vdm(GradedBasis(d, n), pts);
      CHECK(r.log_modulus == doctest::Approx(static_cast<double>(std::log(std::abs(det)))).epsilon(1e-10));
    }
}

TEST_CASE("degenerate configurations are reported, not approximated") {
  // repeated node
  auto r = log_abs_vdm(GradedBasis(1, 2), line({0.0, 0.5, 0.5}));
  CHECK(r.degenerate);
  CHECK(std::isinf(r.log_modulus));
  // three collinear points cannot determine P_1 in two variables
  PointSet col{make_point({0.0, 0.0}), make_point({0.5, 0.5}), make_point({1.0, 1.0})};
  CHECK(log_abs_vdm(GradedBasis(2, 1), col).degenerate);
  CHECK_THROWS_AS(NodeArrayStage(1, col), DegenerateError);
  // 6 points on a conic are not unisolvent for P_2
  PointSet conic;
  for (int k = 0; k < 6; ++k) conic.push_back(make_point({std::cos(k * 1.0), std::sin(k * 1.0)}));
  CHECK_THROWS_AS(NodeArrayStage(2, conic), DegenerateError);
}

TEST_CASE("log_abs_det is invariant under permutation and scales with rows") {
  Eigen::MatrixXd a(3, 3);
  a << 2, 1, 0, 1, 3, 1, 0, 1, 4;
  const auto r = log_abs_det(a);
  CHECK(r.log_modulus == doctest::Approx(std::log(18.0)));
  Eigen::MatrixXd p = a;
  p.row(0).swap(p.row(2));
  CHECK(log_abs_det(p).log_modulus == doctest::Approx(std::log(18.0)));
  p.row(1) *= 1e8;
  CHECK(log_abs_det(p).log_modulus == doctest::Approx(std::log(18.0) + 8 * std::log(10.0)));
  CHECK_THROWS_AS(log_abs_det(Eigen::MatrixXd(2, 3)), InvalidArgument);
}

TEST_CASE("FLIPs equal determinant ratios") {
  std::mt19937_64 rng(3);
  const int d = 2, n = 3;
  const int N = static_cast<int>(dim_pn(d, n));
  const auto pts = random_points(d, N, rng, false);
  const NodeArrayStage st(n, pts);
  const auto base = monomial_matrix(d, n, pts);
  const auto det = oracle::determinant(base);
  const Point z = make_point({0.21, -0.64});
  const auto l = flip_values(st, z);
  for (int j = 0; j < N; ++j) {
    auto m = base;
    const auto col = monomial_matrix(d, n, PointSet{z});
    for (int i = 0; i < N; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col[static_cast<std::size_t>(i)][0];
    const auto ratio = oracle::determinant(m) / det;
    CHECK(std::abs(l(j) - cplx(static_cast<double>(ratio.real()), static_cast<double>(ratio.imag()))) < 1e-10);
  }
}

TEST_CASE("FLIPs are cardinal and sum to one") {
  std::mt19937_64 rng(4);
  for (bool complex : {false, true}) {
    const auto pts = random_points(2, 10, rng, complex);
    const NodeArrayStage st(3, pts);
    const auto l = st.system().flips(std::span<const Point>(pts));
    CHECK((l - Eigen::MatrixXcd::Identity(10, 10)).cwiseAbs().maxCoeff() < 1e-10);
    const Point z = complex ? make_point({cplx(0.1, 0.3), cplx(-0.4, 0.2)}) : make_point({0.1, 0.3});
    CHECK(std::abs(flip_values(st, z).sum() - cplx(1.0)) < 1e-11);
  }
}

TEST_CASE("univariate FLIPs match the product formula") {
  const std::vector<cplx> xs{-1.0, -0.3, 0.2, 0.9, 1.0};
  const NodeArrayStage st(4, line(xs));
  for (double x : {-0.77, 0.05, 0.61})
    for (std::size_t j = 0; j < xs.size(); ++j)
      CHECK(std::abs(flip_values(st, make_point({x}))(static_cast<Eigen::Index>(j)) - oracle::lagrange_1d(xs, j, x)) <
            1e-13);
}

TEST_CASE("real nodes evaluated at complex points") {
  const std::vector<cplx> xs{-1.0, 0.0, 1.0};
  const NodeArrayStage st(2, line(xs));
  const cplx z(0.3, 0.7);
  const auto l = flip_values(st, make_point({z}));
  for (std::size_t j = 0; j < 3; ++j) CHECK(std::abs(l(static_cast<Eigen::Index>(j)) - oracle::lagrange_1d(xs, j, z)) < 1e-14);
}

TEST_CASE("interpolation coefficients reproduce the samples") {
  std::mt19937_64 rng(5);
  const auto pts = random_points(2, 6, rng, false);
  const NodeArrayStage st(2, pts);
  Eigen::VectorXcd f(6);
  for (int j = 0; j < 6; ++j) f(j) = std::exp(pts[static_cast<std::size_t>(j)](0)) * 3.0 + pts[static_cast<std::size_t>(j)](1);
  const auto a = st.system().coefficients(f);
  for (int j = 0; j < 6; ++j) {
    const cplx v = st.basis().evaluate<cplx>(pts[static_cast<std::size_t>(j)]).cwiseProduct(a).sum();
    CHECK(std::abs(v - f(j)) < 1e-11);
  }
}

TEST_CASE("tdiam_estimate on univariate Fekete points") {
  // {-1, 1}: |VDM| = 2, exponent (d+1)/(d n N) = 1
  const NodeArrayStage st(1, line({-1.0, 1.0}));
  CHECK(tdiam_estimate(st) == doctest::Approx(2.0));
  // three Fekete points -1, 0, 1: |VDM| = 1*2*1 = 2, exponent 2/(2*3)
  const NodeArrayStage st2(2, line({-1.0, 0.0, 1.0}));
  CHECK(tdiam_estimate(st2) == doctest::Approx(std::pow(2.0, 1.0 / 3.0)));
  CHECK_THROWS_AS(tdiam_estimate(NodeArrayStage(0, line({0.3}))), InvalidArgument);
}

TEST_CASE("weighted VDM adds n sum log w") {
  const PointSet p = line({-0.5, 0.5});
  const WeightFunction w{[](const Point& z) { return std::exp(-std::norm(z(0))); }, true};
  const auto r = weighted_log_abs_vdm(GradedBasis(1, 1), p, w, 3);
  CHECK(r.log_modulus == doctest::Approx(std::log(1.0) + 3 * (-0.25 - 0.25)));
  const WeightFunction zero{[](const Point&) { return 0.0; }, true};
  CHECK(weighted_log_abs_vdm(GradedBasis(1, 1), p, zero, 1).degenerate);
}

TEST_CASE("stage bookkeeping") {
  const NodeArrayStage st(1, PointSet{make_point({0.0, 0.0}), make_point({1.0, 0.0}), make_point({0.0, 1.0})},
                          Provenance::custom);
  CHECK(st.dim() == 2);
  CHECK(st.degree() == 1);
  CHECK(st.size() == 3);
  CHECK(st.log_vdm().log_modulus == doctest::Approx(0.0).epsilon(1e-14));
  CHECK_THROWS_AS(NodeArrayStage(2, line({0.0, 1.0})), InvalidArgument);
  CHECK(provenance_from_string(to_string(Provenance::bos)) == Provenance::bos);
  CHECK_THROWS_AS(provenance_from_string("bogus"), InvalidArgument);
  // copies share one factorisation
  const NodeArrayStage copy = st;
  CHECK(&copy.system() == &st.system());
}
