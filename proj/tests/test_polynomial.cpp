#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pinterp/polynomial.hpp"

using namespace pinterp;

namespace {

Polynomial random_poly(int d, int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Eigen::VectorXcd c(dim_pn(d, n));
  for (auto& v : c) v = {g(rng), g(rng)};
  return {d, n, c};
}

Point random_point(int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Point z(d);
  for (auto& v : z) v = {u(rng), u(rng)};
  return z;
}

} // namespace

TEST_CASE("construction and evaluation") {
  // 3 - 2 x y + i y^2
  Polynomial p(2, 2);
  p.add_to(MultiIndex({0, 0}), 3.0);
  p.add_to(MultiIndex({1, 1}), -2.0);
  p.add_to(MultiIndex({0, 2}), cplx(0, 1));
  const cplx x(0.3, -0.1), y(-0.8, 0.5);
  CHECK(std::abs(p(make_point({x, y})) - (3.0 - 2.0 * x * y + cplx(0, 1) * y * y)) < 1e-14);
  CHECK(p.coefficient(MultiIndex({1, 1})) == cplx(-2.0));
  CHECK(p.effective_degree() == 2);
  CHECK(Polynomial(2, 3).effective_degree() == -1);
  CHECK(Polynomial::constant(3, 2.5)(make_point({1.0, 2.0, 3.0})) == cplx(2.5));
  CHECK(Polynomial::coordinate(2, 1, 0.5)(make_point({7.0, 2.0})) == cplx(1.5));
  CHECK(Polynomial::monomial(MultiIndex({2, 1}), 3.0)(make_point({2.0, 5.0})) == cplx(60.0));
  CHECK_THROWS_AS(Polynomial(2, 1, Eigen::VectorXcd::Zero(4)), InvalidArgument);
}

TEST_CASE("chebyshev expansion into monomials") {
  const GradedBasis b(2, 3, {Family::chebyshev, Family::chebyshev});
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(b.size());
  c(b.position(MultiIndex({2, 1}))) = 1.0; // T_2(x) T_1(y) = (2x^2 - 1) y
  const auto p = Polynomial::from_basis(b, c);
  CHECK(p.coefficient(MultiIndex({2, 1})) == cplx(2.0));
  CHECK(p.coefficient(MultiIndex({0, 1})) == cplx(-1.0));
  std::mt19937_64 rng(31);
  std::normal_distribution<double> g;
  for (auto& v : c) v = g(rng);
  const auto q = Polynomial::from_basis(b, c);
  for (double x : {-0.9, 0.2})
    for (double y : {-0.4, 0.7}) {
      double expect = 0.0;
      for (Eigen::Index i = 0; i < b.size(); ++i)
        expect += c(i).real() * oracle::chebyshev_t(b.index(i)[0], x) * oracle::chebyshev_t(b.index(i)[1], y);
      CHECK(q(make_point({x, y})).real() == doctest::Approx(expect).epsilon(1e-13));
    }
}

TEST_CASE("arithmetic is pointwise") {
  std::mt19937_64 rng(32);
  const auto p = random_poly(2, 3, rng);
  const auto q = random_poly(2, 2, rng);
  for (int t = 0; t < 5; ++t) {
    const auto z = random_point(2, rng);
    CHECK(std::abs((p + q)(z) - (p(z) + q(z))) < 1e-12);
    CHECK(std::abs((p - q)(z) - (p(z) - q(z))) < 1e-12);
    CHECK(std::abs((p * q)(z) - p(z) * q(z)) < 1e-11);
    CHECK(std::abs((p * cplx(0, 2))(z) - cplx(0, 2) * p(z)) < 1e-12);
  }
  CHECK((p * q).degree() == 5);
  CHECK(p.raised(6).degree() == 6);
  CHECK(std::abs(p.raised(6)(make_point({0.1, 0.2})) - p(make_point({0.1, 0.2}))) < 1e-14);
  CHECK_THROWS_AS(p.raised(2), InvalidArgument);
}

TEST_CASE("derivatives and jets") {
  // p = x^3 y^2
  const auto p = Polynomial::monomial(MultiIndex({3, 2}));
  const auto dxy = p.derivative(MultiIndex({1, 1}));
  const cplx x(0.4, 0.1), y(-0.3, 0.2);
  CHECK(std::abs(dxy(make_point({x, y})) - 6.0 * x * x * y) < 1e-14);
  CHECK(p.derivative(MultiIndex({4, 0})).effective_degree() == -1);

  // directional derivative against a central difference along a real direction
  std::mt19937_64 rng(33);
  const auto r = random_poly(3, 4, rng);
  const Point z = random_point(3, rng);
  const Point v = make_point({0.3, -0.5, 0.8});
  const double h = 1e-5;
  const cplx fd = (r(z + h * v) - r(z - h * v)) / (2 * h);
  CHECK(std::abs(r.directional(v)(z) - fd) < 1e-7 * std::max(1.0, std::abs(fd)));

  // D^2 p(y)(u, w) = sum u_i w_j d_i d_j p
  const Point u = make_point({1.0, 2.0}), w = make_point({-1.0, 0.5});
  const Point at = make_point({x, y});
  const cplx pxx = 6.0 * x * y * y, pxy = 6.0 * x * x * y, pyy = 2.0 * x * x * x;
  const cplx expect = u(0) * w(0) * pxx + (u(0) * w(1) + u(1) * w(0)) * pxy + u(1) * w(1) * pyy;
  const PointSet dirs{u, w};
  CHECK(std::abs(p.jet(at, dirs) - expect) < 1e-13);
  CHECK(p.jet(at, {}) == p(at));
}
