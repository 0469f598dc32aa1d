#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pinterp/diagnostics.hpp"

using namespace pinterp;
using std::numbers::pi;

namespace {

PointSet line(const std::vector<double>& xs) {
  PointSet p;
  for (double x : xs) p.push_back(make_point({x}));
  return p;
}

} // namespace

TEST_CASE("Lebesgue constants of small univariate sets") {
  const auto mesh = interval_mesh(2, 3);
  CHECK(lebesgue_constant(NodeArrayStage(2, line({-1, 0, 1})), mesh) == doctest::Approx(1.25));
  CHECK(lebesgue_constant(NodeArrayStage(1, line({-1, 1})), mesh) == doctest::Approx(1.0));
  const NodeArrayStage st(2, line({-1, 0, 1}));
  CHECK(lebesgue_function(st, make_point({0.5})) == doctest::Approx(1.25));
  CHECK(lebesgue_function(st, make_point({0.0})) == doctest::Approx(1.0));
  const PointSet z{make_point({0.5}), make_point({-0.5}), make_point({1.0})};
  const auto v = lebesgue_function(st, std::span<const Point>(z));
  CHECK(v(1) == doctest::Approx(1.25));
  CHECK(v(2) == doctest::Approx(1.0));
}

TEST_CASE("Lebesgue constant of exact Fekete points is at most N") {
  for (const auto& [mesh, n] : {std::pair{square_mesh(1, 3), 1}, std::pair{real_disk_mesh(1, 2, 2), 1},
                                std::pair{interval_mesh(3, 2), 3}}) {
    const auto st = fekete_bruteforce(mesh, n);
    CHECK(lebesgue_constant(st, mesh) <= static_cast<double>(st.size()) + 1e-10);
  }
}

TEST_CASE("growth report scalings") {
  const auto r = growth_report({0, 1, 2, 4}, {1.0, 1.0, 1.25, 2.0});
  CHECK(std::isnan(r.root_scale[0]));
  CHECK(r.root_scale[3] == doctest::Approx(std::pow(2.0, 0.25)));
  CHECK(std::isnan(r.poly_scale[0]));
  CHECK(std::isnan(r.poly_scale[1]));
  CHECK(r.poly_scale[2] == doctest::Approx(std::log(1.25) / std::log(2.0)));
  CHECK(r.loglog_scale[1] == doctest::Approx(1.0 / std::pow(std::log(3.0), 2)));
  CHECK_THROWS_AS(growth_report({1, 2}, {1.0}), InvalidArgument);

  std::vector<NodeArrayStage> stages{chebyshev_points(2), chebyshev_points(3)};
  const std::vector<Mesh> one{interval_mesh(3, 10)};
  const auto g = growth_report(stages, one);
  CHECK(g.degrees == std::vector<int>{2, 3});
  CHECK(g.lebesgue_constants[0] == doctest::Approx(lebesgue_constant(stages[0], one[0])));
}

TEST_CASE("empirical measures are uniform probability measures") {
  const auto mu = empirical_measure(padua_points(3));
  CHECK(mu.support.size() == 10);
  CHECK(mu.mass == doctest::Approx(1.0));
  for (double w : mu.weights) CHECK(w == doctest::Approx(0.1));
}

TEST_CASE("arcsine moments are central binomials over 4^k") {
  const auto ref = EquilibriumReference::arcsine();
  for (int k = 0; k <= 6; ++k) {
    CHECK(std::abs(ref.moment_oracle(MultiIndex({2 * k})) - cplx(oracle::binomial(2 * k, k) / std::pow(4.0, k))) < 1e-12);
    CHECK(std::abs(ref.moment_oracle(MultiIndex({2 * k + 1}))) < 1e-12);
  }
  // Gauss-Chebyshev nodes integrate the arcsine measure exactly up to degree 2m - 1
  CHECK(moment_distance(empirical_measure(chebyshev_points(9)), ref, 19) < 1e-13);
  CHECK(moment_distance(empirical_measure(line({-1.0, 1.0})), ref, 2) == doctest::Approx(0.5));
}

TEST_CASE("circle moments") {
  const auto ref = EquilibriumReference::circle();
  CHECK(moment_distance(empirical_measure(roots_of_unity(10)), ref, 10) < 1e-14);
  CHECK(moment_distance(empirical_measure(roots_of_unity(10)), ref, 11) == doctest::Approx(1.0));
}

TEST_CASE("real disk equilibrium moments") {
  const auto ref = EquilibriumReference::real_disk();
  // r = sin t turns r^(2k+1)/sqrt(1 - r^2) dr into sin^(2k+1) t dt
  const double er2 = oracle::simpson([](double t) { return std::pow(std::sin(t), 3); }, 0.0, pi / 2, 2000);
  const double er4 = oracle::simpson([](double t) { return std::pow(std::sin(t), 5); }, 0.0, pi / 2, 2000);
  CHECK(er2 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(ref.moment_oracle(MultiIndex({0, 0})).real() == doctest::Approx(1.0));
  CHECK(ref.moment_oracle(MultiIndex({2, 0})).real() == doctest::Approx(er2 / 2).epsilon(1e-10));
  CHECK(ref.moment_oracle(MultiIndex({0, 2})).real() == doctest::Approx(er2 / 2).epsilon(1e-10));
  CHECK(ref.moment_oracle(MultiIndex({4, 0})).real() == doctest::Approx(er4 * 3 / 8).epsilon(1e-10));
  CHECK(ref.moment_oracle(MultiIndex({2, 2})).real() == doctest::Approx(er4 / 8).epsilon(1e-10));
  CHECK(std::abs(ref.moment_oracle(MultiIndex({1, 2}))) < 1e-14);
}

TEST_CASE("L(G) for the linear, Chebyshev and equilibrium radial laws") {
  CHECK(l_functional(RadialDistribution::linear()) == doctest::Approx(-13.0 / 18.0).epsilon(1e-9));
  const double cheb = -4.0 / 3.0 * std::numbers::ln2 + 2.0 / (pi * pi) * oracle::zeta3();
  CHECK(l_functional(RadialDistribution::chebyshev()) == doctest::Approx(cheb).epsilon(1e-9));
  CHECK(cheb == doctest::Approx(-0.6806085842).epsilon(1e-10));
  const double eq = -26.0 / 9.0 - 4 * std::numbers::ln2 + 4 * std::sqrt(2.0) * std::log(std::sqrt(2.0) + 1);
  CHECK(l_functional(RadialDistribution::equilibrium()) == doctest::Approx(eq).epsilon(1e-9));
  CHECK(eq == doctest::Approx(-0.675675691).epsilon(1e-9));
  CHECK(bos_vdm_limit_from_l(-2.0 / 3.0) == doctest::Approx(1.0 / std::sqrt(2 * std::numbers::e)));
  CHECK(bos_vdm_limit(RadialDistribution::chebyshev()) == doctest::Approx(bos_vdm_limit_from_l(cheb)).epsilon(1e-9));
  CHECK_THROWS_AS(l_functional(RadialDistribution::custom("bad", [](double x) { return x / 2; })), InvalidArgument);
}

TEST_CASE("closed-form transfinite diameters") {
  CHECK(tdiam_ball_closed_form(1) == doctest::Approx(0.5));
  CHECK(tdiam_simplex_closed_form(1) == doctest::Approx(0.25));
  CHECK(tdiam_ball_closed_form(2) == doctest::Approx(1.0 / std::sqrt(2 * std::numbers::e)));
  CHECK(tdiam_simplex_closed_form(3) == doctest::Approx(std::pow(tdiam_ball_closed_form(3), 2)));
  CHECK_THROWS_AS(tdiam_ball_closed_form(0), InvalidArgument);
}

TEST_CASE("triangular polynomials") {
  const auto g = triangular_g_polynomial(line({-1.0, 1.0}), 2);
  CHECK(g.degree() == 2);
  for (double x : {-0.7, 0.0, 0.3, 2.0}) CHECK(std::abs(g(make_point({x})) - cplx(x * x - 1)) < 1e-13);
  CHECK(g.sup_norm(interval_mesh(2, 4).points) == doctest::Approx(1.0));

  // d = 2, three points: the leading monomial at position 3 is x^2
  const PointSet p{make_point({0.0, 0.0}), make_point({1.0, 0.0}), make_point({0.0, 1.0})};
  const auto h = triangular_g_polynomial(p, 3);
  CHECK(h.leading().exponents == std::vector<int>{2, 0});
  for (const auto& z : p) CHECK(std::abs(h(z)) < 1e-14);
  // x^2 - x vanishes on all three
  CHECK(std::abs(h(make_point({0.5, 0.7})) - cplx(0.25 - 0.5)) < 1e-13);
  CHECK(std::abs(triangular_g_polynomial(p, 0)(make_point({0.4, 0.9})) - cplx(1.0)) < 1e-15);
  CHECK_THROWS_AS(triangular_g_polynomial(p, 4), InvalidArgument);
}

TEST_CASE("Siciak-Zaharjuta estimators approach the Green function") {
  const double interval_green = std::log(2 + std::sqrt(3.0));
  const Point two = make_point({2.0});
  CHECK(vk_lebesgue(chebyshev_points(60), two) == doctest::Approx(interval_green).epsilon(0.03));
  CHECK(vk_lebesgue(roots_of_unity(60), two) == doctest::Approx(std::log(2.0)).epsilon(0.03));
  const auto mesh = interval_mesh(31, 4);
  const auto g = triangular_g_polynomial(chebyshev_points(30).points(), 31);
  CHECK(vk_triangular(g, two, mesh.points) == doctest::Approx(interval_green).epsilon(0.03));
  // inside the set the estimator is non-positive
  CHECK(vk_triangular(g, make_point({0.3}), mesh.points) <= 1e-12);
}

TEST_CASE("norming constant estimates") {
  const auto m = interval_mesh(6, 2);
  const double c = norming_constant_estimate(m);
  CHECK(c >= 1.0);
  CHECK(c <= *m.norming_constant + 1e-12);
  CHECK(norming_constant_estimate(simplex_mesh(2, 3, 2)) >= 1.0);
}

TEST_CASE("rate fits") {
  std::vector<int> n{2, 4, 6, 8};
  std::vector<double> v;
  for (int k : n) v.push_back(3.0 * std::pow(0.5, k));
  CHECK(geometric_rate(n, v) == doctest::Approx(0.5));
  std::vector<double> lin{1.0, 2.0, 3.0, 4.0};
  CHECK(trend_slope(n, lin) == doctest::Approx(0.5));
}
