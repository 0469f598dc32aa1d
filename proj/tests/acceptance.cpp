// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pinterp/bergman.hpp"
#include "pinterp/diagnostics.hpp"
#include "pinterp/interp.hpp"
#include "pinterp/kergin.hpp"
#include "pinterp/points.hpp"

using namespace pinterp;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    pass = pass && ok;
    if (!detail.empty()) detail += "; ";
    detail += what + (ok ? "" : " [x]");
  }
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

std::vector<int> range(int lo, int hi) {
  std::vector<int> r;
  for (int k = lo; k <= hi; ++k) r.push_back(k);
  return r;
}

// slope of the last `count` entries
double tail_slope(const std::vector<int>& n, const std::vector<double>& v, std::size_t count) {
  const auto off = static_cast<long>(n.size() - std::min(count, n.size()));
  return trend_slope(std::span<const int>(n.data() + off, n.size() - static_cast<std::size_t>(off)),
                     std::span<const double>(v.data() + off, v.size() - static_cast<std::size_t>(off)));
}

Outcome criterion1() {
  Outcome o;
  const double b1 = tdiam_ball_closed_form(1), b2 = tdiam_ball_closed_form(2), s2 = tdiam_simplex_closed_form(2);
  o.require(std::abs(b1 - 0.5) <= 1e-12, "ball(1) = " + fmt("%.15g", b1));
  o.require(std::abs(b2 - 1 / std::sqrt(2 * std::numbers::e)) <= 1e-12, "ball(2) = " + fmt("%.15g", b2));
  o.require(std::abs(s2 - 1 / (2 * std::numbers::e)) <= 1e-12, "simplex(2) = " + fmt("%.15g", s2));
  return o;
}

Outcome criterion2() {
  Outcome o;
  const double c = l_functional(RadialDistribution::chebyshev());
  const double e = l_functional(RadialDistribution::equilibrium());
  const double l = l_functional(RadialDistribution::linear());
  o.require(std::abs(c + 0.6806085842) <= 1e-6, "L(chebyshev) = " + fmt("%.10f", c));
  o.require(std::abs(e + 0.675675691) <= 1e-6, "L(equilibrium) = " + fmt("%.10f", e));
  o.require(std::abs(l + 13.0 / 18.0) <= 1e-9, "L(x) + 13/18 = " + fmt("%.2e", l + 13.0 / 18.0));
  return o;
}

Outcome criterion3() {
  Outcome o;
  const auto n = range(5, 40);
  std::vector<double> t;
  for (int k : n) t.push_back(tdiam_estimate(approx_fekete_greedy(interval_mesh(k, 8), k)));
  const double last = t.back();
  o.require(rel(last, 0.5) <= 0.03, "tdiam(40) = " + fmt("%.5f", last) + " (" + fmt("%.1f", 100 * rel(last, 0.5)) + "% off)");
  const double slope = tail_slope(n, t, 10);
  o.require(slope <= 0.0, "tail slope " + fmt("%.2e", slope));
  return o;
}

Outcome criterion4() {
  Outcome o;
  const double target = 1 / std::sqrt(2 * std::numbers::e);
  double last = 0.0;
  for (int k = 2; k <= 16; ++k) last = tdiam_estimate(approx_fekete_greedy(real_disk_mesh(k, 2, 2), k));
  o.require(rel(last, target) <= 0.08, "tdiam(16) = " + fmt("%.5f", last) + " (" + fmt("%.1f", 100 * rel(last, target)) + "% off)");
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (const auto& G : {RadialDistribution::equilibrium(), RadialDistribution::chebyshev()}) {
    const double limit = bos_vdm_limit(G);
    std::vector<int> s = range(5, 40);
    std::vector<double> v;
    for (int k : s) {
      const auto st = bos_array(2 * k, G);
      v.push_back(std::exp(st.log_vdm().log_modulus / static_cast<double>(ln_sum(2, 2 * k))));
    }
    o.require(rel(v.back(), limit) <= 0.02, G.name + ": s=40 " + fmt("%.5f", v.back()) + " vs " + fmt("%.5f", limit) +
                                                 " (" + fmt("%.1f", 100 * rel(v.back(), limit)) + "% off)");
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto n = range(2, 30);
  std::vector<double> ratio;
  double C = 0.0;
  for (int k : n) {
    const double lam = lebesgue_constant(padua_points(k), square_mesh(k, 10));
    ratio.push_back(lam / std::pow(std::log(k + 2.0), 2));
    C = std::max(C, ratio.back());
  }
  o.require(C <= 4.0, "C = " + fmt("%.4f", C));
  const double slope = tail_slope(n, ratio, 10);
  o.require(slope <= 0.0, "tail slope " + fmt("%.2e", slope));
  return o;
}

Mesh random_square_mesh(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Mesh m;
  m.compact = CompactId::square;
  m.dim = 2;
  for (int k = 0; k < count; ++k) m.points.push_back(make_point({u(rng), u(rng)}));
  return m;
}

Outcome criterion7() {
  Outcome o;
  std::vector<std::pair<Mesh, int>> cases;
  for (int n = 1; n <= 6; ++n)
    for (int density = 2; density * n + 1 <= 18; ++density) cases.emplace_back(interval_mesh(n, density), n);
  for (int n = 1; n <= 6; ++n)
    for (int density = 1; density * n + 1 <= 18; ++density)
      if (density * n + 1 >= n + 1) cases.emplace_back(disk_boundary_mesh(n, density), n);
  cases.emplace_back(square_mesh(1, 2), 1);
  cases.emplace_back(simplex_mesh(2, 1, 3), 1);
  cases.emplace_back(real_disk_mesh(1, 2, 3), 1);
  cases.emplace_back(simplex_mesh(2, 2, 1), 2);
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    cases.emplace_back(random_square_mesh(14, seed), 1);
    cases.emplace_back(random_square_mesh(14, seed), 2);
  }
  double worst = 0.0;
  int checked = 0;
  for (const auto& [mesh, n] : cases) {
    if (mesh.size() > (mesh.dim == 1 ? 18 : 14)) continue;
    const auto st = fekete_bruteforce(mesh, n);
    const auto l = st.system().flips(std::span<const Point>(mesh.points));
    worst = std::max(worst, l.cwiseAbs().maxCoeff());
    ++checked;
  }
  o.require(worst <= 1 + 1e-10, std::to_string(checked) + " instances, max FLIP " + fmt("%.15g", worst));
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto seq = leja_disk_exact(65);
  bool prefixes = true;
  for (int len : {2, 4, 8, 16, 32}) {
    std::set<long long> seen;
    for (int k = 0; k < len; ++k) {
      const cplx z = seq.points[static_cast<std::size_t>(k)](0);
      prefixes = prefixes && std::abs(std::pow(z, len) - 1.0) < 1e-12;
      seen.insert(std::llround(std::arg(z) / (2 * std::numbers::pi) * len + len) % len);
    }
    prefixes = prefixes && static_cast<int>(seen.size()) == len;
  }
  o.require(prefixes, "prefixes 2..32 are roots of unity");
  std::vector<cplx> mesh;
  for (int k = 0; k < 4096; ++k) mesh.push_back(std::polar(1.0, 2 * std::numbers::pi * k / 4096));
  double worst = 0.0;
  for (int m = 1; m <= 64; ++m) {
    auto logv = [&](cplx z) {
      double s = 0.0;
      for (int j = 0; j < m; ++j) s += std::log(std::abs(z - seq.points[static_cast<std::size_t>(j)](0)));
      return s;
    };
    double best = -INFINITY;
    for (cplx z : mesh) best = std::max(best, logv(z));
    worst = std::max(worst, 1.0 - std::exp(logv(seq.points[static_cast<std::size_t>(m)](0)) - best));
  }
  o.require(worst <= 1e-9, "max relative greedy shortfall " + fmt("%.2e", worst));
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto leja = discrete_leja(interval_mesh(40, 8), 40).stage(40);
  const double d1 = moment_distance(empirical_measure(leja), EquilibriumReference::arcsine(), 4);
  o.require(d1 <= 5e-2, "discrete Leja n=40 " + fmt("%.4f", d1));
  const auto bos = bos_array(60, RadialDistribution::equilibrium());
  const double d2 = moment_distance(empirical_measure(bos), EquilibriumReference::real_disk(), 4);
  o.require(d2 <= 5e-2, "Bos s=30 " + fmt("%.4f", d2));
  return o;
}

Outcome criterion10() {
  Outcome o;
  double ident = 0.0;
  for (int n = 1; n <= 30; ++n) {
    const auto onb = orthonormal_basis(roots_of_unity_measure(4 * n), n);
    const auto mesh = disk_boundary_mesh(n, 4);
    const auto b = onb.bergman(mesh.points);
    ident = std::max(ident, (b.array() - (n + 1.0)).abs().maxCoeff());
    ident = std::max(ident, std::abs(bm_constant(onb, mesh) - std::sqrt(n + 1.0)));
  }
  o.require(ident <= 1e-10, "roots of unity max deviation " + fmt("%.1e", ident));

  // M_n^(1/n) decreases in n, so n = 30 is the most favourable degree
  double m30 = 0.0;
  for (int n = 1; n <= 30; ++n) {
    const auto onb = orthonormal_basis(arcsine_measure(4 * n), n);
    m30 = std::pow(bm_constant(onb, interval_mesh(n, 10)), 1.0 / n);
  }
  o.require(m30 <= 1.05, "arcsine M_30^(1/30) = " + fmt("%.4f", m30));
  const auto nu = arcsine_measure(120);
  const double probe = bergman_weakstar_probe(orthonormal_basis(nu, 30), nu, EquilibriumReference::arcsine(), 4);
  o.require(probe <= 1e-2, "arcsine weak-star probe n=30 " + fmt("%.5f", probe));

  const int k_max = 20;
  const auto bm = bm_measure_construct([](int k) { return interval_mesh(k, 8); }, k_max);
  bool env = true;
  for (int n = 1; n <= k_max / 2; ++n) {
    const auto onb = orthonormal_basis(bm.measure, n);
    env = env && bm_constant(onb, reference_mesh(interval_mesh(n, 8))) <= bm.envelope(n);
  }
  o.require(env, "envelope bound n <= 10");
  return o;
}

Outcome criterion11() {
  Outcome o;
  int total = 0, failed = 0;
  double worst = 0.0;
  for (const auto* s : {"polynomial", "hermite", "ridge", "algebra", "univariate"}) {
    for (const auto& r : kergin_suite(s, 100, 0)) {
      ++total;
      if (!r.passed) ++failed;
      worst = std::max(worst, r.max_error);
    }
  }
  o.require(failed == 0, std::to_string(total - failed) + "/" + std::to_string(total) + " instances pass, max error " +
                             fmt("%.1e", worst));
  return o;
}

Outcome criterion12() {
  Outcome o;
  const ScalarFunction f = [](const Point& z) { return 1.0 / (z(0) - 2.0); };
  const std::vector<NodeArrayStage> disk{roots_of_unity(40)};
  const std::vector<Mesh> dm{disk_boundary_mesh(40, 10)};
  const double r = holo_convergence_probe(disk, f, dm).front().root_rate;
  o.require(r >= 0.45 && r <= 0.55, "disk rate n=40 " + fmt("%.4f", r));

  const auto seq = discrete_leja(interval_mesh(40, 8), 40);
  std::vector<int> n = range(10, 24);
  std::vector<double> err;
  for (int k : n) {
    const auto st = seq.stage(k);
    err.push_back(sup_error(lagrange_interpolate(st, f), f, interval_mesh(k, 10)));
  }
  const double rate = geometric_rate(n, err);
  const double target = 1 / (2 + std::sqrt(3.0));
  o.require(rel(rate, target) <= 0.10, "interval fitted rate " + fmt("%.4f", rate) + " vs " + fmt("%.4f", target));
  return o;
}

Outcome criterion13() {
  Outcome o;
  const auto disk = leja_disk_exact(17), real = r_leja(17);
  std::vector<std::vector<cplx>> tuples(2);
  for (const auto& p : disk.points) tuples[0].push_back(p(0));
  for (const auto& p : real.points) tuples[1].push_back(p(0));
  const auto n = range(2, 16);
  std::vector<double> growth;
  double worst = 0.0;
  for (int k : n) {
    const std::vector<Mesh> f{disk_boundary_mesh(k, 4), interval_mesh(k, 8)};
    const double lam = lebesgue_constant(intertwine(tuples, k), product_mesh(f));
    growth.push_back(std::log(lam) / std::log(static_cast<double>(k)));
    worst = std::max(worst, growth.back());
  }
  o.require(worst <= 8.0, "max log L/log n " + fmt("%.3f", worst));
  const double slope = trend_slope(n, growth);
  o.require(slope <= 0.0, "slope over n=2..16 " + fmt("%.2e", slope) + " (last 10: " + fmt("%.2e", tail_slope(n, growth, 10)) + ")");
  return o;
}

} // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2,  criterion3,  criterion4, criterion5,
                                                       criterion6, criterion7,  criterion8,  criterion9, criterion10,
                                                       criterion11, criterion12, criterion13};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %2zu: %s  %s  (%.1fs)\n", i + 1, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
