// Command-line front end: point generators, diagnostics, interpolation
// errors, Bergman probes and the Kergin check suites.
//
// Exit codes: 0 ok, 2 invalid configuration, 3 degenerate result,
// 4 incompatible metric/generator, 5 failed check.

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pinterp/bergman.hpp"
#include "pinterp/diagnostics.hpp"
#include "pinterp/interp.hpp"
#include "pinterp/io.hpp"
#include "pinterp/kergin.hpp"
#include "pinterp/points.hpp"

using namespace pinterp;

namespace {

enum Exit { ok = 0, config = 2, degenerate = 3, incompatible = 4, check_failed = 5 };

class Incompatible : public Error {
public:
  using Error::Error;
};

struct RunConfig {
  std::string set = "interval";
  std::string gen = "fekete-greedy";
  int n = 1;
  int n_min = -1;
  int n_max = -1;
  int dim = 2;
  int density = 0;
  int angular_density = 0;
  int eval_density = 10;
  std::string radial = "equilibrium";
  std::string points_file;
  std::vector<std::string> metrics;
  std::string func = "inv2";
  std::string measure = "arcsine";
  int measure_size = 0;
  int k_max = 20;
  std::string suite = "polynomial";
  int instances = 20;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string out;

  std::vector<int> degrees() const {
    const int lo = n_min >= 0 ? n_min : n;
    const int hi = n_max >= 0 ? n_max : std::max(lo, n);
    if (lo > hi) throw InvalidArgument("empty degree range");
    // Bos arrays exist only in even degree
    const bool even_only = gen == "bos" && points_file.empty() && n_min >= 0;
    std::vector<int> r;
    for (int k = lo; k <= hi; ++k)
      if (!even_only || k % 2 == 0) r.push_back(k);
    if (r.empty()) throw InvalidArgument("empty degree range");
    return r;
  }
};

int default_density(const std::string& set) {
  if (set == "interval") return 8;
  if (set == "disk") return 4;
  return 2;
}

Mesh set_mesh(const RunConfig& c, int n, int density) {
  if (c.set == "interval") return interval_mesh(n, std::max(2, density));
  if (c.set == "disk") return disk_boundary_mesh(n, density);
  if (c.set == "square") return square_mesh(n, std::max(2, density));
  if (c.set == "real_disk") return real_disk_mesh(n, density, c.angular_density > 0 ? c.angular_density : density);
  if (c.set == "simplex") return simplex_mesh(c.dim, n, density);
  if (c.set == "ball") return real_ball_mesh(c.dim, n, std::max(2, density));
  if (c.set == "disk_x_interval") {
    const std::vector<Mesh> f{disk_boundary_mesh(n, density), interval_mesh(n, std::max(2, density))};
    return product_mesh(f);
  }
  throw InvalidArgument("unknown set: " + c.set);
}

Mesh generator_mesh(const RunConfig& c, int n) {
  return set_mesh(c, n, c.density > 0 ? c.density : default_density(c.set));
}

Mesh eval_mesh(const RunConfig& c, int n) {
  RunConfig e = c;
  e.angular_density = 0;
  return set_mesh(e, n, c.eval_density);
}

RadialDistribution radial(const std::string& name) {
  if (name == "equilibrium") return RadialDistribution::equilibrium();
  if (name == "chebyshev") return RadialDistribution::chebyshev();
  if (name == "linear") return RadialDistribution::linear();
  throw InvalidArgument("unknown radial distribution: " + name);
}

void require_set(const RunConfig& c, std::initializer_list<const char*> sets) {
  for (const char* s : sets)
    if (c.set == s) return;
  throw Incompatible("generator " + c.gen + " is not available on set " + c.set);
}

NodeArrayStage make_stage(const RunConfig& c, int n) {
  const std::string& g = c.gen;
  if (g == "fekete-greedy") return approx_fekete_greedy(generator_mesh(c, n), n);
  if (g == "fekete-brute") return fekete_bruteforce(generator_mesh(c, n), n);
  if (g == "discrete-leja") return discrete_leja(generator_mesh(c, n), n).stage(n);
  if (g == "leja-disk") {
    require_set(c, {"disk"});
    return leja_disk_exact(n + 1).stage(n);
  }
  if (g == "r-leja") {
    require_set(c, {"interval"});
    return r_leja(n + 1).stage(n);
  }
  if (g == "roots-of-unity") {
    require_set(c, {"disk"});
    return roots_of_unity(n);
  }
  if (g == "chebyshev") {
    require_set(c, {"interval"});
    return chebyshev_points(n);
  }
  if (g == "padua") {
    require_set(c, {"square"});
    return padua_points(n);
  }
  if (g == "bos") {
    require_set(c, {"real_disk"});
    return bos_array(n, radial(c.radial));
  }
  if (g == "intertwine") {
    require_set(c, {"disk_x_interval"});
    std::vector<std::vector<cplx>> tuples(2);
    for (const auto& p : leja_disk_exact(n + 1).points) tuples[0].push_back(p(0));
    for (const auto& p : r_leja(n + 1).points) tuples[1].push_back(p(0));
    return intertwine(tuples, n);
  }
  throw InvalidArgument("unknown generator: " + g);
}

std::optional<EquilibriumReference> reference_for(const std::string& set) {
  if (set == "interval") return EquilibriumReference::arcsine();
  if (set == "disk") return EquilibriumReference::circle();
  if (set == "real_disk") return EquilibriumReference::real_disk();
  return std::nullopt;
}

struct Row {
  int n;
  std::string metric;
  double value;
};

class Rows {
public:
  void add(int n, std::string metric, double value) { rows_.push_back({n, std::move(metric), value}); }

  void write(std::ostream& out, const std::string& format) const {
    if (format == "json") {
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (const auto& r : rows_) {
        nlohmann::ordered_json o;
        o["n"] = r.n;
        o["metric"] = r.metric;
        o["value"] = std::isfinite(r.value) ? nlohmann::ordered_json(r.value) : nlohmann::ordered_json();
        doc.push_back(std::move(o));
      }
      out << doc.dump(1) << "\n";
      return;
    }
    write_csv_header(out);
    for (const auto& r : rows_) write_csv_row(out, r.n, r.metric, r.value);
  }

private:
  std::vector<Row> rows_;
};

std::ostream& output(const RunConfig& c, std::unique_ptr<std::ofstream>& file) {
  if (c.out.empty()) return std::cout;
  file = std::make_unique<std::ofstream>(c.out, std::ios::binary);
  if (!*file) throw InvalidArgument("cannot open output file: " + c.out);
  return *file;
}

int cmd_points(const RunConfig& c) {
  const auto stage = make_stage(c, c.n);
  std::unique_ptr<std::ofstream> file;
  write_point_set(output(c, file), point_set_file(stage));
  return ok;
}

int cmd_diag(const RunConfig& c) {
  static const std::vector<std::string> known{"lebesgue",       "lebesgue_rootscale", "tdiam_estimate",
                                              "moment_distance", "bm_constant",        "bergman_probe",
                                              "bos_vdm",        "l_functional"};
  const auto metrics = c.metrics.empty() ? std::vector<std::string>{"lebesgue"} : c.metrics;
  for (const auto& m : metrics)
    if (std::find(known.begin(), known.end(), m) == known.end()) throw InvalidArgument("unknown metric: " + m);
  const bool needs_stage = std::any_of(metrics.begin(), metrics.end(), [](const std::string& m) {
    return m != "l_functional";
  });
  const auto ref = reference_for(c.set);
  for (const auto& m : metrics) {
    if ((m == "moment_distance" || m == "bergman_probe") && !ref)
      throw Incompatible("metric " + m + " has no equilibrium reference on set " + c.set);
    if (m == "bos_vdm" && c.points_file.empty() && c.gen != "bos")
      throw Incompatible("metric bos_vdm needs the bos generator");
  }

  std::vector<NodeArrayStage> stages;
  if (needs_stage) {
    if (!c.points_file.empty()) {
      stages.push_back(read_point_set(c.points_file).stage());
      if (std::find(metrics.begin(), metrics.end(), "bos_vdm") != metrics.end() &&
          stages.back().provenance() != Provenance::bos)
        throw Incompatible("metric bos_vdm needs a bos point set");
    } else {
      for (int n : c.degrees()) stages.push_back(make_stage(c, n));
    }
  }

  Rows out;
  for (const auto& m : metrics) {
    if (m == "l_functional") {
      out.add(0, m, l_functional(radial(c.radial)));
      continue;
    }
    for (const auto& st : stages) {
      const int n = st.degree();
      if (m == "lebesgue" || m == "lebesgue_rootscale") {
        const double lam = lebesgue_constant(st, eval_mesh(c, n));
        out.add(n, m, m == "lebesgue" ? lam : (n >= 1 ? std::pow(lam, 1.0 / n) : std::nan("")));
      } else if (m == "tdiam_estimate") {
        out.add(n, m, n >= 1 ? tdiam_estimate(st) : std::nan(""));
      } else if (m == "moment_distance") {
        out.add(n, m, moment_distance(empirical_measure(st), *ref, 4));
      } else if (m == "bm_constant" || m == "bergman_probe") {
        const auto mu = empirical_measure(st);
        const auto onb = orthonormal_basis(mu, n);
        out.add(n, m,
                      m == "bm_constant" ? bm_constant(onb, eval_mesh(c, n)) : bergman_weakstar_probe(onb, mu, *ref, 4));
      } else if (m == "bos_vdm") {
        const double ln = static_cast<double>(ln_sum(st.dim(), n));
        out.add(n, m, std::exp(st.log_vdm().log_modulus / ln));
        out.add(n, "bos_vdm_limit", bos_vdm_limit(radial(c.radial)));
      }
    }
  }
  std::unique_ptr<std::ofstream> file;
  out.write(output(c, file), c.format);
  return ok;
}

ScalarFunction test_function(const std::string& id) {
  if (id == "inv2") return [](const Point& z) { return 1.0 / (z(0) - 2.0); };
  if (id == "runge") return [](const Point& z) { return 1.0 / (1.0 + 25.0 * z(0) * z(0)); };
  if (id == "abs") return [](const Point& z) { return cplx(std::abs(z(0))); };
  if (id == "exp") return [](const Point& z) { return std::exp(z.sum()); };
  throw InvalidArgument("unknown test function: " + id);
}

int cmd_interp(const RunConfig& c) {
  const auto f = test_function(c.func);
  Rows out;
  for (int n : c.degrees()) {
    const auto stage = make_stage(c, n);
    const Mesh mesh = eval_mesh(c, n);
    const double err = sup_error(lagrange_interpolate(stage, f), f, mesh);
    out.add(n, "error", err);
    out.add(n, "root_rate", n >= 1 ? std::pow(err, 1.0 / n) : err);
    out.add(n, "least_squares_error", least_squares_error(f, n, mesh));
  }
  std::unique_ptr<std::ofstream> file;
  out.write(output(c, file), c.format);
  return ok;
}

int cmd_bergman(const RunConfig& c) {
  Rows out;
  std::optional<BMConstruction> bm;
  if (c.measure == "bm-construct") {
    bm = bm_measure_construct([&](int k) { return generator_mesh(c, k); }, c.k_max);
    out.add(0, "normalisation_c", bm->c);
    out.add(0, "tail_bound", bm->tail_bound);
  }
  for (int n : c.degrees()) {
    DiscreteMeasure mu;
    Mesh mesh;
    std::optional<EquilibriumReference> ref;
    if (c.measure == "roots-of-unity") {
      mu = roots_of_unity_measure(c.measure_size > 0 ? c.measure_size : 4 * std::max(n, 1));
      mesh = disk_boundary_mesh(n, c.eval_density);
      ref = EquilibriumReference::circle();
    } else if (c.measure == "arcsine") {
      mu = arcsine_measure(c.measure_size > 0 ? c.measure_size : 4 * std::max(n, 1) + 2);
      mesh = interval_mesh(n, std::max(2, c.eval_density));
      ref = EquilibriumReference::arcsine();
    } else if (c.measure == "bm-construct") {
      mu = bm->measure;
      mesh = eval_mesh(c, n);
      ref = reference_for(c.set);
    } else {
      throw InvalidArgument("unknown measure: " + c.measure);
    }
    const auto onb = orthonormal_basis(mu, n);
    const double m = bm_constant(onb, mesh);
    out.add(n, "bm_constant", m);
    out.add(n, "bm_constant_root", n >= 1 ? std::pow(m, 1.0 / n) : std::nan(""));
    if (ref) out.add(n, "bergman_probe", bergman_weakstar_probe(onb, mu, *ref, 4));
    if (bm) out.add(n, "envelope", bm->envelope(n));
  }
  std::unique_ptr<std::ofstream> file;
  out.write(output(c, file), c.format);
  return ok;
}

int cmd_kergin(const RunConfig& c) {
  const auto reports = kergin_suite(c.suite, c.instances, c.seed);
  nlohmann::ordered_json doc;
  doc["suite"] = c.suite;
  doc["instances"] = c.instances;
  doc["seed"] = c.seed;
  int failed = 0;
  double worst = 0.0;
  nlohmann::ordered_json fails = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    worst = std::max(worst, r.max_error);
    if (!r.passed) {
      ++failed;
      for (const auto& f : r.failures) fails.push_back(r.name + ": " + f);
    }
  }
  doc["checks"] = reports.size();
  doc["failed"] = failed;
  doc["max_error"] = worst;
  doc["failures"] = fails;
  doc["passed"] = failed == 0;
  std::unique_ptr<std::ofstream> file;
  output(c, file) << doc.dump(2) << "\n";
  return failed == 0 ? ok : check_failed;
}

void common_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--set", c.set, "interval | disk | square | real_disk | simplex | ball | disk_x_interval");
  sub->add_option("--gen", c.gen,
                  "fekete-greedy | fekete-brute | discrete-leja | leja-disk | r-leja | roots-of-unity | "
                  "chebyshev | padua | bos | intertwine");
  sub->add_option("--n", c.n, "degree")->check(CLI::NonNegativeNumber);
  sub->add_option("--dim", c.dim, "dimension for simplex and ball")->check(CLI::PositiveNumber);
  sub->add_option("--density", c.density, "generator mesh density")->check(CLI::NonNegativeNumber);
  sub->add_option("--angular-density", c.angular_density, "angular density of the real-disk mesh")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--eval-density", c.eval_density, "evaluation mesh density")->check(CLI::PositiveNumber);
  sub->add_option("--radial", c.radial, "equilibrium | chebyshev | linear");
  sub->add_option("--out", c.out, "output path (default stdout)");
  sub->add_option("--format", c.format, "csv | json (series output)")->check(CLI::IsMember({"csv", "json"}));
}

void range_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--n-min", c.n_min, "first degree")->check(CLI::NonNegativeNumber);
  sub->add_option("--n-max", c.n_max, "last degree")->check(CLI::NonNegativeNumber);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multivariate polynomial interpolation: nodes, Lebesgue constants, transfinite diameters"};
  app.require_subcommand(1);
  RunConfig c;

  auto* points = app.add_subcommand("points", "generate a node set as JSON");
  common_options(points, c);

  auto* diag = app.add_subcommand("diag", "diagnostic series as CSV (n, metric, value)");
  common_options(diag, c);
  range_options(diag, c);
  diag->add_option("--metric", c.metrics,
                   "lebesgue | lebesgue_rootscale | tdiam_estimate | moment_distance | bm_constant | "
                   "bergman_probe | bos_vdm | l_functional")
      ->delimiter(',');
  diag->add_option("--points", c.points_file, "point-set JSON to diagnose instead of a generator");

  auto* interp = app.add_subcommand("interp", "interpolation errors and root rates as CSV");
  common_options(interp, c);
  range_options(interp, c);
  interp->add_option("--func", c.func, "inv2 | runge | abs | exp");

  auto* bergman = app.add_subcommand("bergman", "Bernstein-Markov constants and weak-star probes as CSV");
  common_options(bergman, c);
  range_options(bergman, c);
  bergman->add_option("--measure", c.measure, "roots-of-unity | arcsine | bm-construct");
  bergman->add_option("--measure-size", c.measure_size, "number of atoms (0: 4n)")->check(CLI::NonNegativeNumber);
  bergman->add_option("--k-max", c.k_max, "truncation of the constructed measure")->check(CLI::Range(3, 200));

  auto* kergin = app.add_subcommand("kergin", "Kergin check suite as a JSON report");
  kergin->add_option("--suite", c.suite, "polynomial | hermite | ridge | algebra | univariate | all");
  kergin->add_option("--instances", c.instances, "random instances")->check(CLI::NonNegativeNumber);
  kergin->add_option("--seed", c.seed, "random seed");
  kergin->add_option("--out", c.out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return config;
  }

  try {
    if (*points) return cmd_points(c);
    if (*diag) return cmd_diag(c);
    if (*interp) return cmd_interp(c);
    if (*bergman) return cmd_bergman(c);
    if (*kergin) return cmd_kergin(c);
  } catch (const Incompatible& e) {
    std::cerr << "incompatible: " << e.what() << "\n";
    return incompatible;
  } catch (const DegenerateError& e) {
    std::cerr << "degenerate: " << e.what() << "\n";
    return degenerate;
  } catch (const QuadratureError& e) {
    std::cerr << "quadrature: " << e.what() << "\n";
    return degenerate;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return config;
  }
  return config;
}
