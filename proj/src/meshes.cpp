#include "pinterp/meshes.hpp"

#include <cmath>
#include <numbers>

#include "pinterp/basis.hpp"

namespace pinterp {

namespace {

using std::numbers::pi;

std::vector<double> lobatto(int m) {
  std::vector<double> x(static_cast<std::size_t>(m + 1));
  if (m == 0) {
    x[0] = 1.0;
    return x;
  }
  for (int k = 0; k <= m; ++k) x[static_cast<std::size_t>(k)] = std::cos(pi * k / m);
  // exact symmetric values
  x[static_cast<std::size_t>(m)] = -1.0;
  if (m % 2 == 0) x[static_cast<std::size_t>(m / 2)] = 0.0;
  return x;
}

void require(bool ok, const char* what) {
  if (!ok) throw InvalidArgument(what);
}

double lobatto_constant(int density) {
  // Chebyshev-Lobatto grid with density*n intervals, degree n
  return 1.0 / std::cos(pi / (2.0 * density));
}

} // namespace

std::string to_string(CompactId id) {
  switch (id) {
  case CompactId::interval: return "interval";
  case CompactId::disk_boundary: return "disk_boundary";
  case CompactId::square: return "square";
  case CompactId::real_disk: return "real_disk_B2";
  case CompactId::real_ball: return "real_ball_Bd";
  case CompactId::simplex: return "simplex_Sd";
  case CompactId::product: return "product";
  }
  return "interval";
}

CompactId compact_from_string(const std::string& s) {
  for (auto id : {CompactId::interval, CompactId::disk_boundary, CompactId::square,
                  CompactId::real_disk, CompactId::real_ball, CompactId::simplex, CompactId::product})
    if (to_string(id) == s) return id;
  throw InvalidArgument("unknown compact: " + s);
}

Mesh interval_mesh(int n, int density) {
  require(n >= 0, "interval_mesh: n must be >= 0");
  require(density >= 2, "interval_mesh: density must be >= 2");
  Mesh m;
  m.compact = CompactId::interval;
  m.dim = 1;
  m.degree = n;
  m.density = density;
  for (double x : lobatto(density * std::max(n, 1))) m.points.push_back(make_point({x}));
  m.norming_constant = lobatto_constant(density);
  return m;
}

Mesh disk_boundary_mesh(int n, int density) {
  require(n >= 0, "disk_boundary_mesh: n must be >= 0");
  require(density >= 1, "disk_boundary_mesh: density must be >= 1");
  Mesh m;
  m.compact = CompactId::disk_boundary;
  m.dim = 1;
  m.degree = n;
  m.density = density;
  const int count = density * std::max(n, 1) + 1;
  for (int k = 0; k < count; ++k) m.points.push_back(make_point({std::polar(1.0, 2.0 * pi * k / count)}));
  // exact axis points
  if (count % 4 == 0) {
    m.points[static_cast<std::size_t>(count / 4)] = make_point({cplx(0, 1)});
    m.points[static_cast<std::size_t>(count / 2)] = make_point({cplx(-1, 0)});
    m.points[static_cast<std::size_t>(3 * count / 4)] = make_point({cplx(0, -1)});
  } else if (count % 2 == 0) {
    m.points[static_cast<std::size_t>(count / 2)] = make_point({cplx(-1, 0)});
  }
  // a degree-n polynomial is a trigonometric polynomial of degree n on the circle
  if (count > 2 * n) m.norming_constant = 1.0 / std::cos(pi * n / count);
  return m;
}

Mesh real_disk_mesh(int n, int radial_density, int angular_density) {
  require(n >= 0, "real_disk_mesh: n must be >= 0");
  require(radial_density >= 1 && angular_density >= 1, "real_disk_mesh: densities must be >= 1");
  Mesh m;
  m.compact = CompactId::real_disk;
  m.dim = 2;
  m.degree = n;
  m.density = radial_density;
  m.angular_density = angular_density;
  const int nn = std::max(n, 1);
  const int R = radial_density * nn;
  const int A = 2 * angular_density * nn;
  m.points.push_back(make_point({0.0, 0.0}));
  for (int k = 0; k < R; ++k) {
    const double r = std::cos(pi * k / (2.0 * R));
    for (int t = 0; t < A; ++t) {
      const double th = 2.0 * pi * t / A;
      m.points.push_back(make_point({r * std::cos(th), r * std::sin(th)}));
    }
  }
  // every diameter carries a 2R-interval Lobatto grid; every circle A angles
  if (A > 2 * n) m.norming_constant = 1.0 / (std::cos(pi * n / (4.0 * R)) * std::cos(pi * n / A));
  return m;
}

Mesh square_mesh(int n, int density) {
  require(n >= 0, "square_mesh: n must be >= 0");
  require(density >= 2, "square_mesh: density must be >= 2");
  Mesh m;
  m.compact = CompactId::square;
  m.dim = 2;
  m.degree = n;
  m.density = density;
  const auto x = lobatto(density * std::max(n, 1));
  for (double a : x)
    for (double b : x) m.points.push_back(make_point({a, b}));
  const double c = lobatto_constant(density);
  m.norming_constant = c * c;
  return m;
}

Mesh simplex_mesh(int d, int n, int density) {
  require(d >= 1, "simplex_mesh: d must be >= 1");
  require(n >= 0, "simplex_mesh: n must be >= 0");
  require(density >= 1, "simplex_mesh: density must be >= 1");
  Mesh m;
  m.compact = CompactId::simplex;
  m.dim = d;
  m.degree = n;
  m.density = density;
  const int lattice = density * n;
  for (const auto& a : graded_indices(d, lattice)) {
    Point p(d);
    for (int c = 0; c < d; ++c) p(c) = lattice == 0 ? 0.0 : static_cast<double>(a[c]) / lattice;
    m.points.push_back(std::move(p));
  }
  return m;
}

Mesh real_ball_mesh(int d, int n, int density) {
  require(d >= 1, "real_ball_mesh: d must be >= 1");
  require(n >= 0, "real_ball_mesh: n must be >= 0");
  require(density >= 2, "real_ball_mesh: density must be >= 2");
  Mesh m;
  m.compact = CompactId::real_ball;
  m.dim = d;
  m.degree = n;
  m.density = density;
  const auto x = lobatto(density * std::max(n, 1));
  const std::size_t k = x.size();
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  while (true) {
    Point p(d);
    double r2 = 0.0;
    for (int c = 0; c < d; ++c) {
      const double v = x[idx[static_cast<std::size_t>(c)]];
      p(c) = v;
      r2 += v * v;
    }
    if (r2 <= 1.0 + 1e-15) {
      m.points.push_back(p);
    } else {
      m.points.push_back(p / std::sqrt(r2));
    }
    int c = 0;
    while (c < d && ++idx[static_cast<std::size_t>(c)] == k) idx[static_cast<std::size_t>(c++)] = 0;
    if (c == d) break;
  }
  return m;
}

Mesh product_mesh(std::span<const Mesh> factors) {
  require(!factors.empty(), "product_mesh: no factors");
  Mesh m;
  m.compact = CompactId::product;
  m.dim = 0;
  m.degree = factors.front().degree;
  double c = 1.0;
  bool known = true;
  for (const auto& f : factors) {
    require(f.dim >= 1 && !f.points.empty(), "product_mesh: empty factor");
    m.dim += f.dim;
    if (f.norming_constant) c *= *f.norming_constant;
    else known = false;
  }
  if (known) m.norming_constant = c;
  m.factors.assign(factors.begin(), factors.end());
  // odometer over the factors, last factor fastest
  std::vector<std::size_t> idx(factors.size(), 0);
  while (true) {
    Point p(m.dim);
    Eigen::Index off = 0;
    for (std::size_t f = 0; f < factors.size(); ++f) {
      const auto& q = factors[f].points[idx[f]];
      p.segment(off, q.size()) = q;
      off += q.size();
    }
    m.points.push_back(std::move(p));
    std::size_t f = factors.size();
    while (f > 0) {
      --f;
      if (++idx[f] < factors[f].points.size()) break;
      idx[f] = 0;
      if (f == 0) return m;
    }
  }
}

Mesh refine(const Mesh& mesh, int factor) {
  require(factor >= 1, "refine: factor must be >= 1");
  switch (mesh.compact) {
  case CompactId::interval: return interval_mesh(mesh.degree, mesh.density * factor);
  case CompactId::disk_boundary: return disk_boundary_mesh(mesh.degree, mesh.density * factor);
  case CompactId::square: return square_mesh(mesh.degree, mesh.density * factor);
  case CompactId::real_disk:
    return real_disk_mesh(mesh.degree, mesh.density * factor, mesh.angular_density * factor);
  case CompactId::simplex: return simplex_mesh(mesh.dim, mesh.degree, mesh.density * factor);
  case CompactId::real_ball: return real_ball_mesh(mesh.dim, mesh.degree, mesh.density * factor);
  case CompactId::product: {
    std::vector<Mesh> fine;
    for (const auto& f : mesh.factors) fine.push_back(refine(f, factor));
    return product_mesh(fine);
  }
  }
  throw InvalidArgument("refine: unknown compact");
}

} // namespace pinterp
