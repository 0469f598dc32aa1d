#pragma once

#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace pinterp {

using cplx = std::complex<double>;

/// A point of C^d. Real sets simply carry zero imaginary parts.
using Point = Eigen::VectorXcd;
using PointSet = std::vector<Point>;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Bad parameters or mismatched dimensions.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// A Vandermonde, Gram or interpolation system is numerically singular.
class DegenerateError : public Error {
public:
  using Error::Error;
};

/// A combinatorial search would exceed its enumeration budget.
class BudgetExceeded : public Error {
public:
  using Error::Error;
};

/// An adaptive quadrature did not reach the requested tolerance.
class QuadratureError : public Error {
public:
  using Error::Error;
};

inline Point make_point(std::initializer_list<cplx> coords) {
  Point p(static_cast<Eigen::Index>(coords.size()));
  Eigen::Index i = 0;
  for (const auto& c : coords) p(i++) = c;
  return p;
}

inline bool is_real(const Point& p) {
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p(i).imag() != 0.0) return false;
  return true;
}

inline bool is_real(const PointSet& pts) {
  for (const auto& p : pts)
    if (!is_real(p)) return false;
  return true;
}

/// Real parts of a point, as a real vector.
inline Eigen::VectorXd real_part(const Point& p) { return p.real(); }

} // namespace pinterp
