#pragma once

#include <functional>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace dlab::detail {

/// Adaptive 61-point Gauss-Kronrod on [lo, hi].
///
/// The interval is mapped onto [-1, 1] first: Boost 1.74 compares the panel
/// error on the reference interval against a tolerance in user units, which
/// makes short intervals recurse to the depth limit on rounding noise.
inline double gauss_kronrod(const std::function<double(double)>& f, double lo, double hi, unsigned depth,
                            double rel_tol, double* error) {
  if (!(hi > lo)) {
    *error = 0.0;
    return 0.0;
  }
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double l1 = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      [&](double x) { return f(mid + half * x); }, -1.0, 1.0, depth, rel_tol, error, &l1);
  *error *= half;
  return value * half;
}

}  // namespace dlab::detail
