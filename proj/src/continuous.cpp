#include "dlab/continuous.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dlab/errors.hpp"
#include "quadrature.hpp"

namespace dlab {

double integrate_1d(const std::function<double(double)>& f, double a, double b, const QuadratureOptions& options,
                    double* error) {
  double err = 0.0;
  const double value = detail::gauss_kronrod(f, a, b, options.max_depth, 1e-15, &err);
  if (!std::isfinite(value) || !(err <= options.abs_tol)) {
    throw QuadratureFailure("quadrature on [" + std::to_string(a) + ", " + std::to_string(b) +
                            "] reached error " + std::to_string(err) + " > " + std::to_string(options.abs_tol));
  }
  if (error != nullptr) *error = err;
  return value;
}

double DyadicDiscretization::mass(std::int64_t j) const {
  if (j < j_lo || j > j_hi) {
    throw WindowOverflow("dyadic index " + std::to_string(j) + " outside [" + std::to_string(j_lo) + ", " +
                         std::to_string(j_hi) + "]");
  }
  return masses[static_cast<std::size_t>(j - j_lo)];
}

DyadicDiscretization discretize_1d(const Density1D& u, int k, std::int64_t j_lo, std::int64_t j_hi,
                                   const QuadratureOptions& options) {
  if (j_hi < j_lo) throw InvalidArgument("empty dyadic range");
  DyadicDiscretization out;
  out.k = k;
  out.j_lo = j_lo;
  out.j_hi = j_hi;
  const double step = std::ldexp(1.0, -k);
  for (std::int64_t j = j_lo; j <= j_hi; ++j) {
    double err = 0.0;
    out.masses.push_back(
        integrate_1d(u.rule, step * static_cast<double>(j), step * static_cast<double>(j + 1), options, &err));
    out.errors.push_back(err);
  }
  return out;
}

double telescoping_defect(const Density1D& u, int k, std::int64_t j_lo, std::int64_t j_hi,
                          const QuadratureOptions& options) {
  const DyadicDiscretization coarse = discretize_1d(u, k, j_lo, j_hi, options);
  const DyadicDiscretization fine = discretize_1d(u, k + 1, 2 * j_lo, 2 * j_hi + 1, options);
  double worst = 0.0;
  for (std::int64_t j = j_lo; j <= j_hi; ++j) {
    const double parent = coarse.mass(j);
    const double children = fine.mass(2 * j) + fine.mass(2 * j + 1);
    worst = std::max(worst, std::abs(parent - children) / std::abs(parent));
  }
  return worst;
}

VertexMeasure discretization_measure(const DyadicDiscretization& disc) {
  auto masses = std::make_shared<const DyadicDiscretization>(disc);
  return VertexMeasure("dyadic[k=" + std::to_string(disc.k) + "]", [masses](const Vertex& v) {
    return Rational(mpq_class(masses->mass(v[0])));
  });
}

TripleBallReport triple_ball_check(const Density1D& u, const std::vector<double>& centers,
                                   const std::vector<double>& radii, const QuadratureOptions& options) {
  TripleBallReport out;
  bool first = true;
  for (double x : centers) {
    for (double r : radii) {
      if (!(r > 0.0)) throw InvalidArgument("radius must be positive");
      const double small = integrate_1d(u.rule, x - r, x + r, options);
      const double big = integrate_1d(u.rule, x - 3 * r, x - r, options) + small +
                         integrate_1d(u.rule, x + r, x + 3 * r, options);
      const double ratio = big / small;
      out.ratios.emplace_back(x, r, ratio);
      if (first || ratio > out.max_ratio) {
        out.max_ratio = ratio;
        out.argmax_center = x;
        out.argmax_radius = r;
        first = false;
      }
    }
  }
  out.within_three = out.max_ratio <= 3.0 + out.tolerance;
  return out;
}

double l1_ball_mass(const Density2D& u, double cx, double cy, double h, const QuadratureOptions& options) {
  if (!(h > 0.0)) throw InvalidArgument("radius must be positive");
  auto column = [&](double dx) {
    const double half = h - std::abs(dx);
    if (half <= 0.0) return 0.0;
    return integrate_1d([&](double dy) { return u(cx + dx, cy + dy); }, -half, half, options);
  };
  // The column length has a kink at dx = 0.
  return integrate_1d(column, -h, 0.0, options) + integrate_1d(column, 0.0, h, options);
}

double linf_ball_mass(const Density2D& u, double cx, double cy, double h, const QuadratureOptions& options) {
  const Density2D rotated = [&u](double s, double t) { return u(s + t, s - t); };
  return 2.0 * l1_ball_mass(rotated, (cx + cy) / 2.0, (cx - cy) / 2.0, h, options);
}

DyadicBallReport dyadic_ball_masses(const Density2D& u, int k,
                                    const std::vector<std::pair<std::int64_t, std::int64_t>>& centers,
                                    PlaneNorm norm, const QuadratureOptions& options) {
  DyadicBallReport out;
  out.k = k;
  out.norm = norm;
  out.centers = centers;
  out.bound = norm == PlaneNorm::kL1 ? 5.0 : 9.0;
  const double h = std::ldexp(1.0, -k);
  auto mass = [&](std::int64_t a, std::int64_t b) {
    const double x = h * static_cast<double>(a);
    const double y = h * static_cast<double>(b);
    return norm == PlaneNorm::kL1 ? l1_ball_mass(u, x, y, h, options) : linf_ball_mass(u, x, y, h, options);
  };
  for (std::size_t i = 0; i < centers.size(); ++i) {
    const auto [a, b] = centers[i];
    const double own = mass(a, b);
    double total = own;
    for (std::int64_t da = -1; da <= 1; ++da) {
      for (std::int64_t db = -1; db <= 1; ++db) {
        if (da == 0 && db == 0) continue;
        if (norm == PlaneNorm::kL1 && da != 0 && db != 0) continue;
        total += mass(a + da, b + db);
      }
    }
    const double ratio = total / own;
    out.masses.push_back(own);
    out.neighborhood_ratio.push_back(ratio);
    out.satisfied.push_back(ratio <= out.bound * (1.0 + out.tolerance));
    if (i == 0 || ratio > out.max_ratio) out.max_ratio = ratio;
  }
  return out;
}

LaplacianProbe c2_superharmonicity_probe(const DensityNd& u, const std::vector<std::vector<double>>& points,
                                         double h) {
  if (!(h > 0.0)) throw InvalidArgument("step must be positive");
  LaplacianProbe out;
  out.h = h;
  out.tolerance = 10.0 * h * h;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<double> p = points[i];
    const double centre = u(p);
    double sum = 0.0;
    for (std::size_t axis = 0; axis < p.size(); ++axis) {
      const double saved = p[axis];
      p[axis] = saved + h;
      const double plus = u(p);
      p[axis] = saved - h;
      const double minus = u(p);
      p[axis] = saved;
      sum += (plus + minus - 2.0 * centre) / (h * h);
    }
    out.estimates.push_back(sum);
    if (i == 0 || sum > out.max_estimate) out.max_estimate = sum;
    if (sum > out.tolerance) out.flagged.push_back(i);
  }
  return out;
}

}  // namespace dlab
