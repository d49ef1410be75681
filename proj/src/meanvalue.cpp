#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "dlab/continuous.hpp"
#include "dlab/errors.hpp"
#include "quadrature.hpp"

namespace dlab {

namespace {

// ------------------------------------------------------------------ RNG ----

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Uniform in [0, 1): element `counter` of the SplitMix64 stream seeded with
/// `key`, so any sample can be drawn independently of evaluation order.
double uniform(std::uint64_t key, std::uint64_t counter) {
  return static_cast<double>(splitmix(key + counter * 0x9E3779B97F4A7C15ULL) >> 11) * 0x1.0p-53;
}

/// U^{1/d}.
double root(double u, int d) {
  switch (d) {
    case 1:
      return u;
    case 2:
      return std::sqrt(u);
    case 3:
      return std::cbrt(u);
    case 4:
      return std::sqrt(std::sqrt(u));
    default:
      return std::pow(u, 1.0 / d);
  }
}

struct Welford {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;
  void add(double x) {
    ++n;
    const double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }
  [[nodiscard]] double se() const {
    return n < 2 ? 0.0 : std::sqrt(m2 / static_cast<double>(n - 1) / static_cast<double>(n));
  }
};

/// Uniform points of B(center, rho): direction from d normals, radius U^{1/d}.
Welford mc_general(int d, const DensityNd& f, std::span<const double> center, double rho, std::uint64_t samples,
                   std::uint64_t key) {
  Welford acc;
  const int pairs = (d + 1) / 2;
  const auto stride = static_cast<std::uint64_t>(2 * pairs + 1);
  std::vector<double> normal(static_cast<std::size_t>(2 * pairs));
  std::vector<double> point(static_cast<std::size_t>(d));
  for (std::uint64_t i = 0; i < samples; ++i) {
    const std::uint64_t base = i * stride;
    for (int p = 0; p < pairs; ++p) {
      const double u1 = uniform(key, base + static_cast<std::uint64_t>(2 * p));
      const double u2 = uniform(key, base + static_cast<std::uint64_t>(2 * p + 1));
      const double radius = std::sqrt(-2.0 * std::log1p(-u1));
      normal[static_cast<std::size_t>(2 * p)] = radius * std::cos(2.0 * std::numbers::pi * u2);
      normal[static_cast<std::size_t>(2 * p + 1)] = radius * std::sin(2.0 * std::numbers::pi * u2);
    }
    double norm = 0.0;
    for (int j = 0; j < d; ++j) norm += normal[static_cast<std::size_t>(j)] * normal[static_cast<std::size_t>(j)];
    norm = std::sqrt(norm);
    const double w = rho * root(uniform(key, base + stride - 1), d) / norm;
    for (int j = 0; j < d; ++j) {
      point[static_cast<std::size_t>(j)] = center[static_cast<std::size_t>(j)] + w * normal[static_cast<std::size_t>(j)];
    }
    acc.add(f(point));
  }
  return acc;
}

/// Radial fast path: only |y| matters. The first coordinate of a uniform point
/// on S^{d-1} is distributed as the first coordinate of a uniform point of the
/// (d-2)-ball, which is cheap for d = 3, 4.
Welford mc_radial(const RadialDensity& f, double a, double rho, std::uint64_t samples, std::uint64_t key) {
  Welford acc;
  const int d = f.dim;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const std::uint64_t base = 3 * i;
    const double w = rho * root(uniform(key, base), d);
    double cos_angle = 0.0;
    if (d == 3) {
      cos_angle = 2.0 * uniform(key, base + 1) - 1.0;
    } else {
      cos_angle = std::sqrt(uniform(key, base + 1)) * std::cos(2.0 * std::numbers::pi * uniform(key, base + 2));
    }
    const double r2 = a * a + 2.0 * a * w * cos_angle + w * w;
    acc.add(f.profile(std::sqrt(std::max(0.0, r2))));
  }
  return acc;
}

// ----------------------------------------------------------------- grid ----

/// Cell-centre grid over [-rho, rho]^d with 2N cells per axis: cell centres
/// sit at (m_1, ..., m_d) * rho / (2N) for odd m_i, and a cell is kept when
/// sum m_i^2 < (2N)^2.

/// hist[q] = number of odd (m_1..m_k) in range with sum m_i^2 = q, q < 4N^2.
std::vector<std::pair<std::int64_t, double>> transverse_histogram(int k, int n) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<std::pair<std::int64_t, double>>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find({k, n}); it != cache.end()) return it->second;

  const std::int64_t limit = 4LL * n * n;
  std::vector<double> hist(static_cast<std::size_t>(limit), 0.0);
  hist[0] = 1.0;
  for (int dim = 0; dim < k; ++dim) {
    std::vector<double> next(static_cast<std::size_t>(limit), 0.0);
    for (std::int64_t q = 0; q < limit; ++q) {
      if (hist[static_cast<std::size_t>(q)] == 0.0) continue;
      for (std::int64_t m = 1; q + m * m < limit; m += 2) {
        next[static_cast<std::size_t>(q + m * m)] += 2.0 * hist[static_cast<std::size_t>(q)];
      }
    }
    hist.swap(next);
  }
  std::vector<std::pair<std::int64_t, double>> out;
  for (std::int64_t q = 0; q < limit; ++q) {
    if (hist[static_cast<std::size_t>(q)] != 0.0) out.emplace_back(q, hist[static_cast<std::size_t>(q)]);
  }
  cache.emplace(std::make_pair(k, n), out);
  return out;
}

/// Grid average with the first axis along the ray from the origin through
/// the centre (at distance a).
double radial_grid(const RadialDensity& f, double a, double rho, int n) {
  const auto hist = transverse_histogram(f.dim - 1, n);
  const std::int64_t limit = 4LL * n * n;
  const double half_step = rho / (2.0 * n);
  double sum = 0.0;
  double count = 0.0;
  for (std::int64_t m = -(2LL * n - 1); m <= 2LL * n - 1; m += 2) {
    const double t = a + static_cast<double>(m) * half_step;
    for (const auto& [q, weight] : hist) {
      if (m * m + q >= limit) break;
      sum += weight * f.profile(std::sqrt(t * t + static_cast<double>(q) * half_step * half_step));
      count += weight;
    }
  }
  return sum / count;
}

double general_grid(int d, const DensityNd& f, std::span<const double> center, double rho, int n) {
  const std::int64_t limit = 4LL * n * n;
  const double half_step = rho / (2.0 * n);
  std::vector<std::int64_t> m(static_cast<std::size_t>(d), -(2LL * n - 1));
  std::vector<double> point(static_cast<std::size_t>(d));
  double sum = 0.0;
  double count = 0.0;
  while (true) {
    std::int64_t q = 0;
    for (auto v : m) q += v * v;
    if (q < limit) {
      for (std::size_t j = 0; j < m.size(); ++j) point[j] = center[j] + static_cast<double>(m[j]) * half_step;
      sum += f(point);
      count += 1.0;
    }
    int axis = d - 1;
    while (axis >= 0 && m[static_cast<std::size_t>(axis)] == 2LL * n - 1) {
      m[static_cast<std::size_t>(axis)] = -(2LL * n - 1);
      --axis;
    }
    if (axis < 0) break;
    m[static_cast<std::size_t>(axis)] += 2;
  }
  return sum / count;
}

// ------------------------------------------------------------ reference ----

/// Integral of g over [lo, hi] split at the given interior points.
double piecewise(const std::function<double(double)>& g, double lo, double hi, std::vector<double> cuts,
                 double* error) {
  cuts.push_back(lo);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  *error = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double a = std::max(lo, cuts[i]);
    const double b = std::min(hi, cuts[i + 1]);
    double err = 0.0;
    total += detail::gauss_kronrod(g, a, b, 12, 1e-13, &err);
    *error += err;
  }
  return total;
}

/// Ball average of a radial density via the reduced coordinates (t, s): t along
/// the ray through the centre, s the transverse distance, with t = rho sin(theta).
double radial_reference(const RadialDensity& f, double a, double rho) {
  const int d = f.dim;
  double error = 0.0;
  if (d == 1) {
    std::vector<double> cuts{-a};
    for (double k : f.kinks) {
      cuts.push_back(k - a);
      cuts.push_back(-k - a);
    }
    std::erase_if(cuts, [&](double c) { return !(c > -rho && c < rho); });
    const double total = piecewise([&](double t) { return f.profile(std::abs(a + t)); }, -rho, rho, cuts, &error);
    return total / (2.0 * rho);
  }

  double inner_error = 0.0;
  auto inner = [&](double b, double top) {
    std::vector<double> cuts;
    for (double k : f.kinks) {
      if (k > std::abs(b)) {
        const double s = std::sqrt(k * k - b * b);
        if (s > 0.0 && s < top) cuts.push_back(s);
      }
    }
    double err = 0.0;
    const double value = piecewise(
        [&](double s) { return std::pow(s, d - 2) * f.profile(std::sqrt(b * b + s * s)); }, 0.0, top, cuts, &err);
    inner_error = std::max(inner_error, err);
    return value;
  };
  std::vector<double> cuts;
  auto add_cut = [&](double t) {
    if (t > -rho && t < rho) cuts.push_back(std::asin(t / rho));
  };
  add_cut(-a);
  for (double k : f.kinks) {
    add_cut(k - a);
    add_cut(-k - a);
  }
  const double half_pi = std::numbers::pi / 2.0;
  const double total = piecewise(
      [&](double theta) {
        const double c = std::cos(theta);
        return rho * c * inner(a + rho * std::sin(theta), rho * c);
      },
      -half_pi, half_pi, cuts, &error);
  const double sphere = 2.0 * std::pow(std::numbers::pi, (d - 1) / 2.0) / std::tgamma((d - 1) / 2.0);
  const double volume = std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0 + 1.0) * std::pow(rho, d);
  const double value = sphere * total / volume;
  if (!std::isfinite(value) || error > 1e-10 * std::abs(total) ||
      inner_error * rho * std::numbers::pi > 1e-10 * std::abs(total)) {
    char detail[128];
    std::snprintf(detail, sizeof detail, " (value %g, outer error %g, inner error %g)", value,
                  error / std::abs(total), inner_error * rho * std::numbers::pi / std::abs(total));
    throw QuadratureFailure("reference ball average for " + f.label + " did not converge" + detail);
  }
  return value;
}

void compare(BallAverage& avg) {
  const double se = std::sqrt(avg.mc_se * avg.mc_se + avg.grid_error * avg.grid_error);
  const double diff = std::abs(avg.grid - avg.mc);
  // Both estimators are exact on constant regions; allow float rounding there.
  const double floor = 1e-12 * std::max(std::abs(avg.grid), std::abs(avg.mc));
  avg.z = se > 0.0 ? diff / se : (diff <= floor ? 0.0 : INFINITY);
  avg.agree = diff <= 3.0 * se + floor;
}

MeanValueResult finish(BallAverage small, BallAverage big, double rel_tol) {
  compare(small);
  compare(big);
  MeanValueResult out;
  out.at_r = small;
  out.at_2r = big;
  if (small.reference && big.reference) {
    out.avg_r = *small.reference;
    out.avg_2r = *big.reference;
    out.estimator = "reference-quadrature";
  } else {
    out.avg_r = small.grid;
    out.avg_2r = big.grid;
    out.estimator = "grid";
  }
  out.satisfied = out.avg_r >= out.avg_2r - rel_tol * std::abs(out.avg_2r);
  out.estimators_agree = small.agree && big.agree;
  return out;
}

void check_inputs(int d, std::span<const double> center, double r, const MeanValueOptions& options) {
  if (d < 1) throw InvalidArgument("dimension must be >= 1");
  if (center.size() != static_cast<std::size_t>(d)) throw InvalidArgument("center has the wrong dimension");
  if (!(r > 0.0)) throw InvalidArgument("degenerate radius: r must be > 0");
  if (options.grid_divisions < 2) throw InvalidArgument("grid_divisions must be >= 2");
}

double integer_power(double x, int n) {
  double out = 1.0;
  for (int i = 0; i < std::abs(n); ++i) out *= x;
  return n < 0 ? 1.0 / out : out;
}

}  // namespace

DensityNd RadialDensity::as_function() const {
  auto g = profile;
  return [g](std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return g(std::sqrt(s));
  };
}

const char* to_string(FkExponent e) { return e == FkExponent::kTwoMinusD ? "2-d" : "d-2"; }

RadialDensity fk_density(int d, double k, FkExponent exponent) {
  if (d < 1) throw InvalidArgument("dimension must be >= 1");
  if (!(k > 0.0)) throw InvalidArgument("plateau radius must be positive");
  const int p = exponent == FkExponent::kTwoMinusD ? 2 - d : d - 2;
  const double plateau = integer_power(k, p);
  RadialDensity out;
  out.label = "radial_fk:" + std::to_string(d) + ":" + std::to_string(k) + ":" + to_string(exponent);
  out.dim = d;
  out.profile = [k, p, plateau](double r) { return r <= k ? plateau : integer_power(r, p); };
  out.kinks = {k};
  return out;
}

MeanValueResult mean_value_check(const RadialDensity& f, std::span<const double> center, double r,
                                 const MeanValueOptions& options) {
  check_inputs(f.dim, center, r, options);
  double a = 0.0;
  for (double v : center) a += v * v;
  a = std::sqrt(a);
  const int n = options.grid_divisions;
  const DensityNd plain = f.as_function();
  auto estimate = [&](double rho, std::uint64_t stream) {
    BallAverage avg;
    avg.grid = radial_grid(f, a, rho, n);
    avg.grid_error = std::abs(avg.grid - radial_grid(f, a, rho, n / 2));
    const std::uint64_t key = splitmix(options.seed) ^ splitmix(stream + 0x5bd1e995ULL);
    const Welford mc = (f.dim == 3 || f.dim == 4) ? mc_radial(f, a, rho, options.mc_samples, key)
                                                  : mc_general(f.dim, plain, center, rho, options.mc_samples, key);
    avg.mc = mc.mean;
    avg.mc_se = mc.se();
    avg.reference = radial_reference(f, a, rho);
    return avg;
  };
  return finish(estimate(r, 0), estimate(2.0 * r, 1), options.rel_tol);
}

MeanValueResult mean_value_check(int d, const DensityNd& f, std::span<const double> center, double r,
                                 const MeanValueOptions& options) {
  check_inputs(d, center, r, options);
  const int n = options.grid_divisions;
  if (std::pow(2.0 * n, d) > options.max_grid_cells) {
    throw InvalidArgument("grid of " + std::to_string(std::pow(2.0 * n, d)) + " cells exceeds the cap");
  }
  auto estimate = [&](double rho, std::uint64_t stream) {
    BallAverage avg;
    avg.grid = general_grid(d, f, center, rho, n);
    avg.grid_error = std::abs(avg.grid - general_grid(d, f, center, rho, n / 2));
    const std::uint64_t key = splitmix(options.seed) ^ splitmix(stream + 0x5bd1e995ULL);
    const Welford mc = mc_general(d, f, center, rho, options.mc_samples, key);
    avg.mc = mc.mean;
    avg.mc_se = mc.se();
    return avg;
  };
  return finish(estimate(r, 0), estimate(2.0 * r, 1), options.rel_tol);
}

}  // namespace dlab
