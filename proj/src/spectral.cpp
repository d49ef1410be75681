#include "dlab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dlab/errors.hpp"

namespace dlab {

namespace {

void multiply(const FiniteGraph& g, const std::vector<double>& v, std::vector<double>& out) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    double s = 0.0;
    for (std::size_t j : g.neighbors(i)) s += v[j];
    out[i] = s;
  }
}

double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

SpectralResult spectral_radius(const FiniteGraph& graph, const PowerIterationOptions& options) {
  const std::size_t n = graph.size();
  if (n == 0) throw InvalidArgument("spectral radius of an empty graph");
  if (!graph.connected()) throw InvalidArgument("spectral radius needs a connected graph");

  std::vector<double> v(n, 1.0);
  std::vector<double> av(n);
  SpectralResult out;
  for (std::size_t it = 1; it <= options.max_iterations; ++it) {
    multiply(graph, v, av);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      num += v[i] * av[i];
      den += v[i] * v[i];
    }
    const double lambda = num / den;
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) res = std::max(res, std::abs(av[i] - lambda * v[i]));
    res /= inf_norm(v);
    if (res <= options.tolerance) {
      out.radius = lambda;
      out.residual = res;
      out.iterations = it;
      const double scale = inf_norm(v);
      for (double& x : v) x /= scale;
      out.vector = std::move(v);
      return out;
    }
    // v <- (A + I) v, renormalized.
    for (std::size_t i = 0; i < n; ++i) av[i] += v[i];
    const double scale = inf_norm(av);
    for (std::size_t i = 0; i < n; ++i) v[i] = av[i] / scale;
  }
  throw ConvergenceFailure("power iteration did not reach residual " + std::to_string(options.tolerance) + " in " +
                           std::to_string(options.max_iterations) + " iterations");
}

double local_constant(const FiniteGraph& graph, const std::vector<double>& density) {
  if (density.size() != graph.size()) throw InvalidArgument("density size does not match graph");
  double best = 0.0;
  for (std::size_t i = 0; i < graph.size(); ++i) {
    if (!(density[i] > 0.0)) throw NonPositiveDensity("density at vertex " + graph.token(i) + " is not positive");
    double total = density[i];
    for (std::size_t j : graph.neighbors(i)) total += density[j];
    best = std::max(best, total / density[i]);
  }
  return best;
}

PerronMeasure perron_measure(const FiniteGraph& graph, const PowerIterationOptions& options) {
  SpectralResult s = spectral_radius(graph, options);
  PerronMeasure out;
  out.density = std::move(s.vector);
  out.spectral_radius = s.radius;
  out.residual = s.residual;
  out.local_constant = local_constant(graph, out.density);
  return out;
}

}  // namespace dlab
