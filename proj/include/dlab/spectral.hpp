#pragma once

#include <cstddef>
#include <vector>

#include "dlab/graph.hpp"

namespace dlab {

struct PowerIterationOptions {
  double tolerance = 1e-10;
  std::size_t max_iterations = 1'000'000;
};

struct SpectralResult {
  double radius = 0.0;
  /// ||A v - radius v||_inf / ||v||_inf at the returned vector.
  double residual = 0.0;
  std::size_t iterations = 0;
  /// Perron vector scaled to max entry 1.
  std::vector<double> vector;
};

/// Spectral radius of the adjacency matrix of a finite connected graph.
///
/// Power iteration on A + I from the all-ones vector; the shift removes the
/// period-2 oscillation of bipartite graphs. Throws ConvergenceFailure when
/// the residual stays above tolerance for max_iterations steps.
SpectralResult spectral_radius(const FiniteGraph& graph, const PowerIterationOptions& options = {});

/// Density given by the Perron eigenvector.
struct PerronMeasure {
  std::vector<double> density;
  double spectral_radius = 0.0;
  /// max_x (w(x) + sum_{y ~ x} w(y)) / w(x); equals 1 + spectral_radius.
  double local_constant = 0.0;
  double residual = 0.0;
};

PerronMeasure perron_measure(const FiniteGraph& graph, const PowerIterationOptions& options = {});

/// C^0 of an arbitrary positive float density on a finite graph.
double local_constant(const FiniteGraph& graph, const std::vector<double>& density);

}  // namespace dlab
