#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dlab/ball.hpp"
#include "dlab/graph.hpp"
#include "dlab/lattice.hpp"
#include "dlab/measure.hpp"

namespace dlab {

struct ScanOptions {
  unsigned jobs = 1;
  Limits limits;
};

struct ScanWitness {
  Vertex center;
  int radius = 1;
};

/// Window-restricted supremum of mu(B(x, 2r)) / mu(B(x, r)).
struct ScanResult {
  /// Largest ratio found; a lower bound for C_mu.
  Rational lower_bound;
  ScanWitness witness;
  std::size_t center_count = 0;
  int max_radius = 1;
  /// True when lower_bound is provably C_mu itself.
  bool exact = false;
  /// Why `exact` holds (empty otherwise).
  std::string exactness_reason;
};

/// Exact scan over centers x and radii 1 <= r <= max_radius.
///
/// Ties resolve to the smallest center, then the smallest radius. `exact` is
/// set only for a translation-invariant measure on a radius-homogeneous graph
/// whose counting-measure constant is certified with cutoff <= max_radius.
ScanResult doubling_scan(const GraphView& graph, const VertexMeasure& measure, const std::vector<Vertex>& centers,
                         int max_radius, const ScanOptions& options = {});

/// C^0 restricted to `centers`: max (mu(x) + sum_{y ~ x} mu(y)) / mu(x).
Rational local_constant(const GraphView& graph, const VertexMeasure& measure, const std::vector<Vertex>& centers);

struct LaplacianField {
  std::vector<std::pair<Vertex, Rational>> values;
  Rational min_value;
  [[nodiscard]] bool superharmonic() const { return min_value.sign() >= 0; }
  [[nodiscard]] bool harmonic() const;
};

/// Delta f(x) = f(x) - (1/|N(x)|) sum_{y ~ x} f(y) at each center, exactly.
LaplacianField laplacian(const GraphView& graph, const VertexFunction& f, const std::vector<Vertex>& centers);

/// Every vertex of Z^d with |x|_inf <= radius, in lexicographic order.
std::vector<Vertex> lattice_box(int d, std::int64_t radius);

}  // namespace dlab
