#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "dlab/rational.hpp"
#include "dlab/vertex.hpp"

namespace dlab {

/// Float density on Z^3.
using Z3Density = std::function<double(std::int64_t, std::int64_t, std::int64_t)>;

/// |x|_2^{-1/2}, with the value 1 at the origin.
double conjecture_density(std::int64_t x, std::int64_t y, std::int64_t z);

struct ConjectureOptions {
  unsigned jobs = 1;
  /// Cap on the number of doubles in the materialized density box.
  std::size_t max_box_entries = 64'000'000;
  Z3Density density = conjecture_density;
};

struct ConjectureRow {
  Vertex center;
  int n = 1;
  double ratio = 0.0;
};

struct ConjectureScan {
  int x_max = 0;
  int n_max = 0;
  /// Centers in lexicographic order, n = 1..n_max within each center.
  std::vector<ConjectureRow> table;
  double max_found = 0.0;
  ConjectureRow argmax;
  /// Per center, the n maximizing the ratio (smallest n on ties).
  std::vector<std::pair<Vertex, int>> center_argmax;
  Rational threshold{231, 25};
  /// Some ratio exceeds threshold + guard.
  bool refuted = false;
  double guard = 1e-9;
};

/// mu(B(x,2n)) / mu(B(x,n)) for |x|_inf <= x_max and 1 <= n <= n_max on Z^3.
///
/// Each ball mass is a float sum over offsets taken in a fixed order
/// (by l1 norm, then lexicographically), so results do not depend on jobs.
/// Throws WindowOverflow when the density box exceeds max_box_entries.
ConjectureScan conjecture_scan_z3(int x_max, int n_max, const ConjectureOptions& options = {});

}  // namespace dlab
