#include "dlab/conjecture.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "dlab/errors.hpp"
#include "dlab/parallel.hpp"

namespace dlab {

double conjecture_density(std::int64_t x, std::int64_t y, std::int64_t z) {
  if (x == 0 && y == 0 && z == 0) return 1.0;
  return 1.0 / std::sqrt(std::sqrt(static_cast<double>(x * x + y * y + z * z)));
}

namespace {

struct Offset {
  std::int64_t dx, dy, dz;
  int norm;
};

std::vector<Offset> sorted_offsets(int max_norm) {
  std::vector<Offset> out;
  for (std::int64_t a = -max_norm; a <= max_norm; ++a) {
    for (std::int64_t b = -max_norm; b <= max_norm; ++b) {
      for (std::int64_t c = -max_norm; c <= max_norm; ++c) {
        const int n = static_cast<int>(std::abs(a) + std::abs(b) + std::abs(c));
        if (n <= max_norm) out.push_back({a, b, c, n});
      }
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Offset& p, const Offset& q) { return p.norm < q.norm; });
  return out;
}

}  // namespace

ConjectureScan conjecture_scan_z3(int x_max, int n_max, const ConjectureOptions& options) {
  if (x_max < 0) throw InvalidArgument("x_max must be >= 0");
  if (n_max < 1) throw InvalidArgument("n_max must be >= 1");
  // Open balls of radius 2n reach l1 distance 2n - 1.
  const int reach = 2 * n_max - 1;
  const std::int64_t half = x_max + reach;
  const std::int64_t side = 2 * half + 1;
  const auto entries = static_cast<std::size_t>(side * side * side);
  if (entries > options.max_box_entries) {
    throw WindowOverflow("conjecture window needs " + std::to_string(entries) + " entries, limit " +
                         std::to_string(options.max_box_entries));
  }

  std::vector<double> box(entries);
  for (std::int64_t i = 0; i < side; ++i) {
    for (std::int64_t j = 0; j < side; ++j) {
      for (std::int64_t k = 0; k < side; ++k) {
        const double v = options.density(i - half, j - half, k - half);
        if (!(v > 0.0) || !std::isfinite(v)) {
          throw NonPositiveDensity("density is not positive and finite at (" + std::to_string(i - half) + "," +
                                   std::to_string(j - half) + "," + std::to_string(k - half) + ")");
        }
        box[static_cast<std::size_t>((i * side + j) * side + k)] = v;
      }
    }
  }
  const std::vector<Offset> offsets = sorted_offsets(reach);
  std::vector<std::int64_t> shifts(offsets.size());
  for (std::size_t o = 0; o < offsets.size(); ++o) {
    shifts[o] = (offsets[o].dx * side + offsets[o].dy) * side + offsets[o].dz;
  }

  ConjectureScan out;
  out.x_max = x_max;
  out.n_max = n_max;
  const std::int64_t width = 2 * x_max + 1;
  const auto centers = static_cast<std::size_t>(width * width * width);
  out.table.resize(centers * static_cast<std::size_t>(n_max));

  parallel_for(centers, options.jobs, [&](std::size_t c) {
    const auto ci = static_cast<std::int64_t>(c);
    const std::int64_t x = ci / (width * width) - x_max;
    const std::int64_t y = (ci / width) % width - x_max;
    const std::int64_t z = ci % width - x_max;
    const std::int64_t base = ((x + half) * side + (y + half)) * side + (z + half);
    // mass[r] = mu(B(center, r)) for r = 1..reach+1.
    std::vector<double> mass(static_cast<std::size_t>(reach + 2), 0.0);
    double running = 0.0;
    int current = 0;
    for (std::size_t o = 0; o < offsets.size(); ++o) {
      while (offsets[o].norm > current) mass[static_cast<std::size_t>(++current)] = running;
      running += box[static_cast<std::size_t>(base + shifts[o])];
    }
    mass[static_cast<std::size_t>(reach + 1)] = running;
    const Vertex center{x, y, z};
    for (int n = 1; n <= n_max; ++n) {
      const double ratio = mass[static_cast<std::size_t>(2 * n)] / mass[static_cast<std::size_t>(n)];
      out.table[c * static_cast<std::size_t>(n_max) + static_cast<std::size_t>(n - 1)] = {center, n, ratio};
    }
  });

  const double limit = out.threshold.to_double() + out.guard;
  for (std::size_t c = 0; c < centers; ++c) {
    const ConjectureRow* best = nullptr;
    for (int n = 0; n < n_max; ++n) {
      const ConjectureRow& row = out.table[c * static_cast<std::size_t>(n_max) + static_cast<std::size_t>(n)];
      if (best == nullptr || row.ratio > best->ratio) best = &row;
      if (row.ratio > limit) out.refuted = true;
    }
    out.center_argmax.emplace_back(best->center, best->n);
    if (c == 0 || best->ratio > out.max_found) {
      out.max_found = best->ratio;
      out.argmax = *best;
    }
  }
  return out;
}

}  // namespace dlab
