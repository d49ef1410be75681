#include "dlab/doubling.hpp"

#include <algorithm>

#include "dlab/errors.hpp"
#include "dlab/families.hpp"
#include "dlab/parallel.hpp"

namespace dlab {

namespace {

struct Best {
  Rational value;
  int radius = 0;
  bool set = false;
};

}  // namespace

ScanResult doubling_scan(const GraphView& graph, const VertexMeasure& measure, const std::vector<Vertex>& centers,
                         int max_radius, const ScanOptions& options) {
  if (max_radius < 1) throw InvalidArgument("max_radius must be >= 1");
  if (centers.empty()) throw InvalidArgument("doubling scan needs at least one center");
  const Window window(graph, centers, 2 * max_radius, options.limits);
  const std::vector<Rational> masses = window.evaluate(measure);
  const auto& sorted = window.centers();

  std::vector<Best> best(sorted.size());
  parallel_for(sorted.size(), options.jobs, [&](std::size_t i) {
    const BallProfile p = window.profile(sorted[i], 2 * max_radius, masses);
    for (int r = 1; r <= max_radius; ++r) {
      const Rational ratio = p.mass_at(2 * r) / p.mass_at(r);
      if (!best[i].set || ratio > best[i].value) best[i] = {ratio, r, true};
    }
  });

  ScanResult out;
  out.center_count = sorted.size();
  out.max_radius = max_radius;
  // Centers are sorted, so a strict comparison keeps the smallest center on ties.
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i == 0 || best[i].value > out.lower_bound) {
      out.lower_bound = best[i].value;
      out.witness = {sorted[i], best[i].radius};
    }
  }

  const GraphTraits& traits = graph.traits();
  if (measure.translation_invariant() && traits.radius_homogeneous && traits.closed_form) {
    const CertifiedConstant cert = certify_ratio_supremum(*traits.closed_form);
    if (cert.cutoff <= max_radius) {
      out.exact = true;
      out.exactness_reason = "translation-invariant measure on radius-homogeneous " + graph.name() +
                             "; ratio certified decreasing past r=" + std::to_string(cert.cutoff);
    }
  }
  return out;
}

Rational local_constant(const GraphView& graph, const VertexMeasure& measure, const std::vector<Vertex>& centers) {
  if (centers.empty()) throw InvalidArgument("local constant needs at least one center");
  Rational best;
  bool first = true;
  std::vector<Vertex> nbrs;
  for (const Vertex& x : centers) {
    const Rational own = measure(x);
    Rational total = own;
    graph.neighbors(x, nbrs);
    for (const Vertex& y : nbrs) total += measure(y);
    const Rational ratio = total / own;
    if (first || ratio > best) best = ratio;
    first = false;
  }
  return best;
}

bool LaplacianField::harmonic() const {
  return std::all_of(values.begin(), values.end(), [](const auto& kv) { return kv.second.sign() == 0; });
}

LaplacianField laplacian(const GraphView& graph, const VertexFunction& f, const std::vector<Vertex>& centers) {
  if (centers.empty()) throw InvalidArgument("laplacian needs at least one center");
  LaplacianField field;
  std::vector<Vertex> nbrs;
  for (const Vertex& x : centers) {
    graph.neighbors(x, nbrs);
    Rational value = f(x);
    if (!nbrs.empty()) {
      Rational sum(0);
      for (const Vertex& y : nbrs) sum += f(y);
      value -= sum / Rational(static_cast<std::int64_t>(nbrs.size()));
    } else {
      value = Rational(0);
    }
    if (field.values.empty() || value < field.min_value) field.min_value = value;
    field.values.emplace_back(x, value);
  }
  return field;
}

std::vector<Vertex> lattice_box(int d, std::int64_t radius) {
  if (d < 1 || d > static_cast<int>(Vertex::kMaxRank)) throw InvalidArgument("bad lattice dimension");
  if (radius < 0) throw InvalidArgument("box radius must be >= 0");
  std::vector<Vertex> out;
  Vertex v = Vertex::zero(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) v.set(static_cast<std::size_t>(i), -radius);
  while (true) {
    out.push_back(v);
    int i = d - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == radius) {
      v.set(static_cast<std::size_t>(i), -radius);
      --i;
    }
    if (i < 0) break;
    v.set(static_cast<std::size_t>(i), v[static_cast<std::size_t>(i)] + 1);
  }
  return out;
}

}  // namespace dlab
