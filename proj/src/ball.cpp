#include "dlab/ball.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include "dlab/errors.hpp"

namespace dlab {

namespace {

void require_radius(int radius) {
  if (radius < 1) throw InvalidArgument("ball radius must be >= 1, got " + std::to_string(radius));
}

[[noreturn]] void overflow(const GraphView& graph, std::size_t cap) {
  throw WindowOverflow("BFS on " + graph.name() + " exceeded the materialization bound of " +
                       std::to_string(cap) + " vertices");
}

// Layers 0..depth-1 of the BFS tree from `center` over the oracle.
std::vector<std::vector<Vertex>> oracle_layers(const GraphView& graph, const Vertex& center, int depth,
                                               const Limits& limits) {
  std::vector<std::vector<Vertex>> layers;
  std::unordered_set<Vertex, VertexHash> seen{center};
  layers.push_back({center});
  std::vector<Vertex> nbrs;
  for (int d = 1; d < depth; ++d) {
    std::vector<Vertex> next;
    for (const Vertex& v : layers.back()) {
      graph.neighbors(v, nbrs);
      for (const Vertex& w : nbrs) {
        if (seen.insert(w).second) {
          next.push_back(w);
          if (seen.size() > limits.max_vertices) overflow(graph, limits.max_vertices);
        }
      }
    }
    if (next.empty()) {
      // Finite graph exhausted: remaining layers are empty.
      layers.resize(static_cast<std::size_t>(depth));
      return layers;
    }
    layers.push_back(std::move(next));
  }
  return layers;
}

// Stamped visited marks, reused across calls on one thread.
struct Scratch {
  std::vector<std::uint32_t> stamp;
  std::uint32_t epoch = 0;

  void reset(std::size_t n) {
    if (stamp.size() < n) stamp.assign(n, 0);
    if (++epoch == 0) {
      std::fill(stamp.begin(), stamp.end(), 0);
      epoch = 1;
    }
  }
};

}  // namespace

std::vector<Vertex> ball(const GraphView& graph, const Vertex& center, int radius, const Limits& limits) {
  require_radius(radius);
  std::vector<Vertex> out;
  for (auto& layer : oracle_layers(graph, center, radius, limits)) {
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

BallProfile ball_profile(const GraphView& graph, const VertexMeasure* measure, const Vertex& center, int max_radius,
                         const Limits& limits) {
  require_radius(max_radius);
  BallProfile profile;
  profile.center = center;
  std::uint64_t count = 0;
  Rational mass(0);
  for (const auto& layer : oracle_layers(graph, center, max_radius, limits)) {
    count += layer.size();
    profile.cardinality.push_back(count);
    if (measure != nullptr) {
      for (const Vertex& v : layer) mass += (*measure)(v);
      profile.mass.push_back(mass);
    }
  }
  return profile;
}

Window::Window(const GraphView& graph, std::vector<Vertex> centers, int guard, const Limits& limits)
    : graph_(graph), centers_(std::move(centers)), guard_(guard) {
  if (guard < 1) throw InvalidArgument("window guard must be >= 1");
  if (centers_.empty()) throw InvalidArgument("window needs at least one center");
  std::sort(centers_.begin(), centers_.end());
  centers_.erase(std::unique(centers_.begin(), centers_.end()), centers_.end());

  std::deque<std::uint32_t> queue;
  auto add = [&](const Vertex& v, int d) -> bool {
    auto [it, inserted] = index_.emplace(v, static_cast<std::uint32_t>(vertices_.size()));
    if (!inserted) return false;
    vertices_.push_back(v);
    depth_.push_back(d);
    if (vertices_.size() > limits.max_vertices) overflow(graph_, limits.max_vertices);
    return true;
  };
  for (const Vertex& c : centers_) {
    if (add(c, 0)) queue.push_back(index_.at(c));
  }
  // Multi-source BFS; adjacency lists are built in the same pass.
  std::vector<std::vector<std::uint32_t>> adjacency;
  std::vector<Vertex> nbrs;
  while (!queue.empty()) {
    const std::uint32_t i = queue.front();
    queue.pop_front();
    if (adjacency.size() <= i) adjacency.resize(i + 1);
    if (depth_[i] >= guard_) continue;
    const Vertex v = vertices_[i];
    graph_.neighbors(v, nbrs);
    for (const Vertex& w : nbrs) {
      if (w == v) throw ConsistencyError("self-loop at " + graph_.format(v) + " in " + graph_.name());
      if (add(w, depth_[i] + 1)) queue.push_back(static_cast<std::uint32_t>(vertices_.size() - 1));
      adjacency[i].push_back(index_.at(w));
    }
  }
  adjacency.resize(vertices_.size());
  adj_offsets_.reserve(vertices_.size() + 1);
  adj_offsets_.push_back(0);
  for (const auto& list : adjacency) {
    adj_.insert(adj_.end(), list.begin(), list.end());
    adj_offsets_.push_back(static_cast<std::uint32_t>(adj_.size()));
  }
}

std::optional<std::size_t> Window::index_of(const Vertex& v) const {
  const auto it = index_.find(v);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const std::uint32_t> Window::neighbors(std::size_t i) const {
  return {adj_.data() + adj_offsets_[i], adj_.data() + adj_offsets_[i + 1]};
}

std::vector<std::vector<std::uint32_t>> Window::layers(const Vertex& center, int radius) const {
  require_radius(radius);
  if (!std::binary_search(centers_.begin(), centers_.end(), center)) {
    throw InvalidArgument("vertex " + graph_.format(center) + " is not a center of this window");
  }
  if (radius > guard_) {
    throw WindowOverflow("radius " + std::to_string(radius) + " exceeds window guard " + std::to_string(guard_));
  }
  thread_local Scratch scratch;
  scratch.reset(vertices_.size());
  const std::uint32_t start = index_.at(center);
  scratch.stamp[start] = scratch.epoch;
  std::vector<std::vector<std::uint32_t>> out{{start}};
  for (int d = 1; d < radius; ++d) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t v : out.back()) {
      for (std::uint32_t w : neighbors(v)) {
        if (scratch.stamp[w] != scratch.epoch) {
          scratch.stamp[w] = scratch.epoch;
          next.push_back(w);
        }
      }
    }
    out.push_back(std::move(next));
  }
  return out;
}

BallProfile Window::profile(const Vertex& center, int max_radius, std::span<const Rational> masses) const {
  BallProfile profile;
  profile.center = center;
  std::uint64_t count = 0;
  Rational mass(0);
  for (const auto& layer : layers(center, max_radius)) {
    count += layer.size();
    profile.cardinality.push_back(count);
    if (!masses.empty()) {
      for (std::uint32_t v : layer) mass += masses[v];
      profile.mass.push_back(mass);
    }
  }
  return profile;
}

std::vector<Rational> Window::evaluate(const VertexMeasure& measure) const {
  std::vector<Rational> out;
  out.reserve(vertices_.size());
  for (const Vertex& v : vertices_) out.push_back(measure(v));
  return out;
}

void Window::verify_symmetry() const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (depth_[i] >= guard_) continue;
    for (std::uint32_t j : neighbors(i)) {
      if (depth_[j] >= guard_) {
        // j's adjacency is not stored; ask the oracle directly.
        const auto back = graph_.neighbors(vertices_[j]);
        if (std::find(back.begin(), back.end(), vertices_[i]) == back.end()) {
          throw ConsistencyError("asymmetric edge " + graph_.format(vertices_[i]) + " -> " +
                                 graph_.format(vertices_[j]));
        }
        continue;
      }
      const auto back = neighbors(j);
      if (std::find(back.begin(), back.end(), static_cast<std::uint32_t>(i)) == back.end()) {
        throw ConsistencyError("asymmetric edge " + graph_.format(vertices_[i]) + " -> " +
                               graph_.format(vertices_[j]));
      }
    }
  }
}

}  // namespace dlab
