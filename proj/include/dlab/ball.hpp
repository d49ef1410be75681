#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "dlab/graph.hpp"
#include "dlab/measure.hpp"

namespace dlab {

/// Materialization bound shared by every BFS.
struct Limits {
  std::size_t max_vertices = 20'000'000;
};

/// Open ball B(center, radius) = vertices at graph distance < radius.
std::vector<Vertex> ball(const GraphView& graph, const Vertex& center, int radius, const Limits& limits = {});

/// Cardinalities (and masses) of B(center, r) for r = 1..max_radius.
///
/// Index i of each sequence holds radius i + 1.
struct BallProfile {
  Vertex center;
  std::vector<std::uint64_t> cardinality;
  std::vector<Rational> mass;

  [[nodiscard]] int max_radius() const { return static_cast<int>(cardinality.size()); }
  [[nodiscard]] std::uint64_t size_at(int radius) const { return cardinality.at(static_cast<std::size_t>(radius - 1)); }
  [[nodiscard]] const Rational& mass_at(int radius) const { return mass.at(static_cast<std::size_t>(radius - 1)); }
};

/// Single BFS pass; `measure` may be null (cardinalities only).
BallProfile ball_profile(const GraphView& graph, const VertexMeasure* measure, const Vertex& center, int max_radius,
                         const Limits& limits = {});

/// Finite materialization of the graph around a set of centers.
///
/// Contains every vertex within distance `guard` of some center, so every
/// ball B(c, r) with c a center and r <= guard lies inside. Adjacency is
/// stored for vertices strictly closer than `guard`.
class Window {
 public:
  Window(const GraphView& graph, std::vector<Vertex> centers, int guard, const Limits& limits = {});

  [[nodiscard]] const GraphView& graph() const { return graph_; }
  [[nodiscard]] int guard() const { return guard_; }
  [[nodiscard]] const std::vector<Vertex>& centers() const { return centers_; }
  [[nodiscard]] std::size_t size() const { return vertices_.size(); }
  [[nodiscard]] const Vertex& vertex(std::size_t i) const { return vertices_[i]; }
  [[nodiscard]] std::optional<std::size_t> index_of(const Vertex& v) const;
  [[nodiscard]] bool contains(const Vertex& v) const { return index_of(v).has_value(); }
  /// Distance from the center set.
  [[nodiscard]] int depth(std::size_t i) const { return depth_[i]; }
  [[nodiscard]] std::span<const std::uint32_t> neighbors(std::size_t i) const;

  /// BFS layers 0..radius-1 from a center of this window (vertex indices).
  [[nodiscard]] std::vector<std::vector<std::uint32_t>> layers(const Vertex& center, int radius) const;
  /// Profile of a center of this window using per-vertex masses (may be empty).
  [[nodiscard]] BallProfile profile(const Vertex& center, int max_radius, std::span<const Rational> masses) const;
  /// Evaluates the measure on every materialized vertex, in index order.
  [[nodiscard]] std::vector<Rational> evaluate(const VertexMeasure& measure) const;

  /// Throws ConsistencyError unless y in N(x) iff x in N(y) for every stored edge.
  void verify_symmetry() const;

 private:
  GraphView graph_;
  std::vector<Vertex> centers_;
  int guard_;
  std::vector<Vertex> vertices_;
  std::vector<int> depth_;
  std::unordered_map<Vertex, std::uint32_t, VertexHash> index_;
  std::vector<std::uint32_t> adj_offsets_;
  std::vector<std::uint32_t> adj_;
};

}  // namespace dlab
