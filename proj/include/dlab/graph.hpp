#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dlab/polynomial.hpp"
#include "dlab/vertex.hpp"

namespace dlab {

/// Closed form for |B(x, k)|, identical for every center x.
///
/// For k >= valid_from the size is poly(k); below that it is initial[k - 1].
struct ClosedFormBalls {
  Polynomial poly;
  int valid_from = 1;
  std::vector<BigInt> initial;

  [[nodiscard]] BigInt at(std::int64_t k) const;
};

/// Everything known about a graph besides its neighbor oracle.
struct GraphTraits {
  std::string name;
  std::size_t degree_bound = 0;
  std::optional<std::size_t> regular_degree;
  Vertex origin;
  /// One vertex per orbit of the automorphism group (when known). A
  /// supremum over these centers is a supremum over the whole graph.
  std::vector<Vertex> orbit_representatives;
  /// Declared |B(x,r)| = |B(y,r)| for all x, y.
  bool radius_homogeneous = false;
  std::optional<ClosedFormBalls> closed_form;
  /// Set for Z^d: vertices are coordinate vectors and translations are isometries.
  std::optional<int> lattice_dimension;
  /// Vertex list for finite graphs.
  std::optional<std::vector<Vertex>> finite_vertices;
};

/// Neighbor oracle over an implicitly infinite vertex set.
///
/// Cheap to copy; all state is shared and immutable.
class GraphView {
 public:
  using NeighborFn = std::function<void(const Vertex&, std::vector<Vertex>&)>;
  using FormatFn = std::function<std::string(const Vertex&)>;
  using ParseFn = std::function<std::optional<Vertex>(std::string_view)>;

  GraphView(GraphTraits traits, NeighborFn neighbors, FormatFn format = {}, ParseFn parse = {});

  /// Appends N(v) to `out` (after clearing it).
  void neighbors(const Vertex& v, std::vector<Vertex>& out) const;
  [[nodiscard]] std::vector<Vertex> neighbors(const Vertex& v) const;

  [[nodiscard]] const GraphTraits& traits() const { return impl_->traits; }
  [[nodiscard]] const std::string& name() const { return impl_->traits.name; }
  [[nodiscard]] bool is_finite() const { return impl_->traits.finite_vertices.has_value(); }

  [[nodiscard]] std::string format(const Vertex& v) const;
  /// Parses a vertex token in this graph's notation; throws ParseError.
  [[nodiscard]] Vertex parse(std::string_view token) const;

 private:
  struct Impl {
    GraphTraits traits;
    NeighborFn neighbors;
    FormatFn format;
    ParseFn parse;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Finite simple graph with dense integer vertex ids and optional tokens.
class FiniteGraph {
 public:
  FiniteGraph() = default;
  explicit FiniteGraph(std::size_t n);

  /// Adds an undirected edge; rejects self-loops, ignores duplicates.
  void add_edge(std::size_t a, std::size_t b);
  /// Id of `token`, inserting a new vertex if unseen.
  std::size_t intern(std::string_view token);

  [[nodiscard]] std::size_t size() const { return adj_.size(); }
  [[nodiscard]] std::size_t edge_count() const;
  [[nodiscard]] const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_[v]; }
  [[nodiscard]] const std::string& token(std::size_t v) const { return tokens_[v]; }
  [[nodiscard]] std::optional<std::size_t> find(std::string_view token) const;
  [[nodiscard]] bool connected() const;
  /// max over v of |N(v)|.
  [[nodiscard]] std::size_t max_degree() const;

  /// Oracle view; vertices are encoded as Vertex{id}.
  [[nodiscard]] GraphView view(std::string name = "finite") const;

  static FiniteGraph complete(std::size_t n);
  static FiniteGraph cycle(std::size_t n);
  static FiniteGraph path(std::size_t n);
  static FiniteGraph star(std::size_t n);

 private:
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace dlab
