#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>

#include "dlab/rational.hpp"
#include "dlab/vertex.hpp"

namespace dlab {

/// Arbitrary exact function on vertices (Laplacian input; need not be positive).
using VertexFunction = std::function<Rational(const Vertex&)>;

/// A measure on a graph given by its density against the counting measure.
///
/// Evaluation throws NonPositiveDensity for any queried vertex whose density
/// is not strictly positive.
class VertexMeasure {
 public:
  VertexMeasure(std::string name, VertexFunction density, bool translation_invariant = false);

  static VertexMeasure counting();
  /// Explicit table; vertices missing from the table take `fallback` when set.
  static VertexMeasure table(std::string name, std::unordered_map<Vertex, Rational, VertexHash> values,
                             std::optional<Rational> fallback = std::nullopt);

  [[nodiscard]] Rational operator()(const Vertex& v) const;
  /// Raw density without the positivity check.
  [[nodiscard]] const VertexFunction& function() const { return density_; }
  [[nodiscard]] const std::string& name() const { return name_; }
  /// Declared invariant under every automorphism of the graph it is used on.
  [[nodiscard]] bool translation_invariant() const { return translation_invariant_; }

  [[nodiscard]] VertexMeasure scaled(const Rational& factor) const;
  /// v -> density(v + offset) on a lattice.
  [[nodiscard]] VertexMeasure translated(const Vertex& offset) const;
  friend VertexMeasure operator+(const VertexMeasure& a, const VertexMeasure& b);

 private:
  std::string name_;
  VertexFunction density_;
  bool translation_invariant_ = false;
};

}  // namespace dlab
