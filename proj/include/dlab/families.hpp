#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dlab/ball.hpp"
#include "dlab/graph.hpp"
#include "dlab/lattice.hpp"

namespace dlab {

enum class FamilyKind { kZd, kTriangular, kHexagonal, kEGraph, kKmZ, kIngested };

/// Selector for a built-in graph family.
struct FamilySpec {
  FamilyKind kind = FamilyKind::kZd;
  /// d for kZd, m for kKmZ.
  int parameter = 1;
  /// Edge-list path for kIngested.
  std::string path;

  /// Parses the CLI notation: z1..z8, tri, hex, egraph, kmz:<m>, file:<path>.
  static FamilySpec parse(std::string_view text);
  [[nodiscard]] std::string str() const;
};

/// Z^d with the 2d unit neighbors. Vertices are coordinate vectors.
GraphView make_zd(int d);
/// Triangular tessellation in axial coordinates (6 neighbors).
GraphView make_triangular();
/// Hexagonal tessellation as a brick wall on Z^2: (x +- 1, y) plus
/// (x, y + 1) when x + y is even, (x, y - 1) otherwise.
GraphView make_hexagonal();
/// The 3-regular ladder-like graph E; vertex (k, a) with a in 1..6 is "k_a".
GraphView make_egraph();
/// K_m x Z; vertex (k, a) with a in 1..m is "k_a".
GraphView make_kmz(int m);

GraphView make_family(const FamilySpec& spec);

struct HomogeneityWitness {
  Vertex x;
  Vertex y;
  int radius = 1;
  std::uint64_t size_x = 0;
  std::uint64_t size_y = 0;
};

struct HomogeneityReport {
  bool homogeneous = true;
  std::optional<HomogeneityWitness> witness;
  std::vector<BallProfile> profiles;
};

/// Compares ball cardinality profiles of every sample center radius by radius.
/// The witness carries the smallest radius at which some center disagrees
/// with the first one.
HomogeneityReport check_radius_homogeneous(const GraphView& graph, const std::vector<Vertex>& centers,
                                           int max_radius, const Limits& limits = {});

enum class GrowthVerdict { kConsistentWithRecurrence, kExceedsQuadratic };
const char* to_string(GrowthVerdict v);

struct GrowthReport {
  Vertex center;
  std::vector<std::uint64_t> cardinalities;
  /// max_{n <= R} |B(x, n)| / n^2.
  Rational quadratic_bound;
  int quadratic_bound_at = 1;
  /// log2(|B(R)| / |B(floor(R/2))|), the empirical growth exponent at the end of the range.
  double growth_exponent = 0.0;
  GrowthVerdict verdict = GrowthVerdict::kConsistentWithRecurrence;
};

/// Empirical check of |B(x, n)| <= c n^2 over n = 1..max_radius.
///
/// The verdict is kExceedsQuadratic when the growth exponent over the last
/// doubling of the range is above 2.5 (halfway between quadratic and cubic).
GrowthReport growth_report(const GraphView& graph, const Vertex& center, int max_radius, const Limits& limits = {});

/// Least doubling constant of the counting measure on a family.
///
/// Closed-form families are certified for all radii; E is scanned over its
/// six orbit representatives up to `max_radius`; finite graphs are scanned
/// exhaustively. Closed forms are checked against BFS up to min(max_radius, 30).
CertifiedConstant family_constant(const GraphView& graph, int max_radius, const Limits& limits = {});
CertifiedConstant family_constant(const FamilySpec& spec, int max_radius, const Limits& limits = {});

}  // namespace dlab
