#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dlab/graph.hpp"
#include "dlab/polynomial.hpp"
#include "dlab/rational.hpp"

namespace dlab {

/// How much of the supremum a CertifiedConstant covers.
enum class Certification {
  kExact,           ///< all radii, via an eventual-monotonicity certificate
  kRangeCertified,  ///< radii up to `cutoff` only
  kFinite,          ///< finite graph, every center and radius scanned
};

const char* to_string(Certification c);

/// Supremum of |B(2k)| / |B(k)| together with the evidence behind it.
struct CertifiedConstant {
  Rational value;
  int argmax_radius = 1;
  /// Past this radius the ratio is certified strictly decreasing (kExact), or
  /// the largest radius scanned otherwise.
  int cutoff = 1;
  /// lim_k ratio(k) when the ball sizes are polynomial (2^deg).
  std::optional<Rational> limit;
  Certification kind = Certification::kExact;
  /// Set when the supremum depends on the center (non-homogeneous graphs).
  std::optional<Vertex> argmax_center;
  /// Cross-difference b(2k) b(k+1) - b(2k+2) b(k) when certified.
  std::optional<Polynomial> cross_difference;
};

struct LatticeOptions {
  int max_dimension = 8;
};

/// Exact polynomial P_d(k) = |B_d(0, k)| on Z^d, built from P_1(k) = 2k - 1 by
/// P_{d+1}(k) = P_d(k) + 2 sum_{i=1}^{k-1} P_d(i).
Polynomial ball_polynomial(int d);

/// P_d(k) as an integer; ConsistencyError if the evaluation is not integral.
BigInt ball_card(int d, std::int64_t k);

/// (k, P_d(2k) / P_d(k)) for k = 1..max_k.
std::vector<std::pair<int, Rational>> doubling_ratio_profile(int d, int max_k);

/// Certified sup_k |B(2k)| / |B(k)| for a closed-form ball size function.
///
/// Certifies that the cross-difference polynomial is positive for every
/// k >= cutoff via the Cauchy root bound, then scans k = 1..cutoff exactly.
/// Throws CertificationFailure when the cross-difference is not eventually
/// positive.
CertifiedConstant certify_ratio_supremum(const ClosedFormBalls& balls);

/// C_{Z^d} with its certificate.
CertifiedConstant least_constant_zd(int d, const LatticeOptions& options = {});

}  // namespace dlab
