#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dlab/doubling.hpp"
#include "dlab/families.hpp"
#include "dlab/measure.hpp"

namespace dlab {

/// Outcome of the "counting measure is a doubling minimizer" check for graphs
/// whose ball sizes depend only on the radius.
struct CountingCertificate {
  bool granted = false;
  HomogeneityReport homogeneity;
  /// Counting-measure constant over radii 1..max_radius (range-certified).
  Rational scanned_constant;
  int scanned_argmax = 1;
  /// Present when the graph also has a closed-form all-radius certificate.
  std::optional<CertifiedConstant> closed_form;
  std::string conclusion;
};

/// Grants the certificate iff every sample center has the same ball profile
/// up to max_radius; refuses with the homogeneity witness otherwise.
CountingCertificate counting_minimizer_certificate(const GraphView& graph, int max_radius,
                                                   const std::vector<Vertex>& sample_centers,
                                                   const Limits& limits = {});

enum class RefuterVerdict {
  kInapplicable,      ///< mu(j-1) - mu(j) >= epsilon > 0 does not hold
  kRatioExceeded,     ///< a radius-2 ball in the window already has ratio > 3
  kPositivityFails,   ///< the iterated bound forces mu(j+n) <= 0
};
const char* to_string(RefuterVerdict v);

struct RefuterReport {
  RefuterVerdict verdict = RefuterVerdict::kInapplicable;
  /// First n with mu(j) - n * epsilon <= 0.
  std::int64_t positivity_step = 0;
  /// mu(j) - n * epsilon for n = 0..positivity_step.
  std::vector<Rational> upper_bounds;
  std::optional<std::int64_t> violating_center;
  Rational violating_ratio;
  std::string detail;
};

/// On Z: if C_mu <= 3 and mu(j-1) - mu(j) >= eps > 0, the radius-2 balls force
/// mu(j+n+1) <= mu(j+n) - eps, so positivity fails at n = ceil(mu(j)/eps).
/// Radius-2 ratios at j..j+steps are checked against 3 first.
RefuterReport z_elementary_refuter(const VertexMeasure& mu, std::int64_t j, const Rational& epsilon,
                                   std::int64_t steps);

struct NuConstruction {
  Vertex center;
  int radius = 1;
  /// mu(B(center, 2 radius)) / mu(B(center, radius)).
  Rational base_ratio;
  Rational eta;
  Rational target;
  /// (1 - eta) mu inside B(center, radius), mu outside.
  VertexMeasure nu;
  /// nu's ratio at the designated ball; equals target.
  Rational designated_ratio;
};

/// Builds nu with designated ratio exactly `target` via
/// eta = (target - c) / (target - 1). Requires target >= c and target > 1.
NuConstruction construct_nu(const GraphView& graph, const VertexMeasure& mu, const Vertex& center, int radius,
                            const Rational& target, const Limits& limits = {});

struct NuVerification {
  ScanResult base_scan;
  ScanResult nu_scan;
  /// (C_scan - eta) / (1 - eta) with C_scan the base measure's scan bound.
  Rational bound;
  bool designated_exact = false;
  bool within_bound = false;
};

NuVerification verify_nu(const GraphView& graph, const VertexMeasure& mu, const NuConstruction& nu,
                         const std::vector<Vertex>& centers, int max_radius, const ScanOptions& options = {});

/// Diagnostic behind the "counting measure minimizes" argument: if mu beats
/// the counting measure at scale n by a factor gamma < 1 on a window, then
/// mu(B(0, 2M)) >= gamma^{-floor(M/3n)} mu(B(0, M)).
struct GrowthForcing {
  /// max over window centers of [mu(B(x,2n)) / #B(x,2n)] / [mu(B(x,n)) / #B(x,n)].
  Rational gamma;
  Vertex gamma_center;
  /// (1/gamma)^floor(M / 3n) when gamma < 1.
  std::optional<double> forced_factor;
  /// mu(B(0, 2M)) / mu(B(0, M)), observed.
  Rational observed_ratio;
};

GrowthForcing growth_forcing_diagnostic(const GraphView& graph, const VertexMeasure& mu,
                                        const std::vector<Vertex>& centers, int n, int big_m,
                                        const Limits& limits = {});

}  // namespace dlab
