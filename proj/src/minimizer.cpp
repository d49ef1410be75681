#include "dlab/minimizer.hpp"

#include <cmath>
#include <memory>
#include <unordered_set>

#include "dlab/errors.hpp"

namespace dlab {

CountingCertificate counting_minimizer_certificate(const GraphView& graph, int max_radius,
                                                   const std::vector<Vertex>& sample_centers, const Limits& limits) {
  if (max_radius < 1) throw InvalidArgument("max_radius must be >= 1");
  CountingCertificate cert;
  cert.homogeneity = check_radius_homogeneous(graph, sample_centers, 2 * max_radius, limits);
  const BallProfile& p = cert.homogeneity.profiles.front();
  for (int r = 1; r <= max_radius; ++r) {
    const Rational ratio(BigInt(static_cast<unsigned long>(p.size_at(2 * r))),
                         BigInt(static_cast<unsigned long>(p.size_at(r))));
    if (r == 1 || ratio > cert.scanned_constant) {
      cert.scanned_constant = ratio;
      cert.scanned_argmax = r;
    }
  }
  if (!cert.homogeneity.homogeneous) {
    const auto& w = *cert.homogeneity.witness;
    cert.conclusion = "refused: |B(" + graph.format(w.x) + "," + std::to_string(w.radius) + ")| = " +
                      std::to_string(w.size_x) + " but |B(" + graph.format(w.y) + "," + std::to_string(w.radius) +
                      ")| = " + std::to_string(w.size_y);
    return cert;
  }
  cert.granted = true;
  if (graph.traits().closed_form) cert.closed_form = certify_ratio_supremum(*graph.traits().closed_form);
  cert.conclusion = "counting measure is a doubling minimizer on " + graph.name() +
                    " (ball sizes agree on every sampled center up to radius " + std::to_string(2 * max_radius) +
                    "); C = " + cert.scanned_constant.str() + " over radii <= " + std::to_string(max_radius);
  return cert;
}

const char* to_string(RefuterVerdict v) {
  switch (v) {
    case RefuterVerdict::kInapplicable:
      return "inapplicable";
    case RefuterVerdict::kRatioExceeded:
      return "ratio-exceeded";
    case RefuterVerdict::kPositivityFails:
      return "positivity-fails";
  }
  return "unknown";
}

RefuterReport z_elementary_refuter(const VertexMeasure& mu, std::int64_t j, const Rational& epsilon,
                                   std::int64_t steps) {
  if (steps < 0) throw InvalidArgument("steps must be >= 0");
  RefuterReport report;
  const Rational at_j = mu(Vertex{j});
  const Rational drop = mu(Vertex{j - 1}) - at_j;
  if (epsilon.sign() <= 0 || drop < epsilon) {
    report.verdict = RefuterVerdict::kInapplicable;
    report.detail = "needs mu(j-1) - mu(j) >= epsilon > 0; have mu(j-1) - mu(j) = " + drop.str();
    return report;
  }
  report.positivity_step = std::max<std::int64_t>(1, (at_j / epsilon).ceil().get_si());
  for (std::int64_t n = 0; n <= report.positivity_step; ++n) {
    report.upper_bounds.push_back(at_j - Rational(n) * epsilon);
  }
  // The argument only uses B(i,1) = {i} and B(i,2) = {i-1, i, i+1}.
  for (std::int64_t i = j; i <= j + steps; ++i) {
    const Rational ratio = (mu(Vertex{i - 1}) + mu(Vertex{i}) + mu(Vertex{i + 1})) / mu(Vertex{i});
    if (ratio > Rational(3)) {
      report.verdict = RefuterVerdict::kRatioExceeded;
      report.violating_center = i;
      report.violating_ratio = ratio;
      report.detail = "mu(B(" + std::to_string(i) + ",2)) / mu(B(" + std::to_string(i) + ",1)) = " + ratio.str() +
                      " > 3";
      return report;
    }
  }
  report.verdict = RefuterVerdict::kPositivityFails;
  report.detail = "C_mu <= 3 would force mu(" + std::to_string(j + report.positivity_step) +
                  ") <= " + report.upper_bounds.back().str();
  return report;
}

NuConstruction construct_nu(const GraphView& graph, const VertexMeasure& mu, const Vertex& center, int radius,
                            const Rational& target, const Limits& limits) {
  if (target <= Rational(1)) throw InvalidArgument("target constant must exceed 1, got " + target.str());
  const BallProfile base = ball_profile(graph, &mu, center, 2 * radius, limits);
  const Rational c = base.mass_at(2 * radius) / base.mass_at(radius);
  if (target < c) {
    throw InvalidArgument("target " + target.str() + " is below the designated ratio " + c.str());
  }
  const Rational eta = (target - c) / (target - Rational(1));
  const Rational keep = Rational(1) - eta;

  const auto members = ball(graph, center, radius, limits);
  auto inside = std::make_shared<const std::unordered_set<Vertex, VertexHash>>(members.begin(), members.end());
  auto inner = mu.function();
  VertexMeasure nu("nu[" + mu.name() + "]", [inside, inner, keep](const Vertex& v) {
    return inside->contains(v) ? keep * inner(v) : inner(v);
  });
  const BallProfile after = ball_profile(graph, &nu, center, 2 * radius, limits);
  return NuConstruction{center, radius, c, eta, target, nu, after.mass_at(2 * radius) / after.mass_at(radius)};
}

NuVerification verify_nu(const GraphView& graph, const VertexMeasure& mu, const NuConstruction& nu,
                         const std::vector<Vertex>& centers, int max_radius, const ScanOptions& options) {
  NuVerification out;
  out.base_scan = doubling_scan(graph, mu, centers, max_radius, options);
  out.nu_scan = doubling_scan(graph, nu.nu, centers, max_radius, options);
  out.bound = (out.base_scan.lower_bound - nu.eta) / (Rational(1) - nu.eta);
  out.designated_exact = nu.designated_ratio == nu.target;
  out.within_bound = out.nu_scan.lower_bound <= out.bound;
  return out;
}

GrowthForcing growth_forcing_diagnostic(const GraphView& graph, const VertexMeasure& mu,
                                        const std::vector<Vertex>& centers, int n, int big_m, const Limits& limits) {
  if (n < 1 || big_m < 1) throw InvalidArgument("scales must be >= 1");
  if (centers.empty()) throw InvalidArgument("diagnostic needs at least one center");
  GrowthForcing out;
  bool first = true;
  for (const Vertex& x : centers) {
    const BallProfile p = ball_profile(graph, &mu, x, 2 * n, limits);
    const Rational mean_2n = p.mass_at(2 * n) / Rational(BigInt(static_cast<unsigned long>(p.size_at(2 * n))));
    const Rational mean_n = p.mass_at(n) / Rational(BigInt(static_cast<unsigned long>(p.size_at(n))));
    const Rational g = mean_2n / mean_n;
    if (first || g > out.gamma) {
      out.gamma = g;
      out.gamma_center = x;
      first = false;
    }
  }
  if (out.gamma < Rational(1)) {
    out.forced_factor = std::pow(1.0 / out.gamma.to_double(), static_cast<double>(big_m / (3 * n)));
  }
  const BallProfile origin = ball_profile(graph, &mu, graph.traits().origin, 2 * big_m, limits);
  out.observed_ratio = origin.mass_at(2 * big_m) / origin.mass_at(big_m);
  return out;
}

}  // namespace dlab
