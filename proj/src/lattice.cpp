#include "dlab/lattice.hpp"

#include <map>
#include <mutex>
#include <string>

#include "dlab/errors.hpp"

namespace dlab {

const char* to_string(Certification c) {
  switch (c) {
    case Certification::kExact:
      return "exact";
    case Certification::kRangeCertified:
      return "range-certified";
    case Certification::kFinite:
      return "finite";
  }
  return "unknown";
}

Polynomial ball_polynomial(int d) {
  if (d < 1) throw InvalidArgument("dimension must be >= 1, got " + std::to_string(d));
  static std::mutex mutex;
  static std::map<int, Polynomial> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(d); it != cache.end()) return it->second;

  Polynomial p({Rational(-1), Rational(2)});
  for (int dim = 1; dim < d; ++dim) {
    // sum_{i=1}^{k-1} P(i) = T(k - 1) with T the closed-form prefix sum.
    const Polynomial tail = prefix_sum(p).compose_affine(Rational(1), Rational(-1));
    p = p + tail * Rational(2);
  }
  cache.emplace(d, p);
  return p;
}

BigInt ball_card(int d, std::int64_t k) {
  if (k < 1) throw InvalidArgument("ball radius must be >= 1");
  const Rational value = ball_polynomial(d)(Rational(k));
  if (!value.is_integer()) {
    throw ConsistencyError("P_" + std::to_string(d) + "(" + std::to_string(k) + ") = " + value.str() +
                           " is not an integer");
  }
  return value.num();
}

std::vector<std::pair<int, Rational>> doubling_ratio_profile(int d, int max_k) {
  if (max_k < 1) throw InvalidArgument("max_k must be >= 1");
  std::vector<std::pair<int, Rational>> out;
  out.reserve(static_cast<std::size_t>(max_k));
  for (int k = 1; k <= max_k; ++k) {
    out.emplace_back(k, Rational(ball_card(d, 2 * k), ball_card(d, k)));
  }
  return out;
}

CertifiedConstant certify_ratio_supremum(const ClosedFormBalls& balls) {
  const Polynomial& p = balls.poly;
  if (p.degree() < 0 || p.leading().sign() <= 0) {
    throw CertificationFailure("ball size polynomial must have positive leading coefficient");
  }
  const Polynomial at_2k = p.compose_affine(Rational(2), Rational(0));
  const Polynomial at_k1 = p.compose_affine(Rational(1), Rational(1));
  const Polynomial at_2k2 = p.compose_affine(Rational(2), Rational(2));
  const Polynomial delta = at_2k * at_k1 - at_2k2 * p;
  if (delta.is_zero() || delta.leading().sign() <= 0) {
    throw CertificationFailure("cross-difference " + delta.str() + " is not eventually positive");
  }
  // For k >= bound every real root is behind us, so delta keeps its leading sign.
  const BigInt bound = cauchy_root_bound(delta).ceil();
  if (bound > 1'000'000) throw CertificationFailure("monotonicity cutoff " + bound.get_str() + " is too large");
  const int cutoff = std::max<int>(static_cast<int>(bound.get_si()), std::max(1, balls.valid_from));

  CertifiedConstant out;
  out.kind = Certification::kExact;
  out.cutoff = cutoff;
  out.cross_difference = delta;
  out.limit = pow(Rational(2), static_cast<unsigned>(p.degree()));
  bool first = true;
  for (int k = 1; k <= cutoff; ++k) {
    const Rational ratio(balls.at(2 * k), balls.at(k));
    if (first || ratio > out.value) {
      out.value = ratio;
      out.argmax_radius = k;
      first = false;
    }
  }
  return out;
}

CertifiedConstant least_constant_zd(int d, const LatticeOptions& options) {
  if (d < 1 || d > options.max_dimension) {
    throw InvalidArgument("dimension must be in [1, " + std::to_string(options.max_dimension) + "], got " +
                          std::to_string(d));
  }
  ClosedFormBalls balls;
  balls.poly = ball_polynomial(d);
  return certify_ratio_supremum(balls);
}

}  // namespace dlab
