#include <doctest.h>

#include <cstdlib>
#include <vector>

#include "dlab/ball.hpp"
#include "dlab/families.hpp"
#include "dlab/lattice.hpp"

using namespace dlab;

namespace {

// Points of Z^d with |x|_1 < k, by enumerating the box.
std::uint64_t brute_count(int d, int k) {
  std::vector<int> x(static_cast<std::size_t>(d), -(k - 1));
  std::uint64_t count = 0;
  while (true) {
    int norm = 0;
    for (int v : x) norm += std::abs(v);
    if (norm < k) ++count;
    std::size_t i = 0;
    while (i < x.size() && x[i] == k - 1) x[i++] = -(k - 1);
    if (i == x.size()) return count;
    ++x[i];
  }
}

}  // namespace

TEST_CASE("open balls on Z^d") {
  const GraphView z1 = make_zd(1);
  CHECK(ball(z1, Vertex{0}, 1).size() == 1);
  CHECK(ball(make_zd(3), Vertex{0, 0, 0}, 2).size() == 7);
  const GraphView z2 = make_zd(2);
  const BallProfile p = ball_profile(z2, nullptr, Vertex{0, 0}, 3);
  CHECK(p.cardinality == std::vector<std::uint64_t>{1, 5, 13});
}

TEST_CASE("BFS balls match brute-force l1 counts") {
  for (int d = 1; d <= 4; ++d) {
    const GraphView z = make_zd(d);
    const BallProfile p = ball_profile(z, nullptr, z.traits().origin, 7);
    for (int k = 1; k <= 7; ++k) {
      CAPTURE(d);
      CAPTURE(k);
      CHECK(p.size_at(k) == brute_count(d, k));
      CHECK(ball_card(d, k) == BigInt(static_cast<unsigned long>(brute_count(d, k))));
    }
  }
}

TEST_CASE("ball polynomials") {
  CHECK(ball_polynomial(1) == Polynomial({Rational(-1), Rational(2)}));
  CHECK(ball_polynomial(2) == Polynomial({Rational(1), Rational(-2), Rational(2)}));
  CHECK(ball_polynomial(3) == Polynomial({Rational(-1), Rational(8, 3), Rational(-2), Rational(4, 3)}));
  CHECK(ball_polynomial(4) ==
        Polynomial({Rational(1), Rational(-8, 3), Rational(10, 3), Rational(-4, 3), Rational(2, 3)}));
  CHECK(ball_card(3, 1) == 1);
  CHECK(ball_card(4, 2) == 9);
  for (int k = 1; k <= 10; ++k) CHECK(ball_card(1, k) == 2 * k - 1);
  for (int d = 1; d <= 8; ++d) CHECK(ball_polynomial(d).degree() == d);
}

TEST_CASE("ratio profiles") {
  const auto p1 = doubling_ratio_profile(1, 2);
  REQUIRE(p1.size() == 2);
  CHECK(p1[0].second == Rational(3));
  CHECK(p1[1].second == Rational(7, 3));
  const auto p2 = doubling_ratio_profile(2, 1);
  CHECK(p2[0].second == Rational(5));
  CHECK(doubling_ratio_profile(3, 3).back().second == Rational(231, 25));
}

TEST_CASE("least constants of Z^d") {
  const Rational values[] = {Rational(3), Rational(5), Rational(231, 25), Rational(11969, 681)};
  const int argmax[] = {1, 1, 3, 6};
  for (int d = 1; d <= 4; ++d) {
    const CertifiedConstant c = least_constant_zd(d);
    CHECK(c.value == values[d - 1]);
    CHECK(c.argmax_radius == argmax[d - 1]);
    CHECK(c.kind == Certification::kExact);
    REQUIRE(c.limit.has_value());
    CHECK(*c.limit == Rational(1 << d));
  }
  // The certificate agrees with a long exact scan.
  for (int d = 1; d <= 6; ++d) {
    const CertifiedConstant c = least_constant_zd(d);
    Rational best = 0;
    for (const auto& [k, r] : doubling_ratio_profile(d, 200)) best = r > best ? r : best;
    CHECK(c.value == best);
  }
}
