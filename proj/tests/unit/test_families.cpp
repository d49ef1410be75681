#include <doctest.h>

#include <algorithm>

#include "dlab/ball.hpp"
#include "dlab/errors.hpp"
#include "dlab/families.hpp"

using namespace dlab;

TEST_CASE("family parsing") {
  CHECK(FamilySpec::parse("z3").kind == FamilyKind::kZd);
  CHECK(FamilySpec::parse("z3").parameter == 3);
  CHECK(FamilySpec::parse("kmz:4").parameter == 4);
  CHECK(FamilySpec::parse("hex").kind == FamilyKind::kHexagonal);
  CHECK_THROWS_AS(FamilySpec::parse("z0"), ParseError);
  CHECK_THROWS_AS(FamilySpec::parse("nope"), ParseError);
}

TEST_CASE("neighborhoods") {
  const GraphView t = make_triangular();
  CHECK(t.neighbors(t.traits().origin).size() == 6);
  const GraphView e = make_egraph();
  auto n = e.neighbors(e.parse("0_6"));
  std::vector<std::string> tokens;
  for (const auto& v : n) tokens.push_back(e.format(v));
  std::sort(tokens.begin(), tokens.end());
  CHECK(tokens == std::vector<std::string>{"0_4", "0_5", "1_1"});
  for (const auto& family : {"tri", "hex", "egraph", "kmz:3"}) {
    const GraphView g = make_family(FamilySpec::parse(family));
    for (const Vertex& v : ball(g, g.traits().origin, 5)) {
      for (const Vertex& w : g.neighbors(v)) {
        const auto back = g.neighbors(w);
        CHECK(std::find(back.begin(), back.end(), v) != back.end());
      }
    }
  }
}

TEST_CASE("K_1 x Z is Z") {
  const GraphView k1 = make_kmz(1);
  const BallProfile p = ball_profile(k1, nullptr, k1.traits().origin, 20);
  for (int k = 1; k <= 20; ++k) CHECK(p.size_at(k) == static_cast<std::uint64_t>(2 * k - 1));
}

TEST_CASE("ball sizes of the tessellations") {
  const GraphView h = make_hexagonal();
  const BallProfile hp = ball_profile(h, nullptr, h.traits().origin, 4);
  CHECK(hp.cardinality == std::vector<std::uint64_t>{1, 4, 10, 19});
  const BallProfile hq = ball_profile(h, nullptr, Vertex{3, -2}, 30);
  for (int k = 1; k <= 30; ++k) CHECK(2 * hq.size_at(k) == static_cast<std::uint64_t>(3 * k * k - 3 * k + 2));
  const GraphView t = make_triangular();
  const BallProfile tp = ball_profile(t, nullptr, t.traits().origin, 30);
  for (int k = 1; k <= 30; ++k) CHECK(tp.size_at(k) == static_cast<std::uint64_t>(3 * k * k - 3 * k + 1));
  for (int m = 1; m <= 4; ++m) {
    const GraphView g = make_kmz(m);
    const BallProfile p = ball_profile(g, nullptr, g.traits().origin, 20);
    CHECK(p.size_at(1) == 1);
    CHECK(p.size_at(2) == static_cast<std::uint64_t>(m + 2));
    for (int k = 3; k <= 20; ++k) CHECK(p.size_at(k) == static_cast<std::uint64_t>(m * (2 * k - 3) + 2));
  }
}

TEST_CASE("radius homogeneity") {
  const GraphView z2 = make_zd(2);
  CHECK(check_radius_homogeneous(z2, {Vertex{0, 0}, Vertex{5, 7}}, 10).homogeneous);
  const GraphView h = make_hexagonal();
  CHECK(check_radius_homogeneous(h, {Vertex{0, 0}, Vertex{1, 0}, Vertex{4, 9}}, 10).homogeneous);
  const GraphView e = make_egraph();
  const HomogeneityReport r = check_radius_homogeneous(e, {e.parse("0_1"), e.parse("0_3")}, 5);
  CHECK_FALSE(r.homogeneous);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->size_x != r.witness->size_y);
}

TEST_CASE("growth reports") {
  const GraphView t = make_triangular();
  const GrowthReport tr = growth_report(t, t.traits().origin, 50);
  CHECK(tr.quadratic_bound <= Rational(3));
  CHECK(tr.verdict == GrowthVerdict::kConsistentWithRecurrence);
  const GraphView z3 = make_zd(3);
  CHECK(growth_report(z3, z3.traits().origin, 30).verdict == GrowthVerdict::kExceedsQuadratic);
  const GraphView k4 = make_kmz(4);
  CHECK(growth_report(k4, k4.traits().origin, 50).verdict == GrowthVerdict::kConsistentWithRecurrence);
}

TEST_CASE("family constants") {
  const CertifiedConstant t = family_constant(FamilySpec::parse("tri"), 50);
  CHECK(t.value == Rational(7));
  CHECK(t.argmax_radius == 1);
  const CertifiedConstant h = family_constant(FamilySpec::parse("hex"), 50);
  CHECK(h.value == Rational(19, 4));
  CHECK(h.argmax_radius == 2);
  CHECK(h.kind == Certification::kExact);
  const CertifiedConstant e = family_constant(FamilySpec::parse("egraph"), 50);
  CHECK(e.value == Rational(4));
  CHECK(e.kind == Certification::kRangeCertified);
  CHECK(e.cutoff == 50);
  for (int m = 1; m <= 6; ++m) {
    const CertifiedConstant k = family_constant(FamilySpec::parse("kmz:" + std::to_string(m)), 50);
    CHECK(k.value == Rational(m + 2));
    CHECK(k.argmax_radius == 1);
  }
}
