#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "dlab/doubling.hpp"
#include "dlab/errors.hpp"
#include "dlab/families.hpp"
#include "dlab/io.hpp"

using namespace dlab;

namespace {

Rational bump(const Vertex& v) { return v[0] == 0 ? Rational(2) : Rational(1); }

// Ball mass on Z by direct summation over |y - x| < r.
Rational mass_on_z(std::int64_t x, int r) {
  Rational m = 0;
  for (std::int64_t y = x - r + 1; y <= x + r - 1; ++y) m += bump(Vertex{y});
  return m;
}

}  // namespace

TEST_CASE("counting measure scans are exact on lattices") {
  const ScanResult s1 = doubling_scan(make_zd(1), VertexMeasure::counting(), {Vertex{0}}, 10);
  CHECK(s1.lower_bound == Rational(3));
  CHECK(s1.witness.radius == 1);
  CHECK(s1.exact);
  const ScanResult s2 = doubling_scan(make_zd(2), VertexMeasure::counting(), {Vertex{0, 0}}, 10);
  CHECK(s2.lower_bound == Rational(5));
  CHECK(s2.exact);
}

TEST_CASE("scan matches brute force on Z with a bump at 0") {
  const VertexMeasure mu("bump", bump);
  const ScanResult s = doubling_scan(make_zd(1), mu, lattice_box(1, 5), 5);
  Rational best = 0;
  std::int64_t bx = 0;
  int br = 0;
  for (std::int64_t x = -5; x <= 5; ++x) {
    for (int r = 1; r <= 5; ++r) {
      const Rational q = mass_on_z(x, 2 * r) / mass_on_z(x, r);
      if (q > best) {
        best = q;
        bx = x;
        br = r;
      }
    }
  }
  CHECK(s.lower_bound == best);
  CHECK(s.witness.center == Vertex{bx});
  CHECK(s.witness.radius == br);
  CHECK_FALSE(s.exact);
  CHECK(best >= Rational(4));  // (2 + 1 + 1) / 1 at x = +-1, r = 2
}

TEST_CASE("scan results do not depend on the worker count") {
  const VertexMeasure mu("bump", bump);
  ScanOptions one;
  ScanOptions four;
  four.jobs = 4;
  const auto centers = lattice_box(2, 6);
  const VertexMeasure mu2("bump2", [](const Vertex& v) { return Rational(1 + (v[0] * v[0] + v[1]) % 3 + 3, 1); });
  const ScanResult a = doubling_scan(make_zd(2), mu2, centers, 6, one);
  const ScanResult b = doubling_scan(make_zd(2), mu2, centers, 6, four);
  CHECK(a.lower_bound == b.lower_bound);
  CHECK(a.witness.center == b.witness.center);
  CHECK(a.witness.radius == b.witness.radius);
}

TEST_CASE("local constants") {
  CHECK(local_constant(make_zd(3), VertexMeasure::counting(), {Vertex{0, 0, 0}}) == Rational(7));
  CHECK(local_constant(make_hexagonal(), VertexMeasure::counting(), {Vertex{0, 0}, Vertex{1, 0}}) == Rational(4));
  const FiniteGraph single(1);
  CHECK(local_constant(single.view(), VertexMeasure::counting(), {Vertex{0}}) == Rational(1));
}

TEST_CASE("non-positive densities are rejected") {
  const VertexMeasure bad("bad", [](const Vertex& v) { return Rational(v[0]); });
  CHECK_THROWS_AS(doubling_scan(make_zd(1), bad, {Vertex{0}}, 2), NonPositiveDensity);
}

TEST_CASE("discrete Laplacian") {
  const GraphView z = make_zd(1);
  const auto centers = lattice_box(1, 10);
  CHECK(laplacian(z, [](const Vertex&) { return Rational(5, 7); }, centers).harmonic());
  CHECK(laplacian(z, [](const Vertex& v) { return Rational(v[0]); }, centers).harmonic());
  const LaplacianField f = laplacian(z, [](const Vertex& v) { return Rational(-std::abs(v[0])); }, {Vertex{0}});
  CHECK(f.values.front().second == Rational(1));
  CHECK(f.superharmonic());
  const LaplacianField g = laplacian(z, [](const Vertex& v) { return Rational(v[0] * v[0]); }, {Vertex{3}});
  CHECK(g.values.front().second == Rational(-1));
  CHECK_FALSE(g.superharmonic());
}

TEST_CASE("edge lists and measure tables") {
  std::istringstream edges("# triangle\na b\nb c\n\nc a\na b\n");
  const FiniteGraph g = read_edge_list(edges);
  CHECK(g.size() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.connected());
  std::istringstream bad("a\n");
  CHECK_THROWS_AS(read_edge_list(bad), ParseError);
  std::istringstream loop("a a\n");
  CHECK_THROWS(read_edge_list(loop));

  const GraphView z = make_zd(1);
  std::istringstream table("0 2\n1 1/2\n");
  const VertexMeasure mu = read_measure_table(table, z);
  CHECK(mu(Vertex{0}) == Rational(2));
  CHECK(mu(Vertex{1}) == Rational(1, 2));
  CHECK_THROWS(static_cast<void>(mu(Vertex{5})));
  std::istringstream negative("0 -1\n");
  CHECK_THROWS(read_measure_table(negative, z));
}
