#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dlab/errors.hpp"
#include "dlab/spectral.hpp"

using namespace dlab;

TEST_CASE("spectral radius of small graphs") {
  for (std::size_t n = 2; n <= 8; ++n) CHECK(spectral_radius(FiniteGraph::complete(n)).radius == doctest::Approx(n - 1.0).epsilon(1e-12));
  CHECK(spectral_radius(FiniteGraph::cycle(6)).radius == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(spectral_radius(FiniteGraph::path(2)).radius == doctest::Approx(1.0).epsilon(1e-12));
  for (std::size_t n = 2; n <= 10; ++n) {
    CHECK(std::abs(spectral_radius(FiniteGraph::star(n)).radius - std::sqrt(n - 1.0)) < 1e-9);
    CHECK(std::abs(spectral_radius(FiniteGraph::path(n)).radius - 2.0 * std::cos(std::numbers::pi / (n + 1.0))) <
          1e-9);
  }
}

TEST_CASE("spectral radius needs a connected graph") {
  FiniteGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  CHECK_THROWS_AS(spectral_radius(g), InvalidArgument);
}

TEST_CASE("Perron measures") {
  const PerronMeasure k3 = perron_measure(FiniteGraph::complete(3));
  for (double w : k3.density) CHECK(w == doctest::Approx(1.0));
  CHECK(k3.local_constant == doctest::Approx(3.0));
  const PerronMeasure c4 = perron_measure(FiniteGraph::cycle(4));
  CHECK(c4.local_constant == doctest::Approx(3.0));
  const PerronMeasure star = perron_measure(FiniteGraph::star(4));
  CHECK(star.density[0] / star.density[1] == doctest::Approx(std::sqrt(3.0)));
  CHECK(star.local_constant == doctest::Approx(1.0 + std::sqrt(3.0)));
  CHECK(local_constant(FiniteGraph::star(4), std::vector<double>(4, 1.0)) == doctest::Approx(4.0));
}
