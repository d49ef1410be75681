#include <doctest.h>

#include <cmath>
#include <vector>

#include "dlab/continuous.hpp"
#include "dlab/doubling.hpp"
#include "dlab/errors.hpp"
#include "dlab/families.hpp"

using namespace dlab;

namespace {

const Density1D kOne{"const", [](double) { return 1.0; }};

double eval(const NamedDensity& d, std::vector<double> p) { return d.rule(p); }

}  // namespace

TEST_CASE("integrate_1d") {
  CHECK(integrate_1d([](double t) { return t * t; }, 0.0, 3.0) == doctest::Approx(9.0).epsilon(1e-14));
  CHECK(integrate_1d([](double t) { return std::exp(t); }, 0.0, 1.0) == doctest::Approx(std::exp(1.0) - 1.0));
  // Short intervals far from the origin.
  const double h = std::ldexp(1.0, -10);
  CHECK(integrate_1d([](double t) { return t; }, 1000.0, 1000.0 + h) == doctest::Approx(h * (1000.0 + h / 2)).epsilon(1e-14));
}

TEST_CASE("dyadic discretization") {
  const DyadicDiscretization a = discretize_1d(kOne, 0, -3, 3);
  for (std::int64_t j = -3; j <= 3; ++j) CHECK(a.mass(j) == doctest::Approx(1.0));
  const DyadicDiscretization b = discretize_1d(kOne, 1, -3, 3);
  for (std::int64_t j = -3; j <= 3; ++j) CHECK(b.mass(j) == doctest::Approx(0.5));
  CHECK_THROWS_AS(static_cast<void>(b.mass(4)), WindowOverflow);

  const Density1D lin{"linear", [](double t) { return t; }};
  const DyadicDiscretization c = discretize_1d(lin, 2, 0, 3);
  const double expected[] = {1.0 / 32, 3.0 / 32, 5.0 / 32, 7.0 / 32};
  for (int j = 0; j < 4; ++j) CHECK(c.mass(j) == doctest::Approx(expected[j]).epsilon(1e-14));

  const Density1D sq{"invsq", [](double t) { return 1.0 / (1.0 + t * t); }};
  CHECK(telescoping_defect(sq, 1, -10, 10) < 1e-12);
  const DyadicDiscretization d = discretize_1d(sq, 0, 0, 0);
  CHECK(d.mass(0) == doctest::Approx(std::atan(1.0)).epsilon(1e-14));
}

TEST_CASE("discretized Lebesgue measure has constant 3") {
  const VertexMeasure mu = discretization_measure(discretize_1d(kOne, 2, -40, 40));
  CHECK(mu(Vertex{0}) == Rational(1, 4));
  const ScanResult s = doubling_scan(make_zd(1), mu, lattice_box(1, 10), 10);
  CHECK(s.lower_bound == Rational(3));
}

TEST_CASE("triple ball ratios") {
  const TripleBallReport one = triple_ball_check(kOne, {0.0, 1.5}, {0.25, 2.0});
  CHECK(one.max_ratio == doctest::Approx(3.0));
  CHECK(one.within_three);
  const TripleBallReport five = triple_ball_check(Density1D{"5", [](double) { return 5.0; }}, {-2.0}, {1.0});
  CHECK(five.max_ratio == doctest::Approx(3.0));
  const TripleBallReport bad =
      triple_ball_check(Density1D{"1+t^2", [](double t) { return 1.0 + t * t; }}, {0.0, 1.0, 2.0}, {0.5, 1.0, 2.0});
  CHECK(bad.max_ratio > 3.0);
  CHECK_FALSE(bad.within_three);
}

TEST_CASE("planar ball masses") {
  const Density2D one = [](double, double) { return 1.0; };
  CHECK(l1_ball_mass(one, 0.3, -2.0, 1.0) == doctest::Approx(2.0));
  CHECK(linf_ball_mass(one, 0.0, 0.0, 1.0) == doctest::Approx(4.0));
  // x^2 over the square [-1,1]^2 around (1, 2): direct iterated integral.
  const Density2D xsq = [](double x, double) { return x * x; };
  const double direct = integrate_1d(
      [](double x) { return 2.0 * x * x; }, 0.0, 2.0);
  CHECK(linf_ball_mass(xsq, 1.0, 2.0, 1.0) == doctest::Approx(direct).epsilon(1e-12));
  const Density2D mixed = [](double x, double y) { return std::exp(x) * (1.0 + y * y); };
  const double square =
      (std::exp(0.5) - std::exp(-1.5)) * integrate_1d([](double y) { return 1.0 + y * y; }, -1.0, 1.0);
  CHECK(linf_ball_mass(mixed, -0.5, 0.0, 1.0) == doctest::Approx(square).epsilon(1e-12));
}

TEST_CASE("dyadic l1 balls") {
  const Density2D one = [](double, double) { return 1.0; };
  const DyadicBallReport r = dyadic_ball_masses(one, 0, {{0, 0}, {3, -1}});
  for (double m : r.masses) CHECK(m == doctest::Approx(2.0));
  for (double q : r.neighborhood_ratio) CHECK(q == doctest::Approx(5.0));
  CHECK(r.satisfied[0]);
  const Density2D bowl = [](double x, double y) { return 1.0 + x * x + y * y; };
  const DyadicBallReport b = dyadic_ball_masses(bowl, 0, {{0, 0}, {1, 0}, {4, 4}});
  CHECK(b.max_ratio > 5.0);
  CHECK_FALSE(b.satisfied[0]);
  const DyadicBallReport sq = dyadic_ball_masses(one, 1, {{0, 0}}, PlaneNorm::kLinf);
  CHECK(sq.bound == 9.0);
  CHECK(sq.neighborhood_ratio[0] == doctest::Approx(9.0));
}

TEST_CASE("Laplacian probe") {
  const DensityNd constant = [](std::span<const double>) { return 2.0; };
  const LaplacianProbe c = c2_superharmonicity_probe(constant, {{0.0, 0.0}, {1.0, 3.0}});
  CHECK(c.max_estimate == doctest::Approx(0.0));
  CHECK(c.flagged.empty());
  const DensityNd newton = [](std::span<const double> p) {
    return 1.0 / std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
  };
  const LaplacianProbe n = c2_superharmonicity_probe(newton, {{1.0, 0.0, 0.0}, {0.5, 1.0, -2.0}}, 1e-3);
  CHECK(std::abs(n.max_estimate) < 1e-4);
  CHECK(n.flagged.empty());
  const DensityNd bowl = [](std::span<const double> p) { return p[0] * p[0] + p[1] * p[1]; };
  const LaplacianProbe b = c2_superharmonicity_probe(bowl, {{0.0, 0.0}, {2.0, -1.0}});
  CHECK(b.estimates[0] == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(b.flagged.size() == 2);
}

TEST_CASE("expressions") {
  const Expression e = Expression::parse("1 + x^2 + y^2");
  const double p[2] = {2.0, 3.0};
  CHECK(e(p) == doctest::Approx(14.0));
  CHECK(e.arity() == 2);
  const double q[3] = {3.0, 4.0, 12.0};
  CHECK(Expression::parse("norm2(x1, x2, x3)")(q) == doctest::Approx(13.0));
  CHECK(Expression::parse("-2^2")(q) == doctest::Approx(-4.0));
  CHECK(Expression::parse("2^-1")(q) == doctest::Approx(0.5));
  CHECK(Expression::parse("abs(t - 5) / (1 + 1)")(q) == doctest::Approx(1.0));
  CHECK(Expression::parse("2*3-4/2-1")(q) == doctest::Approx(3.0));
  CHECK(Expression::parse("2^3^2")(q) == doctest::Approx(512.0));
  CHECK_THROWS_AS(Expression::parse("1 +"), ParseError);
  CHECK_THROWS_AS(Expression::parse("(x"), ParseError);
  CHECK_THROWS_AS(Expression::parse("w"), ParseError);
  CHECK_THROWS_AS(Expression::parse("abs(1, 2)"), ParseError);
}

TEST_CASE("named densities") {
  CHECK(eval(density_by_name("const:2.5", 3), {1, 2, 3}) == 2.5);
  CHECK(eval(density_by_name("linear", 1), {0.25}) == 0.25);
  CHECK(eval(density_by_name("invsq", 2), {1, 1}) == doctest::Approx(1.0 / 3.0));
  CHECK(density_by_name("invsq", 2).radial.has_value());
  CHECK(eval(density_by_name("expr:x*y", 2), {2, 3}) == 6.0);
  CHECK_THROWS_AS(density_by_name("const:-1", 1), InvalidArgument);
  CHECK_THROWS_AS(density_by_name("radial_fk:3:1:bogus", 3), ParseError);
  CHECK_THROWS_AS(density_by_name("whatever", 1), ParseError);
}

TEST_CASE("f_k densities") {
  const RadialDensity f = fk_density(3, 2.0);
  CHECK(f.profile(0.0) == doctest::Approx(0.5));
  CHECK(f.profile(2.0) == doctest::Approx(0.5));
  CHECK(f.profile(4.0) == doctest::Approx(0.25));
  const RadialDensity g = fk_density(4, 2.0, FkExponent::kDMinusTwo);
  CHECK(g.profile(1.0) == doctest::Approx(4.0));
  CHECK(g.profile(3.0) == doctest::Approx(9.0));
  CHECK(std::string(to_string(FkExponent::kTwoMinusD)) == "2-d");
}

TEST_CASE("mean value checks") {
  MeanValueOptions opts;
  opts.mc_samples = 200'000;
  const double center[3] = {0.4, -1.0, 2.0};
  const RadialDensity one{"const", 3, [](double) { return 1.0; }, {}};
  const MeanValueResult c = mean_value_check(one, center, 0.7, opts);
  CHECK(c.avg_r == doctest::Approx(1.0));
  CHECK(c.avg_2r == doctest::Approx(1.0));
  CHECK(c.satisfied);

  const RadialDensity f1 = fk_density(3, 1.0);
  const double origin[3] = {0.0, 0.0, 0.0};
  const MeanValueResult plateau = mean_value_check(f1, origin, 0.5, opts);
  CHECK(plateau.avg_r == doctest::Approx(1.0));
  CHECK(plateau.avg_2r == doctest::Approx(1.0));
  CHECK(plateau.satisfied);

  const double far[3] = {3.0, 0.0, 0.0};
  const MeanValueResult m = mean_value_check(f1, far, 1.0, opts);
  CHECK(m.estimator == "reference-quadrature");
  CHECK(m.avg_r == doctest::Approx(1.0 / 3.0).epsilon(1e-9));  // harmonic outside the plateau
  CHECK(m.satisfied);
  CHECK(m.estimators_agree);
  const MeanValueResult wrong = mean_value_check(fk_density(3, 1.0, FkExponent::kDMinusTwo), far, 1.0, opts);
  CHECK_FALSE(wrong.satisfied);

  // The general-grid path on a non-radial harmonic function: averages equal.
  const DensityNd affine = [](std::span<const double> p) { return 5.0 + p[0] - 2.0 * p[1]; };
  const double c2[2] = {0.3, 0.1};
  opts.grid_divisions = 32;
  const MeanValueResult h = mean_value_check(2, affine, c2, 0.5, opts);
  CHECK(h.estimator == "grid");
  CHECK(h.avg_r == doctest::Approx(h.avg_2r).epsilon(1e-9));
  CHECK(h.estimators_agree);
}

TEST_CASE("Monte Carlo estimates are reproducible") {
  MeanValueOptions opts;
  opts.mc_samples = 50'000;
  opts.seed = 42;
  const double center[4] = {1.0, 0.5, -0.5, 2.0};
  const RadialDensity f = fk_density(4, 0.5);
  const MeanValueResult a = mean_value_check(f, center, 1.3, opts);
  const MeanValueResult b = mean_value_check(f, center, 1.3, opts);
  CHECK(a.at_r.mc == b.at_r.mc);
  CHECK(a.at_2r.mc_se == b.at_2r.mc_se);
  opts.seed = 43;
  CHECK(mean_value_check(f, center, 1.3, opts).at_r.mc != a.at_r.mc);
}
