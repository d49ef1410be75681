#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "dlab/conjecture.hpp"
#include "dlab/continuous.hpp"
#include "dlab/doubling.hpp"
#include "dlab/errors.hpp"
#include "dlab/families.hpp"
#include "dlab/lattice.hpp"
#include "dlab/minimizer.hpp"
#include "dlab/spectral.hpp"

namespace py = pybind11;
using namespace dlab;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(py::int_(py::str(r.num().get_str())), py::int_(py::str(r.den().get_str())));
}

py::dict constant_dict(const CertifiedConstant& c) {
  py::dict d;
  d["value"] = fraction(c.value);
  d["argmax"] = c.argmax_radius;
  d["cutoff"] = c.cutoff;
  d["certification"] = to_string(c.kind);
  d["exact"] = c.kind == Certification::kExact;
  return d;
}

FiniteGraph graph_from_edges(const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::size_t n = 0;
  for (const auto& [a, b] : edges) n = std::max({n, a + 1, b + 1});
  FiniteGraph g(n);
  for (const auto& [a, b] : edges) g.add_edge(a, b);
  return g;
}

}  // namespace

PYBIND11_MODULE(_dlab, m) {
  m.doc() = "Doubling constants of measures on graphs and Euclidean spaces";

  // Translators run newest first, so the subclass goes last.
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  m.def("ball_card", [](int d, std::int64_t k) { return py::int_(py::str(ball_card(d, k).get_str())); },
        py::arg("d"), py::arg("k"), "|B(0, k)| on Z^d (open ball, graph distance).");
  m.def("ball_polynomial", [](int d) {
    const Polynomial p = ball_polynomial(d);
    py::list out;
    for (const Rational& c : p.coefficients()) out.append(fraction(c));
    return out;
  }, py::arg("d"), "Coefficients of P_d, lowest degree first.");
  m.def("doubling_ratio_profile", [](int d, int max_k) {
    py::list out;
    for (const auto& [k, r] : doubling_ratio_profile(d, max_k)) out.append(py::make_tuple(k, fraction(r)));
    return out;
  }, py::arg("d"), py::arg("max_k"));
  m.def("least_constant_zd", [](int d) { return constant_dict(least_constant_zd(d)); }, py::arg("d"));
  m.def("family_constant", [](const std::string& family, int max_radius) {
    return constant_dict(family_constant(FamilySpec::parse(family), max_radius));
  }, py::arg("family"), py::arg("max_radius") = 50);

  m.def("counting_scan", [](const std::string& family, int center_box, int max_radius, unsigned jobs) {
    const GraphView g = make_family(FamilySpec::parse(family));
    std::vector<Vertex> centers = g.traits().lattice_dimension
                                      ? lattice_box(*g.traits().lattice_dimension, center_box)
                                      : g.traits().orbit_representatives;
    ScanOptions opts;
    opts.jobs = jobs;
    const ScanResult s = doubling_scan(g, VertexMeasure::counting(), centers, max_radius, opts);
    py::dict d;
    d["value"] = fraction(s.lower_bound);
    d["center"] = g.format(s.witness.center);
    d["radius"] = s.witness.radius;
    d["exact"] = s.exact;
    return d;
  }, py::arg("family"), py::arg("center_box") = 2, py::arg("max_radius") = 10, py::arg("jobs") = 1);

  m.def("construct_nu", [](int d, const std::string& target) {
    const GraphView g = make_zd(d);
    const NuConstruction nu = construct_nu(g, VertexMeasure::counting(), g.traits().origin, 1, Rational::parse(target));
    py::dict out;
    out["eta"] = fraction(nu.eta);
    out["base_ratio"] = fraction(nu.base_ratio);
    out["designated_ratio"] = fraction(nu.designated_ratio);
    out["center_density"] = fraction(nu.nu(g.traits().origin));
    return out;
  }, py::arg("d"), py::arg("target"), "nu on Z^d from the counting measure and the ball B(0, 1).");

  m.def("spectral_radius", [](const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    return spectral_radius(graph_from_edges(edges)).radius;
  }, py::arg("edges"));
  m.def("perron_local_constant", [](const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    return perron_measure(graph_from_edges(edges)).local_constant;
  }, py::arg("edges"));

  m.def("conjecture_scan", [](int x_max, int n_max, unsigned jobs) {
    ConjectureOptions opts;
    opts.jobs = jobs;
    ConjectureScan s;
    {
      py::gil_scoped_release release;
      s = conjecture_scan_z3(x_max, n_max, opts);
    }
    py::dict d;
    d["max"] = s.max_found;
    d["argmax_center"] = py::make_tuple(s.argmax.center[0], s.argmax.center[1], s.argmax.center[2]);
    d["argmax_n"] = s.argmax.n;
    d["refuted"] = s.refuted;
    d["threshold"] = fraction(s.threshold);
    return d;
  }, py::arg("x_max") = 10, py::arg("n_max") = 10, py::arg("jobs") = 1);

  m.def("discretize_1d", [](const std::string& density, int k, std::int64_t j_lo, std::int64_t j_hi) {
    return discretize_1d(as_density_1d(density_by_name(density, 1)), k, j_lo, j_hi).masses;
  }, py::arg("density"), py::arg("k"), py::arg("j_lo"), py::arg("j_hi"));

  m.def("mean_value_check", [](const std::string& density, std::vector<double> center, double r,
                               std::uint64_t samples, std::uint64_t seed) {
    const int dim = static_cast<int>(center.size());
    const NamedDensity f = density_by_name(density, dim);
    MeanValueOptions opts;
    opts.mc_samples = samples;
    opts.seed = seed;
    MeanValueResult res;
    {
      py::gil_scoped_release release;
      res = f.radial ? mean_value_check(*f.radial, center, r, opts) : mean_value_check(dim, f.rule, center, r, opts);
    }
    py::dict d;
    d["avg_r"] = res.avg_r;
    d["avg_2r"] = res.avg_2r;
    d["satisfied"] = res.satisfied;
    d["estimator"] = res.estimator;
    d["estimators_agree"] = res.estimators_agree;
    return d;
  }, py::arg("density"), py::arg("center"), py::arg("r"), py::arg("samples") = 200000, py::arg("seed") = 1);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
