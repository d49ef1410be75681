#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dlab/conjecture.hpp"
#include "dlab/continuous.hpp"
#include "dlab/doubling.hpp"
#include "dlab/errors.hpp"
#include "dlab/families.hpp"
#include "dlab/io.hpp"
#include "dlab/lattice.hpp"
#include "dlab/minimizer.hpp"
#include "dlab/parallel.hpp"
#include "dlab/spectral.hpp"

namespace dlab::cli {

namespace {

using json = nlohmann::ordered_json;

struct Report {
  json result = json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
  int code = kOk;
};

void put(json& j, const std::string& key, const Rational& r) {
  j[key] = r.str();
  j[key + "_float"] = r.to_double();
}

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string fixed12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto at = s.find(sep, start);
    out.push_back(s.substr(start, at - start));
    if (at == std::string::npos) return out;
    start = at + 1;
  }
}

std::vector<double> parse_point(const std::string& s) {
  std::vector<double> out;
  for (const auto& part : split(s, ',')) {
    char* end = nullptr;
    out.push_back(std::strtod(part.c_str(), &end));
    if (part.empty() || *end != '\0') throw ParseError("bad coordinate '" + part + "' in '" + s + "'");
  }
  return out;
}

// ------------------------------------------------------------ selectors ----

/// "origin" or tokens separated by ';'.
std::vector<Vertex> parse_vertices(const GraphView& g, const std::string& spec) {
  std::vector<Vertex> out;
  for (const auto& token : split(spec, ';')) {
    out.push_back(token == "origin" ? g.traits().origin : g.parse(token));
  }
  if (out.empty()) throw InvalidArgument("no vertices given");
  return out;
}

/// All vertices of a finite graph; the l-infinity box of radius B on Z^d;
/// otherwise every vertex within distance B of the origin.
std::vector<Vertex> scan_centers(const GraphView& g, int radius) {
  if (g.traits().finite_vertices) return *g.traits().finite_vertices;
  if (g.traits().lattice_dimension) return lattice_box(*g.traits().lattice_dimension, radius);
  auto out = ball(g, g.traits().origin, radius + 1);
  std::sort(out.begin(), out.end());
  return out;
}

/// counting | file:<path> | point:<v>=<p/q>,...[,else=<p/q>] (1 elsewhere by default).
VertexMeasure measure_by_name(const GraphView& g, const std::string& spec) {
  if (spec == "counting") return VertexMeasure::counting();
  if (spec.rfind("file:", 0) == 0) return read_measure_table_file(spec.substr(5), g);
  if (spec.rfind("point:", 0) == 0) {
    std::unordered_map<Vertex, Rational, VertexHash> values;
    Rational fallback(1);
    for (const auto& item : split(spec.substr(6), ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw ParseError("point measure needs 'point:<vertex>=<p/q>[,...][,else=<p/q>]'");
      const std::string key = item.substr(0, eq);
      const Rational value = Rational::parse(item.substr(eq + 1));
      if (key == "else") {
        fallback = value;
      } else {
        values.insert_or_assign(g.parse(key), value);
      }
    }
    return VertexMeasure::table(spec, std::move(values), fallback);
  }
  throw ParseError("unknown measure '" + spec + "' (counting, file:<path>, point:<v>=<p/q>,...)");
}

/// const:<p/q> | coord:<i> | negl1 on a lattice.
VertexFunction function_by_name(const std::string& spec) {
  if (spec.rfind("const:", 0) == 0) {
    const Rational c = Rational::parse(spec.substr(6));
    return [c](const Vertex&) { return c; };
  }
  if (spec.rfind("coord:", 0) == 0) {
    const auto i = static_cast<std::size_t>(std::stoul(spec.substr(6)));
    return [i](const Vertex& v) { return Rational(i < v.rank() ? v[i] : 0); };
  }
  if (spec == "negl1") return [](const Vertex& v) { return Rational(-v.l1_norm()); };
  throw ParseError("unknown function '" + spec + "' (const:<p/q>, coord:<i>, negl1)");
}

FiniteGraph finite_by_name(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) return read_edge_list_file(spec.substr(5));
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError("graph must be kind:n or file:<path>");
  const std::string kind = spec.substr(0, colon);
  const auto n = static_cast<std::size_t>(std::stoul(spec.substr(colon + 1)));
  if (kind == "complete") return FiniteGraph::complete(n);
  if (kind == "cycle") return FiniteGraph::cycle(n);
  if (kind == "path") return FiniteGraph::path(n);
  if (kind == "star") return FiniteGraph::star(n);
  throw ParseError("unknown graph kind '" + kind + "' (complete, cycle, path, star, file)");
}

json certified(const CertifiedConstant& c, const GraphView* g = nullptr) {
  json j;
  put(j, "value", c.value);
  j["argmax"] = c.argmax_radius;
  j["certification"] = to_string(c.kind);
  j["exact"] = c.kind == Certification::kExact;
  j["cutoff"] = c.cutoff;
  if (c.limit) put(j, "limit", *c.limit);
  if (c.argmax_center && g != nullptr) j["argmax_center"] = g->format(*c.argmax_center);
  if (c.cross_difference) j["cross_difference"] = c.cross_difference->str('k');
  return j;
}

json scan_json(const GraphView& g, const ScanResult& s) {
  json j;
  put(j, "value", s.lower_bound);
  j["witness"] = {{"center", g.format(s.witness.center)}, {"radius", s.witness.radius}};
  j["exact"] = s.exact;
  if (s.exact) j["exactness_reason"] = s.exactness_reason;
  j["scan_bounds"] = {{"centers", s.center_count}, {"max_radius", s.max_radius}};
  return j;
}

// --------------------------------------------------------------- output ----

void emit(std::ostream& os, const std::string& format, const std::string& op, const json& config, const Report& r) {
  if (format == "json") {
    json doc;
    doc["schema"] = 1;
    doc["op"] = op;
    doc["config"] = config;
    doc["result"] = r.result;
    if (!r.columns.empty()) {
      json rows = json::array();
      for (const auto& row : r.rows) {
        json obj;
        for (std::size_t i = 0; i < r.columns.size(); ++i) obj[r.columns[i]] = row[i];
        rows.push_back(obj);
      }
      doc["rows"] = rows;
    }
    os << doc.dump(2) << "\n";
    return;
  }
  os << "# schema: 1\n# op: " << op << "\n# config: " << config.dump() << "\n";
  std::vector<std::string> columns = r.columns;
  std::vector<std::vector<std::string>> rows;
  if (columns.empty()) {
    columns = {"key", "value"};
    for (const auto& [k, v] : r.result.items()) rows.push_back({k, cell(v)});
  } else {
    if (!r.result.empty()) os << "# result: " << r.result.dump() << "\n";
    for (const auto& row : r.rows) {
      std::vector<std::string> line;
      for (const auto& v : row) line.push_back(cell(v));
      rows.push_back(std::move(line));
    }
  }
  if (format == "csv") {
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i]);
      os << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(columns.size());
  for (std::size_t i = 0; i < columns.size(); ++i) width[i] = columns[i].size();
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      os << (i ? "  " : "");
      if (i + 1 < cells.size()) {
        os << std::left << std::setw(static_cast<int>(width[i])) << cells[i];
      } else {
        os << cells[i];
      }
    }
    os << "\n";
  };
  line(columns);
  for (const auto& row : rows) line(row);
}

json config_echo(const CLI::App& app, const CLI::App& sub, const std::vector<std::string>& args) {
  json cfg;
  cfg["subcommand"] = sub.get_name();
  json argv = json::array();
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--output") {
      ++i;
      continue;
    }
    if (args[i].rfind("--output=", 0) == 0) continue;
    argv.push_back(args[i]);
  }
  cfg["argv"] = argv;
  json opts;
  auto collect = [&](const CLI::App& a) {
    for (const CLI::Option* o : a.get_options()) {
      const std::string name = o->get_single_name();
      if (name == "help" || name == "output") continue;
      if (o->count() > 0) {
        const auto& res = o->results();
        opts[name] = res.size() == 1 ? json(res.front()) : json(res);
      } else {
        opts[name] = o->get_default_str();
      }
    }
  };
  collect(app);
  collect(sub);
  cfg["options"] = opts;
  return cfg;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and numerical doubling constants of measures on graphs and Euclidean spaces", "dlab"};
  app.fallthrough();
  app.require_subcommand(1);
  std::string format = "json";
  std::string output;
  unsigned jobs = default_jobs();
  app.add_option("--format", format, "json, csv or table")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
  app.add_option("--output", output, "Write results to this file instead of stdout");
  app.add_option("--jobs", jobs, "Worker threads (default from DLAB_JOBS)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  Report report;
  std::function<void()> action;
  bool csv_default = false;

  // lattice ------------------------------------------------------------------
  auto* lattice = app.add_subcommand("lattice", "Ball polynomials and the certified constant of Z^d");
  int lattice_dim = 1;
  int lattice_profile = 0;
  bool lattice_certify = false;
  lattice->add_option("--dim", lattice_dim, "Dimension d")->required()->check(CLI::Range(1, 8));
  lattice->add_flag("--certify", lattice_certify, "Certified least constant (default when no --max-radius)");
  lattice->add_option("--max-radius", lattice_profile, "Also emit ratios P_d(2k)/P_d(k) for k <= this")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  lattice->callback([&] {
    action = [&] {
      const Polynomial p = ball_polynomial(lattice_dim);
      if (lattice_certify || lattice_profile == 0) {
        report.result = certified(least_constant_zd(lattice_dim));
        report.result["dim"] = lattice_dim;
      }
      report.result["polynomial"] = p.str('k');
      if (lattice_profile > 0) {
        report.columns = {"k", "ball", "ratio_num", "ratio_den", "ratio_float"};
        for (const auto& [k, ratio] : doubling_ratio_profile(lattice_dim, lattice_profile)) {
          report.rows.push_back(
              {k, ball_card(lattice_dim, k).get_str(), ratio.num().get_str(), ratio.den().get_str(), ratio.to_double()});
        }
      }
    };
  });

  // graph --------------------------------------------------------------------
  auto* graph = app.add_subcommand("graph", "Graph family constants, homogeneity, growth and certificates");
  std::string family = "z2";
  std::string graph_op = "constant";
  int graph_radius = 50;
  std::string graph_centers = "origin";
  graph->add_option("--family", family, "z1..z8, tri, hex, egraph, kmz:<m>, file:<path>")->capture_default_str();
  graph->add_option("--op", graph_op, "constant, homogeneity, growth, profile, certificate")
      ->check(CLI::IsMember({"constant", "homogeneity", "growth", "profile", "certificate"}))
      ->capture_default_str();
  graph->add_option("--max-radius", graph_radius, "Radius range")->check(CLI::PositiveNumber)->capture_default_str();
  graph->add_option("--centers", graph_centers, "Vertices separated by ';' (\"origin\" allowed)")
      ->capture_default_str();
  graph->callback([&] {
    action = [&] {
      const FamilySpec spec = FamilySpec::parse(family);
      const GraphView g = make_family(spec);
      report.result["family"] = spec.str();
      if (graph_op == "constant") {
        report.result.update(certified(family_constant(g, graph_radius), &g));
      } else if (graph_op == "homogeneity") {
        std::vector<Vertex> centers = parse_vertices(g, graph_centers);
        if (centers.size() == 1) {
          for (const Vertex& v : g.traits().orbit_representatives) centers.push_back(v);
        }
        const HomogeneityReport h = check_radius_homogeneous(g, centers, graph_radius);
        report.result["homogeneous"] = h.homogeneous;
        if (h.witness) {
          report.result["witness"] = {{"x", g.format(h.witness->x)},
                                      {"y", g.format(h.witness->y)},
                                      {"radius", h.witness->radius},
                                      {"size_x", h.witness->size_x},
                                      {"size_y", h.witness->size_y}};
        }
      } else if (graph_op == "growth") {
        const GrowthReport gr = growth_report(g, parse_vertices(g, graph_centers).front(), graph_radius);
        report.result["center"] = g.format(gr.center);
        put(report.result, "quadratic_bound", gr.quadratic_bound);
        report.result["quadratic_bound_at"] = gr.quadratic_bound_at;
        report.result["growth_exponent"] = gr.growth_exponent;
        report.result["verdict"] = to_string(gr.verdict);
        report.columns = {"n", "ball"};
        for (std::size_t i = 0; i < gr.cardinalities.size(); ++i) report.rows.push_back({i + 1, gr.cardinalities[i]});
      } else if (graph_op == "profile") {
        const Vertex c = parse_vertices(g, graph_centers).front();
        const BallProfile p = ball_profile(g, nullptr, c, graph_radius);
        report.result["center"] = g.format(c);
        report.columns = {"r", "ball"};
        for (int r = 1; r <= graph_radius; ++r) report.rows.push_back({r, p.size_at(r)});
      } else {
        std::vector<Vertex> centers = parse_vertices(g, graph_centers);
        if (centers.size() == 1) {
          for (const Vertex& v : g.traits().orbit_representatives) centers.push_back(v);
        }
        const CountingCertificate cert = counting_minimizer_certificate(g, graph_radius, centers);
        report.result["granted"] = cert.granted;
        report.result["conclusion"] = cert.conclusion;
        put(report.result, "scanned_constant", cert.scanned_constant);
        report.result["scanned_argmax"] = cert.scanned_argmax;
        if (cert.closed_form) report.result["closed_form"] = certified(*cert.closed_form);
        if (!cert.granted) report.code = kRefuted;
      }
    };
  });

  // scan / local ---------------------------------------------------------------
  std::string measure_spec = "counting";
  int center_radius = 5;
  int scan_radius = 10;
  auto* scan = app.add_subcommand("scan", "Exact windowed doubling constant of a vertex measure");
  scan->add_option("--family", family, "Graph family")->capture_default_str();
  scan->add_option("--measure", measure_spec, "counting, file:<path>, point:<v>=<p/q>,...[,else=<p/q>]")->capture_default_str();
  scan->add_option("--center-radius", center_radius, "Centers: l-inf box (lattices) or ball of this radius")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  scan->add_option("--max-radius", scan_radius, "Largest r in B(x, 2r) / B(x, r)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  scan->callback([&] {
    action = [&] {
      const GraphView g = make_family(FamilySpec::parse(family));
      const VertexMeasure mu = measure_by_name(g, measure_spec);
      ScanOptions opts;
      opts.jobs = jobs;
      report.result = scan_json(g, doubling_scan(g, mu, scan_centers(g, center_radius), scan_radius, opts));
    };
  });

  auto* local = app.add_subcommand("local", "Local doubling constant (radius 1)");
  local->add_option("--family", family, "Graph family")->capture_default_str();
  local->add_option("--measure", measure_spec, "counting, file:<path>, point:<v>=<p/q>,...[,else=<p/q>]")->capture_default_str();
  local->add_option("--center-radius", center_radius, "Centers as for scan")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  local->callback([&] {
    action = [&] {
      const GraphView g = make_family(FamilySpec::parse(family));
      const auto centers = scan_centers(g, center_radius);
      put(report.result, "value", local_constant(g, measure_by_name(g, measure_spec), centers));
      report.result["centers"] = centers.size();
    };
  });

  // laplacian -----------------------------------------------------------------
  auto* lap = app.add_subcommand("laplacian", "Exact discrete Laplacian of a function");
  std::string function_spec = "const:1";
  lap->add_option("--family", family, "Lattice family z1..z8")->capture_default_str();
  lap->add_option("--function", function_spec, "const:<p/q>, coord:<i>, negl1")->capture_default_str();
  lap->add_option("--center-radius", center_radius, "Centers as for scan")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  lap->callback([&] {
    action = [&] {
      const GraphView g = make_family(FamilySpec::parse(family));
      const LaplacianField field = laplacian(g, function_by_name(function_spec), scan_centers(g, center_radius));
      put(report.result, "min_value", field.min_value);
      report.result["superharmonic"] = field.superharmonic();
      report.result["harmonic"] = field.harmonic();
      report.columns = {"vertex", "laplacian", "laplacian_float"};
      for (const auto& [v, value] : field.values) report.rows.push_back({g.format(v), value.str(), value.to_double()});
    };
  });

  // spectrum / perron ----------------------------------------------------------
  std::string finite_spec = "complete:3";
  double tolerance = 1e-10;
  auto* spectrum = app.add_subcommand("spectrum", "Spectral radius of a finite connected graph");
  spectrum->add_option("--graph", finite_spec, "complete:n, cycle:n, path:n, star:n, file:<path>")
      ->capture_default_str();
  spectrum->add_option("--tolerance", tolerance, "Residual tolerance")->capture_default_str();
  spectrum->callback([&] {
    action = [&] {
      const FiniteGraph g = finite_by_name(finite_spec);
      PowerIterationOptions opts;
      opts.tolerance = tolerance;
      const SpectralResult s = spectral_radius(g, opts);
      report.result = {{"vertices", g.size()},
                       {"spectral_radius", s.radius},
                       {"residual", s.residual},
                       {"iterations", s.iterations}};
    };
  });
  auto* perron = app.add_subcommand("perron", "Perron eigenvector density and its local constant");
  perron->add_option("--graph", finite_spec, "complete:n, cycle:n, path:n, star:n, file:<path>")
      ->capture_default_str();
  perron->add_option("--tolerance", tolerance, "Residual tolerance")->capture_default_str();
  perron->callback([&] {
    action = [&] {
      const FiniteGraph g = finite_by_name(finite_spec);
      PowerIterationOptions opts;
      opts.tolerance = tolerance;
      const PerronMeasure p = perron_measure(g, opts);
      report.result = {{"spectral_radius", p.spectral_radius},
                       {"local_constant", p.local_constant},
                       {"one_plus_radius", 1.0 + p.spectral_radius},
                       {"residual", p.residual}};
      report.columns = {"vertex", "density"};
      for (std::size_t i = 0; i < g.size(); ++i) {
        report.rows.push_back({g.token(i).empty() ? std::to_string(i) : g.token(i), p.density[i]});
      }
    };
  });

  // construct -------------------------------------------------------------------
  auto* construct = app.add_subcommand("construct", "Measures with a prescribed doubling constant; Z refuter");
  std::string construct_op = "nu";
  std::string center_token = "origin";
  int nu_radius = 1;
  std::string target = "4";
  std::int64_t start = 1;
  std::string epsilon = "1";
  std::int64_t steps = 20;
  construct->add_option("--op", construct_op, "nu or z-refuter")
      ->check(CLI::IsMember({"nu", "z-refuter"}))
      ->capture_default_str();
  construct->add_option("--family", family, "Graph family")->capture_default_str();
  construct->add_option("--measure", measure_spec, "Base measure")->capture_default_str();
  construct->add_option("--center", center_token, "Designated ball center")->capture_default_str();
  construct->add_option("--radius", nu_radius, "Designated ball radius")->check(CLI::PositiveNumber)->capture_default_str();
  construct->add_option("--target", target, "Target constant C (p/q)")->capture_default_str();
  construct->add_option("--center-radius", center_radius, "Verification scan centers")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  construct->add_option("--max-radius", scan_radius, "Verification scan radii")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  construct->add_option("--start", start, "z-refuter: index j")->capture_default_str();
  construct->add_option("--epsilon", epsilon, "z-refuter: epsilon (p/q)")->capture_default_str();
  construct->add_option("--steps", steps, "z-refuter: window length")->capture_default_str();
  construct->callback([&] {
    action = [&] {
      if (construct_op == "z-refuter") {
        const GraphView z = make_zd(1);
        const RefuterReport r = z_elementary_refuter(measure_by_name(z, measure_spec), start, Rational::parse(epsilon),
                                                     steps);
        report.result["verdict"] = to_string(r.verdict);
        report.result["positivity_step"] = r.positivity_step;
        if (r.violating_center) {
          report.result["violating_center"] = *r.violating_center;
          put(report.result, "violating_ratio", r.violating_ratio);
        }
        report.result["detail"] = r.detail;
        if (r.verdict != RefuterVerdict::kInapplicable) report.code = kRefuted;
        return;
      }
      const GraphView g = make_family(FamilySpec::parse(family));
      const VertexMeasure mu = measure_by_name(g, measure_spec);
      const Vertex c = parse_vertices(g, center_token).front();
      const NuConstruction nu = construct_nu(g, mu, c, nu_radius, Rational::parse(target));
      ScanOptions opts;
      opts.jobs = jobs;
      const NuVerification v = verify_nu(g, mu, nu, scan_centers(g, center_radius), scan_radius, opts);
      report.result["center"] = g.format(c);
      report.result["radius"] = nu_radius;
      put(report.result, "base_ratio", nu.base_ratio);
      put(report.result, "eta", nu.eta);
      put(report.result, "target", nu.target);
      put(report.result, "designated_ratio", nu.designated_ratio);
      put(report.result, "designated_density", nu.nu(c));
      report.result["base_scan"] = scan_json(g, v.base_scan);
      report.result["nu_scan"] = scan_json(g, v.nu_scan);
      put(report.result, "bound", v.bound);
      report.result["designated_exact"] = v.designated_exact;
      report.result["within_bound"] = v.within_bound;
      if (!v.designated_exact || !v.within_bound) report.code = kRefuted;
    };
  });

  // conjecture ------------------------------------------------------------------
  auto* conj = app.add_subcommand("conjecture", "Scan |x|^{-1/2} on Z^3 against 231/25");
  int x_max = 10;
  int n_max = 10;
  conj->add_option("--x-max", x_max, "Centers with |x|_inf <= x-max")->check(CLI::NonNegativeNumber)->capture_default_str();
  conj->add_option("--n-max", n_max, "Radii n <= n-max")->check(CLI::PositiveNumber)->capture_default_str();
  conj->callback([&] {
    action = [&] {
      ConjectureOptions opts;
      opts.jobs = jobs;
      const ConjectureScan s = conjecture_scan_z3(x_max, n_max, opts);
      report.result["max"] = s.max_found;
      report.result["argmax"] = {{"center", s.argmax.center.str()}, {"n", s.argmax.n}};
      report.result["threshold"] = s.threshold.str();
      report.result["refuted"] = s.refuted;
      std::map<int, int> histogram;
      std::size_t far = 0;
      std::size_t far_at_three = 0;
      for (const auto& [x, n] : s.center_argmax) {
        ++histogram[n];
        if (x.linf_norm() >= 5) {
          ++far;
          if (n == 3) ++far_at_three;
        }
      }
      json hist = json::object();
      for (const auto& [n, count] : histogram) hist[std::to_string(n)] = count;
      report.result["argmax_n_histogram"] = hist;
      report.result["far_centers"] = far;
      report.result["far_centers_argmax_3"] = far_at_three;
      if (format != "json") {
        report.columns = {"x1", "x2", "x3", "n", "ratio"};
        for (const auto& row : s.table) {
          report.rows.push_back({row.center[0], row.center[1], row.center[2], row.n, fixed12(row.ratio)});
        }
      }
      if (s.refuted) report.code = kRefuted;
    };
  });

  // discretize -------------------------------------------------------------------
  auto* disc = app.add_subcommand("discretize", "Dyadic discretizations of densities on R and R^2");
  std::string disc_op = "interval";
  std::string density = "const";
  int scale = 0;
  std::int64_t j_min = -3;
  std::int64_t j_max = 3;
  std::string points = "0";
  std::string radii = "1";
  disc->add_option("--op", disc_op, "interval, telescoping, triple, l1-balls, linf-balls")
      ->check(CLI::IsMember({"interval", "telescoping", "triple", "l1-balls", "linf-balls"}))
      ->capture_default_str();
  disc->add_option("--density", density, "const[:c], linear, invsq, radial_fk:d:k[:2-d|d-2], expr:<e>")
      ->capture_default_str();
  disc->add_option("--scale", scale, "Dyadic scale k")->capture_default_str();
  disc->add_option("--j-min", j_min, "First index (interval, telescoping)")->capture_default_str();
  disc->add_option("--j-max", j_max, "Last index (interval, telescoping)")->capture_default_str();
  disc->add_option("--centers", points, "triple: reals 'a,b,...'; balls: lattice points 'x,y;x,y'")
      ->capture_default_str();
  disc->add_option("--radii", radii, "triple: radii 'r1,r2,...'")->capture_default_str();
  disc->callback([&] {
    action = [&] {
      if (disc_op == "interval" || disc_op == "telescoping") {
        const Density1D u = as_density_1d(density_by_name(density, 1));
        if (disc_op == "telescoping") {
          report.result["defect"] = telescoping_defect(u, scale, j_min, j_max);
          report.result["within_1e-9"] = report.result["defect"].get<double>() <= 1e-9;
          return;
        }
        const DyadicDiscretization d = discretize_1d(u, scale, j_min, j_max);
        report.result["scale"] = scale;
        report.columns = {"j", "mass", "error"};
        for (std::int64_t j = j_min; j <= j_max; ++j) {
          report.rows.push_back({j, d.mass(j), d.errors[static_cast<std::size_t>(j - j_min)]});
        }
      } else if (disc_op == "triple") {
        const TripleBallReport t =
            triple_ball_check(as_density_1d(density_by_name(density, 1)), parse_point(points), parse_point(radii));
        report.result = {{"max_ratio", t.max_ratio},
                         {"argmax_center", t.argmax_center},
                         {"argmax_radius", t.argmax_radius},
                         {"within_three", t.within_three}};
        report.columns = {"center", "radius", "ratio"};
        for (const auto& [x, r, ratio] : t.ratios) report.rows.push_back({x, r, ratio});
        if (!t.within_three) report.code = kRefuted;
      } else {
        std::vector<std::pair<std::int64_t, std::int64_t>> centers;
        for (const auto& token : split(points, ';')) {
          const auto xy = parse_point(token);
          if (xy.size() != 2) throw ParseError("ball centers are 'x,y' pairs");
          centers.emplace_back(static_cast<std::int64_t>(xy[0]), static_cast<std::int64_t>(xy[1]));
        }
        const PlaneNorm norm = disc_op == "l1-balls" ? PlaneNorm::kL1 : PlaneNorm::kLinf;
        const DyadicBallReport d = dyadic_ball_masses(as_density_2d(density_by_name(density, 2)), scale, centers, norm);
        report.result = {{"bound", d.bound}, {"max_ratio", d.max_ratio}};
        report.columns = {"x", "y", "mass", "neighborhood_ratio", "satisfied"};
        for (std::size_t i = 0; i < centers.size(); ++i) {
          report.rows.push_back(
              {centers[i].first, centers[i].second, d.masses[i], d.neighborhood_ratio[i], bool(d.satisfied[i])});
          if (!d.satisfied[i]) report.code = kRefuted;
        }
      }
    };
  });

  // meanvalue ---------------------------------------------------------------------
  auto* mean = app.add_subcommand("meanvalue", "Superharmonic mean-value and Laplacian probes on R^d");
  std::string mean_op = "mean";
  int dim = 3;
  std::string center = "3,0,0";
  double radius = 1.0;
  int random_balls = 0;
  MeanValueOptions mv;
  double step = 1e-4;
  mean->add_option("--op", mean_op, "mean or probe")->check(CLI::IsMember({"mean", "probe"}))->capture_default_str();
  mean->add_option("--density", density, "Density rule")->capture_default_str();
  mean->add_option("--dim", dim, "Dimension")->check(CLI::PositiveNumber)->capture_default_str();
  mean->add_option("--center", center, "Center 'x,y,...' (probe: points separated by ';')")->capture_default_str();
  mean->add_option("--radius", radius, "Ball radius r")->capture_default_str();
  mean->add_option("--random", random_balls, "Check this many seeded random balls instead")->capture_default_str();
  mean->add_option("--samples", mv.mc_samples, "Monte Carlo samples per ball")->capture_default_str();
  mean->add_option("--seed", mv.seed, "Monte Carlo seed")->capture_default_str();
  mean->add_option("--grid-divisions", mv.grid_divisions, "Grid spacing r / N")->capture_default_str();
  mean->add_option("--step", step, "probe: finite-difference step")->capture_default_str();
  mean->callback([&] {
    action = [&] {
      const NamedDensity f = density_by_name(density, dim);
      if (mean_op == "probe") {
        std::vector<std::vector<double>> pts;
        for (const auto& token : split(center, ';')) pts.push_back(parse_point(token));
        const LaplacianProbe p = c2_superharmonicity_probe(f.rule, pts, step);
        report.result = {{"max_estimate", p.max_estimate}, {"tolerance", p.tolerance}, {"flagged", p.flagged.size()}};
        report.columns = {"point", "laplacian", "flagged"};
        for (std::size_t i = 0; i < pts.size(); ++i) {
          report.rows.push_back({split(center, ';')[i], p.estimates[i], p.estimates[i] > p.tolerance});
        }
        if (!p.flagged.empty()) report.code = kRefuted;
        return;
      }
      auto check = [&](std::span<const double> c, double r) {
        return f.radial ? mean_value_check(*f.radial, c, r, mv) : mean_value_check(dim, f.rule, c, r, mv);
      };
      auto describe = [](const MeanValueResult& m) {
        return json{{"avg_r", m.avg_r},
                    {"avg_2r", m.avg_2r},
                    {"estimator", m.estimator},
                    {"satisfied", m.satisfied},
                    {"grid_r", m.at_r.grid},
                    {"grid_2r", m.at_2r.grid},
                    {"mc_r", m.at_r.mc},
                    {"mc_se_r", m.at_r.mc_se},
                    {"mc_2r", m.at_2r.mc},
                    {"mc_se_2r", m.at_2r.mc_se},
                    {"estimators_agree", m.estimators_agree}};
      };
      if (random_balls == 0) {
        const auto c = parse_point(center);
        if (c.size() != static_cast<std::size_t>(dim)) throw InvalidArgument("center dimension != --dim");
        const MeanValueResult m = check(c, radius);
        report.result = describe(m);
        if (!m.satisfied) report.code = kRefuted;
        return;
      }
      // Centers uniform in [-4, 4]^d, radii uniform in [0.05, 3].
      std::uint64_t state = mv.seed;
      auto next = [&state] {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return static_cast<double>((z ^ (z >> 31)) >> 11) * 0x1.0p-53;
      };
      std::size_t satisfied = 0;
      std::size_t agree = 0;
      report.columns = {"center", "radius", "avg_r", "avg_2r", "satisfied", "estimators_agree"};
      for (int i = 0; i < random_balls; ++i) {
        std::vector<double> c(static_cast<std::size_t>(dim));
        std::string label;
        for (auto& v : c) {
          v = -4.0 + 8.0 * next();
          label += (label.empty() ? "" : ",") + fixed12(v);
        }
        const double r = 0.05 + 2.95 * next();
        const MeanValueResult m = check(c, r);
        satisfied += m.satisfied ? 1 : 0;
        agree += m.estimators_agree ? 1 : 0;
        report.rows.push_back({label, r, m.avg_r, m.avg_2r, m.satisfied, m.estimators_agree});
      }
      report.result = {{"balls", random_balls}, {"satisfied", satisfied}, {"estimators_agree", agree}};
      if (satisfied != static_cast<std::size_t>(random_balls)) report.code = kRefuted;
    };
  });

  // plotdata ----------------------------------------------------------------------
  auto* plot = app.add_subcommand("plotdata", "Ratio curves P_d(2k)/P_d(k) for plotting");
  std::string dims = "1,2,3,4";
  int plot_radius = 40;
  plot->add_option("--dims", dims, "Comma-separated dimensions")->capture_default_str();
  plot->add_option("--max-radius", plot_radius, "Largest k")->check(CLI::PositiveNumber)->capture_default_str();
  plot->callback([&] {
    csv_default = true;
    action = [&] {
      report.columns = {"dim", "k", "ratio_num", "ratio_den", "ratio_float"};
      for (const auto& token : split(dims, ',')) {
        const int d = std::stoi(token);
        for (const auto& [k, ratio] : doubling_ratio_profile(d, plot_radius)) {
          report.rows.push_back({d, k, ratio.num().get_str(), ratio.den().get_str(), ratio.to_double()});
        }
      }
    };
  });

  // replay ------------------------------------------------------------------------
  auto* replay = app.add_subcommand("replay", "Re-run the command recorded in an output file's config echo");
  std::string replay_path;
  replay->add_option("--from", replay_path, "Output file written by an earlier run")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kUsage;
  }

  if (replay->parsed()) {
    std::ifstream in(replay_path);
    if (!in) {
      err << "error: cannot open " << replay_path << "\n";
      return kFailure;
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    json cfg;
    try {
      if (const auto at = text.find("# config: "); at != std::string::npos) {
        cfg = json::parse(text.substr(at + 10, text.find('\n', at) - at - 10));
      } else {
        cfg = json::parse(text).at("config");
      }
    } catch (const std::exception& e) {
      err << "error: no config echo in " << replay_path << ": " << e.what() << "\n";
      return kFailure;
    }
    std::vector<std::string> argv = cfg.at("argv").get<std::vector<std::string>>();
    if (!output.empty()) {
      argv.push_back("--output");
      argv.push_back(output);
    }
    return run(argv, out, err);
  }

  const CLI::App* sub = app.get_subcommands().front();
  if (csv_default && app.get_option("--format")->count() == 0) format = "csv";
  json config = config_echo(app, *sub, args);
  config["options"]["format"] = format;
  try {
    action();
  } catch (const ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kFailure;
  }
  if (!output.empty()) {
    std::ofstream file(output);
    if (!file) {
      err << "error: cannot write " << output << "\n";
      return kFailure;
    }
    emit(file, format, sub->get_name(), config, report);
  } else {
    emit(out, format, sub->get_name(), config, report);
  }
  return report.code;
}

}  // namespace dlab::cli
