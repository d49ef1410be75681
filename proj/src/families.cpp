#include "dlab/families.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "dlab/errors.hpp"
#include "dlab/io.hpp"

namespace dlab {

namespace {

std::optional<std::int64_t> parse_int(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

// Accepts "(x,y)", "x,y" and, for rank 1, a bare integer.
GraphView::ParseFn lattice_parser(std::size_t rank) {
  return [rank](std::string_view token) -> std::optional<Vertex> {
    if (!token.empty() && token.front() == '(' && token.back() == ')') token = token.substr(1, token.size() - 2);
    std::vector<std::int64_t> coords;
    while (true) {
      const auto comma = token.find(',');
      const auto value = parse_int(token.substr(0, comma));
      if (!value) return std::nullopt;
      coords.push_back(*value);
      if (comma == std::string_view::npos) break;
      token.remove_prefix(comma + 1);
    }
    if (coords.size() != rank) return std::nullopt;
    return Vertex(std::span<const std::int64_t>(coords));
  };
}

// Block families: "k_a" with a in 1..slots.
GraphView::FormatFn block_formatter() {
  return [](const Vertex& v) { return std::to_string(v[0]) + "_" + std::to_string(v[1]); };
}

GraphView::ParseFn block_parser(std::int64_t slots) {
  return [slots](std::string_view token) -> std::optional<Vertex> {
    const auto underscore = token.rfind('_');
    if (underscore == std::string_view::npos) return std::nullopt;
    const auto k = parse_int(token.substr(0, underscore));
    const auto a = parse_int(token.substr(underscore + 1));
    if (!k || !a || *a < 1 || *a > slots) return std::nullopt;
    return Vertex{*k, *a};
  };
}

ClosedFormBalls quadratic(const Rational& a, const Rational& b, const Rational& c) {
  ClosedFormBalls balls;
  balls.poly = Polynomial({c, b, a});
  return balls;
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  FamilySpec spec;
  if (text == "tri") {
    spec.kind = FamilyKind::kTriangular;
  } else if (text == "hex") {
    spec.kind = FamilyKind::kHexagonal;
  } else if (text == "egraph") {
    spec.kind = FamilyKind::kEGraph;
  } else if (text.starts_with("kmz:")) {
    const auto m = parse_int(text.substr(4));
    if (!m || *m < 1 || *m > 1'000'000) throw ParseError("kmz needs m >= 1, got '" + std::string(text) + "'");
    spec.kind = FamilyKind::kKmZ;
    spec.parameter = static_cast<int>(*m);
  } else if (text.starts_with("file:")) {
    spec.kind = FamilyKind::kIngested;
    spec.path = std::string(text.substr(5));
    if (spec.path.empty()) throw ParseError("file: family needs a path");
  } else if (text.size() >= 2 && text.front() == 'z') {
    const auto d = parse_int(text.substr(1));
    if (!d || *d < 1 || *d > static_cast<std::int64_t>(Vertex::kMaxRank)) {
      throw ParseError("unknown family '" + std::string(text) + "' (z1..z8)");
    }
    spec.kind = FamilyKind::kZd;
    spec.parameter = static_cast<int>(*d);
  } else {
    throw ParseError("unknown family '" + std::string(text) + "'");
  }
  return spec;
}

std::string FamilySpec::str() const {
  switch (kind) {
    case FamilyKind::kZd:
      return "z" + std::to_string(parameter);
    case FamilyKind::kTriangular:
      return "tri";
    case FamilyKind::kHexagonal:
      return "hex";
    case FamilyKind::kEGraph:
      return "egraph";
    case FamilyKind::kKmZ:
      return "kmz:" + std::to_string(parameter);
    case FamilyKind::kIngested:
      return "file:" + path;
  }
  return "?";
}

GraphView make_zd(int d) {
  if (d < 1 || d > static_cast<int>(Vertex::kMaxRank)) {
    throw InvalidArgument("Z^d needs 1 <= d <= " + std::to_string(Vertex::kMaxRank));
  }
  GraphTraits traits;
  traits.name = "z" + std::to_string(d);
  traits.degree_bound = 2 * static_cast<std::size_t>(d);
  traits.regular_degree = traits.degree_bound;
  traits.origin = Vertex::zero(static_cast<std::size_t>(d));
  traits.orbit_representatives = {traits.origin};
  traits.radius_homogeneous = true;
  traits.closed_form = ClosedFormBalls{ball_polynomial(d), 1, {}};
  traits.lattice_dimension = d;
  auto neighbors = [d](const Vertex& v, std::vector<Vertex>& out) {
    for (int i = 0; i < d; ++i) {
      for (int s : {-1, 1}) {
        Vertex w = v;
        w.set(static_cast<std::size_t>(i), v[static_cast<std::size_t>(i)] + s);
        out.push_back(w);
      }
    }
  };
  auto format = [d](const Vertex& v) { return d == 1 ? std::to_string(v[0]) : v.str(); };
  return GraphView(std::move(traits), neighbors, format, lattice_parser(static_cast<std::size_t>(d)));
}

GraphView make_triangular() {
  GraphTraits traits;
  traits.name = "tri";
  traits.degree_bound = 6;
  traits.regular_degree = 6;
  traits.origin = Vertex{0, 0};
  traits.orbit_representatives = {traits.origin};
  traits.radius_homogeneous = true;
  traits.closed_form = quadratic(Rational(3), Rational(-3), Rational(1));
  auto neighbors = [](const Vertex& v, std::vector<Vertex>& out) {
    static constexpr std::int64_t kOffsets[6][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}};
    for (const auto& o : kOffsets) out.push_back(Vertex{v[0] + o[0], v[1] + o[1]});
  };
  return GraphView(std::move(traits), neighbors, {}, lattice_parser(2));
}

GraphView make_hexagonal() {
  GraphTraits traits;
  traits.name = "hex";
  traits.degree_bound = 3;
  traits.regular_degree = 3;
  traits.origin = Vertex{0, 0};
  traits.orbit_representatives = {Vertex{0, 0}, Vertex{1, 0}};
  traits.radius_homogeneous = true;
  traits.closed_form = quadratic(Rational(3, 2), Rational(-3, 2), Rational(1));
  auto neighbors = [](const Vertex& v, std::vector<Vertex>& out) {
    out.push_back(Vertex{v[0] + 1, v[1]});
    out.push_back(Vertex{v[0] - 1, v[1]});
    const bool even = ((v[0] + v[1]) % 2 + 2) % 2 == 0;
    out.push_back(Vertex{v[0], v[1] + (even ? 1 : -1)});
  };
  return GraphView(std::move(traits), neighbors, {}, lattice_parser(2));
}

GraphView make_egraph() {
  GraphTraits traits;
  traits.name = "egraph";
  traits.degree_bound = 3;
  traits.regular_degree = 3;
  traits.origin = Vertex{0, 1};
  for (std::int64_t a = 1; a <= 6; ++a) traits.orbit_representatives.push_back(Vertex{0, a});
  traits.radius_homogeneous = false;
  auto neighbors = [](const Vertex& v, std::vector<Vertex>& out) {
    const std::int64_t k = v[0];
    switch (v[1]) {
      case 1:
        out.insert(out.end(), {Vertex{k, 2}, Vertex{k, 3}, Vertex{k - 1, 6}});
        break;
      case 2:
        out.insert(out.end(), {Vertex{k, 1}, Vertex{k, 3}, Vertex{k, 5}});
        break;
      case 3:
        out.insert(out.end(), {Vertex{k, 1}, Vertex{k, 2}, Vertex{k, 4}});
        break;
      case 4:
        out.insert(out.end(), {Vertex{k, 3}, Vertex{k, 5}, Vertex{k, 6}});
        break;
      case 5:
        out.insert(out.end(), {Vertex{k, 4}, Vertex{k, 2}, Vertex{k, 6}});
        break;
      case 6:
        out.insert(out.end(), {Vertex{k, 4}, Vertex{k, 5}, Vertex{k + 1, 1}});
        break;
      default:
        break;
    }
  };
  return GraphView(std::move(traits), neighbors, block_formatter(), block_parser(6));
}

GraphView make_kmz(int m) {
  if (m < 1) throw InvalidArgument("K_m x Z needs m >= 1");
  GraphTraits traits;
  traits.name = "kmz:" + std::to_string(m);
  traits.degree_bound = static_cast<std::size_t>(m) + 1;
  traits.regular_degree = traits.degree_bound;
  traits.origin = Vertex{0, 1};
  traits.orbit_representatives = {traits.origin};
  traits.radius_homogeneous = true;
  // |B(x,1)| = 1, |B(x,k)| = m(2k - 3) + 2 for k >= 2.
  ClosedFormBalls balls;
  balls.poly = Polynomial({Rational(2 - 3 * static_cast<std::int64_t>(m)), Rational(2 * static_cast<std::int64_t>(m))});
  balls.valid_from = 2;
  balls.initial = {BigInt(1)};
  traits.closed_form = balls;
  auto neighbors = [m](const Vertex& v, std::vector<Vertex>& out) {
    for (std::int64_t b = 1; b <= m; ++b) {
      if (b != v[1]) out.push_back(Vertex{v[0], b});
    }
    out.push_back(Vertex{v[0] + 1, v[1]});
    out.push_back(Vertex{v[0] - 1, v[1]});
  };
  return GraphView(std::move(traits), neighbors, block_formatter(), block_parser(m));
}

GraphView make_family(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::kZd:
      return make_zd(spec.parameter);
    case FamilyKind::kTriangular:
      return make_triangular();
    case FamilyKind::kHexagonal:
      return make_hexagonal();
    case FamilyKind::kEGraph:
      return make_egraph();
    case FamilyKind::kKmZ:
      return make_kmz(spec.parameter);
    case FamilyKind::kIngested: {
      const FiniteGraph g = read_edge_list_file(spec.path);
      if (g.size() == 0) throw InvalidArgument("edge list '" + spec.path + "' is empty");
      return g.view("file:" + spec.path);
    }
  }
  throw InvalidArgument("unknown family kind");
}

HomogeneityReport check_radius_homogeneous(const GraphView& graph, const std::vector<Vertex>& centers,
                                           int max_radius, const Limits& limits) {
  if (centers.empty()) throw InvalidArgument("homogeneity check needs at least one center");
  HomogeneityReport report;
  for (const Vertex& c : centers) report.profiles.push_back(ball_profile(graph, nullptr, c, max_radius, limits));
  const BallProfile& reference = report.profiles.front();
  for (int r = 1; r <= max_radius && report.homogeneous; ++r) {
    for (std::size_t i = 1; i < report.profiles.size(); ++i) {
      const BallProfile& other = report.profiles[i];
      if (other.size_at(r) != reference.size_at(r)) {
        report.homogeneous = false;
        report.witness = HomogeneityWitness{reference.center, other.center, r, reference.size_at(r), other.size_at(r)};
        break;
      }
    }
  }
  return report;
}

const char* to_string(GrowthVerdict v) {
  return v == GrowthVerdict::kExceedsQuadratic ? "exceeds-quadratic" : "consistent-with-recurrence";
}

GrowthReport growth_report(const GraphView& graph, const Vertex& center, int max_radius, const Limits& limits) {
  const BallProfile profile = ball_profile(graph, nullptr, center, max_radius, limits);
  GrowthReport report;
  report.center = center;
  report.cardinalities = profile.cardinality;
  for (int n = 1; n <= max_radius; ++n) {
    const Rational c(BigInt(static_cast<unsigned long>(profile.size_at(n))), BigInt(n) * n);
    if (n == 1 || c > report.quadratic_bound) {
      report.quadratic_bound = c;
      report.quadratic_bound_at = n;
    }
  }
  if (max_radius >= 2) {
    const auto hi = static_cast<double>(profile.size_at(max_radius));
    const auto lo = static_cast<double>(profile.size_at(max_radius / 2));
    report.growth_exponent = std::log2(hi / lo);
  }
  report.verdict =
      report.growth_exponent > 2.5 ? GrowthVerdict::kExceedsQuadratic : GrowthVerdict::kConsistentWithRecurrence;
  return report;
}

namespace {

// Checks the closed form against BFS from the origin while balls stay small.
void verify_closed_form(const GraphView& graph, const ClosedFormBalls& balls, int max_k, const Limits& limits) {
  int top = 1;
  while (top < max_k && balls.at(top + 1) <= 200'000) ++top;
  const BallProfile profile = ball_profile(graph, nullptr, graph.traits().origin, top, limits);
  for (int k = 1; k <= top; ++k) {
    if (BigInt(static_cast<unsigned long>(profile.size_at(k))) != balls.at(k)) {
      throw ConsistencyError("closed form for " + graph.name() + " disagrees with BFS at k=" + std::to_string(k));
    }
  }
}

CertifiedConstant scan_counting(const GraphView& graph, const std::vector<Vertex>& centers, int max_radius,
                                Certification kind, const Limits& limits) {
  CertifiedConstant out;
  out.kind = kind;
  out.cutoff = max_radius;
  bool first = true;
  for (const Vertex& c : centers) {
    const BallProfile p = ball_profile(graph, nullptr, c, 2 * max_radius, limits);
    for (int r = 1; r <= max_radius; ++r) {
      const Rational ratio(BigInt(static_cast<unsigned long>(p.size_at(2 * r))),
                           BigInt(static_cast<unsigned long>(p.size_at(r))));
      if (first || ratio > out.value) {
        out.value = ratio;
        out.argmax_radius = r;
        out.argmax_center = c;
        first = false;
      }
    }
  }
  return out;
}

}  // namespace

CertifiedConstant family_constant(const GraphView& graph, int max_radius, const Limits& limits) {
  if (max_radius < 1) throw InvalidArgument("max_radius must be >= 1");
  const GraphTraits& traits = graph.traits();
  if (traits.closed_form) {
    CertifiedConstant out = certify_ratio_supremum(*traits.closed_form);
    verify_closed_form(graph, *traits.closed_form, std::max(2 * out.cutoff, std::min(max_radius, 30)), limits);
    return out;
  }
  if (traits.finite_vertices) {
    // Ratios are 1 once B(x, r) covers the component, so radius n suffices.
    const int radius = static_cast<int>(std::min<std::size_t>(traits.finite_vertices->size(), 1'000'000));
    return scan_counting(graph, *traits.finite_vertices, std::max(1, radius), Certification::kFinite, limits);
  }
  if (!traits.orbit_representatives.empty()) {
    return scan_counting(graph, traits.orbit_representatives, max_radius, Certification::kRangeCertified, limits);
  }
  throw InvalidArgument(graph.name() + " has no closed form, no orbit representatives and is infinite");
}

CertifiedConstant family_constant(const FamilySpec& spec, int max_radius, const Limits& limits) {
  return family_constant(make_family(spec), max_radius, limits);
}

}  // namespace dlab
