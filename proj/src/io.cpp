#include "dlab/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "dlab/errors.hpp"

namespace dlab {

namespace {

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  return in;
}

}  // namespace

FiniteGraph read_edge_list(std::istream& in) {
  FiniteGraph graph;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    std::istringstream fields(line);
    std::string a;
    std::string b;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw ParseError("edge list line " + std::to_string(lineno) + ": expected two tokens");
    }
    if (a == b) throw ParseError("edge list line " + std::to_string(lineno) + ": self-loop on '" + a + "'");
    const std::size_t ia = graph.intern(a);
    const std::size_t ib = graph.intern(b);
    graph.add_edge(ia, ib);
  }
  return graph;
}

FiniteGraph read_edge_list_file(const std::string& path) {
  auto in = open(path);
  return read_edge_list(in);
}

VertexMeasure read_measure_table(std::istream& in, const GraphView& graph, std::string name) {
  std::unordered_map<Vertex, Rational, VertexHash> values;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (skippable(line)) continue;
    std::istringstream fields(line);
    std::string token;
    std::string value;
    std::string extra;
    if (!(fields >> token >> value) || (fields >> extra)) {
      throw ParseError("measure table line " + std::to_string(lineno) + ": expected 'token p/q'");
    }
    const Rational q = Rational::parse(value);
    if (q.sign() <= 0) {
      throw NonPositiveDensity("measure table line " + std::to_string(lineno) + ": density must be positive");
    }
    if (!values.emplace(graph.parse(token), q).second) {
      throw ParseError("measure table line " + std::to_string(lineno) + ": duplicate vertex '" + token + "'");
    }
  }
  return VertexMeasure::table(std::move(name), std::move(values));
}

VertexMeasure read_measure_table_file(const std::string& path, const GraphView& graph) {
  auto in = open(path);
  return read_measure_table(in, graph, path);
}

}  // namespace dlab
