#pragma once

#include <iosfwd>
#include <string>

#include "dlab/graph.hpp"
#include "dlab/measure.hpp"

namespace dlab {

/// Edge list: one edge per line as two whitespace-separated tokens; blank
/// lines and lines starting with '#' are skipped.
FiniteGraph read_edge_list(std::istream& in);
FiniteGraph read_edge_list_file(const std::string& path);

/// Measure table: one "token p/q" line per vertex of `graph`. Tokens are
/// resolved with GraphView::parse. Every value must be positive.
VertexMeasure read_measure_table(std::istream& in, const GraphView& graph, std::string name = "table");
VertexMeasure read_measure_table_file(const std::string& path, const GraphView& graph);

}  // namespace dlab
