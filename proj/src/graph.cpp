#include "dlab/graph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "dlab/errors.hpp"

namespace dlab {

BigInt ClosedFormBalls::at(std::int64_t k) const {
  if (k < 1) throw InvalidArgument("ball radius must be >= 1");
  if (k < valid_from) return initial.at(static_cast<std::size_t>(k - 1));
  const Rational value = poly(Rational(k));
  if (!value.is_integer()) {
    throw ConsistencyError("closed-form ball size " + value.str() + " at k=" + std::to_string(k) +
                           " is not an integer");
  }
  return value.num();
}

GraphView::GraphView(GraphTraits traits, NeighborFn neighbors, FormatFn format, ParseFn parse)
    : impl_(std::make_shared<Impl>(Impl{std::move(traits), std::move(neighbors), std::move(format),
                                        std::move(parse)})) {}

void GraphView::neighbors(const Vertex& v, std::vector<Vertex>& out) const {
  out.clear();
  impl_->neighbors(v, out);
}

std::vector<Vertex> GraphView::neighbors(const Vertex& v) const {
  std::vector<Vertex> out;
  neighbors(v, out);
  return out;
}

std::string GraphView::format(const Vertex& v) const {
  return impl_->format ? impl_->format(v) : v.str();
}

Vertex GraphView::parse(std::string_view token) const {
  std::optional<Vertex> v;
  if (impl_->parse) v = impl_->parse(token);
  if (!v) throw ParseError("cannot parse vertex '" + std::string(token) + "' for graph " + name());
  return *v;
}

FiniteGraph::FiniteGraph(std::size_t n) : adj_(n) {
  tokens_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    tokens_.push_back(std::to_string(i));
    index_.emplace(tokens_.back(), i);
  }
}

void FiniteGraph::add_edge(std::size_t a, std::size_t b) {
  if (a >= adj_.size() || b >= adj_.size()) throw InvalidArgument("edge endpoint out of range");
  if (a == b) throw InvalidArgument("self-loop on vertex " + tokens_[a]);
  if (std::find(adj_[a].begin(), adj_[a].end(), b) != adj_[a].end()) return;
  adj_[a].push_back(b);
  adj_[b].push_back(a);
}

std::size_t FiniteGraph::intern(std::string_view token) {
  if (auto id = find(token)) return *id;
  adj_.emplace_back();
  tokens_.emplace_back(token);
  index_.emplace(tokens_.back(), adj_.size() - 1);
  return adj_.size() - 1;
}

std::optional<std::size_t> FiniteGraph::find(std::string_view token) const {
  const auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& a : adj_) twice += a.size();
  return twice / 2;
}

bool FiniteGraph::connected() const {
  if (adj_.empty()) return true;
  std::vector<char> seen(adj_.size(), 0);
  std::deque<std::size_t> queue{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (std::size_t w : adj_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
    }
  }
  return reached == adj_.size();
}

std::size_t FiniteGraph::max_degree() const {
  std::size_t d = 0;
  for (const auto& a : adj_) d = std::max(d, a.size());
  return d;
}

GraphView FiniteGraph::view(std::string name) const {
  auto shared = std::make_shared<const FiniteGraph>(*this);
  GraphTraits traits;
  traits.name = std::move(name);
  traits.degree_bound = max_degree();
  traits.origin = Vertex{0};
  std::vector<Vertex> all;
  all.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) all.push_back(Vertex{static_cast<std::int64_t>(i)});
  traits.finite_vertices = std::move(all);
  auto neighbors = [shared](const Vertex& v, std::vector<Vertex>& out) {
    const auto id = static_cast<std::size_t>(v[0]);
    if (v.rank() != 1 || v[0] < 0 || id >= shared->size()) return;
    for (std::size_t w : shared->neighbors(id)) out.push_back(Vertex{static_cast<std::int64_t>(w)});
  };
  auto format = [shared](const Vertex& v) -> std::string {
    const auto id = static_cast<std::size_t>(v[0]);
    return v.rank() == 1 && v[0] >= 0 && id < shared->size() ? shared->token(id) : v.str();
  };
  auto parse = [shared](std::string_view token) -> std::optional<Vertex> {
    if (auto id = shared->find(token)) return Vertex{static_cast<std::int64_t>(*id)};
    return std::nullopt;
  };
  return GraphView(std::move(traits), neighbors, format, parse);
}

FiniteGraph FiniteGraph::complete(std::size_t n) {
  FiniteGraph g(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) g.add_edge(a, b);
  }
  return g;
}

FiniteGraph FiniteGraph::cycle(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
  FiniteGraph g(n);
  for (std::size_t a = 0; a < n; ++a) g.add_edge(a, (a + 1) % n);
  return g;
}

FiniteGraph FiniteGraph::path(std::size_t n) {
  FiniteGraph g(n);
  for (std::size_t a = 0; a + 1 < n; ++a) g.add_edge(a, a + 1);
  return g;
}

FiniteGraph FiniteGraph::star(std::size_t n) {
  if (n < 1) throw InvalidArgument("star needs at least one vertex");
  FiniteGraph g(n);
  for (std::size_t a = 1; a < n; ++a) g.add_edge(0, a);
  return g;
}

}  // namespace dlab
