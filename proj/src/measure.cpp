#include "dlab/measure.hpp"

#include <memory>

#include "dlab/errors.hpp"

namespace dlab {

VertexMeasure::VertexMeasure(std::string name, VertexFunction density, bool translation_invariant)
    : name_(std::move(name)), density_(std::move(density)), translation_invariant_(translation_invariant) {
  if (!density_) throw InvalidArgument("measure '" + name_ + "' has no density");
}

VertexMeasure VertexMeasure::counting() {
  return VertexMeasure("counting", [](const Vertex&) { return Rational(1); }, true);
}

VertexMeasure VertexMeasure::table(std::string name, std::unordered_map<Vertex, Rational, VertexHash> values,
                                   std::optional<Rational> fallback) {
  auto shared = std::make_shared<const std::unordered_map<Vertex, Rational, VertexHash>>(std::move(values));
  const std::string label = name;
  return VertexMeasure(std::move(name), [shared, fallback, label](const Vertex& v) {
    const auto it = shared->find(v);
    if (it != shared->end()) return it->second;
    if (fallback) return *fallback;
    throw InvalidArgument("measure '" + label + "' has no value at " + v.str());
  });
}

Rational VertexMeasure::operator()(const Vertex& v) const {
  Rational value = density_(v);
  if (value.sign() <= 0) {
    throw NonPositiveDensity("measure '" + name_ + "' has nonpositive density " + value.str() + " at " +
                             v.str());
  }
  return value;
}

VertexMeasure VertexMeasure::scaled(const Rational& factor) const {
  if (factor.sign() <= 0) throw InvalidArgument("scale factor must be positive");
  auto inner = density_;
  return VertexMeasure(factor.str() + "*" + name_, [inner, factor](const Vertex& v) { return factor * inner(v); },
                       translation_invariant_);
}

VertexMeasure VertexMeasure::translated(const Vertex& offset) const {
  auto inner = density_;
  return VertexMeasure(name_ + "@" + offset.str(), [inner, offset](const Vertex& v) { return inner(v + offset); },
                       translation_invariant_);
}

VertexMeasure operator+(const VertexMeasure& a, const VertexMeasure& b) {
  auto fa = a.density_;
  auto fb = b.density_;
  return VertexMeasure(a.name_ + "+" + b.name_, [fa, fb](const Vertex& v) { return fa(v) + fb(v); },
                       a.translation_invariant_ && b.translation_invariant_);
}

}  // namespace dlab
