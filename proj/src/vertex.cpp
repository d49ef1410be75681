#include "dlab/vertex.hpp"

#include <algorithm>
#include <cstdlib>

#include "dlab/errors.hpp"

namespace dlab {

Vertex::Vertex(std::initializer_list<std::int64_t> coords)
    : Vertex(std::span<const std::int64_t>(coords.begin(), coords.size())) {}

Vertex::Vertex(std::span<const std::int64_t> coords) : rank_(coords.size()) {
  if (coords.size() > kMaxRank) throw InvalidArgument("vertex rank exceeds " + std::to_string(kMaxRank));
  std::copy(coords.begin(), coords.end(), coords_.begin());
}

Vertex Vertex::zero(std::size_t rank) {
  if (rank > kMaxRank) throw InvalidArgument("vertex rank exceeds " + std::to_string(kMaxRank));
  Vertex v;
  v.rank_ = rank;
  return v;
}

Vertex Vertex::operator+(const Vertex& offset) const {
  if (offset.rank_ != rank_) throw InvalidArgument("vertex rank mismatch");
  Vertex out = *this;
  for (std::size_t i = 0; i < rank_; ++i) out.coords_[i] += offset.coords_[i];
  return out;
}

Vertex Vertex::operator-(const Vertex& offset) const {
  if (offset.rank_ != rank_) throw InvalidArgument("vertex rank mismatch");
  Vertex out = *this;
  for (std::size_t i = 0; i < rank_; ++i) out.coords_[i] -= offset.coords_[i];
  return out;
}

std::int64_t Vertex::l1_norm() const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank_; ++i) s += std::llabs(coords_[i]);
  return s;
}

std::int64_t Vertex::linf_norm() const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank_; ++i) s = std::max<std::int64_t>(s, std::llabs(coords_[i]));
  return s;
}

std::string Vertex::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < rank_; ++i) {
    if (i > 0) out += ',';
    out += std::to_string(coords_[i]);
  }
  return out + ")";
}

bool operator==(const Vertex& a, const Vertex& b) {
  return a.rank_ == b.rank_ && std::equal(a.coords_.begin(), a.coords_.begin() + a.rank_, b.coords_.begin());
}

std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
  if (a.rank_ != b.rank_) return a.rank_ <=> b.rank_;
  for (std::size_t i = 0; i < a.rank_; ++i) {
    if (a.coords_[i] != b.coords_[i]) return a.coords_[i] <=> b.coords_[i];
  }
  return std::strong_ordering::equal;
}

std::size_t VertexHash::operator()(const Vertex& v) const noexcept {
  // splitmix-style mixing of each coordinate
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.rank();
  for (std::int64_t c : v.coords()) {
    std::uint64_t z = static_cast<std::uint64_t>(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h ^= z ^ (z >> 31);
  }
  return static_cast<std::size_t>(h);
}

}  // namespace dlab
