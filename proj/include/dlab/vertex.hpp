#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>

namespace dlab {

/// Canonical vertex encoding: a short integer vector.
///
/// Lattice vertices store their coordinates, block families (E, K_m x Z) store
/// (block, slot), and ingested graphs store a single index into the token table.
class Vertex {
 public:
  static constexpr std::size_t kMaxRank = 8;

  Vertex() = default;
  Vertex(std::initializer_list<std::int64_t> coords);
  explicit Vertex(std::span<const std::int64_t> coords);
  /// The origin of Z^rank.
  static Vertex zero(std::size_t rank);

  [[nodiscard]] std::size_t rank() const { return rank_; }
  [[nodiscard]] std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  [[nodiscard]] std::span<const std::int64_t> coords() const { return {coords_.data(), rank_}; }
  void set(std::size_t i, std::int64_t value) { coords_[i] = value; }

  [[nodiscard]] Vertex operator+(const Vertex& offset) const;
  [[nodiscard]] Vertex operator-(const Vertex& offset) const;
  [[nodiscard]] std::int64_t l1_norm() const;
  [[nodiscard]] std::int64_t linf_norm() const;
  /// "(x,y,z)".
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Vertex& a, const Vertex& b);
  friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b);

 private:
  std::array<std::int64_t, kMaxRank> coords_{};
  std::size_t rank_ = 0;
};

struct VertexHash {
  std::size_t operator()(const Vertex& v) const noexcept;
};

}  // namespace dlab
