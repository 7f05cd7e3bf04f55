#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace hamcode {

// Vertex of the Hamming graph H(m, q): a word of length m over {0..q-1}.
// Ordering is lexicographic, which coincides with numeric order of rank().
class Vertex {
 public:
  Vertex() = default;
  Vertex(std::vector<int> symbols, int q);

  int m() const { return static_cast<int>(symbols_.size()); }
  int q() const { return q_; }
  int operator[](int i) const { return symbols_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& symbols() const { return symbols_; }

  friend bool operator==(const Vertex& a, const Vertex& b) {
    return a.q_ == b.q_ && a.symbols_ == b.symbols_;
  }
  friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
    return a.symbols_ <=> b.symbols_;
  }

 private:
  std::vector<int> symbols_;
  int q_ = 2;
};

// Number of positions where u and v differ; requires matching (m, q).
int hamming_distance(const Vertex& u, const Vertex& v);

// Indices of nonzero entries, ascending.
std::vector<int> support(const Vertex& v);
int weight(const Vertex& v);

Vertex zero_vertex(int m, int q);
// (s^k, 0^(m-k)): symbol s in the first k coordinates, zero elsewhere.
Vertex prefix_vertex(int symbol, int k, int m, int q);

// Mixed-radix rank with coordinate 0 most significant, so rank order is
// lexicographic order. Requires q^m to fit in 64 bits (checked by caller
// via vertex_space_size).
std::uint64_t vertex_rank(const Vertex& v);
Vertex vertex_unrank(std::uint64_t r, int m, int q);

inline constexpr std::uint64_t kDefaultVertexCapacity = std::uint64_t{1} << 24;

// q^m, throwing CapacityError if it exceeds cap.
std::uint64_t vertex_space_size(int m, int q,
                                std::uint64_t cap = kDefaultVertexCapacity);

// Packed bit representations for q = 2, m <= 64.
std::uint64_t pack_bits(const Vertex& v);
Vertex unpack_bits(std::uint64_t bits, int m);

}  // namespace hamcode
