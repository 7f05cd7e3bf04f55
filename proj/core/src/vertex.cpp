#include "hamcode/vertex.hpp"

#include <string>

#include "hamcode/errors.hpp"

namespace hamcode {

Vertex::Vertex(std::vector<int> symbols, int q) : symbols_(std::move(symbols)), q_(q) {
  if (q_ < 2) throw PreconditionError("alphabet size must be at least 2");
  for (int s : symbols_) {
    if (s < 0 || s >= q_) {
      throw PreconditionError("symbol out of range for alphabet size " + std::to_string(q_));
    }
  }
}

int hamming_distance(const Vertex& u, const Vertex& v) {
  if (u.m() != v.m() || u.q() != v.q()) {
    throw DimensionError("hamming_distance: vertices from different spaces");
  }
  int d = 0;
  for (int i = 0; i < u.m(); ++i) {
    if (u[i] != v[i]) ++d;
  }
  return d;
}

std::vector<int> support(const Vertex& v) {
  std::vector<int> s;
  for (int i = 0; i < v.m(); ++i) {
    if (v[i] != 0) s.push_back(i);
  }
  return s;
}

int weight(const Vertex& v) { return static_cast<int>(support(v).size()); }

Vertex zero_vertex(int m, int q) {
  return Vertex(std::vector<int>(static_cast<std::size_t>(m), 0), q);
}

Vertex prefix_vertex(int symbol, int k, int m, int q) {
  if (k < 0 || k > m) throw PreconditionError("prefix length out of range");
  std::vector<int> s(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < k; ++i) s[static_cast<std::size_t>(i)] = symbol;
  return Vertex(std::move(s), q);
}

std::uint64_t vertex_rank(const Vertex& v) {
  std::uint64_t r = 0;
  for (int i = 0; i < v.m(); ++i) {
    r = r * static_cast<std::uint64_t>(v.q()) + static_cast<std::uint64_t>(v[i]);
  }
  return r;
}

Vertex vertex_unrank(std::uint64_t r, int m, int q) {
  std::vector<int> s(static_cast<std::size_t>(m), 0);
  for (int i = m - 1; i >= 0; --i) {
    s[static_cast<std::size_t>(i)] = static_cast<int>(r % static_cast<std::uint64_t>(q));
    r /= static_cast<std::uint64_t>(q);
  }
  return Vertex(std::move(s), q);
}

std::uint64_t vertex_space_size(int m, int q, std::uint64_t cap) {
  std::uint64_t size = 1;
  for (int i = 0; i < m; ++i) {
    if (size > cap / static_cast<std::uint64_t>(q)) {
      throw CapacityError("vertex space q^m exceeds capacity of " + std::to_string(cap) +
                          " (m=" + std::to_string(m) + ", q=" + std::to_string(q) + ")");
    }
    size *= static_cast<std::uint64_t>(q);
  }
  if (size > cap) {
    throw CapacityError("vertex space q^m exceeds capacity of " + std::to_string(cap));
  }
  return size;
}

// Bit i of the packed word is coordinate i. This is independent of rank
// order; packed words exist only for fast distance/translation arithmetic.
std::uint64_t pack_bits(const Vertex& v) {
  if (v.q() != 2) throw PreconditionError("pack_bits requires a binary alphabet");
  if (v.m() > 64) throw CapacityError("pack_bits requires m <= 64");
  std::uint64_t b = 0;
  for (int i = 0; i < v.m(); ++i) {
    if (v[i]) b |= std::uint64_t{1} << i;
  }
  return b;
}

Vertex unpack_bits(std::uint64_t bits, int m) {
  std::vector<int> s(static_cast<std::size_t>(m), 0);
  for (int i = 0; i < m; ++i) {
    s[static_cast<std::size_t>(i)] = static_cast<int>((bits >> i) & 1u);
  }
  return Vertex(std::move(s), 2);
}

}  // namespace hamcode
