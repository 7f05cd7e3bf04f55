#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hamcode/automorphism.hpp"
#include "hamcode/vertex.hpp"

namespace hamcode {

// Nonempty set of vertices of H(m, q), kept sorted lexicographically with
// no duplicates.
class Code {
 public:
  Code(int m, int q, std::vector<Vertex> words);

  int m() const { return m_; }
  int q() const { return q_; }
  std::size_t size() const { return words_.size(); }
  const std::vector<Vertex>& codewords() const { return words_; }
  const Vertex& word(std::size_t i) const { return words_[i]; }
  bool contains(const Vertex& v) const;

  friend bool operator==(const Code&, const Code&) = default;

 private:
  int m_;
  int q_;
  std::vector<Vertex> words_;
};

// Minimum over distinct pairs; needs at least two codewords.
int min_distance(const Code& c);

Code apply(const HammingAutomorphism& x, const Code& c);

// Distance partition of the ambient space: cell i holds the vertices at
// distance exactly i from the code, for i = 0..covering_radius. Built by
// multi-source BFS over the whole vertex space, so q^m must fit under cap.
class DistancePartition {
 public:
  DistancePartition(const Code& c, std::uint64_t cap = kDefaultVertexCapacity);

  int m() const { return m_; }
  int q() const { return q_; }
  int covering_radius() const { return rho_; }
  const std::vector<std::uint64_t>& cell_sizes() const { return cell_sizes_; }
  int distance_to_code(const Vertex& v) const;
  // Vertices of cell i in lexicographic order (materialized on demand).
  std::vector<Vertex> cell(int i) const;
  // Per-rank distances, indexed by vertex_rank.
  const std::vector<std::uint8_t>& distances_by_rank() const { return dist_; }

 private:
  int m_;
  int q_;
  int rho_;
  std::vector<std::uint8_t> dist_;
  std::vector<std::uint64_t> cell_sizes_;
};

DistancePartition distance_partition(const Code& c,
                                     std::uint64_t cap = kDefaultVertexCapacity);

// Codewords gamma with Diff(alpha, gamma) = Diff(alpha, beta), where
// Diff(u, v) = {i : u_i != v_i}. Requires alpha, beta in C and alpha != beta;
// beta is always in the result, alpha never is.
std::vector<Vertex> diff_class(const Vertex& alpha, const Vertex& beta, const Code& c);

// Positions where u and v differ, ascending.
std::vector<int> diff_entries(const Vertex& u, const Vertex& v);

// Automorphism x with: alpha^x constant a, the entries distinguishing alpha
// from beta moved order-preservingly onto the first d coordinates (the rest
// order-preservingly onto the remainder), and each codeword in the class of
// beta sent to a word (c^d, a^(m-d)) with c != a. Requires alpha, beta in C
// at distance exactly min_distance(C). Deterministic: repeated calls return
// the identical map.
struct Normalization {
  HammingAutomorphism map;
  Code image;
  int d;  // hamming_distance(alpha, beta)
};
Normalization normalize(const Code& c, const Vertex& alpha, const Vertex& beta, int a);

}  // namespace hamcode
