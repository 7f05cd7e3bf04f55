#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hamcode/bigint.hpp"
#include "hamcode/code.hpp"
#include "hamcode/groups.hpp"

namespace hamcode {

// Block design on points {0..v-1}: duplicate-free blocks of one common
// size k, kept in canonical (sorted) order. An empty block list is the
// empty design.
class DesignBlocks {
 public:
  DesignBlocks(int v, int k, std::vector<std::vector<int>> blocks);

  int v() const { return v_; }
  int k() const { return k_; }
  std::size_t block_count() const { return blocks_.size(); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }

  friend bool operator==(const DesignBlocks&, const DesignBlocks&) = default;

 private:
  int v_;
  int k_;
  std::vector<std::vector<int>> blocks_;
};

// Supports of the weight-k codewords of a binary code, as blocks on the m
// coordinates.
DesignBlocks weight_class_blocks(const Code& c, int k);

// Each block replaced by its complement in the point set.
DesignBlocks complement_design(const DesignBlocks& d);

struct DesignWitness {
  Vertex u;  // two weight-s vertices covered by differing numbers of blocks
  Vertex v;
  std::uint64_t count_u = 0;
  std::uint64_t count_v = 0;
};

struct DesignLambdaResult {
  bool is_design = false;
  std::uint64_t lambda = 0;  // meaningful only when is_design
  std::optional<DesignWitness> witness;
};

// Number of blocks containing each s-subset of points, if that number is
// constant; otherwise two witness subsets (as weight-s vertices of H(v,2))
// with differing counts.
DesignLambdaResult design_lambda(const DesignBlocks& d, int s);

// Same question for the weight-k class of a code over any alphabet: counts
// the weight-k codewords covering each weight-s vertex, where alpha covers
// nu iff nu_i != 0 implies nu_i = alpha_i. For q = 2 this coincides with
// the block form on weight_class_blocks(c, k).
DesignLambdaResult design_lambda_weight_class(const Code& c, int k, int s);

struct DesignCounts {
  BigRat lambda;
  BigRat b;
  BigRat r;
  bool feasible = false;  // lambda, b, r all integral
};

// Counting equations for an s-(v, k, lambda) design:
// b = lambda * v(v-1)...(v-s+1) / (k(k-1)...(k-s+1)), r = b k / v.
DesignCounts design_counts(int v, int k, const BigRat& lambda, int s);

// The lambda forced by a prescribed block count (inverse of the b formula).
BigRat lambda_for_block_count(int v, int k, int s, const BigInt& b);

// Point permutations preserving the block set, returned over H(v,2) as pure
// coordinate permutations. Capacity: v <= 16 and at most 64 blocks.
GroupGens design_autgroup(const DesignBlocks& d);

}  // namespace hamcode
