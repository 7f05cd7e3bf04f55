#include "hamcode/designs.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hamcode/errors.hpp"
#include "hamcode/spectra.hpp"
#include "word_perm.hpp"

namespace hamcode {

DesignBlocks::DesignBlocks(int v, int k, std::vector<std::vector<int>> blocks)
    : v_(v), k_(k), blocks_(std::move(blocks)) {
  if (v_ < 1) throw PreconditionError("design needs at least one point");
  if (k_ < 0 || k_ > v_) throw PreconditionError("block size out of range");
  for (auto& block : blocks_) {
    if (block.size() != static_cast<std::size_t>(k_)) {
      throw PreconditionError("block of wrong size");
    }
    std::sort(block.begin(), block.end());
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (block[i] < 0 || block[i] >= v_) throw PreconditionError("block point out of range");
      if (i > 0 && block[i] == block[i - 1]) throw PreconditionError("repeated point in block");
    }
  }
  std::sort(blocks_.begin(), blocks_.end());
  if (std::adjacent_find(blocks_.begin(), blocks_.end()) != blocks_.end()) {
    throw PreconditionError("duplicate block");
  }
}

DesignBlocks weight_class_blocks(const Code& c, int k) {
  if (c.q() != 2) throw std::domain_error("block extraction requires a binary code");
  if (k < 0 || k > c.m()) throw std::domain_error("weight out of range");
  std::vector<std::vector<int>> blocks;
  for (const Vertex& w : c.codewords()) {
    if (weight(w) == k) blocks.push_back(support(w));
  }
  return DesignBlocks(c.m(), k, std::move(blocks));
}

DesignBlocks complement_design(const DesignBlocks& d) {
  std::vector<std::vector<int>> blocks;
  blocks.reserve(d.block_count());
  for (const auto& block : d.blocks()) {
    std::vector<int> comp;
    comp.reserve(static_cast<std::size_t>(d.v() - d.k()));
    std::size_t at = 0;
    for (int p = 0; p < d.v(); ++p) {
      if (at < block.size() && block[at] == p) {
        ++at;
      } else {
        comp.push_back(p);
      }
    }
    blocks.push_back(std::move(comp));
  }
  return DesignBlocks(d.v(), d.v() - d.k(), std::move(blocks));
}

namespace {

constexpr std::uint64_t kEnumerationCap = 5'000'000;

Vertex subset_vertex(const std::vector<int>& points, int v) {
  std::vector<int> sym(static_cast<std::size_t>(v), 0);
  for (int p : points) sym[static_cast<std::size_t>(p)] = 1;
  return Vertex(std::move(sym), 2);
}

// Advance a sorted s-subset of {0..v-1} to its lexicographic successor.
bool next_subset(std::vector<int>& subset, int v) {
  const int s = static_cast<int>(subset.size());
  for (int i = s - 1; i >= 0; --i) {
    if (subset[static_cast<std::size_t>(i)] < v - (s - i)) {
      ++subset[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < s; ++j) {
        subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

DesignLambdaResult design_lambda(const DesignBlocks& d, int s) {
  if (s < 0 || s > d.k()) throw PreconditionError("design strength must satisfy 0 <= s <= k");
  if (binomial(d.v(), s) > BigInt(kEnumerationCap)) {
    throw CapacityError("too many point subsets to enumerate");
  }
  DesignLambdaResult result;
  std::vector<int> subset(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) subset[static_cast<std::size_t>(i)] = i;
  bool first = true;
  std::vector<int> ref_subset;
  std::uint64_t ref_count = 0;
  do {
    std::uint64_t count = 0;
    for (const auto& block : d.blocks()) {
      if (std::includes(block.begin(), block.end(), subset.begin(), subset.end())) ++count;
    }
    if (first) {
      first = false;
      ref_subset = subset;
      ref_count = count;
    } else if (count != ref_count) {
      result.is_design = false;
      result.witness = DesignWitness{subset_vertex(ref_subset, d.v()),
                                     subset_vertex(subset, d.v()), ref_count, count};
      return result;
    }
  } while (next_subset(subset, d.v()));
  result.is_design = true;
  result.lambda = ref_count;
  return result;
}

namespace {

bool covers(const Vertex& nu, const Vertex& alpha) {
  for (int i = 0; i < nu.m(); ++i) {
    if (nu[i] != 0 && nu[i] != alpha[i]) return false;
  }
  return true;
}

}  // namespace

DesignLambdaResult design_lambda_weight_class(const Code& c, int k, int s) {
  if (k < 0 || k > c.m()) throw std::domain_error("weight out of range");
  if (s < 0 || s > k) throw PreconditionError("design strength must satisfy 0 <= s <= k");
  BigInt nu_count = binomial(c.m(), s);
  for (int i = 0; i < s; ++i) nu_count *= c.q() - 1;
  if (nu_count > BigInt(kEnumerationCap)) {
    throw CapacityError("too many weight-s vertices to enumerate");
  }

  std::vector<Vertex> klass;
  for (const Vertex& w : c.codewords()) {
    if (weight(w) == k) klass.push_back(w);
  }

  DesignLambdaResult result;
  std::vector<int> subset(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) subset[static_cast<std::size_t>(i)] = i;
  bool first = true;
  Vertex ref;
  std::uint64_t ref_count = 0;
  // Supports in lexicographic order, symbol tuples in odometer order.
  do {
    std::vector<int> symbols(static_cast<std::size_t>(s), 1);
    while (true) {
      std::vector<int> sym(static_cast<std::size_t>(c.m()), 0);
      for (int i = 0; i < s; ++i) {
        sym[static_cast<std::size_t>(subset[static_cast<std::size_t>(i)])] =
            symbols[static_cast<std::size_t>(i)];
      }
      const Vertex nu(std::move(sym), c.q());
      std::uint64_t count = 0;
      for (const Vertex& alpha : klass) {
        if (covers(nu, alpha)) ++count;
      }
      if (first) {
        first = false;
        ref = nu;
        ref_count = count;
      } else if (count != ref_count) {
        result.is_design = false;
        result.witness = DesignWitness{ref, nu, ref_count, count};
        return result;
      }
      int pos = s - 1;
      while (pos >= 0 && symbols[static_cast<std::size_t>(pos)] == c.q() - 1) {
        symbols[static_cast<std::size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++symbols[static_cast<std::size_t>(pos)];
    }
  } while (next_subset(subset, c.m()));
  result.is_design = true;
  result.lambda = ref_count;
  return result;
}

DesignCounts design_counts(int v, int k, const BigRat& lambda, int s) {
  if (v < 1) throw PreconditionError("design needs at least one point");
  if (s < 1 || s > k || k > v) {
    throw PreconditionError("design counting needs 1 <= s <= k <= v");
  }
  DesignCounts out;
  out.lambda = lambda;
  out.b = lambda;
  for (int j = 0; j < s; ++j) {
    out.b *= v - j;
    out.b /= k - j;
  }
  out.r = out.b * k / v;
  out.feasible = boost::multiprecision::denominator(out.lambda) == 1 &&
                 boost::multiprecision::denominator(out.b) == 1 &&
                 boost::multiprecision::denominator(out.r) == 1;
  return out;
}

BigRat lambda_for_block_count(int v, int k, int s, const BigInt& b) {
  if (v < 1) throw PreconditionError("design needs at least one point");
  if (s < 1 || s > k || k > v) {
    throw PreconditionError("design counting needs 1 <= s <= k <= v");
  }
  BigRat lambda(b);
  for (int j = 0; j < s; ++j) {
    lambda *= k - j;
    lambda /= v - j;
  }
  return lambda;
}

GroupGens design_autgroup(const DesignBlocks& d) {
  if (d.v() > 16) throw CapacityError("design group search limited to 16 points");
  if (d.block_count() > 64) throw CapacityError("design group search limited to 64 blocks");
  const int v = d.v();
  if (d.block_count() == 0) {
    // No constraints: the full symmetric group on the points.
    if (v == 1) return GroupGens(1, 2, {});
    std::vector<int> cyc(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) cyc[static_cast<std::size_t>(i)] = i;
    std::vector<HammingAutomorphism> gens = {
        HammingAutomorphism::from_coord_perm(Perm::transposition(v, 0, 1), 2),
        HammingAutomorphism::from_coord_perm(Perm::cycle(v, cyc), 2),
    };
    return GroupGens(v, 2, std::move(gens));
  }

  std::vector<std::uint64_t> words;
  words.reserve(d.block_count());
  for (const auto& block : d.blocks()) {
    std::uint64_t w = 0;
    for (int p : block) w |= std::uint64_t{1} << p;
    words.push_back(w);
  }

  StabilizerChain chain(GroupGens(v, 2, {}), ActionDomain::Entries);
  std::vector<HammingAutomorphism> discovered;
  internal::for_each_word_permutation(v, words, words, [&](const std::vector<int>& images) {
    const HammingAutomorphism x = HammingAutomorphism::from_coord_perm(Perm(images), 2);
    if (chain.extend(x)) discovered.push_back(x);
  });
  return GroupGens(v, 2, std::move(discovered));
}

}  // namespace hamcode
