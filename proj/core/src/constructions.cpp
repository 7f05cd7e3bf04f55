#include "hamcode/constructions.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

#include "hamcode/errors.hpp"
#include "word_perm.hpp"

namespace hamcode {

SignMatrix::SignMatrix(int n, std::vector<std::vector<int>> rows)
    : n_(n), rows_(std::move(rows)) {
  if (n_ < 1) throw PreconditionError("sign matrix order must be positive");
  if (rows_.size() != static_cast<std::size_t>(n_)) {
    throw DimensionError("sign matrix needs exactly n rows");
  }
  for (const auto& row : rows_) {
    if (row.size() != static_cast<std::size_t>(n_)) {
      throw DimensionError("sign matrix row of wrong length");
    }
    for (int e : row) {
      if (e != 1 && e != -1) throw PreconditionError("sign matrix entries must be +1 or -1");
    }
  }
}

bool SignMatrix::hadamard_identity_holds() const {
  for (int r = 0; r < n_; ++r) {
    for (int s = r; s < n_; ++s) {
      long long dot = 0;
      for (int c = 0; c < n_; ++c) dot += at(r, c) * at(s, c);
      if (dot != (r == s ? n_ : 0)) return false;
    }
  }
  return true;
}

SignMatrix paley_hadamard_12() {
  // -1 at the squares of F_11 (0 included); rows 1..10 are the additive
  // translates fixing the extra coordinate; final row all -1.
  std::array<bool, 11> negative{};
  negative[0] = true;
  for (int a = 1; a < 11; ++a) negative[static_cast<std::size_t>((a * a) % 11)] = true;

  std::vector<std::vector<int>> rows(12, std::vector<int>(12, 1));
  for (int t = 0; t < 11; ++t) {
    for (int a = 0; a < 11; ++a) {
      const int b = ((a - t) % 11 + 11) % 11;
      rows[static_cast<std::size_t>(t)][static_cast<std::size_t>(a)] =
          negative[static_cast<std::size_t>(b)] ? -1 : 1;
    }
  }
  rows[11].assign(12, -1);
  return SignMatrix(12, std::move(rows));
}

Code hadamard_code_12() {
  const SignMatrix h = paley_hadamard_12();
  std::vector<Vertex> words;
  words.reserve(24);
  for (int r = 0; r < 12; ++r) {
    std::vector<int> pos(12), neg(12);
    for (int c = 0; c < 12; ++c) {
      pos[static_cast<std::size_t>(c)] = h.at(r, c) == -1 ? 1 : 0;
      neg[static_cast<std::size_t>(c)] = 1 - pos[static_cast<std::size_t>(c)];
    }
    words.emplace_back(std::move(pos), 2);
    words.emplace_back(std::move(neg), 2);
  }
  return Code(12, 2, std::move(words));
}

PunctureResult puncture(const Code& c, int entry) {
  if (entry < 0 || entry >= c.m()) throw DimensionError("puncture: entry out of range");
  if (c.m() < 2) throw PreconditionError("puncture needs word length >= 2");
  std::set<Vertex> seen;
  for (const Vertex& w : c.codewords()) {
    std::vector<int> sym = w.symbols();
    sym.erase(sym.begin() + entry);
    seen.emplace(std::move(sym), c.q());
  }
  const bool merged = seen.size() < c.size();
  return {Code(c.m() - 1, c.q(), std::vector<Vertex>(seen.begin(), seen.end())), merged};
}

Code even_weight_subcode(const Code& c) {
  if (c.q() != 2) throw std::domain_error("even-weight subcode requires a binary code");
  std::vector<Vertex> kept;
  for (const Vertex& w : c.codewords()) {
    if (weight(w) % 2 == 0) kept.push_back(w);
  }
  if (kept.empty()) throw PreconditionError("even-weight subcode is empty");
  return Code(c.m(), c.q(), std::move(kept));
}

Code punctured_hadamard_12() { return puncture(hadamard_code_12(), 11).code; }

Code even_subcode_ph12() { return even_weight_subcode(punctured_hadamard_12()); }

Code repetition_code(int m, int q) {
  if (m < 1) throw PreconditionError("repetition code needs m >= 1");
  if (q < 2) throw PreconditionError("repetition code needs q >= 2");
  std::vector<Vertex> words;
  words.reserve(static_cast<std::size_t>(q));
  for (int s = 0; s < q; ++s) words.emplace_back(std::vector<int>(static_cast<std::size_t>(m), s), q);
  return Code(m, q, std::move(words));
}

namespace {

// sigma alone when even, sigma with every entry flipped when odd.
HammingAutomorphism with_parity_flip(const Perm& sigma) {
  if (sigma.sign() > 0) return HammingAutomorphism::from_coord_perm(sigma, 2);
  std::vector<Perm> maps(static_cast<std::size_t>(sigma.degree()), Perm::transposition(2, 0, 1));
  return HammingAutomorphism(std::move(maps), sigma);
}

}  // namespace

GroupGens repetition_transitive_group(int m) {
  if (m < 2) throw PreconditionError("repetition group needs m >= 2");
  std::vector<int> cyc(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) cyc[static_cast<std::size_t>(i)] = i;
  std::vector<HammingAutomorphism> gens = {
      with_parity_flip(Perm::transposition(m, 0, 1)),
      with_parity_flip(Perm::cycle(m, cyc)),
  };
  return GroupGens(m, 2, std::move(gens));
}

namespace {

std::uint64_t permute_bits(std::uint64_t w, const std::vector<int>& images) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if ((w >> i) & 1) out |= std::uint64_t{1} << images[i];
  }
  return out;
}

// All m-bit masks of the given popcount, ascending (Gosper's hack).
std::vector<std::uint64_t> masks_of_weight(int m, int w) {
  if (w == 0) return {0};
  std::vector<std::uint64_t> out;
  const std::uint64_t limit = std::uint64_t{1} << m;
  std::uint64_t u = (std::uint64_t{1} << w) - 1;
  while (u < limit) {
    out.push_back(u);
    const std::uint64_t low = u & (~u + 1);
    const std::uint64_t ripple = u + low;
    u = (((u ^ ripple) >> 2) / low) | ripple;
  }
  return out;
}

}  // namespace

GroupGens binary_code_autgroup(const Code& c, const AutgroupLimits& limits) {
  if (c.q() != 2) throw std::domain_error("automorphism search requires a binary code");
  const int cap_m = std::min(limits.max_m, 16);
  const std::size_t cap_words = std::min<std::size_t>(limits.max_codewords, 64);
  if (c.m() > cap_m) throw CapacityError("automorphism search limited to length " + std::to_string(cap_m));
  if (c.size() > cap_words) {
    throw CapacityError("automorphism search limited to " + std::to_string(cap_words) + " codewords");
  }
  const int m = c.m();

  std::vector<std::uint64_t> pc;
  pc.reserve(c.size());
  for (const Vertex& w : c.codewords()) pc.push_back(pack_bits(w));
  std::vector<std::uint64_t> pc_sorted = pc;
  std::sort(pc_sorted.begin(), pc_sorted.end());

  std::array<int, 65> weight_count{};
  for (const std::uint64_t w : pc) ++weight_count[static_cast<std::size_t>(std::popcount(w))];

  // An automorphism sends the first codeword to a codeword, so its
  // translation part lies in pc[0] ^ {vectors whose weight the code uses};
  // keep only translations preserving the weight multiset.
  std::vector<std::uint64_t> candidates;
  for (int w = 0; w <= m; ++w) {
    if (weight_count[static_cast<std::size_t>(w)] == 0) continue;
    for (const std::uint64_t u : masks_of_weight(m, w)) {
      const std::uint64_t t = pc[0] ^ u;
      std::array<int, 65> shifted{};
      for (const std::uint64_t cw : pc) ++shifted[static_cast<std::size_t>(std::popcount(cw ^ t))];
      if (shifted == weight_count) candidates.push_back(t);
    }
  }
  std::sort(candidates.begin(), candidates.end());

  StabilizerChain chain(GroupGens(m, 2, {}), ActionDomain::Vertices);
  std::vector<HammingAutomorphism> discovered;
  std::vector<std::uint64_t> translated(pc.size());
  for (const std::uint64_t t : candidates) {
    for (std::size_t x = 0; x < pc.size(); ++x) translated[x] = pc[x] ^ t;
    internal::for_each_word_permutation(m, pc, translated, [&](const std::vector<int>& images) {
      for (const std::uint64_t w : pc) {
        if (!std::binary_search(pc_sorted.begin(), pc_sorted.end(), permute_bits(w ^ t, images))) {
          throw std::logic_error("automorphism search produced a non-automorphism");
        }
      }
      const HammingAutomorphism x = from_translation_form(t, Perm(images));
      if (chain.extend(x)) discovered.push_back(x);
    });
  }
  return GroupGens(m, 2, std::move(discovered));
}

}  // namespace hamcode
