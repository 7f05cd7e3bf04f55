#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "hamcode/perm.hpp"
#include "hamcode/vertex.hpp"

namespace hamcode {

// Automorphism of H(m, q): one alphabet permutation per coordinate followed
// by a permutation of the coordinates.
//
// Convention (matches the on-disk format): applying x = (h_0..h_{m-1}; sigma)
// to a word first replaces each entry, a_i -> h_i(a_i), then moves
// coordinates left-to-right, so the result has entry h_i(a_i) at position
// sigma(i).
class HammingAutomorphism {
 public:
  HammingAutomorphism() = default;
  HammingAutomorphism(std::vector<Perm> entry_maps, Perm coord_perm);

  static HammingAutomorphism identity(int m, int q);
  static HammingAutomorphism from_coord_perm(const Perm& sigma, int q);
  static HammingAutomorphism from_entry_maps(std::vector<Perm> entry_maps);

  int m() const { return coord_perm_.degree(); }
  int q() const { return q_; }
  const Perm& entry_map(int i) const { return entry_maps_[static_cast<std::size_t>(i)]; }
  const std::vector<Perm>& entry_maps() const { return entry_maps_; }
  const Perm& coord_perm() const { return coord_perm_; }

  bool is_identity() const;
  bool is_entry_trivial() const;  // all entry maps are the identity

  friend bool operator==(const HammingAutomorphism&, const HammingAutomorphism&) = default;
  friend std::strong_ordering operator<=>(const HammingAutomorphism& a,
                                          const HammingAutomorphism& b) {
    if (auto c = a.coord_perm_ <=> b.coord_perm_; c != 0) return c;
    return a.entry_maps_ <=> b.entry_maps_;
  }

 private:
  std::vector<Perm> entry_maps_;
  Perm coord_perm_;
  int q_ = 2;
};

Vertex apply(const HammingAutomorphism& x, const Vertex& v);
std::uint64_t apply_to_rank(const HammingAutomorphism& x, std::uint64_t rank);

// apply(compose(x, y), v) == apply(y, apply(x, v)): x acts first.
HammingAutomorphism compose(const HammingAutomorphism& x, const HammingAutomorphism& y);
HammingAutomorphism inverse(const HammingAutomorphism& x);
// inverse(x) * g * x
HammingAutomorphism conjugate(const HammingAutomorphism& g, const HammingAutomorphism& x);

// The induced coordinate permutation (quotient of the wreath product onto
// the top group).
Perm project_entries(const HammingAutomorphism& x);

// q = 2 normal form: XOR with a mask, then permute coordinates. flip_mask
// bit i set means coordinate i's alphabet map is the swap (0 1), with bits
// indexed before the coordinate move.
struct TranslationForm {
  std::uint64_t flip_mask = 0;
  Perm coord_perm;
};
TranslationForm to_translation_form(const HammingAutomorphism& x);
HammingAutomorphism from_translation_form(std::uint64_t flip_mask, const Perm& coord_perm);

}  // namespace hamcode
