#include "hamcode/automorphism.hpp"

#include <string>
#include <utility>

#include "hamcode/errors.hpp"

namespace hamcode {

HammingAutomorphism::HammingAutomorphism(std::vector<Perm> entry_maps, Perm coord_perm)
    : entry_maps_(std::move(entry_maps)), coord_perm_(std::move(coord_perm)) {
  if (entry_maps_.size() != static_cast<std::size_t>(coord_perm_.degree())) {
    throw DimensionError("need exactly one alphabet map per coordinate");
  }
  if (entry_maps_.empty()) throw PreconditionError("automorphism of an empty word space");
  q_ = entry_maps_.front().degree();
  if (q_ < 2) throw PreconditionError("alphabet size must be at least 2");
  for (const Perm& h : entry_maps_) {
    if (h.degree() != q_) throw DimensionError("alphabet maps have mixed degrees");
  }
}

HammingAutomorphism HammingAutomorphism::identity(int m, int q) {
  return HammingAutomorphism(std::vector<Perm>(static_cast<std::size_t>(m), Perm::identity(q)),
                             Perm::identity(m));
}

HammingAutomorphism HammingAutomorphism::from_coord_perm(const Perm& sigma, int q) {
  return HammingAutomorphism(
      std::vector<Perm>(static_cast<std::size_t>(sigma.degree()), Perm::identity(q)), sigma);
}

HammingAutomorphism HammingAutomorphism::from_entry_maps(std::vector<Perm> entry_maps) {
  const int m = static_cast<int>(entry_maps.size());
  return HammingAutomorphism(std::move(entry_maps), Perm::identity(m));
}

bool HammingAutomorphism::is_identity() const {
  return coord_perm_.is_identity() && is_entry_trivial();
}

bool HammingAutomorphism::is_entry_trivial() const {
  for (const Perm& h : entry_maps_) {
    if (!h.is_identity()) return false;
  }
  return true;
}

Vertex apply(const HammingAutomorphism& x, const Vertex& v) {
  if (v.m() != x.m() || v.q() != x.q()) {
    throw DimensionError("apply: vertex and automorphism from different spaces");
  }
  std::vector<int> out(static_cast<std::size_t>(v.m()), 0);
  for (int i = 0; i < v.m(); ++i) {
    out[static_cast<std::size_t>(x.coord_perm()(i))] = x.entry_map(i)(v[i]);
  }
  return Vertex(std::move(out), v.q());
}

std::uint64_t apply_to_rank(const HammingAutomorphism& x, std::uint64_t rank) {
  return vertex_rank(apply(x, vertex_unrank(rank, x.m(), x.q())));
}

HammingAutomorphism compose(const HammingAutomorphism& x, const HammingAutomorphism& y) {
  if (x.m() != y.m() || x.q() != y.q()) {
    throw DimensionError("compose: automorphisms of different spaces");
  }
  // Apply x then y: coordinate i is first mapped by h_i then, sitting at
  // position sigma(i), by y's map there; it ends at tau(sigma(i)).
  std::vector<Perm> maps;
  maps.reserve(static_cast<std::size_t>(x.m()));
  for (int i = 0; i < x.m(); ++i) {
    maps.push_back(x.entry_map(i).compose(y.entry_map(x.coord_perm()(i))));
  }
  return HammingAutomorphism(std::move(maps), x.coord_perm().compose(y.coord_perm()));
}

HammingAutomorphism inverse(const HammingAutomorphism& x) {
  const Perm sigma_inv = x.coord_perm().inverse();
  std::vector<Perm> maps;
  maps.reserve(static_cast<std::size_t>(x.m()));
  for (int i = 0; i < x.m(); ++i) {
    maps.push_back(x.entry_map(sigma_inv(i)).inverse());
  }
  return HammingAutomorphism(std::move(maps), sigma_inv);
}

HammingAutomorphism conjugate(const HammingAutomorphism& g, const HammingAutomorphism& x) {
  return compose(compose(inverse(x), g), x);
}

Perm project_entries(const HammingAutomorphism& x) { return x.coord_perm(); }

TranslationForm to_translation_form(const HammingAutomorphism& x) {
  if (x.q() != 2) throw PreconditionError("translation form requires a binary alphabet");
  if (x.m() > 64) throw CapacityError("translation form requires m <= 64");
  TranslationForm t;
  t.coord_perm = x.coord_perm();
  for (int i = 0; i < x.m(); ++i) {
    if (!x.entry_map(i).is_identity()) t.flip_mask |= std::uint64_t{1} << i;
  }
  return t;
}

HammingAutomorphism from_translation_form(std::uint64_t flip_mask, const Perm& coord_perm) {
  const int m = coord_perm.degree();
  if (m > 64) throw CapacityError("translation form requires m <= 64");
  std::vector<Perm> maps;
  maps.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    maps.push_back(((flip_mask >> i) & 1u) ? Perm::transposition(2, 0, 1) : Perm::identity(2));
  }
  return HammingAutomorphism(std::move(maps), coord_perm);
}

}  // namespace hamcode
