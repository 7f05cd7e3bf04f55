#include "hamcode/groups.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hamcode/errors.hpp"
#include "hamcode/spectra.hpp"

namespace hamcode {

GroupGens::GroupGens(int m, int q, std::vector<HammingAutomorphism> generators)
    : m_(m), q_(q), gens_(std::move(generators)) {
  if (m_ < 1 || q_ < 2) throw PreconditionError("group over an invalid space");
  for (const HammingAutomorphism& g : gens_) {
    if (g.m() != m_ || g.q() != q_) {
      throw DimensionError("generators live in different spaces");
    }
  }
  std::erase_if(gens_, [](const HammingAutomorphism& g) { return g.is_identity(); });
  std::sort(gens_.begin(), gens_.end());
  gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
}

// --- orbits ---

namespace {

void check_entry_seed(const GroupGens& g, const std::vector<int>& seed) {
  for (int e : seed) {
    if (e < 0 || e >= g.m()) throw PreconditionError("entry index out of range");
  }
}

}  // namespace

std::vector<Vertex> orbit_vertices(const GroupGens& g, const Vertex& seed, std::uint64_t cap) {
  if (seed.m() != g.m() || seed.q() != g.q()) {
    throw DimensionError("orbit: seed from a different space");
  }
  std::set<Vertex> seen{seed};
  std::vector<Vertex> queue{seed};
  for (std::size_t t = 0; t < queue.size(); ++t) {
    const Vertex v = queue[t];
    for (const HammingAutomorphism& x : g.generators()) {
      Vertex w = apply(x, v);
      if (seen.insert(w).second) {
        if (seen.size() > cap) throw CapacityError("orbit exceeds cap");
        queue.push_back(std::move(w));
      }
    }
  }
  std::vector<Vertex> out(seen.begin(), seen.end());
  for (const Vertex& v : out) {  // closure sanity: every generator maps the orbit into itself
    for (const HammingAutomorphism& x : g.generators()) {
      if (!seen.count(apply(x, v))) throw PreconditionError("orbit closure violated");
    }
  }
  return out;
}

std::vector<int> orbit_entries(const GroupGens& g, int seed) {
  check_entry_seed(g, {seed});
  std::set<int> seen{seed};
  std::vector<int> queue{seed};
  for (std::size_t t = 0; t < queue.size(); ++t) {
    const int e = queue[t];
    for (const HammingAutomorphism& x : g.generators()) {
      const int f = x.coord_perm()(e);
      if (seen.insert(f).second) queue.push_back(f);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> orbit_entry_subsets(const GroupGens& g, std::vector<int> seed,
                                                  std::uint64_t cap) {
  check_entry_seed(g, seed);
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  std::set<std::vector<int>> seen{seed};
  std::vector<std::vector<int>> queue{seed};
  for (std::size_t t = 0; t < queue.size(); ++t) {
    const std::vector<int> s = queue[t];
    for (const HammingAutomorphism& x : g.generators()) {
      std::vector<int> img;
      img.reserve(s.size());
      for (int e : s) img.push_back(x.coord_perm()(e));
      std::sort(img.begin(), img.end());
      if (seen.insert(img).second) {
        if (seen.size() > cap) throw CapacityError("orbit exceeds cap");
        queue.push_back(std::move(img));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<int>> orbit_entry_tuples(const GroupGens& g, std::vector<int> seed,
                                                 std::uint64_t cap) {
  check_entry_seed(g, seed);
  std::set<std::vector<int>> seen{seed};
  std::vector<std::vector<int>> queue{seed};
  for (std::size_t t = 0; t < queue.size(); ++t) {
    const std::vector<int> s = queue[t];
    for (const HammingAutomorphism& x : g.generators()) {
      std::vector<int> img;
      img.reserve(s.size());
      for (int e : s) img.push_back(x.coord_perm()(e));
      if (seen.insert(img).second) {
        if (seen.size() > cap) throw CapacityError("orbit exceeds cap");
        queue.push_back(std::move(img));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

// --- stabilizer chain ---

StabilizerChain::StabilizerChain(const GroupGens& gens, ActionDomain domain,
                                 std::vector<std::uint64_t> forced_base,
                                 std::uint64_t vertex_cap)
    : m_(gens.m()), q_(gens.q()), domain_(domain) {
  n_points_ = domain_ == ActionDomain::Vertices
                  ? vertex_space_size(m_, q_, vertex_cap)
                  : static_cast<std::uint64_t>(m_);
  for (std::uint64_t b : forced_base) {
    if (b >= n_points_) throw PreconditionError("forced base point out of domain");
    add_level(b);
  }
  for (const HammingAutomorphism& g : gens.generators()) insert_generator(g);
  recompute_order();
}

std::uint64_t StabilizerChain::act(const HammingAutomorphism& x, std::uint64_t p) const {
  if (domain_ == ActionDomain::Vertices) return apply_to_rank(x, p);
  return static_cast<std::uint64_t>(x.coord_perm()(static_cast<int>(p)));
}

std::uint64_t StabilizerChain::min_moved_point(const HammingAutomorphism& x) const {
  for (std::uint64_t p = 0; p < n_points_; ++p) {
    if (act(x, p) != p) return p;
  }
  throw PreconditionError(
      "group does not act faithfully on the declared domain (a non-identity "
      "element fixes every point)");
}

void StabilizerChain::add_level(std::uint64_t base_point) {
  Level lv;
  lv.base = base_point;
  lv.orbit.push_back(base_point);
  lv.pos[base_point] = 0;
  lv.reps.push_back(HammingAutomorphism::identity(m_, q_));
  lv.done.push_back(0);
  levels_.push_back(std::move(lv));
}

std::pair<HammingAutomorphism, std::size_t> StabilizerChain::strip(HammingAutomorphism x,
                                                                   std::size_t from) const {
  for (std::size_t lev = from; lev < levels_.size(); ++lev) {
    const Level& L = levels_[lev];
    const std::uint64_t p = act(x, L.base);
    const auto it = L.pos.find(p);
    if (it == L.pos.end()) return {std::move(x), lev};
    x = compose(x, inverse(L.reps[it->second]));
  }
  return {std::move(x), levels_.size()};
}

void StabilizerChain::insert_generator(const HammingAutomorphism& x) {
  if (x.is_identity()) return;
  // Longest base prefix fixed by x determines the deepest list it joins.
  std::size_t j = 0;
  while (j < levels_.size() && act(x, levels_[j].base) == levels_[j].base) ++j;
  if (j == levels_.size()) add_level(min_moved_point(x));
  for (std::size_t l = 0; l <= j; ++l) levels_[l].gens.push_back(x);
  for (std::size_t l = j + 1; l-- > 0;) close_level(l);
}

void StabilizerChain::close_level(std::size_t i) {
  // add_level and the recursive closure below can grow levels_ and move every
  // Level, so the reference into levels_[i] is re-taken on each round and only
  // used before those calls.
  for (std::size_t t = 0; t < levels_[i].orbit.size(); ++t) {
    while (levels_[i].done[t] < levels_[i].gens.size()) {
      Level& L = levels_[i];
      const std::size_t gi = L.done[t]++;
      const std::uint64_t p = L.orbit[t];
      const HammingAutomorphism& s = L.gens[gi];
      const std::uint64_t ps = act(s, p);
      auto it = L.pos.find(ps);
      if (it == L.pos.end()) {
        L.pos[ps] = L.orbit.size();
        L.orbit.push_back(ps);
        L.reps.push_back(compose(L.reps[t], s));
        L.done.push_back(0);
        it = L.pos.find(ps);
      }
      HammingAutomorphism schreier = compose(compose(L.reps[t], s), inverse(L.reps[it->second]));
      auto [residue, j] = strip(std::move(schreier), i + 1);
      if (residue.is_identity()) continue;
      if (j == levels_.size()) add_level(min_moved_point(residue));
      for (std::size_t l = i + 1; l <= j; ++l) levels_[l].gens.push_back(residue);
      for (std::size_t l = j + 1; l-- > i + 1;) close_level(l);
    }
  }
}

void StabilizerChain::recompute_order() {
  order_ = 1;
  for (const Level& L : levels_) order_ *= static_cast<std::uint64_t>(L.orbit.size());
}

std::vector<std::uint64_t> StabilizerChain::base() const {
  std::vector<std::uint64_t> b;
  b.reserve(levels_.size());
  for (const Level& L : levels_) b.push_back(L.base);
  return b;
}

std::vector<std::size_t> StabilizerChain::orbit_sizes() const {
  std::vector<std::size_t> s;
  s.reserve(levels_.size());
  for (const Level& L : levels_) s.push_back(L.orbit.size());
  return s;
}

bool StabilizerChain::contains(const HammingAutomorphism& x) const {
  if (x.m() != m_ || x.q() != q_) throw DimensionError("membership test across spaces");
  auto [residue, lev] = strip(x, 0);
  (void)lev;
  return residue.is_identity();
}

std::vector<HammingAutomorphism> StabilizerChain::level_generators(int level) const {
  if (level < 0) throw PreconditionError("negative chain level");
  if (static_cast<std::size_t>(level) >= levels_.size()) return {};
  return levels_[static_cast<std::size_t>(level)].gens;
}

bool StabilizerChain::extend(const HammingAutomorphism& x) {
  if (x.m() != m_ || x.q() != q_) throw DimensionError("extending chain across spaces");
  auto [residue, lev] = strip(x, 0);
  (void)lev;
  if (residue.is_identity()) return false;
  insert_generator(residue);
  recompute_order();
  return true;
}

// --- derived queries ---

BigInt group_order(const GroupGens& gens, ActionDomain domain, std::uint64_t vertex_cap) {
  return StabilizerChain(gens, domain, {}, vertex_cap).order();
}

namespace {

std::uint64_t domain_size(const GroupGens& g, ActionDomain domain, std::uint64_t cap) {
  return domain == ActionDomain::Vertices ? vertex_space_size(g.m(), g.q(), cap)
                                          : static_cast<std::uint64_t>(g.m());
}

std::uint64_t act_point(const GroupGens&, ActionDomain domain, const HammingAutomorphism& x,
                        std::uint64_t p) {
  if (domain == ActionDomain::Vertices) return apply_to_rank(x, p);
  return static_cast<std::uint64_t>(x.coord_perm()(static_cast<int>(p)));
}

// Orbit size of a tuple of distinct domain points, sorted per element when
// `as_subset`.
BigInt point_tuple_orbit_size(const GroupGens& g, ActionDomain domain,
                              std::vector<std::uint64_t> seed, bool as_subset,
                              std::uint64_t cap) {
  if (as_subset) std::sort(seed.begin(), seed.end());
  std::set<std::vector<std::uint64_t>> seen{seed};
  std::vector<std::vector<std::uint64_t>> queue{seed};
  for (std::size_t t = 0; t < queue.size(); ++t) {
    const std::vector<std::uint64_t> s = queue[t];
    for (const HammingAutomorphism& x : g.generators()) {
      std::vector<std::uint64_t> img;
      img.reserve(s.size());
      for (std::uint64_t p : s) img.push_back(act_point(g, domain, x, p));
      if (as_subset) std::sort(img.begin(), img.end());
      if (seen.insert(img).second) {
        if (seen.size() > cap) throw CapacityError("tuple orbit exceeds cap");
        queue.push_back(std::move(img));
      }
    }
  }
  return static_cast<std::uint64_t>(seen.size());
}

}  // namespace

bool is_k_transitive(const GroupGens& gens, ActionDomain domain, int k, std::uint64_t cap) {
  const std::uint64_t n = domain_size(gens, domain, kDefaultVertexCapacity);
  if (k < 1 || static_cast<std::uint64_t>(k) > n) {
    throw PreconditionError("k out of range for the domain");
  }
  std::vector<std::uint64_t> seed(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) seed[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(i);
  BigInt expected = 1;
  for (int i = 0; i < k; ++i) expected *= n - static_cast<std::uint64_t>(i);
  return point_tuple_orbit_size(gens, domain, std::move(seed), false, cap) == expected;
}

bool is_k_homogeneous(const GroupGens& gens, ActionDomain domain, int k, std::uint64_t cap) {
  const std::uint64_t n = domain_size(gens, domain, kDefaultVertexCapacity);
  if (k < 1 || static_cast<std::uint64_t>(k) > n) {
    throw PreconditionError("k out of range for the domain");
  }
  std::vector<std::uint64_t> seed(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) seed[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(i);
  const BigInt expected = binomial(static_cast<long long>(n), k);
  return point_tuple_orbit_size(gens, domain, std::move(seed), true, cap) == expected;
}

bool is_code_group(const GroupGens& gens, const Code& c) {
  if (gens.m() != c.m() || gens.q() != c.q()) {
    throw DimensionError("group and code from different spaces");
  }
  for (const HammingAutomorphism& x : gens.generators()) {
    for (const Vertex& w : c.codewords()) {
      if (!c.contains(apply(x, w))) return false;
    }
  }
  return true;
}

GroupGens entries_image(const GroupGens& gens) {
  std::vector<HammingAutomorphism> out;
  out.reserve(gens.size());
  for (const HammingAutomorphism& x : gens.generators()) {
    out.push_back(HammingAutomorphism::from_coord_perm(project_entries(x), 2));
  }
  return GroupGens(gens.m(), 2, std::move(out));
}

GroupGens entry_action(const GroupGens& gens, int entry) {
  if (entry < 0 || entry >= gens.m()) throw PreconditionError("entry index out of range");
  // Transversal for the orbit of the entry, then one Schreier pass: the
  // Schreier generators generate the full stabilizer of the entry, and the
  // alphabet map at that entry is its action on the symbols there.
  std::vector<int> orbit{entry};
  std::map<int, HammingAutomorphism> rep{{entry, HammingAutomorphism::identity(gens.m(), gens.q())}};
  for (std::size_t t = 0; t < orbit.size(); ++t) {
    for (const HammingAutomorphism& s : gens.generators()) {
      const int img = s.coord_perm()(orbit[t]);
      if (!rep.count(img)) {
        rep.emplace(img, compose(rep.at(orbit[t]), s));
        orbit.push_back(img);
      }
    }
  }
  std::vector<HammingAutomorphism> alphabet_gens;
  for (int p : orbit) {
    for (const HammingAutomorphism& s : gens.generators()) {
      const int ps = s.coord_perm()(p);
      const HammingAutomorphism schreier = compose(compose(rep.at(p), s), inverse(rep.at(ps)));
      alphabet_gens.push_back(
          HammingAutomorphism::from_coord_perm(schreier.entry_map(entry), 2));
    }
  }
  if (alphabet_gens.empty()) {
    return GroupGens(gens.q(), 2, {});
  }
  return GroupGens(gens.q(), 2, std::move(alphabet_gens));
}

bool entry_faithful(const GroupGens& gens, std::uint64_t vertex_cap) {
  const BigInt on_vertices = group_order(gens, ActionDomain::Vertices, vertex_cap);
  const BigInt on_entries = group_order(entries_image(gens), ActionDomain::Entries);
  return on_vertices == on_entries;
}

GroupGens vertex_stabilizer(const GroupGens& gens, const Vertex& v, std::uint64_t vertex_cap) {
  if (v.m() != gens.m() || v.q() != gens.q()) {
    throw DimensionError("stabilizer: vertex from a different space");
  }
  StabilizerChain chain(gens, ActionDomain::Vertices, {vertex_rank(v)}, vertex_cap);
  return GroupGens(gens.m(), gens.q(), chain.level_generators(1));
}

}  // namespace hamcode
