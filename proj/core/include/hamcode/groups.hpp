#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "hamcode/automorphism.hpp"
#include "hamcode/bigint.hpp"
#include "hamcode/code.hpp"

namespace hamcode {

inline constexpr std::uint64_t kDefaultOrbitCap = 10'000'000;

// Generating set of a subgroup of Aut(H(m,q)). Canonically ordered,
// duplicate-free, identity excluded; an empty list is the trivial group.
//
// A plain permutation group on n abstract points is represented as a
// GroupGens over H(n, 2) whose elements are pure coordinate permutations
// (see entries_image / entry_action); the points are the coordinates.
class GroupGens {
 public:
  GroupGens(int m, int q, std::vector<HammingAutomorphism> generators);

  int m() const { return m_; }
  int q() const { return q_; }
  const std::vector<HammingAutomorphism>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }

 private:
  int m_;
  int q_;
  std::vector<HammingAutomorphism> gens_;
};

enum class ActionDomain { Vertices, Entries };

// --- Orbits (free-standing breadth-first closures, output sorted) ---

std::vector<Vertex> orbit_vertices(const GroupGens& g, const Vertex& seed,
                                   std::uint64_t cap = kDefaultOrbitCap);
std::vector<int> orbit_entries(const GroupGens& g, int seed);
// Orbits of sorted entry subsets / ordered entry tuples under the induced
// coordinate action.
std::vector<std::vector<int>> orbit_entry_subsets(const GroupGens& g, std::vector<int> seed,
                                                  std::uint64_t cap = kDefaultOrbitCap);
std::vector<std::vector<int>> orbit_entry_tuples(const GroupGens& g, std::vector<int> seed,
                                                 std::uint64_t cap = kDefaultOrbitCap);

// Deterministic stabilizer chain (Schreier-Sims) over the chosen action
// domain. Base points are chosen greedily as the lowest-index moved point;
// forced_base points are installed first, in order, whether moved or not.
// The group must act faithfully on the domain (always true for Vertices).
class StabilizerChain {
 public:
  StabilizerChain(const GroupGens& gens, ActionDomain domain,
                  std::vector<std::uint64_t> forced_base = {},
                  std::uint64_t vertex_cap = kDefaultVertexCapacity);

  ActionDomain domain() const { return domain_; }
  const BigInt& order() const { return order_; }
  std::vector<std::uint64_t> base() const;
  std::vector<std::size_t> orbit_sizes() const;
  int depth() const { return static_cast<int>(levels_.size()); }
  bool contains(const HammingAutomorphism& x) const;
  // Generators of the pointwise stabilizer of the first `level` base points
  // (level 0: the whole group).
  std::vector<HammingAutomorphism> level_generators(int level) const;
  // Incorporate x into the generated group; returns false if x was already
  // a member. Not safe to call concurrently with queries.
  bool extend(const HammingAutomorphism& x);

 private:
  struct Level {
    std::uint64_t base = 0;
    std::vector<HammingAutomorphism> gens;
    std::vector<std::uint64_t> orbit;  // insertion order; orbit[0] == base
    std::map<std::uint64_t, std::size_t> pos;
    std::vector<HammingAutomorphism> reps;  // reps[t] maps base -> orbit[t]
    std::vector<std::size_t> done;          // generators processed per point
  };

  std::uint64_t act(const HammingAutomorphism& x, std::uint64_t p) const;
  std::uint64_t min_moved_point(const HammingAutomorphism& x) const;
  void add_level(std::uint64_t base_point);
  // Distribute x across the nested generator lists and re-close.
  void insert_generator(const HammingAutomorphism& x);
  void close_level(std::size_t i);
  std::pair<HammingAutomorphism, std::size_t> strip(HammingAutomorphism x,
                                                    std::size_t from) const;
  void recompute_order();

  int m_;
  int q_;
  ActionDomain domain_;
  std::uint64_t n_points_;
  std::vector<Level> levels_;
  BigInt order_ = 1;
};

BigInt group_order(const GroupGens& gens, ActionDomain domain,
                   std::uint64_t vertex_cap = kDefaultVertexCapacity);

// Transitivity on ordered k-tuples / k-subsets of distinct domain points,
// decided by the orbit size of one canonical seed.
bool is_k_transitive(const GroupGens& gens, ActionDomain domain, int k,
                     std::uint64_t cap = kDefaultOrbitCap);
bool is_k_homogeneous(const GroupGens& gens, ActionDomain domain, int k,
                      std::uint64_t cap = kDefaultOrbitCap);

// True iff every generator maps the codeword set onto itself.
bool is_code_group(const GroupGens& gens, const Code& c);

// The induced coordinate-permutation group on the m entries, as pure
// coordinate permutations over H(m, 2).
GroupGens entries_image(const GroupGens& gens);

// The alphabet action at entry i of the (setwise) stabilizer of entry i:
// a permutation group on the q symbols, encoded over H(q, 2). Generators
// come from a single Schreier-generator pass, so no chain is needed.
GroupGens entry_action(const GroupGens& gens, int entry);

// True iff the coordinate action has trivial kernel: the group order on
// vertices equals the order of the induced entry permutation group.
bool entry_faithful(const GroupGens& gens, std::uint64_t vertex_cap = kDefaultVertexCapacity);

// Generators of the stabilizer of vertex v (chain based at v first).
GroupGens vertex_stabilizer(const GroupGens& gens, const Vertex& v,
                            std::uint64_t vertex_cap = kDefaultVertexCapacity);

}  // namespace hamcode
