#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "hamcode/constructions.hpp"
#include "hamcode/errors.hpp"
#include "hamcode/groups.hpp"

using namespace hamcode;

namespace {

HammingAutomorphism coord(const Perm& sigma) {
  return HammingAutomorphism::from_coord_perm(sigma, 2);
}

GroupGens symmetric_group(int m) {
  return GroupGens(m, 2, {coord(Perm::transposition(m, 0, 1)),
                          coord(Perm::cycle(m, [m] {
                            std::vector<int> pts(static_cast<std::size_t>(m));
                            for (int i = 0; i < m; ++i) pts[static_cast<std::size_t>(i)] = i;
                            return pts;
                          }()))});
}

// Frobenius group of order 21 on the 7 points of F_7: x -> x+1 and x -> 2x.
GroupGens frobenius21() {
  std::vector<int> doubling(7);
  for (int i = 0; i < 7; ++i) doubling[static_cast<std::size_t>(i)] = (2 * i) % 7;
  return GroupGens(7, 2, {coord(Perm::cycle(7, {0, 1, 2, 3, 4, 5, 6})),
                          coord(Perm(std::move(doubling)))});
}

}  // namespace

TEST_CASE("generator list canonicalization") {
  const HammingAutomorphism t = coord(Perm::transposition(3, 0, 1));
  const GroupGens g(3, 2, {t, HammingAutomorphism::identity(3, 2), t});
  CHECK(g.size() == 1);  // duplicates and the identity are dropped
  CHECK(g.m() == 3);
  CHECK(g.q() == 2);
  CHECK_THROWS_AS(GroupGens(3, 2, {HammingAutomorphism::identity(4, 2)}), DimensionError);
  const GroupGens trivial(3, 2, {});
  CHECK(group_order(trivial, ActionDomain::Vertices) == 1);
}

TEST_CASE("orbits of vertices") {
  const GroupGens s4 = symmetric_group(4);
  const std::vector<Vertex> orb = orbit_vertices(s4, Vertex({1, 0, 0, 0}, 2));
  CHECK(orb.size() == 4);  // all weight-1 words
  CHECK(std::is_sorted(orb.begin(), orb.end()));
  for (const Vertex& v : orb) CHECK(weight(v) == 1);

  const GroupGens rep5 = repetition_transitive_group(5);
  const std::vector<Vertex> zero_orbit = orbit_vertices(rep5, zero_vertex(5, 2));
  CHECK(zero_orbit.size() == 2);  // the two constant words

  CHECK_THROWS_AS(orbit_vertices(s4, Vertex({1, 0, 0, 0}, 2), 2), CapacityError);
  CHECK_THROWS_AS(orbit_vertices(s4, zero_vertex(3, 2)), DimensionError);
}

TEST_CASE("orbits of entries, subsets and tuples") {
  const GroupGens s4 = symmetric_group(4);
  CHECK(orbit_entries(s4, 2) == std::vector<int>{0, 1, 2, 3});
  CHECK(orbit_entry_subsets(s4, {0, 1}).size() == 6);
  CHECK(orbit_entry_tuples(s4, {0, 1}).size() == 12);

  const GroupGens f21 = frobenius21();
  CHECK(orbit_entry_subsets(f21, {0, 1}).size() == 21);   // 2-homogeneous
  CHECK(orbit_entry_tuples(f21, {0, 1}).size() == 21);    // but not 2-transitive
  CHECK_THROWS_AS(orbit_entries(s4, 4), PreconditionError);
}

TEST_CASE("stabilizer chain orders") {
  CHECK(group_order(symmetric_group(4), ActionDomain::Vertices) == 24);
  CHECK(group_order(symmetric_group(4), ActionDomain::Entries) == 24);
  CHECK(group_order(symmetric_group(6), ActionDomain::Entries) == 720);
  CHECK(group_order(frobenius21(), ActionDomain::Entries) == 21);
  CHECK(group_order(repetition_transitive_group(5), ActionDomain::Vertices) == 120);
  CHECK(group_order(repetition_transitive_group(6), ActionDomain::Vertices) == 720);

  // Alternating group on 4 points from two 3-cycles.
  const GroupGens a4(4, 2, {coord(Perm::cycle(4, {0, 1, 2})), coord(Perm::cycle(4, {1, 2, 3}))});
  CHECK(group_order(a4, ActionDomain::Entries) == 12);
}

TEST_CASE("stabilizer chain structure and membership") {
  const GroupGens s4 = symmetric_group(4);
  const StabilizerChain chain(s4, ActionDomain::Entries);
  CHECK(chain.order() == 24);
  BigInt product = 1;
  for (std::size_t s : chain.orbit_sizes()) product *= s;
  CHECK(product == 24);
  CHECK(chain.base().size() == static_cast<std::size_t>(chain.depth()));

  std::mt19937 rng(7201);
  HammingAutomorphism x = HammingAutomorphism::identity(4, 2);
  for (int trial = 0; trial < 40; ++trial) {
    const auto& gens = s4.generators();
    x = compose(x, gens[rng() % gens.size()]);
    CHECK(chain.contains(x));
  }
  CHECK(chain.contains(HammingAutomorphism::identity(4, 2)));
  CHECK_FALSE(chain.contains(from_translation_form(0b0001, Perm::identity(4))));
  CHECK_THROWS_AS(chain.contains(HammingAutomorphism::identity(5, 2)), DimensionError);

  const GroupGens a4(4, 2, {coord(Perm::cycle(4, {0, 1, 2})), coord(Perm::cycle(4, {1, 2, 3}))});
  const StabilizerChain alt(a4, ActionDomain::Entries);
  CHECK_FALSE(alt.contains(coord(Perm::transposition(4, 0, 1))));
  // level_generators(0) generate the whole group.
  const GroupGens regen(4, 2, alt.level_generators(0));
  CHECK(group_order(regen, ActionDomain::Entries) == 12);
}

TEST_CASE("forced base prefix is honoured") {
  const GroupGens s4 = symmetric_group(4);
  const StabilizerChain chain(s4, ActionDomain::Entries, {3, 1});
  const std::vector<std::uint64_t> base = chain.base();
  REQUIRE(base.size() >= 2);
  CHECK(base[0] == 3);
  CHECK(base[1] == 1);
  CHECK(chain.order() == 24);
  CHECK_THROWS_AS(StabilizerChain(s4, ActionDomain::Entries, {9}), PreconditionError);
}

TEST_CASE("incremental extension builds the group") {
  StabilizerChain chain(GroupGens(4, 2, {}), ActionDomain::Entries);
  CHECK(chain.order() == 1);
  CHECK(chain.extend(coord(Perm::transposition(4, 0, 1))));
  CHECK(chain.order() == 2);
  CHECK(chain.extend(coord(Perm::transposition(4, 1, 2))));
  CHECK(chain.order() == 6);
  CHECK_FALSE(chain.extend(coord(Perm::transposition(4, 0, 1))));  // already a member
  CHECK(chain.extend(coord(Perm::transposition(4, 2, 3))));
  CHECK(chain.order() == 24);
  CHECK(chain.contains(coord(Perm::cycle(4, {0, 1, 2, 3}))));
}

TEST_CASE("entries action must be faithful for entry-domain chains") {
  // A pure entry flip projects to the identity coordinate permutation.
  const GroupGens flips(2, 2,
                        {HammingAutomorphism::from_entry_maps(
                            {Perm::transposition(2, 0, 1), Perm::identity(2)})});
  CHECK_THROWS_AS(StabilizerChain(flips, ActionDomain::Entries), PreconditionError);
  CHECK(group_order(flips, ActionDomain::Vertices) == 2);
}

TEST_CASE("k-transitivity and k-homogeneity") {
  const GroupGens s4 = symmetric_group(4);
  for (int k = 1; k <= 4; ++k) CHECK(is_k_transitive(s4, ActionDomain::Entries, k));

  const GroupGens a4(4, 2, {coord(Perm::cycle(4, {0, 1, 2})), coord(Perm::cycle(4, {1, 2, 3}))});
  CHECK(is_k_transitive(a4, ActionDomain::Entries, 2));
  CHECK_FALSE(is_k_transitive(a4, ActionDomain::Entries, 3));

  const GroupGens f21 = frobenius21();
  CHECK(is_k_transitive(f21, ActionDomain::Entries, 1));
  CHECK_FALSE(is_k_transitive(f21, ActionDomain::Entries, 2));
  CHECK(is_k_homogeneous(f21, ActionDomain::Entries, 2));  // 2-homogeneous, not 2-transitive

  CHECK_THROWS_AS(is_k_transitive(s4, ActionDomain::Entries, 5), PreconditionError);
}

TEST_CASE("code group recognition") {
  const Code rep = repetition_code(5, 2);
  CHECK(is_code_group(repetition_transitive_group(5), rep));
  const GroupGens flip0(5, 2, {from_translation_form(0b00001, Perm::identity(5))});
  CHECK_FALSE(is_code_group(flip0, rep));
  const GroupGens flip_all(5, 2, {from_translation_form(0b11111, Perm::identity(5))});
  CHECK(is_code_group(flip_all, rep));
  CHECK_THROWS_AS(is_code_group(symmetric_group(4), rep), DimensionError);
}

TEST_CASE("entries image and entry actions") {
  const GroupGens rep5 = repetition_transitive_group(5);
  const GroupGens image = entries_image(rep5);
  CHECK(image.m() == 5);
  for (const HammingAutomorphism& x : image.generators()) CHECK(x.is_entry_trivial());
  CHECK(group_order(image, ActionDomain::Entries) == 120);

  // The alphabet action at a single entry of the flip-all group swaps 0,1.
  const GroupGens flip_all(5, 2, {from_translation_form(0b11111, Perm::identity(5))});
  const GroupGens action = entry_action(flip_all, 0);
  CHECK(action.m() == 2);
  CHECK(group_order(action, ActionDomain::Entries) == 2);
  CHECK(is_k_transitive(action, ActionDomain::Entries, 1));
  CHECK_THROWS_AS(entry_action(flip_all, 5), PreconditionError);
}

TEST_CASE("entry faithfulness") {
  CHECK(entry_faithful(repetition_transitive_group(5)));
  CHECK(entry_faithful(symmetric_group(4)));
  const GroupGens flip_all(5, 2, {from_translation_form(0b11111, Perm::identity(5))});
  CHECK_FALSE(entry_faithful(flip_all));
}

TEST_CASE("vertex stabilizers") {
  const GroupGens rep5 = repetition_transitive_group(5);
  const GroupGens stab = vertex_stabilizer(rep5, zero_vertex(5, 2));
  for (const HammingAutomorphism& x : stab.generators()) {
    CHECK(apply(x, zero_vertex(5, 2)) == zero_vertex(5, 2));
  }
  // Zero and all-ones form one orbit, so the stabilizer has index 2; the
  // stabilizing elements are exactly the even coordinate permutations.
  CHECK(group_order(stab, ActionDomain::Vertices) == 60);

  const GroupGens s4 = symmetric_group(4);
  const GroupGens stab1 = vertex_stabilizer(s4, Vertex({1, 0, 0, 0}, 2));
  CHECK(group_order(stab1, ActionDomain::Vertices) == 6);
  CHECK_THROWS_AS(vertex_stabilizer(s4, zero_vertex(5, 2)), DimensionError);
}
