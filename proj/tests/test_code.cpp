#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "hamcode/code.hpp"
#include "hamcode/constructions.hpp"
#include "hamcode/errors.hpp"
#include "oracles.hpp"

using namespace hamcode;

namespace {

Code random_binary_code(int m, int size, std::mt19937& rng) {
  const std::uint64_t n = vertex_space_size(m, 2);
  std::set<std::uint64_t> ranks;
  std::uniform_int_distribution<std::uint64_t> d(0, n - 1);
  while (ranks.size() < static_cast<std::size_t>(size)) ranks.insert(d(rng));
  std::vector<Vertex> words;
  for (std::uint64_t r : ranks) words.push_back(vertex_unrank(r, m, 2));
  return Code(m, 2, std::move(words));
}

}  // namespace

TEST_CASE("code construction canonicalizes and validates") {
  const Code c(2, 3, {Vertex({2, 1}, 3), Vertex({0, 1}, 3)});
  CHECK(c.size() == 2);
  CHECK(std::is_sorted(c.codewords().begin(), c.codewords().end()));
  CHECK(c.word(0) == Vertex({0, 1}, 3));
  CHECK(c.contains(Vertex({2, 1}, 3)));
  CHECK_FALSE(c.contains(Vertex({1, 1}, 3)));

  CHECK_THROWS_AS(Code(2, 3, {}), PreconditionError);
  CHECK_THROWS_AS(Code(2, 3, {Vertex({0, 1}, 3), Vertex({0, 1}, 3)}), PreconditionError);
  CHECK_THROWS_AS(Code(2, 3, {Vertex({0, 1, 0}, 3)}), DimensionError);
  CHECK_THROWS_AS(Code(2, 3, {Vertex({0, 1}, 2)}), DimensionError);
}

TEST_CASE("minimum distance") {
  CHECK(min_distance(repetition_code(5, 2)) == 5);
  CHECK(min_distance(repetition_code(4, 3)) == 4);
  const Code c(3, 2, {Vertex({0, 0, 0}, 2), Vertex({0, 1, 1}, 2), Vertex({1, 1, 1}, 2)});
  CHECK(min_distance(c) == 1);
  CHECK_THROWS_AS(min_distance(Code(3, 2, {Vertex({0, 0, 0}, 2)})), PreconditionError);
}

TEST_CASE("applying an automorphism to a code") {
  const Code rep = repetition_code(4, 2);
  const HammingAutomorphism x =
      HammingAutomorphism::from_coord_perm(Perm::cycle(4, {0, 1, 2, 3}), 2);
  CHECK(apply(x, rep) == rep);

  const HammingAutomorphism flip0 = from_translation_form(0b0001, Perm::identity(4));
  const Code moved = apply(flip0, rep);
  CHECK(moved.contains(Vertex({1, 0, 0, 0}, 2)));
  CHECK(moved.contains(Vertex({0, 1, 1, 1}, 2)));
  CHECK_FALSE(moved == rep);
  CHECK_THROWS_AS(apply(HammingAutomorphism::identity(3, 2), rep), DimensionError);
}

TEST_CASE("distance partition against brute force") {
  std::mt19937 rng(7101);
  for (int trial = 0; trial < 15; ++trial) {
    const int m = 4 + trial % 3;  // 4..6
    const Code c = random_binary_code(m, 2 + trial % 5, rng);
    const DistancePartition dp(c);
    const auto brute = oracles::brute_regularity(c, 0);
    CHECK(dp.covering_radius() == brute.rho);

    const std::uint64_t n = vertex_space_size(m, 2);
    std::uint64_t total = 0;
    for (std::uint64_t s : dp.cell_sizes()) total += s;
    CHECK(total == n);
    for (std::uint64_t r = 0; r < n; ++r) {
      const Vertex v = vertex_unrank(r, m, 2);
      int best = m + 1;
      for (const Vertex& w : c.codewords()) best = std::min(best, hamming_distance(v, w));
      CHECK(dp.distances_by_rank()[r] == best);
      CHECK(dp.distance_to_code(v) == best);
    }
  }
}

TEST_CASE("distance partition cells are lexicographic and consistent") {
  const Code e = even_subcode_ph12();
  const DistancePartition dp(e);
  CHECK(dp.covering_radius() >= 3);
  CHECK(dp.cell(0).size() == e.size());
  for (int i = 0; i <= dp.covering_radius(); ++i) {
    const std::vector<Vertex> cell = dp.cell(i);
    CHECK(cell.size() == dp.cell_sizes()[static_cast<std::size_t>(i)]);
    CHECK(std::is_sorted(cell.begin(), cell.end()));
    for (std::size_t x = 0; x < cell.size(); x += 97) {
      CHECK(dp.distance_to_code(cell[x]) == i);
    }
  }
  CHECK_THROWS_AS(dp.cell(dp.covering_radius() + 1), PreconditionError);
  CHECK(distance_partition(e).covering_radius() == dp.covering_radius());
}

TEST_CASE("difference entries and classes") {
  const Vertex u({0, 1, 2, 0}, 3);
  const Vertex v({0, 2, 2, 1}, 3);
  CHECK(diff_entries(u, v) == std::vector<int>{1, 3});
  CHECK(diff_entries(u, u).empty());
  CHECK_THROWS_AS(diff_entries(u, Vertex({0, 0}, 3)), DimensionError);

  const Code c = repetition_code(3, 3);
  const Vertex alpha = zero_vertex(3, 3);
  const Vertex beta({1, 1, 1}, 3);
  const std::vector<Vertex> cls = diff_class(alpha, beta, c);
  // Both nonzero constant words differ from zero in all three entries.
  CHECK(cls.size() == 2);
  CHECK(std::count(cls.begin(), cls.end(), beta) == 1);
  CHECK(std::count(cls.begin(), cls.end(), Vertex({2, 2, 2}, 3)) == 1);
  CHECK(std::count(cls.begin(), cls.end(), alpha) == 0);
  CHECK_THROWS_AS(diff_class(alpha, alpha, c), PreconditionError);
  CHECK_THROWS_AS(diff_class(Vertex({0, 0, 1}, 3), beta, c), MembershipError);
}

TEST_CASE("normalization postconditions") {
  const Code c = repetition_code(4, 3);
  const Vertex alpha = zero_vertex(4, 3);
  const Vertex beta({1, 1, 1, 1}, 3);
  const Normalization n = normalize(c, alpha, beta, 0);
  CHECK(n.d == 4);
  CHECK(apply(n.map, alpha) == zero_vertex(4, 3));
  CHECK(n.image == apply(n.map, c));
  // Every codeword in beta's class lands on (c^d, a^(m-d)) with c != a.
  for (const Vertex& gamma : diff_class(alpha, beta, c)) {
    const Vertex img = apply(n.map, gamma);
    const int first = img[0];
    CHECK(first != 0);
    for (int i = 0; i < n.d; ++i) CHECK(img[i] == first);
    for (int i = n.d; i < c.m(); ++i) CHECK(img[i] == 0);
  }
  // Deterministic.
  CHECK(normalize(c, alpha, beta, 0).map == n.map);

  CHECK_THROWS_AS(normalize(c, alpha, beta, 3), PreconditionError);
  CHECK_THROWS_AS(normalize(c, alpha, Vertex({2, 2, 2, 2}, 3), 5), PreconditionError);
}

TEST_CASE("normalization on a mixed-support code") {
  // Distinguishing entries need not be a prefix before normalization.
  const Code c(4, 3, {Vertex({2, 0, 1, 0}, 3), Vertex({2, 1, 1, 2}, 3)});
  const Vertex alpha = c.word(0);
  const Vertex beta = c.word(1);
  const int d = hamming_distance(alpha, beta);
  CHECK(d == min_distance(c));
  const Normalization n = normalize(c, alpha, beta, 1);
  CHECK(n.d == d);
  CHECK(apply(n.map, alpha) == Vertex({1, 1, 1, 1}, 3));
  const Vertex img = apply(n.map, beta);
  for (int i = 0; i < d; ++i) CHECK(img[i] != 1);
  for (int i = 0; i < d; ++i) CHECK(img[i] == img[0]);
  for (int i = d; i < 4; ++i) CHECK(img[i] == 1);
}
