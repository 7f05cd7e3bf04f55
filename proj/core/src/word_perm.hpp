#pragma once

// Internal: backtrack over coordinate permutations identifying two lists of
// packed binary words. Not installed.

#include <cstdint>
#include <functional>
#include <vector>

namespace hamcode::internal {

// Enumerates every permutation sigma of the m bit positions such that moving
// bit i of each d-word to position sigma[i] turns the set {d_words} into
// exactly the set {c_words}. Both lists must be duplicate-free and of equal
// size (callers guarantee this). sink receives the image array sigma
// (sigma[i] = target position of bit i); leaves are visited in a fixed
// deterministic order. Pruning: per-position incidence fingerprints by word
// weight, pairwise co-incidence degrees, and per-word candidate masks.
// Requires m <= 16 and at most 64 words.
void for_each_word_permutation(int m, const std::vector<std::uint64_t>& c_words,
                               const std::vector<std::uint64_t>& d_words,
                               const std::function<void(const std::vector<int>&)>& sink);

}  // namespace hamcode::internal
