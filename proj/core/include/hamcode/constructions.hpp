#pragma once

#include <cstdint>
#include <vector>

#include "hamcode/code.hpp"
#include "hamcode/groups.hpp"

namespace hamcode {

// Square matrix with entries in {+1, -1}.
class SignMatrix {
 public:
  SignMatrix(int n, std::vector<std::vector<int>> rows);

  int order() const { return n_; }
  int at(int r, int c) const {
    return rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  // H * H^T == n * I, exactly.
  bool hadamard_identity_holds() const;

 private:
  int n_;
  std::vector<std::vector<int>> rows_;
};

// Order-12 Hadamard matrix from the quadratic residues of F_11. Coordinates
// 0..10 are the field elements; coordinate 11 is the extra point. Row 0 has
// -1 exactly at the squares of F_11 (0 counted as a square), rows 1..10 are
// its translates under x -> x + t, and row 11 is all -1.
SignMatrix paley_hadamard_12();

// The 24 binary words read off the rows of the matrix and their negations:
// bit a = 1 exactly where the row entry is -1.
Code hadamard_code_12();

struct PunctureResult {
  Code code;
  bool merged;  // true if deleting the coordinate identified two codewords
};
// Delete coordinate `entry` (0-based) from every codeword.
PunctureResult puncture(const Code& c, int entry);

// Binary only: the codewords of even weight.
Code even_weight_subcode(const Code& c);

// puncture(hadamard_code_12(), 11): 24 words in H(11, 2).
Code punctured_hadamard_12();
// Even-weight subcode of the punctured code: 12 words.
Code even_subcode_ph12();

// The q constant words of H(m, q).
Code repetition_code(int m, int q);

// Generators of a coordinate-permutation group (with a global flip attached
// to each odd permutation, q = 2) preserving Rep(m, 2): isomorphic to S_m
// and acting faithfully on entries.
GroupGens repetition_transitive_group(int m);

struct AutgroupLimits {
  int max_m = 16;
  std::size_t max_codewords = 64;
};

// Full setwise stabilizer of a binary code in Aut(H(m, 2)), by enumerating
// translation candidates and backtracking over coordinate permutations with
// per-coordinate fingerprint pruning. Deterministic.
GroupGens binary_code_autgroup(const Code& c, const AutgroupLimits& limits = {});

}  // namespace hamcode
