#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hamcode/code.hpp"
#include "hamcode/groups.hpp"

namespace hamcode {

struct RegularityViolation {
  int i = 0;  // distance cell
  int k = 0;  // first sphere radius where the counts disagree
  Vertex u;   // reference vertex of the cell
  Vertex v;   // offending vertex
  std::uint64_t count_u = 0;
  std::uint64_t count_v = 0;
};

// Intersection numbers |Γ_k(nu) ∩ C| for nu in each distance cell C_i,
// i <= s, when they are independent of the choice of nu.
struct RegularityTable {
  int s = 0;
  int rho = 0;
  bool completely_regular_checked = false;  // the call asked for s = rho
  bool regular = false;
  // counts[i][k] for every fully verified level i.
  std::vector<std::vector<std::uint64_t>> counts;
  std::optional<RegularityViolation> violation;
};

// Checks the level counts for i = 0..s; requires s <= covering radius.
RegularityTable is_s_regular(const Code& c, int s, std::uint64_t cap = kDefaultVertexCapacity);

struct LevelOrbit {
  int i = 0;
  std::uint64_t cell_size = 0;
  std::uint64_t orbit_size = 0;  // orbit of the least cell element
  bool single_orbit = false;
  Vertex least;
};

struct TransitivityCertificate {
  int s = 0;
  int rho = 0;
  bool s_was_rho = false;          // the call asked for complete transitivity
  bool group_is_code_group = false;
  std::vector<LevelOrbit> levels;  // i = 0..s, present when the group fits
  bool pass = false;
};

// Does the generated group act transitively on C and on each distance cell
// C_1..C_s? Pass s = nullopt to take s = rho (complete transitivity). A
// group that does not preserve C yields a failing certificate rather than
// an error.
TransitivityCertificate neighbour_transitive(const Code& c, const GroupGens& g,
                                             std::optional<int> s,
                                             std::uint64_t cap = kDefaultVertexCapacity);

struct EntryFaithfulReport {
  TransitivityCertificate certificate;
  bool entry_faithful = false;
  // Observed consequences on the given inputs, when applicable (zero word in
  // C and minimum distance >= 5): the stabilizer of the zero word acting
  // transitively on the weight-1 and weight-2 vertices.
  std::optional<bool> zero_stab_weight1_transitive;
  std::optional<bool> zero_stab_weight2_transitive;
  // 2-transitivity of the alphabet action at entry 0.
  bool entry0_alphabet_2transitive = false;
};

EntryFaithfulReport entry_faithful_certificate(const Code& c, const GroupGens& g,
                                               std::optional<int> s,
                                               std::uint64_t cap = kDefaultVertexCapacity);

}  // namespace hamcode
