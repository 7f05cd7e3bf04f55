#include "hamcode/certify.hpp"

#include <algorithm>

#include "hamcode/errors.hpp"

namespace hamcode {

namespace {

std::vector<std::uint64_t> distance_histogram(const Code& c, const Vertex& v) {
  std::vector<std::uint64_t> h(static_cast<std::size_t>(c.m()) + 1, 0);
  for (const Vertex& w : c.codewords()) ++h[static_cast<std::size_t>(hamming_distance(v, w))];
  return h;
}

}  // namespace

RegularityTable is_s_regular(const Code& c, int s, std::uint64_t cap) {
  if (s < 0) throw PreconditionError("regularity level must be nonnegative");
  const DistancePartition dp(c, cap);
  RegularityTable table;
  table.rho = dp.covering_radius();
  if (s > table.rho) {
    throw PreconditionError("regularity level exceeds the covering radius");
  }
  table.s = s;
  table.completely_regular_checked = (s == table.rho);
  for (int i = 0; i <= s; ++i) {
    const std::vector<Vertex> cell = dp.cell(i);
    std::vector<std::uint64_t> ref = distance_histogram(c, cell.front());
    for (std::size_t x = 1; x < cell.size(); ++x) {
      const std::vector<std::uint64_t> h = distance_histogram(c, cell[x]);
      if (h != ref) {
        int k = 0;
        while (h[static_cast<std::size_t>(k)] == ref[static_cast<std::size_t>(k)]) ++k;
        table.violation = RegularityViolation{i,
                                              k,
                                              cell.front(),
                                              cell[x],
                                              ref[static_cast<std::size_t>(k)],
                                              h[static_cast<std::size_t>(k)]};
        table.regular = false;
        return table;
      }
    }
    table.counts.push_back(std::move(ref));
  }
  table.regular = true;
  return table;
}

TransitivityCertificate neighbour_transitive(const Code& c, const GroupGens& g,
                                             std::optional<int> s, std::uint64_t cap) {
  if (c.m() != g.m() || c.q() != g.q()) {
    throw DimensionError("certificate: code and group from different spaces");
  }
  const DistancePartition dp(c, cap);
  TransitivityCertificate cert;
  cert.rho = dp.covering_radius();
  cert.s_was_rho = !s.has_value();
  cert.s = s.value_or(cert.rho);
  if (cert.s < 0) throw PreconditionError("transitivity level must be nonnegative");
  if (cert.s > cert.rho) {
    throw PreconditionError("transitivity level exceeds the covering radius");
  }
  cert.group_is_code_group = is_code_group(g, c);
  if (!cert.group_is_code_group) {
    cert.pass = false;
    return cert;
  }
  bool all_single = true;
  for (int i = 0; i <= cert.s; ++i) {
    const std::vector<Vertex> cell = dp.cell(i);
    LevelOrbit level;
    level.i = i;
    level.cell_size = cell.size();
    level.least = cell.front();
    // The group preserves C, hence every distance cell; the orbit of the
    // least element is the whole cell exactly when the sizes agree.
    level.orbit_size = orbit_vertices(g, level.least, cap).size();
    level.single_orbit = level.orbit_size == level.cell_size;
    all_single = all_single && level.single_orbit;
    cert.levels.push_back(std::move(level));
  }
  cert.pass = all_single;
  return cert;
}

EntryFaithfulReport entry_faithful_certificate(const Code& c, const GroupGens& g,
                                               std::optional<int> s, std::uint64_t cap) {
  EntryFaithfulReport report;
  report.certificate = neighbour_transitive(c, g, s, cap);
  report.entry_faithful = entry_faithful(g, cap);
  report.entry0_alphabet_2transitive =
      is_k_transitive(entry_action(g, 0), ActionDomain::Entries, 2);

  const Vertex zero = zero_vertex(c.m(), c.q());
  if (c.contains(zero) && c.size() >= 2 && min_distance(c) >= 5) {
    const GroupGens stab = vertex_stabilizer(g, zero, cap);
    const int m = c.m();
    const int q = c.q();

    std::vector<int> sym1(static_cast<std::size_t>(m), 0);
    sym1.back() = 1;
    const std::uint64_t n1 = static_cast<std::uint64_t>(m) * (q - 1);
    report.zero_stab_weight1_transitive =
        orbit_vertices(stab, Vertex(std::move(sym1), q), cap).size() == n1;

    std::vector<int> sym2(static_cast<std::size_t>(m), 0);
    sym2[static_cast<std::size_t>(m) - 2] = 1;
    sym2[static_cast<std::size_t>(m) - 1] = 1;
    const std::uint64_t n2 =
        static_cast<std::uint64_t>(m) * (m - 1) / 2 * (q - 1) * (q - 1);
    report.zero_stab_weight2_transitive =
        orbit_vertices(stab, Vertex(std::move(sym2), q), cap).size() == n2;
  }
  return report;
}

}  // namespace hamcode
