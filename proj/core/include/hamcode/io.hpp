#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hamcode/certify.hpp"
#include "hamcode/code.hpp"
#include "hamcode/groups.hpp"

namespace hamcode {

using ordered_json = nlohmann::ordered_json;

// "hamming-code/1": { format, m, q, codewords }. Codewords are written in
// canonical (lexicographic) order; the parser rejects out-of-range symbols
// and duplicates with FormatError.
ordered_json code_to_json(const Code& c);
Code code_from_json(const ordered_json& j);

// "hamming-group/1": { format, convention, m, q, generators }, each
// generator = { entry_maps, coord_perm } with 0-indexed images and the
// convention string "entry-then-coord, left-to-right".
ordered_json group_to_json(const GroupGens& g);
GroupGens group_from_json(const ordered_json& j);

void write_code_file(const Code& c, const std::string& path);
Code read_code_file(const std::string& path);
void write_group_file(const GroupGens& g, const std::string& path);
GroupGens read_group_file(const std::string& path);

// Certificate reports, stable across runs.
ordered_json regularity_to_json(const RegularityTable& t);
ordered_json certificate_to_json(const TransitivityCertificate& cert);
ordered_json entry_faithful_report_to_json(const EntryFaithfulReport& report);

// Construction registry. Code identifiers: "repetition:m:q", "hadamard12",
// "punctured-hadamard-12", "even-subcode-ph12"; group identifiers:
// "repetition-group:m".
std::vector<std::string> code_construction_names();
std::vector<std::string> group_construction_names();
bool is_group_construction(const std::string& name);
Code construct_code(const std::string& name);
GroupGens construct_group(const std::string& name);

}  // namespace hamcode
