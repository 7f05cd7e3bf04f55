#include "hamcode/io.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

#include "hamcode/constructions.hpp"
#include "hamcode/errors.hpp"

namespace hamcode {

namespace {

constexpr const char* kCodeFormat = "hamming-code/1";
constexpr const char* kGroupFormat = "hamming-group/1";
constexpr const char* kConvention = "entry-then-coord, left-to-right";

ordered_json vertex_to_json(const Vertex& v) { return ordered_json(v.symbols()); }

int get_dimension(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw FormatError(std::string("missing or non-integer field \"") + key + "\"");
  }
  return j.at(key).get<int>();
}

void require_format(const ordered_json& j, const char* expected) {
  if (!j.is_object()) throw FormatError("document is not an object");
  if (!j.contains("format") || !j.at("format").is_string() ||
      j.at("format").get<std::string>() != expected) {
    throw FormatError(std::string("expected format \"") + expected + "\"");
  }
}

std::vector<int> int_array(const ordered_json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw FormatError(std::string(what) + " must hold integers");
    out.push_back(e.get<int>());
  }
  return out;
}

Perm parse_perm(const ordered_json& j, int degree, const char* what) {
  const std::vector<int> images = int_array(j, what);
  if (images.size() != static_cast<std::size_t>(degree)) {
    throw FormatError(std::string(what) + " has wrong degree");
  }
  std::vector<bool> hit(static_cast<std::size_t>(degree), false);
  for (int x : images) {
    if (x < 0 || x >= degree || hit[static_cast<std::size_t>(x)]) {
      throw FormatError(std::string(what) + " is not a permutation");
    }
    hit[static_cast<std::size_t>(x)] = true;
  }
  return Perm(images);
}

ordered_json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

void dump_file(const ordered_json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
  if (!out) throw FormatError("failed writing " + path);
}

}  // namespace

ordered_json code_to_json(const Code& c) {
  ordered_json j;
  j["format"] = kCodeFormat;
  j["m"] = c.m();
  j["q"] = c.q();
  ordered_json words = ordered_json::array();
  for (const Vertex& w : c.codewords()) words.push_back(vertex_to_json(w));
  j["codewords"] = std::move(words);
  return j;
}

Code code_from_json(const ordered_json& j) {
  require_format(j, kCodeFormat);
  const int m = get_dimension(j, "m");
  const int q = get_dimension(j, "q");
  if (m < 1 || q < 2) throw FormatError("code file needs m >= 1 and q >= 2");
  if (!j.contains("codewords") || !j.at("codewords").is_array() || j.at("codewords").empty()) {
    throw FormatError("code file needs a nonempty \"codewords\" array");
  }
  std::vector<Vertex> words;
  std::set<std::vector<int>> seen;
  for (const auto& entry : j.at("codewords")) {
    std::vector<int> sym = int_array(entry, "codeword");
    if (sym.size() != static_cast<std::size_t>(m)) throw FormatError("codeword of wrong length");
    for (int s : sym) {
      if (s < 0 || s >= q) throw FormatError("codeword symbol out of range");
    }
    if (!seen.insert(sym).second) throw FormatError("duplicate codeword");
    words.emplace_back(std::move(sym), q);
  }
  return Code(m, q, std::move(words));
}

ordered_json group_to_json(const GroupGens& g) {
  ordered_json j;
  j["format"] = kGroupFormat;
  j["convention"] = kConvention;
  j["m"] = g.m();
  j["q"] = g.q();
  ordered_json gens = ordered_json::array();
  for (const HammingAutomorphism& x : g.generators()) {
    ordered_json gen;
    ordered_json maps = ordered_json::array();
    for (int i = 0; i < g.m(); ++i) maps.push_back(x.entry_map(i).images());
    gen["entry_maps"] = std::move(maps);
    gen["coord_perm"] = x.coord_perm().images();
    gens.push_back(std::move(gen));
  }
  j["generators"] = std::move(gens);
  return j;
}

GroupGens group_from_json(const ordered_json& j) {
  require_format(j, kGroupFormat);
  if (!j.contains("convention") || !j.at("convention").is_string() ||
      j.at("convention").get<std::string>() != kConvention) {
    throw FormatError(std::string("group file must declare convention \"") + kConvention + "\"");
  }
  const int m = get_dimension(j, "m");
  const int q = get_dimension(j, "q");
  if (m < 1 || q < 2) throw FormatError("group file needs m >= 1 and q >= 2");
  if (!j.contains("generators") || !j.at("generators").is_array()) {
    throw FormatError("group file needs a \"generators\" array");
  }
  std::vector<HammingAutomorphism> gens;
  for (const auto& gen : j.at("generators")) {
    if (!gen.is_object() || !gen.contains("entry_maps") || !gen.contains("coord_perm")) {
      throw FormatError("generator needs \"entry_maps\" and \"coord_perm\"");
    }
    const auto& maps_json = gen.at("entry_maps");
    if (!maps_json.is_array() || maps_json.size() != static_cast<std::size_t>(m)) {
      throw FormatError("generator needs one entry map per coordinate");
    }
    std::vector<Perm> maps;
    maps.reserve(static_cast<std::size_t>(m));
    for (const auto& pm : maps_json) maps.push_back(parse_perm(pm, q, "entry map"));
    gens.emplace_back(std::move(maps), parse_perm(gen.at("coord_perm"), m, "coord_perm"));
  }
  return GroupGens(m, q, std::move(gens));
}

void write_code_file(const Code& c, const std::string& path) { dump_file(code_to_json(c), path); }

Code read_code_file(const std::string& path) { return code_from_json(parse_file(path)); }

void write_group_file(const GroupGens& g, const std::string& path) {
  dump_file(group_to_json(g), path);
}

GroupGens read_group_file(const std::string& path) { return group_from_json(parse_file(path)); }

ordered_json regularity_to_json(const RegularityTable& t) {
  ordered_json j;
  j["s"] = t.s;
  j["rho"] = t.rho;
  j["completely_regular_checked"] = t.completely_regular_checked;
  j["regular"] = t.regular;
  j["counts"] = t.counts;
  if (t.violation) {
    ordered_json w;
    w["i"] = t.violation->i;
    w["k"] = t.violation->k;
    w["u"] = vertex_to_json(t.violation->u);
    w["v"] = vertex_to_json(t.violation->v);
    w["count_u"] = t.violation->count_u;
    w["count_v"] = t.violation->count_v;
    j["violation"] = std::move(w);
  } else {
    j["violation"] = nullptr;
  }
  return j;
}

ordered_json certificate_to_json(const TransitivityCertificate& cert) {
  ordered_json j;
  j["s"] = cert.s;
  j["rho"] = cert.rho;
  j["s_was_rho"] = cert.s_was_rho;
  j["group_is_code_group"] = cert.group_is_code_group;
  ordered_json levels = ordered_json::array();
  for (const LevelOrbit& level : cert.levels) {
    ordered_json l;
    l["i"] = level.i;
    l["cell_size"] = level.cell_size;
    l["orbit_size"] = level.orbit_size;
    l["single_orbit"] = level.single_orbit;
    l["least"] = vertex_to_json(level.least);
    levels.push_back(std::move(l));
  }
  j["levels"] = std::move(levels);
  j["pass"] = cert.pass;
  return j;
}

ordered_json entry_faithful_report_to_json(const EntryFaithfulReport& report) {
  ordered_json j;
  j["certificate"] = certificate_to_json(report.certificate);
  j["entry_faithful"] = report.entry_faithful;
  j["zero_stab_weight1_transitive"] =
      report.zero_stab_weight1_transitive ? ordered_json(*report.zero_stab_weight1_transitive)
                                          : ordered_json(nullptr);
  j["zero_stab_weight2_transitive"] =
      report.zero_stab_weight2_transitive ? ordered_json(*report.zero_stab_weight2_transitive)
                                          : ordered_json(nullptr);
  j["entry0_alphabet_2transitive"] = report.entry0_alphabet_2transitive;
  return j;
}

namespace {

int parse_int(const std::string& s) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(s, &pos);
  } catch (const std::exception&) {
    throw FormatError("malformed number \"" + s + "\" in construction name");
  }
  if (pos != s.size()) throw FormatError("malformed number \"" + s + "\" in construction name");
  return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = s.find(sep, start);
    if (at == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, at - start));
    start = at + 1;
  }
}

}  // namespace

std::vector<std::string> code_construction_names() {
  return {"repetition:m:q", "hadamard12", "punctured-hadamard-12", "even-subcode-ph12"};
}

std::vector<std::string> group_construction_names() { return {"repetition-group:m"}; }

bool is_group_construction(const std::string& name) {
  return name.rfind("repetition-group:", 0) == 0;
}

Code construct_code(const std::string& name) {
  if (name == "hadamard12") return hadamard_code_12();
  if (name == "punctured-hadamard-12") return punctured_hadamard_12();
  if (name == "even-subcode-ph12") return even_subcode_ph12();
  const std::vector<std::string> parts = split(name, ':');
  if (parts.size() == 3 && parts[0] == "repetition") {
    return repetition_code(parse_int(parts[1]), parse_int(parts[2]));
  }
  throw FormatError("unknown construction \"" + name + "\"");
}

GroupGens construct_group(const std::string& name) {
  const std::vector<std::string> parts = split(name, ':');
  if (parts.size() == 2 && parts[0] == "repetition-group") {
    return repetition_transitive_group(parse_int(parts[1]));
  }
  throw FormatError("unknown group construction \"" + name + "\"");
}

}  // namespace hamcode
