// hamcode: exact command-line toolkit for codes in Hamming graphs.
//
// Subcommands: construct, analyze, certify, autgroup, evidence. All output
// is deterministic; structured JSON is the contract, --format text is the
// human view. CAPACITY_VERTICES overrides the q^m working cap.

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hamcode/certify.hpp"
#include "hamcode/code.hpp"
#include "hamcode/constructions.hpp"
#include "hamcode/designs.hpp"
#include "hamcode/errors.hpp"
#include "hamcode/evidence.hpp"
#include "hamcode/groups.hpp"
#include "hamcode/io.hpp"
#include "hamcode/spectra.hpp"

namespace {

using hamcode::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

std::uint64_t vertex_cap_from_env() {
  const char* env = std::getenv("CAPACITY_VERTICES");
  if (env == nullptr || *env == '\0') return hamcode::kDefaultVertexCapacity;
  std::string text(env);
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || value == 0) {
    throw hamcode::FormatError("CAPACITY_VERTICES must be a positive integer, got \"" + text +
                               "\"");
  }
  return value;
}

std::string join_rationals(const std::vector<hamcode::BigRat>& xs) {
  std::string s = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) s += ", ";
    s += hamcode::rational_to_string(xs[i]);
  }
  return s + ")";
}

int run_construct(const std::string& name, const std::string& out_path) {
  if (hamcode::is_group_construction(name)) {
    const hamcode::GroupGens g = hamcode::construct_group(name);
    hamcode::write_group_file(g, out_path);
    std::cout << name << ": m = " << g.m() << ", q = " << g.q() << ", "
              << g.generators().size() << " generators -> " << out_path << "\n";
  } else {
    const hamcode::Code c = hamcode::construct_code(name);
    hamcode::write_code_file(c, out_path);
    std::cout << name << ": m = " << c.m() << ", q = " << c.q() << ", " << c.size()
              << " codewords -> " << out_path << "\n";
  }
  return kExitOk;
}

std::string design_verdict(const hamcode::Code& c, int k, int s) {
  if (s > k) return "n/a";
  const hamcode::DesignLambdaResult r =
      c.q() == 2 ? hamcode::design_lambda(hamcode::weight_class_blocks(c, k), s)
                 : hamcode::design_lambda_weight_class(c, k, s);
  if (!r.is_design) return "NotDesign";
  return "lambda = " + std::to_string(r.lambda);
}

int run_analyze(const std::string& path, const std::string& format, std::uint64_t cap) {
  const hamcode::Code c = hamcode::read_code_file(path);
  const hamcode::DistancePartition dp(c, cap);
  const std::optional<int> delta =
      c.size() >= 2 ? std::optional<int>(hamcode::min_distance(c)) : std::nullopt;
  const hamcode::DistanceDistribution dist = hamcode::distance_distribution(c);

  std::optional<hamcode::TransformResult> transform;
  if (hamcode::is_prime_power(c.q())) transform = hamcode::macwilliams_transform(dist);

  std::map<int, std::uint64_t> census;
  for (const hamcode::Vertex& w : c.codewords()) ++census[hamcode::weight(w)];

  ordered_json j;
  j["m"] = c.m();
  j["q"] = c.q();
  j["codewords"] = c.size();
  if (delta) {
    j["min_distance"] = *delta;
  } else {
    j["min_distance"] = nullptr;
  }
  j["covering_radius"] = dp.covering_radius();

  ordered_json jd = ordered_json::array();
  for (const hamcode::BigRat& a : dist.a) jd.push_back(hamcode::rational_to_string(a));
  j["distance_distribution"] = std::move(jd);

  if (transform) {
    ordered_json jt;
    ordered_json values = ordered_json::array();
    for (const hamcode::BigRat& a : transform->aprime) {
      values.push_back(hamcode::rational_to_string(a));
    }
    jt["values"] = std::move(values);
    jt["nonnegative"] = transform->nonnegative;
    if (transform->first_negative_index) {
      jt["first_negative_index"] = *transform->first_negative_index;
    } else {
      jt["first_negative_index"] = nullptr;
    }
    j["macwilliams_transform"] = std::move(jt);
  } else {
    j["macwilliams_transform"] = nullptr;
  }

  if (delta) {
    const hamcode::BigInt bound = hamcode::singleton_bound(c.m(), c.q(), *delta);
    ordered_json js;
    js["bound"] = bound.str();
    js["holds"] = hamcode::BigInt(c.size()) <= bound;
    j["singleton"] = std::move(js);
  } else {
    j["singleton"] = nullptr;
  }

  ordered_json jc = ordered_json::array();
  for (const auto& [w, n] : census) {
    ordered_json row;
    row["weight"] = w;
    row["count"] = n;
    jc.push_back(std::move(row));
  }
  j["weight_census"] = std::move(jc);

  ordered_json jw = ordered_json::array();
  for (const auto& [w, n] : census) {
    ordered_json row;
    row["weight"] = w;
    ordered_json checks = ordered_json::array();
    for (int s = 1; s <= 3; ++s) {
      ordered_json chk;
      chk["s"] = s;
      chk["verdict"] = design_verdict(c, w, s);
      checks.push_back(std::move(chk));
    }
    row["designs"] = std::move(checks);
    jw.push_back(std::move(row));
  }
  j["weight_class_designs"] = std::move(jw);

  if (format == "json") {
    std::cout << j.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "code " << path << ": m = " << c.m() << ", q = " << c.q() << ", |C| = "
            << c.size() << "\n";
  std::cout << "min distance: " << (delta ? std::to_string(*delta) : "n/a") << "\n";
  std::cout << "covering radius: " << dp.covering_radius() << "\n";
  std::cout << "distance distribution: " << join_rationals(dist.a) << "\n";
  if (transform) {
    std::cout << "macwilliams transform: " << join_rationals(transform->aprime) << " ("
              << (transform->nonnegative ? "nonnegative" : "negative at index " +
                      std::to_string(*transform->first_negative_index))
              << ")\n";
  } else {
    std::cout << "macwilliams transform: n/a (q is not a prime power)\n";
  }
  if (delta) {
    const hamcode::BigInt bound = hamcode::singleton_bound(c.m(), c.q(), *delta);
    std::cout << "singleton bound: |C| = " << c.size() << (hamcode::BigInt(c.size()) <= bound
                                                               ? " <= "
                                                               : " > ")
              << bound.str() << "\n";
  }
  std::cout << "weight census:";
  for (const auto& [w, n] : census) std::cout << " " << w << ":" << n;
  std::cout << "\n";
  for (const auto& [w, n] : census) {
    std::cout << "weight " << w << " class (" << n << " blocks):";
    for (int s = 1; s <= 3; ++s) std::cout << " s=" << s << " " << design_verdict(c, w, s) << ";";
    std::cout << "\n";
  }
  return kExitOk;
}

int run_certify(const std::string& code_path, const std::string& group_path,
                const std::string& s_flag, std::uint64_t cap) {
  const hamcode::Code c = hamcode::read_code_file(code_path);
  const hamcode::GroupGens g = hamcode::read_group_file(group_path);
  std::optional<int> s;
  if (s_flag != "rho") {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(s_flag, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != s_flag.size()) {
      throw hamcode::FormatError("--s expects an integer or \"rho\", got \"" + s_flag + "\"");
    }
    s = value;
  }
  const hamcode::EntryFaithfulReport report = hamcode::entry_faithful_certificate(c, g, s, cap);
  std::cout << hamcode::entry_faithful_report_to_json(report).dump(2) << "\n";
  return report.certificate.pass ? kExitOk : kExitCheckFailed;
}

int run_autgroup(const std::string& code_path, const std::string& out_path, std::uint64_t cap) {
  const hamcode::Code c = hamcode::read_code_file(code_path);
  const hamcode::GroupGens g = hamcode::binary_code_autgroup(c);
  hamcode::write_group_file(g, out_path);
  const hamcode::BigInt order = hamcode::group_order(g, hamcode::ActionDomain::Vertices, cap);
  const bool transitive = hamcode::neighbour_transitive(c, g, 0, cap).pass;
  ordered_json j;
  j["order"] = order.str();
  j["generators"] = g.generators().size();
  j["transitive_on_code"] = transitive;
  j["output"] = out_path;
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

int run_evidence(const std::string& selector, const std::string& format, std::uint64_t cap) {
  const hamcode::EvidenceReport report = hamcode::run_evidence(selector, cap);
  if (format == "json") {
    std::cout << hamcode::evidence_to_json(report).dump(2) << "\n";
  } else {
    std::cout << hamcode::evidence_to_text(report);
  }
  if (!report.all_pass) {
    std::cerr << "failing checks:";
    for (const hamcode::EvidenceCheck& c : report.checks) {
      if (c.verdict == "fail") std::cerr << " " << c.name;
    }
    std::cerr << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for codes, designs and groups in Hamming graphs"};
  app.require_subcommand(1);

  std::string construct_name, construct_out;
  CLI::App* cmd_construct =
      app.add_subcommand("construct", "write a named construction to a file");
  cmd_construct->add_option("name", construct_name, "construction identifier")->required();
  cmd_construct->add_option("-o,--output", construct_out, "output file")->required();

  std::string analyze_path, analyze_format = "json";
  CLI::App* cmd_analyze = app.add_subcommand("analyze", "report code metrics and spectra");
  cmd_analyze->add_option("file", analyze_path, "hamming-code/1 file")->required();
  cmd_analyze->add_option("--format", analyze_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::string certify_code, certify_group, certify_s;
  CLI::App* cmd_certify =
      app.add_subcommand("certify", "check neighbour transitivity and entry-faithfulness");
  cmd_certify->add_option("--code", certify_code, "hamming-code/1 file")->required();
  cmd_certify->add_option("--group", certify_group, "hamming-group/1 file")->required();
  cmd_certify->add_option("--s", certify_s, "level, an integer or \"rho\"")->required();

  std::string autgroup_path, autgroup_out;
  CLI::App* cmd_autgroup =
      app.add_subcommand("autgroup", "discover the automorphism group of a binary code");
  cmd_autgroup->add_option("file", autgroup_path, "hamming-code/1 file")->required();
  cmd_autgroup->add_option("-o,--output", autgroup_out, "output group file")->required();

  std::string evidence_selector, evidence_format = "json";
  CLI::App* cmd_evidence = app.add_subcommand("evidence", "run a named check battery");
  cmd_evidence->add_option("selector", evidence_selector, "battery name or \"all\"")->required();
  cmd_evidence->add_option("--format", evidence_format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));

  CLI11_PARSE(app, argc, argv);

  try {
    const std::uint64_t cap = vertex_cap_from_env();
    if (app.got_subcommand(cmd_construct)) return run_construct(construct_name, construct_out);
    if (app.got_subcommand(cmd_analyze)) return run_analyze(analyze_path, analyze_format, cap);
    if (app.got_subcommand(cmd_certify)) {
      return run_certify(certify_code, certify_group, certify_s, cap);
    }
    if (app.got_subcommand(cmd_autgroup)) return run_autgroup(autgroup_path, autgroup_out, cap);
    if (app.got_subcommand(cmd_evidence)) {
      return run_evidence(evidence_selector, evidence_format, cap);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
