#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamcode/bigint.hpp"
#include "hamcode/io.hpp"
#include "hamcode/vertex.hpp"

namespace hamcode {

// One row of the survey tables: group label, parameters, exact order when
// the source prints one, and the verdict its divisibility column records
// ("pass" for a blank, "fail", or "n/a" when nothing is checkable).
struct TableRow {
  std::string label;
  std::optional<int> m;
  std::optional<int> q;
  std::optional<BigInt> order;
  std::string expected_verdict;
};

const std::vector<TableRow>& table1_rows();
const std::vector<TableRow>& table2_rows();
const std::vector<TableRow>& table3_rows();
const std::vector<TableRow>& table4_rows();

struct EvidenceCheck {
  std::string name;
  std::string computed;
  std::string expected;
  std::string verdict;  // "pass" | "fail" | "skipped"
  std::string note;
};

struct EvidenceReport {
  std::string selector;
  std::vector<EvidenceCheck> checks;
  bool all_pass = false;  // no check reported "fail"
};

const std::vector<std::string>& evidence_selectors();

// Runs one battery ("table2", "table4", "prop43", "lemma42", "thm12",
// "lemma33", "lemma210") or every battery in that order ("all"). Fully
// deterministic: repeated runs produce identical reports.
EvidenceReport run_evidence(const std::string& selector,
                            std::uint64_t cap = kDefaultVertexCapacity);

ordered_json evidence_to_json(const EvidenceReport& report);
std::string evidence_to_text(const EvidenceReport& report);

}  // namespace hamcode
