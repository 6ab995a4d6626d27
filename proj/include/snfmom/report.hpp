#pragma once

// Result records produced by the verification and probing routines.
// Everything a caller needs to audit a run: the claim, what was actually
// extracted, which independent methods ran, and the first discrepancy when
// something failed to match.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace snfmom {

struct VerificationReport {
  std::string case_id;
  std::size_t rows = 0, cols = 0;
  std::vector<std::string> claimed;
  std::vector<std::string> extracted;
  bool match = false;
  std::vector<std::string> methods;
  double runtime_ms = 0;
  std::string witness;  // first discrepancy when match is false
  std::map<std::string, std::string> extras;

  std::string to_json() const;
  std::string to_text() const;
};

struct ProbeReport {
  std::string case_id;
  std::string verdict;  // "consistent" | "refuted" | "inconclusive"
  std::vector<std::string> checked;
  double runtime_ms = 0;
  std::map<std::string, std::string> extras;

  std::string to_json() const;
  std::string to_text() const;
};

}  // namespace snfmom
