#include "snfmom/report.hpp"

#include <json.hpp>

namespace snfmom {

namespace {

using nlohmann::json;

json base_json(const VerificationReport& r) {
  return json{{"case_id", r.case_id},
              {"rows", r.rows},
              {"cols", r.cols},
              {"claimed", r.claimed},
              {"extracted", r.extracted},
              {"match", r.match},
              {"methods", r.methods},
              {"runtime_ms", r.runtime_ms},
              {"witness", r.witness},
              {"extras", r.extras}};
}

}  // namespace

std::string VerificationReport::to_json() const {
  return base_json(*this).dump(2);
}

std::string VerificationReport::to_text() const {
  std::string out;
  out += (match ? "PASS " : "FAIL ") + case_id + "  (" +
         std::to_string(rows) + "x" + std::to_string(cols) + ")\n";
  out += "  methods:";
  for (auto& m : methods) out += " " + m;
  out += "\n  claimed:  ";
  for (std::size_t i = 0; i < claimed.size(); ++i) {
    out += (i ? ", " : "") + claimed[i];
  }
  out += "\n  extracted: ";
  for (std::size_t i = 0; i < extracted.size(); ++i) {
    out += (i ? ", " : "") + extracted[i];
  }
  out += "\n";
  if (!witness.empty()) out += "  witness: " + witness + "\n";
  for (auto& [k, v] : extras) out += "  " + k + ": " + v + "\n";
  out += "  runtime_ms: " + std::to_string(runtime_ms) + "\n";
  return out;
}

std::string ProbeReport::to_json() const {
  return json{{"case_id", case_id},
              {"verdict", verdict},
              {"checked", checked},
              {"runtime_ms", runtime_ms},
              {"extras", extras}}
      .dump(2);
}

std::string ProbeReport::to_text() const {
  std::string out = "PROBE " + case_id + ": " + verdict + "\n";
  for (auto& c : checked) out += "  " + c + "\n";
  for (auto& [k, v] : extras) out += "  " + k + ": " + v + "\n";
  out += "  runtime_ms: " + std::to_string(runtime_ms) + "\n";
  return out;
}

}  // namespace snfmom
