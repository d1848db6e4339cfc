#include "mdv/report.hpp"

#include <json.hpp>

namespace mdv {

const char* status_str(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::noted_discrepancy:
      return "noted-discrepancy";
  }
  return "fail";
}

bool VerificationReport::all_pass() const { return failed_count() == 0; }

int VerificationReport::failed_count() const {
  int k = 0;
  for (const Check& c : checks)
    if (c.status == CheckStatus::fail) ++k;
  return k;
}

int VerificationReport::noted_count() const {
  int k = 0;
  for (const Check& c : checks)
    if (c.status == CheckStatus::noted_discrepancy) ++k;
  return k;
}

std::vector<std::string> VerificationReport::discrepancies() const {
  std::vector<std::string> out;
  for (const Check& c : checks)
    if (c.status == CheckStatus::noted_discrepancy)
      out.push_back(c.name + ": " + c.witness);
  return out;
}

std::string report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  nlohmann::ordered_json params;
  params["n_min"] = r.params.n_min;
  params["n_max"] = r.params.n_max;
  params["seed"] = r.params.seed;
  params["trunc"] = r.params.trunc;
  params["degree_bound"] = r.params.degree_bound;
  j["params"] = std::move(params);
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const Check& c : r.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["status"] = status_str(c.status);
    if (!c.witness.empty()) e["witness"] = c.witness;
    e["anchor"] = c.anchor;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  j["discrepancies"] = r.discrepancies();
  j["version"] = r.version;
  j["elapsed_ms"] = 0;
  return j.dump(2) + "\n";
}

std::string report_text(const VerificationReport& r) {
  std::string s;
  s += "suite: " + r.suite + "\n";
  s += "params: n_min=" + std::to_string(r.params.n_min) +
       " n_max=" + std::to_string(r.params.n_max) +
       " seed=" + std::to_string(r.params.seed) +
       " trunc=" + std::to_string(r.params.trunc) +
       " degree_bound=" + std::to_string(r.params.degree_bound) + "\n";
  for (const Check& c : r.checks) {
    std::string tag = c.status == CheckStatus::pass
                          ? "pass "
                          : (c.status == CheckStatus::fail ? "FAIL " : "noted");
    s += "[" + tag + "] " + c.name + "  -- " + c.anchor + "\n";
    if (!c.witness.empty()) s += "        " + c.witness + "\n";
  }
  s += "summary: " + std::string(r.all_pass() ? "pass" : "FAIL") + " (" +
       std::to_string(r.checks.size()) + " checks, " +
       std::to_string(r.failed_count()) + " failed, " +
       std::to_string(r.noted_count()) + " noted)\n";
  s += "elapsed: " + std::to_string(r.elapsed_ms) + " ms\n";
  return s;
}

}  // namespace mdv
