#ifndef MDV_REPORT_HPP
#define MDV_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace mdv {

inline constexpr const char* kVersion = "1.0.0";

// noted_discrepancy marks a check that reproduces a defect documented
// in the source material: the computation is exact and expected, but
// the stated value disagrees with the derived one. It never blocks an
// overall pass; see report_json for how it is surfaced.
enum class CheckStatus { pass, fail, noted_discrepancy };

const char* status_str(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status;
  std::string witness;  // empty on plain passes; omitted from JSON then
  std::string anchor;   // one-line statement of the fact being pinned
};

struct SuiteParams {
  std::string suite;
  int n_min = 0;
  int n_max = 8;
  std::uint64_t seed = 0;
  int trunc = 12;
  int degree_bound = 8;
};

struct VerificationReport {
  std::string suite;
  SuiteParams params;
  std::vector<Check> checks;
  std::string version = kVersion;
  long long elapsed_ms = 0;

  bool all_pass() const;  // true iff no check carries status fail
  int failed_count() const;
  int noted_count() const;
  // "name: witness" per noted check, in check order.
  std::vector<std::string> discrepancies() const;
};

// Byte-deterministic for fixed params: fixed key order, sorted
// containers underneath, and elapsed_ms pinned to 0 (wall time is a
// text-format concern; determinism of the JSON artifact wins).
std::string report_json(const VerificationReport& r);

// One line per check plus a summary; shows the measured elapsed time.
std::string report_text(const VerificationReport& r);

}  // namespace mdv

#endif
