// Acceptance harness: one line per criterion, exit 0 iff all pass.
// Criteria 1-11 drive the check batteries directly at their stated
// ranges; criterion 12 runs the real CLI twice and compares bytes.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mdv/report.hpp"
#include "mdv/suites.hpp"

using mdv::Check;
using mdv::CheckStatus;

namespace {

bool no_fail(const std::vector<Check>& cs) {
  for (const Check& c : cs)
    if (c.status == CheckStatus::fail) return false;
  return !cs.empty();
}

bool all_pass(const std::vector<Check>& cs) {
  for (const Check& c : cs)
    if (c.status != CheckStatus::pass) return false;
  return !cs.empty();
}

bool has_with_status(const std::vector<Check>& cs, const std::string& name,
                     CheckStatus st) {
  for (const Check& c : cs)
    if (c.name == name && c.status == st) return true;
  return false;
}

std::string first_failure(const std::vector<Check>& cs) {
  for (const Check& c : cs)
    if (c.status == CheckStatus::fail)
      return c.name + (c.witness.empty() ? "" : ": " + c.witness);
  return "";
}

int failures = 0;

void line(int num, const std::string& what, bool ok,
          const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " " << (num < 10 ? " " : "") << num
            << "  " << what;
  if (!ok && !detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: acceptance <path-to-mdv-binary>\n";
    return 2;
  }
  const std::string mdv_bin = argv[1];

  {
    auto t0 = std::chrono::steady_clock::now();
    auto cs = mdv::battery_filtration_dims(0, 8);
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    bool ok = all_pass(cs) && secs < 10.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f s", secs);
    line(1, "filtration dimensions and valuation table, n 0..8 (" +
                std::string(buf) + ")",
         ok, first_failure(cs));
  }
  {
    auto cs = mdv::battery_nilpotency(0, 8);
    line(2, "bracket nilpotency bound 2n+1 with extremal witness, n 0..8",
         all_pass(cs), first_failure(cs));
  }
  {
    auto cs = mdv::battery_grothendieck(0, 5, 0);
    line(3, "nested-bracket order equivalence, 100 operators x 20 tuples, "
            "n 0..5",
         all_pass(cs), first_failure(cs));
  }
  {
    auto cs = mdv::battery_symbols(0, 6, 0);
    line(4, "symbol multiplicativity on 100 seeded pairs, n 0..6",
         all_pass(cs), first_failure(cs));
  }
  {
    auto cs = mdv::battery_sl2(0, 16);
    line(5, "distinguished triple relations and central scalar, n 0..16",
         all_pass(cs), first_failure(cs));
  }
  {
    auto cs = mdv::battery_theorem1(0, 8);
    line(6, "graded quotient vs operator filtration: dimensions and "
            "structure constants, n 0..8",
         all_pass(cs), first_failure(cs));
  }
  {
    auto cs = mdv::battery_theorem2(0, 6, 0);
    line(7, "spanning family of rank (n+1)^2 with e^{n+1} -> 0, n 0..6",
         all_pass(cs), first_failure(cs));
  }
  {
    auto cs = mdv::battery_uniqueness(12, 8);
    line(8, "connecting series pinned to -1, full and first-condition-only",
         all_pass(cs), first_failure(cs));
  }
  {
    auto cs = mdv::battery_diamond(8);
    bool ok = no_fail(cs) &&
              has_with_status(cs, "diamond-commutes", CheckStatus::pass) &&
              has_with_status(cs, "printed-moment-sign",
                              CheckStatus::noted_discrepancy);
    line(9, "square of classical maps commutes; stated middle sign noted "
            "as discrepancy",
         ok, first_failure(cs));
  }
  {
    auto cs = mdv::battery_quantum_diamond();
    bool ok = no_fail(cs) &&
              has_with_status(cs, "line-sl2-images", CheckStatus::pass) &&
              has_with_status(cs, "symbol-descent", CheckStatus::pass) &&
              has_with_status(cs, "printed-f-image",
                              CheckStatus::noted_discrepancy);
    line(10, "operator transform images, central element killed, symbol "
             "descent to bidegree (6,6); stated cubic image noted",
         ok, first_failure(cs));
  }
  {
    auto inv = mdv::battery_inverse_system(0, 7, 8);
    auto ib = mdv::battery_ideal_brackets(12);
    bool ok = all_pass(inv) && no_fail(ib) &&
              has_with_status(ib, "ideal-brackets", CheckStatus::pass);
    line(11, "tower restriction maps are surjective bracket morphisms, "
             "n 0..7; ideal power brackets for a+b in 3..8",
         ok, first_failure(inv) + first_failure(ib));
  }
  {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path();
    fs::path a = dir / "mdv_accept_a.json";
    fs::path b = dir / "mdv_accept_b.json";
    std::string base = "\"" + mdv_bin + "\" verify --suite all --format json";
    int rc1 = std::system((base + " --out " + a.string()).c_str());
    int rc2 = std::system((base + " --out " + b.string()).c_str());
    auto code = [](int rc) {
      return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    };
    std::string sa = slurp(a), sb = slurp(b);
    bool ok = code(rc1) == 0 && code(rc2) == 0 && !sa.empty() && sa == sb;
    std::error_code ec;
    fs::remove(a, ec);
    fs::remove(b, ec);
    line(12, "two full-suite runs exit 0 with byte-identical JSON", ok,
         "exit codes " + std::to_string(code(rc1)) + "/" +
             std::to_string(code(rc2)));
  }

  std::cout << (failures == 0 ? "ACCEPTANCE: all 12 criteria pass"
                              : "ACCEPTANCE: " + std::to_string(failures) +
                                    " criteria failing")
            << "\n";
  return failures == 0 ? 0 : 1;
}
