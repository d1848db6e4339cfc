#ifndef MDV_SUITES_HPP
#define MDV_SUITES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mdv/report.hpp"

namespace mdv {

// Suite names accepted by run_suite, in the order "all" executes them.
const std::vector<std::string>& suite_names();

// Subjects accepted by compute_subject.
const std::vector<std::string>& subject_names();

// Runs one named suite and assembles the report. Throws UsageError on
// an unknown suite, n_min/n_max out of order, negative bounds, or a
// truncation below 3 when the uniqueness battery is involved.
// Deterministic for fixed params. Ranges are clipped per battery to
// the sizes listed in the README so "all" stays fast at defaults.
VerificationReport run_suite(const SuiteParams& p);

// The batteries behind the suites, exposed so the acceptance harness
// can drive each one with its own range. Each returns one Check per
// verified statement; a range that clips to nothing yields no checks.
std::vector<Check> battery_filtration_dims(int n_min, int n_max);
std::vector<Check> battery_nilpotency(int n_min, int n_max);
std::vector<Check> battery_grothendieck(int n_min, int n_max,
                                        std::uint64_t seed);
std::vector<Check> battery_symbols(int n_min, int n_max, std::uint64_t seed);
std::vector<Check> battery_sl2(int n_min, int n_max);
std::vector<Check> battery_theorem1(int n_min, int n_max);
std::vector<Check> battery_theorem2(int n_min, int n_max, std::uint64_t seed);
std::vector<Check> battery_inverse_system(int n_min, int n_max,
                                          int degree_bound);
std::vector<Check> battery_quotient_invariants(std::uint64_t seed);
std::vector<Check> battery_ideal_brackets(int trunc);
std::vector<Check> battery_uniqueness(int trunc, int degree_bound);
std::vector<Check> battery_diamond(int degree_bound);
std::vector<Check> battery_quantum_diamond();

// Prints one named object. expr feeds the normal-form and symbol
// subjects; side selects the Weyl generator set ("line" or "dual").
// Throws UsageError on an unknown subject or malformed expression.
std::string compute_subject(const std::string& subject, int n,
                            const std::string& expr, const std::string& side);

}  // namespace mdv

#endif
