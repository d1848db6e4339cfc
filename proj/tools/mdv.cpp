#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>

#include "mdv/errors.hpp"
#include "mdv/report.hpp"
#include "mdv/suites.hpp"

// Exit codes: 0 all checks pass (noted discrepancies allowed), 1 any
// failed check or unexpected error, 2 usage error.
int main(int argc, char** argv) {
  CLI::App app{"exact verifier for the bracket filtration of truncated "
               "polynomial rings and its graded shadow"};
  app.require_subcommand(1);

  mdv::SuiteParams params;
  std::string format = "text";
  std::string out_path;

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", params.suite, "suite name (see list-suites)")
      ->required();
  verify->add_option("--n-min", params.n_min, "smallest quotient order");
  verify->add_option("--n-max", params.n_max, "largest quotient order");
  verify->add_option("--seed", params.seed, "seed for randomized batteries");
  verify->add_option("--trunc", params.trunc, "working truncation length");
  verify->add_option("--degree-bound", params.degree_bound,
                     "degree bound for bracket spot checks");
  verify->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out_path, "write the report to this file");

  std::string subject, expr, side = "line";
  int subject_n = 2;
  CLI::App* compute = app.add_subcommand("compute", "print one named object");
  compute->add_option("--subject", subject, "subject name")->required();
  compute->add_option("--n", subject_n, "quotient order");
  compute->add_option("--expr", expr,
                      "expression for the normal-form and symbol subjects");
  compute->add_option("--side", side, "generator set: line or dual");

  CLI::App* list =
      app.add_subcommand("list-suites", "print the accepted suite names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (list->parsed()) {
      for (const std::string& s : mdv::suite_names()) std::cout << s << "\n";
      return 0;
    }
    if (compute->parsed()) {
      std::cout << mdv::compute_subject(subject, subject_n, expr, side)
                << "\n";
      return 0;
    }
    mdv::VerificationReport r = mdv::run_suite(params);
    std::string rendered =
        format == "json" ? mdv::report_json(r) : mdv::report_text(r);
    if (!out_path.empty()) {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw mdv::Error("cannot open output file: " + out_path);
      f << rendered;
      f.flush();
      if (!f) throw mdv::Error("cannot write output file: " + out_path);
    } else {
      std::cout << rendered;
    }
    return r.all_pass() ? 0 : 1;
  } catch (const mdv::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
