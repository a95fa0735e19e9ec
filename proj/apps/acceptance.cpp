// Runs the acceptance criteria; one line per criterion, exit 1 on any failure.
#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "tpa/suites.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  tpa::SuiteOptions opts;
  std::string json_path;
  bool verbose = false;
  app.add_flag("--slow", opts.slow, "include D4 in the Auslander bounds");
  app.add_option("--seed", opts.seed, "seed for random composable pairs");
  app.add_option("--json", json_path, "write the full report here");
  app.add_flag("-v,--verbose", verbose, "print each item");
  CLI11_PARSE(app, argc, argv);

  bool all = true;
  tpa::Json report = tpa::Json::array();
  std::size_t k = 0;
  for (const auto& s : tpa::suites()) {
    ++k;
    auto r = s.run(opts);
    all = all && r.pass();
    std::printf("criterion %zu %-17s %s  (%.2f s)\n", k, s.name.c_str(), r.pass() ? "PASS" : "FAIL", r.seconds());
    for (const auto& it : r.items)
      if (verbose || !it.pass)
        std::printf("    %-28s %s  %.2f/%.0f s  %s\n", it.label.c_str(), it.pass ? "ok" : "FAILED", it.seconds, it.budget,
                    it.detail.c_str());
    std::fflush(stdout);
    report.push_back(r.json());
  }
  if (!json_path.empty()) std::ofstream(json_path) << report.dump(2) << '\n';
  return all ? 0 : 1;
}
