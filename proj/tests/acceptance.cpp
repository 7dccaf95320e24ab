#include <iostream>

#include "multiarr_cli/corpus.hpp"
#include "multiarr_cli/desk_suite.hpp"

// Runs the ten desk-scale acceptance criteria over the bundled corpus and
// prints one verdict line per criterion.
int main() {
  namespace cli = multiarr::cli;
  int failed = 0;
  for (const auto& r : cli::run_desk_suite(cli::builtin_corpus())) {
    std::cout << cli::summary_line(r) << "\n";
    for (const auto& d : r.details) std::cout << "      " << d << "\n";
    failed += r.passed() ? 0 : 1;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
  return failed == 0 ? 0 : 1;
}
