#pragma once

#include <optional>
#include <string>
#include <vector>

#include "multiarr/lattice.hpp"
#include "multiarr_cli/corpus.hpp"

namespace multiarr::cli {

struct CriterionResult {
  int id = 0;
  std::string title;
  VerdictStatus status = VerdictStatus::Pass;
  std::vector<std::string> details;
  double seconds = 0.0;
  std::optional<double> time_limit;  // seconds; exceeding it fails the criterion

  bool passed() const { return status != VerdictStatus::Fail; }
};

inline constexpr int kDeskCriteria = 10;

/// Runs one desk-scale criterion (1..10). The corpus feeds the coning
/// factorization check; the other criteria build their own inputs.
CriterionResult run_criterion(int id, const std::vector<CorpusEntry>& corpus, unsigned jobs = 0);

std::vector<CriterionResult> run_desk_suite(const std::vector<CorpusEntry>& corpus, unsigned jobs = 0);

/// "PASS  3 char-2 reproduction [EXPECTED-VIOLATION] (0.01 s)"
std::string summary_line(const CriterionResult& r);

}  // namespace multiarr::cli
