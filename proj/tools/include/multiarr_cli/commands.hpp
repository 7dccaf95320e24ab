#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "multiarr_cli/document.hpp"
#include "multiarr_cli/report.hpp"

namespace multiarr::cli {

/// Exponents, Delta, balancedness and a basis of a 2-multiarrangement.
Report cmd_exp(const ArrangementDocument& doc);

struct LatticeOptions {
  std::vector<int> caps;
  std::optional<int> total_cap;
  std::optional<std::string> verify;  // "one", "str" or "limit"; all three when empty
  std::size_t budget = 200000;        // refuse regions with more points than this
  unsigned jobs = 0;
};

Report cmd_lattice(const ArrangementDocument& doc, const LatticeOptions& opts);

/// Shift certificate for m0; unmet hypotheses raise PreconditionError.
Report cmd_shift(const ArrangementDocument& doc, const std::vector<int>& m0, unsigned jobs = 0);

/// Freeness verdict of a central 3-arrangement, or of the coning of an affine
/// 2-arrangement (default H0: the first plane, resp. the infinite plane).
Report cmd_free(const ArrangementDocument& doc, std::optional<std::size_t> h0);

/// Runs the desk suite over the bundled corpus, or over the documents of
/// corpus_dir when given.
Report cmd_verify_all(const std::string& suite, const std::optional<std::string>& corpus_dir, unsigned jobs = 0);

}  // namespace multiarr::cli
