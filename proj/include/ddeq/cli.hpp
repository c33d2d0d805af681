#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ddeq {

/// Command front end; `args` excludes the program name. Exit codes: 0 for a
/// produced report (Verified, TwoSolutions, classifications, growth reports),
/// 2 for expected negatives (NotASolution, NoFiniteOrderSolution), 1 for
/// errors. Used by the ddeq binary and called in-process by tests.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

} // namespace ddeq
