#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylift/report.hpp"

namespace weylift {

// Dispatches the named verification suite.  `type` and `rank` are used when
// the suite takes them; `all` fans out to every suite valid at the rank.
// Suite names: gl, classical, sl, so, pin, spin, quat, adjoint, serre,
// rootdata, theta-fixed, outer-d, all.
std::vector<SuiteReport> run_suites(const std::string& suite, std::optional<char> type,
                                    std::optional<int> rank);

std::vector<std::string> suite_names();

}  // namespace weylift
