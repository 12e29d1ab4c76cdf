#pragma once

#include <string>
#include <vector>

namespace weylift {

enum class CheckStatus { Pass, Fail, Error };

struct Check {
    std::string name;
    CheckStatus status;
    std::string detail;
};

// Result of one verification suite.  All checks are exact comparisons;
// there is no tolerance anywhere.
struct SuiteReport {
    std::string suite;
    std::string type_label;  // empty when not applicable
    int rank = 0;
    std::vector<Check> checks;
    long elapsed_ms = 0;

    void pass(const std::string& name, const std::string& detail = "") {
        checks.push_back({name, CheckStatus::Pass, detail});
    }
    void fail(const std::string& name, const std::string& detail = "") {
        checks.push_back({name, CheckStatus::Fail, detail});
    }
    void error(const std::string& name, const std::string& detail = "") {
        checks.push_back({name, CheckStatus::Error, detail});
    }
    void require(const std::string& name, bool ok, const std::string& detail = "") {
        checks.push_back({name, ok ? CheckStatus::Pass : CheckStatus::Fail, detail});
    }

    bool all_passed() const {
        for (const auto& c : checks)
            if (c.status != CheckStatus::Pass) return false;
        return true;
    }
    size_t failed_count() const {
        size_t n = 0;
        for (const auto& c : checks)
            if (c.status != CheckStatus::Pass) ++n;
        return n;
    }
};

std::string report_to_json(const std::vector<SuiteReport>& reports, int indent = 2);
std::string report_to_text(const SuiteReport& report);

}  // namespace weylift
