#include "weylift/report.hpp"

#include <sstream>

#include "json.hpp"

namespace weylift {

namespace {
const char* status_str(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Error: return "error";
    }
    return "?";
}
}  // namespace

std::string report_to_json(const std::vector<SuiteReport>& reports, int indent) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json j;
        j["suite"] = r.suite;
        if (!r.type_label.empty()) j["type"] = r.type_label;
        if (r.rank) j["rank"] = r.rank;
        j["elapsed_ms"] = r.elapsed_ms;
        j["all_passed"] = r.all_passed();
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : r.checks) {
            nlohmann::json cj;
            cj["name"] = c.name;
            cj["status"] = status_str(c.status);
            if (!c.detail.empty()) cj["detail"] = c.detail;
            checks.push_back(cj);
        }
        j["checks"] = checks;
        out.push_back(j);
    }
    return out.dump(indent);
}

std::string report_to_text(const SuiteReport& r) {
    std::ostringstream os;
    os << "suite " << r.suite;
    if (!r.type_label.empty()) os << " type=" << r.type_label;
    if (r.rank) os << " rank=" << r.rank;
    os << "  [" << (r.all_passed() ? "PASS" : "FAIL") << ", " << r.checks.size() << " checks, "
       << r.elapsed_ms << " ms]\n";
    for (const auto& c : r.checks) {
        os << "  " << status_str(c.status) << "  " << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
    }
    return os.str();
}

}  // namespace weylift
