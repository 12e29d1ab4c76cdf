#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "weylift/catalog.hpp"
#include "weylift/closure.hpp"
#include "weylift/matrix.hpp"
#include "weylift/report.hpp"
#include "weylift/rootdata.hpp"
#include "weylift/suites.hpp"

namespace {

int write_out(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << "\n";
        return 0;
    }
    std::ofstream f(out_path);
    if (!f) {
        std::cerr << "cannot open " << out_path << "\n";
        return 2;
    }
    f << text << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Weyl-group lifts into classical groups: root data, relation "
                 "verification suites and group closures"};
    app.require_subcommand(1);

    // rootdata
    std::string rd_type;
    int rd_rank = 0;
    std::string rd_out;
    auto* rd = app.add_subcommand("rootdata", "Print the root datum of a classical type as JSON");
    rd->add_option("--type", rd_type, "Type label: A, B, C or D")->required();
    rd->add_option("--rank", rd_rank, "Rank (D needs rank >= 2)")->required();
    rd->add_option("--out", rd_out, "Write JSON to this path instead of stdout");

    // verify
    std::string v_suite, v_type;
    std::optional<int> v_rank;
    bool v_json = false;
    std::string v_out;
    auto* vf = app.add_subcommand("verify", "Run a verification suite and report each check");
    vf->add_option("--suite", v_suite, "One of: gl, classical, sl, so, pin, spin, quat, "
                                       "adjoint, serre, rootdata, theta-fixed, outer-d, all")
        ->required();
    vf->add_option("--type", v_type, "Type label where applicable");
    vf->add_option("--rank", v_rank, "Rank (for the gl suite: the matrix dimension n)");
    vf->add_flag("--json", v_json, "Emit the report as JSON");
    vf->add_option("--out", v_out, "Write the report to this path");

    // closure
    std::string c_set;
    size_t c_cap = weylift::kDefaultClosureCap;
    std::optional<long> c_expect;
    bool c_json = false, c_words = false, c_full = false;
    std::string c_out;
    auto* cl = app.add_subcommand("closure", "Compute the order of a named generator set");
    cl->add_option("--set", c_set, "Generator set, written name:rank (see list-sets)")->required();
    cl->add_option("--cap", c_cap, "Element cap before aborting");
    cl->add_option("--expect", c_expect, "Exit nonzero unless the order equals this");
    cl->add_flag("--json", c_json, "Emit JSON");
    cl->add_flag("--words", c_words, "Include a shortest word per element");
    cl->add_flag("--full", c_full, "Include full element dumps");
    cl->add_option("--out", c_out, "Write output to this path");

    auto* ls = app.add_subcommand("list-sets", "List the named generator sets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (rd->parsed()) {
            if (rd_type.size() != 1) throw std::invalid_argument("type must be a single letter");
            weylift::TypeLabel t = weylift::type_from_char(rd_type[0]);
            auto datum = weylift::build_root_datum(t, rd_rank);
            return write_out(weylift::rootdatum_to_json(datum), rd_out);
        }
        if (vf->parsed()) {
            std::optional<char> t;
            if (!v_type.empty()) {
                if (v_type.size() != 1) throw std::invalid_argument("type must be a single letter");
                t = v_type[0];
            }
            auto reports = weylift::run_suites(v_suite, t, v_rank);
            bool all_ok = true;
            std::string text;
            if (v_json) {
                text = weylift::report_to_json(reports);
            } else {
                for (const auto& r : reports) text += weylift::report_to_text(r);
            }
            for (const auto& r : reports) all_ok = all_ok && r.all_passed();
            int rc = write_out(text, v_out);
            if (rc) return rc;
            return all_ok ? 0 : 1;
        }
        if (cl->parsed()) {
            weylift::ClosureSummary summary;
            try {
                summary = weylift::run_catalog_closure(c_set, c_cap, c_words, c_full);
            } catch (const weylift::ClosureCapExceeded& e) {
                std::cerr << e.what() << "\n";
                return 1;
            }
            std::string text;
            if (c_json) {
                nlohmann::json j;
                j["set"] = summary.set_name;
                j["order"] = summary.order;
                if (c_words) j["words"] = summary.words;
                if (c_full) {
                    nlohmann::json elems = nlohmann::json::array();
                    for (const auto& dump : summary.element_dumps) {
                        auto parsed = nlohmann::json::parse(dump, nullptr, false);
                        elems.push_back(parsed.is_discarded() ? nlohmann::json(dump)
                                                              : parsed);
                    }
                    j["elements"] = elems;
                }
                text = j.dump(2);
            } else {
                text = "set " + c_set + ": order " + std::to_string(summary.order);
                if (c_words) {
                    text += "\n";
                    for (const auto& w : summary.words) text += w + "\n";
                }
            }
            int rc = write_out(text, c_out);
            if (rc) return rc;
            if (c_expect && static_cast<long>(summary.order) != *c_expect) {
                std::cerr << "order " << summary.order << " differs from expected " << *c_expect
                          << "\n";
                return 1;
            }
            return 0;
        }
        if (ls->parsed()) {
            for (const auto& n : weylift::catalog_names()) std::cout << n << ":<rank>\n";
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
