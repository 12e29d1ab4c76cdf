#include "weylift/catalog.hpp"

#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "weylift/clifford.hpp"
#include "weylift/lifts.hpp"
#include "weylift/quat.hpp"

namespace weylift {

namespace {

nlohmann::json scalar_json(const Cyclotomic& x) {
    nlohmann::json j;
    j["conductor"] = x.conductor();
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(c.get_str());
    j["coeffs"] = coeffs;
    return j;
}

std::string matrix_json_dump(const ExactMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(scalar_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows.dump();
}

std::string clifford_json_dump(const CliffordElement& x) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [subset, coeff] : x.terms()) {
        nlohmann::json t;
        nlohmann::json idx = nlohmann::json::array();
        for (int k = 0; k < x.dim(); ++k)
            if (subset & (uint32_t{1} << k)) idx.push_back(k + 1);
        t["basis"] = idx;
        t["coeff"] = scalar_json(coeff);
        terms.push_back(t);
    }
    return terms.dump();
}

std::pair<std::string, int> split_spec(const std::string& spec) {
    auto pos = spec.rfind(':');
    if (pos == std::string::npos || pos + 1 >= spec.size())
        throw std::invalid_argument("generator set must be written name:rank");
    int rank = std::stoi(spec.substr(pos + 1));
    return {spec.substr(0, pos), rank};
}

template <class Elem, class Dump>
ClosureSummary summarize(const std::string& name, ClosureResult<Elem> c, bool with_words,
                         bool with_elements, Dump dump) {
    ClosureSummary out;
    out.set_name = name;
    out.order = c.order;
    if (with_words) out.words = std::move(c.words);
    if (with_elements)
        for (const auto& e : c.elements) out.element_dumps.push_back(dump(e));
    return out;
}

ClosureResult<ExactMatrix> matrix_closure_words(const std::vector<ExactMatrix>& gens,
                                                const std::vector<std::string>& labels,
                                                size_t cap, bool words) {
    int ctx = 1;
    for (const auto& g : gens) ctx = std::lcm(ctx, g.conductor_lcm());
    return group_closure(
        ExactMatrix::identity(gens.front().dim()), gens, labels, cap,
        [](const ExactMatrix& a, const ExactMatrix& b) { return a * b; },
        [ctx](const ExactMatrix& m) { return m.promoted(ctx).key(); }, words);
}

}  // namespace

std::vector<std::string> catalog_names() {
    return {"gl-weyl",     "gl-tits", "gl-sdot",     "sl-lift", "so-odd-lift",
            "B-weyl-lift", "C-tits",  "C-invariant", "D-weyl-lift",
            "pin-gl",      "pin-b",   "pin-d",       "spin-b",  "quat-c"};
}

ClosureSummary run_catalog_closure(const std::string& spec, size_t cap, bool with_words,
                                   bool with_elements) {
    auto [name, rank] = split_spec(spec);

    auto label_range = [](const std::string& stem, int count) {
        std::vector<std::string> out;
        for (int k = 1; k <= count; ++k) out.push_back(stem + std::to_string(k));
        return out;
    };

    if (name == "gl-weyl" || name == "gl-tits" || name == "gl-sdot") {
        const int n = rank;
        GlGeneratorSet g = gl_generators(n);
        std::vector<ExactMatrix> gens;
        std::vector<std::string> labels;
        if (name == "gl-weyl" || name == "gl-tits") {
            gens = g.S;
            labels = label_range("S", n - 1);
        } else {
            gens = g.sdot;
            labels = label_range("r", n - 1);
        }
        if (name == "gl-tits") {
            gens.insert(gens.end(), g.T.begin(), g.T.end());
            auto t = label_range("T", n);
            labels.insert(labels.end(), t.begin(), t.end());
        }
        return summarize(name, matrix_closure_words(gens, labels, cap, with_words), with_words,
                         with_elements, matrix_json_dump);
    }
    if (name == "sl-lift") {
        auto lift = sl_lift(rank, cap);
        return summarize(name,
                         matrix_closure_words(lift.generators, label_range("sigma", rank), cap,
                                              with_words),
                         with_words, with_elements, matrix_json_dump);
    }
    if (name == "so-odd-lift") {
        auto lift = so_odd_lift(rank, cap);
        return summarize(name,
                         matrix_closure_words(lift.generators, label_range("sigma", rank), cap,
                                              with_words),
                         with_words, with_elements, matrix_json_dump);
    }
    if (name == "B-weyl-lift" || name == "C-tits" || name == "D-weyl-lift" ||
        name == "C-invariant") {
        TypeLabel type = (name[0] == 'B') ? TypeLabel::B
                                          : (name[0] == 'C' ? TypeLabel::C : TypeLabel::D);
        ClassicalLiftSet lift = classical_generators(type, rank);
        std::vector<ExactMatrix> gens;
        std::vector<std::string> labels;
        if (name == "C-invariant") {
            gens.push_back(lift.Stilde1);
            labels.push_back("St1");
            for (int k = 2; k <= rank; ++k) {
                gens.push_back(lift.Sg[k - 1]);
                labels.push_back("S" + std::to_string(k));
            }
        } else {
            gens = lift.Sg;
            labels = label_range("S", rank);
        }
        return summarize(name, matrix_closure_words(gens, labels, cap, with_words), with_words,
                         with_elements, matrix_json_dump);
    }
    if (name == "pin-gl") {
        PinGeneratorSet g = pin_generators(rank);
        std::vector<CliffordElement> gens = g.S;
        gens.insert(gens.end(), g.T.begin(), g.T.end());
        std::vector<std::string> labels = label_range("S", rank - 1);
        auto t = label_range("T", rank);
        labels.insert(labels.end(), t.begin(), t.end());
        int ctx = 1;
        for (const auto& g : gens) ctx = std::lcm(ctx, g.conductor_lcm());
        auto c = group_closure(
            CliffordElement::scalar(rank, Cyclotomic(1)), gens, labels, cap,
            [](const CliffordElement& a, const CliffordElement& b) { return a * b; },
            [ctx](const CliffordElement& x) { return x.promoted(ctx).key(); }, with_words);
        return summarize(name, std::move(c), with_words, with_elements, clifford_json_dump);
    }
    if (name == "pin-b" || name == "pin-d" || name == "spin-b") {
        PinLiftResult lift = (name == "pin-b")   ? pin_weyl_lift(TypeLabel::B, rank, cap)
                             : (name == "pin-d") ? pin_weyl_lift(TypeLabel::D, rank, cap)
                                                 : spin_lift_B(rank, cap);
        int ctx = 1;
        for (const auto& g : lift.generators) ctx = std::lcm(ctx, g.conductor_lcm());
        auto c = group_closure(
            CliffordElement::scalar(lift.generators.front().dim(), Cyclotomic(1)),
            lift.generators, label_range("S", rank), cap,
            [](const CliffordElement& a, const CliffordElement& b) { return a * b; },
            [ctx](const CliffordElement& x) { return x.promoted(ctx).key(); }, with_words);
        return summarize(name, std::move(c), with_words, with_elements, clifford_json_dump);
    }
    if (name == "quat-c") {
        auto res = quat_weyl_closure(rank, cap);
        ClosureSummary out;
        out.set_name = name;
        out.order = res.closure.order;
        if (with_words) {
            // rerun tracking words; the closure engine records them on demand
            std::vector<QuatMatrix> gens;
            std::vector<std::string> labels;
            for (int i = 0; i + 1 < rank; ++i) {
                std::vector<int> p(rank);
                for (int t = 0; t < rank; ++t) p[t] = t;
                std::swap(p[i], p[i + 1]);
                gens.push_back(QuatMatrix::permutation(p));
                labels.push_back("s" + std::to_string(i + 1));
            }
            for (int t = 0; t < rank; ++t) {
                std::vector<Quaternion> d(rank, Quaternion::unit());
                d[t] = Quaternion::j();
                gens.push_back(QuatMatrix::diagonal(d));
                labels.push_back("j" + std::to_string(t + 1));
            }
            auto c = group_closure(
                QuatMatrix::identity(rank), gens, labels, cap,
                [](const QuatMatrix& a, const QuatMatrix& b) { return a * b; },
                [](const QuatMatrix& g) { return g.key(); }, true);
            out.words = std::move(c.words);
        }
        if (with_elements)
            for (const auto& e : res.closure.elements) out.element_dumps.push_back(e.key());
        return out;
    }
    throw std::invalid_argument("unknown generator set '" + name + "'");
}

}  // namespace weylift
