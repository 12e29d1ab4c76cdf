#include "weylift/suites.hpp"

#include <chrono>
#include <set>
#include <sstream>
#include <stdexcept>

#include "weylift/clifford.hpp"
#include "weylift/liealg.hpp"
#include "weylift/lifts.hpp"
#include "weylift/quat.hpp"
#include "weylift/rootdata.hpp"

namespace weylift {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

std::vector<std::vector<long>> expected_cartan(TypeLabel type, int ell) {
    std::vector<std::vector<long>> a(ell, std::vector<long>(ell, 0));
    for (int i = 0; i < ell; ++i) a[i][i] = 2;
    if (type == TypeLabel::D) {  // fork: nodes 1 and 2 both bond to node 3
        for (int i = 2; i < ell; ++i) { a[i][i - 1] = -1; a[i - 1][i] = -1; }
        if (ell >= 3) { a[0][2] = -1; a[2][0] = -1; }
        return a;
    }
    for (int i = 1; i < ell; ++i) { a[i][i - 1] = -1; a[i - 1][i] = -1; }
    if (ell >= 2) {
        if (type == TypeLabel::B) a[0][1] = -2;
        if (type == TypeLabel::C) a[1][0] = -2;
    }
    return a;
}

std::vector<RationalVec> expected_inverse_cartan(TypeLabel type, int ell) {
    std::vector<RationalVec> c(ell, RationalVec(ell, rational(0)));
    auto r = [](long num, long den = 1) { return rational(num, den); };
    for (int i = 1; i <= ell; ++i)
        for (int j = 1; j <= ell; ++j) {
            switch (type) {
                case TypeLabel::A:
                    c[i - 1][j - 1] = r(std::min(i, j) * (ell + 1 - std::max(i, j)), ell + 1);
                    break;
                case TypeLabel::B:
                    c[i - 1][j - 1] = (j == 1) ? r(ell + 1 - i, 2) : r(ell + 1 - std::max(i, j));
                    break;
                case TypeLabel::C:
                    c[i - 1][j - 1] = (i == 1) ? r(ell + 1 - j, 2) : r(ell + 1 - std::max(i, j));
                    break;
                case TypeLabel::D: {
                    bool fi = i <= 2, fj = j <= 2;
                    if (fi && fj) c[i - 1][j - 1] = (i == j) ? r(ell, 4) : r(ell - 2, 4);
                    else if (fi) c[i - 1][j - 1] = r(ell + 1 - j, 2);
                    else if (fj) c[i - 1][j - 1] = r(ell + 1 - i, 2);
                    else c[i - 1][j - 1] = r(ell + 1 - std::max(i, j));
                    break;
                }
            }
        }
    return c;
}

SuiteReport rootdata_suite(TypeLabel type, int rank) {
    auto t0 = Clock::now();
    SuiteReport rep;
    rep.suite = "rootdata";
    rep.type_label = std::string(1, type_char(type));
    rep.rank = rank;

    RootDatum d = build_root_datum(type, rank);
    rep.require("cartan-pattern", d.cartan == expected_cartan(type, rank));
    rep.require("inverse-cartan-pattern", d.inverse_cartan == expected_inverse_cartan(type, rank));

    bool prod_ok = true;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            Rational s(0);
            for (int k = 0; k < rank; ++k) s += Rational(d.cartan[i][k]) * d.inverse_cartan[k][j];
            prod_ok = prod_ok && s == (i == j ? 1 : 0);
        }
    rep.require("cartan-times-inverse", prod_ok);

    bool pair_ok = true;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) {
            Rational wc(0), cw(0);
            for (int t = 0; t < d.ambient_dim; ++t) {
                wc += d.fundamental_weights[i][t] * d.simple_coroots[j][t];
                cw += d.simple_roots[i][t] * d.fundamental_coweights[j][t];
            }
            pair_ok = pair_ok && wc == (i == j ? 1 : 0) && cw == (i == j ? 1 : 0);
        }
    rep.require("weight-coroot-duality", pair_ok);

    auto roots = generate_root_system(d);
    long expect_count = 0;
    switch (type) {
        case TypeLabel::A: expect_count = rank * (rank + 1); break;
        case TypeLabel::B:
        case TypeLabel::C: expect_count = 2L * rank * rank; break;
        case TypeLabel::D: expect_count = 2L * rank * (rank - 1); break;
    }
    rep.require("root-count", static_cast<long>(roots.size()) == expect_count,
                std::to_string(roots.size()) + " roots");

    bool invol = true, perm = true;
    std::set<std::string> root_keys;
    auto vkey = [](const RationalVec& v) {
        std::string s;
        for (const auto& x : v) s += x.get_str() + ",";
        return s;
    };
    for (const auto& r : roots) root_keys.insert(vkey(r));
    for (int i = 1; i <= rank; ++i)
        for (const auto& r : roots) {
            RationalVec img = reflect(d, i, r);
            invol = invol && reflect(d, i, img) == r;
            perm = perm && root_keys.count(vkey(img)) > 0;
        }
    rep.require("reflections-involutive", invol);
    rep.require("reflections-permute-roots", perm);

    std::vector<Integer> fg = fundamental_group(type, rank);
    std::vector<Integer> expect_fg;
    switch (type) {
        case TypeLabel::A: expect_fg = {Integer(rank + 1)}; break;
        case TypeLabel::B:
        case TypeLabel::C: expect_fg = {Integer(2)}; break;
        case TypeLabel::D:
            expect_fg = (rank % 2 == 0) ? std::vector<Integer>{Integer(2), Integer(2)}
                                        : std::vector<Integer>{Integer(4)};
            break;
    }
    std::ostringstream fg_str;
    for (const auto& x : fg) fg_str << x.get_str() << " ";
    rep.require("fundamental-group", fg == expect_fg, fg_str.str());

    Integer det(1);
    {
        std::vector<std::vector<Integer>> m(rank, std::vector<Integer>(rank));
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) m[i][j] = d.cartan[i][j];
        for (const auto& inv : smith_invariants(std::move(m))) det *= inv;
    }
    Integer fg_prod(1);
    for (const auto& x : fg) fg_prod *= x;
    rep.require("determinant-is-invariant-product", det == fg_prod, det.get_str());

    if (weyl_order(type, rank) <= Integer(50000)) {
        auto wenum = weyl_enumerate(type, rank);
        rep.require("weyl-enumeration-order",
                    Integer(static_cast<unsigned long>(wenum.order)) == weyl_order(type, rank),
                    "order " + std::to_string(wenum.order));
    }

    if (type != TypeLabel::A) {
        bool embed_ok = true;
        for (int k = 1; k <= rank; ++k) {
            SignedPerm via_word = folded_action_of_word(type, rank, embed_in_type_A(type, rank, k));
            SignedPerm via_datum = signed_perm_of_simple_reflection(d, k);
            embed_ok = embed_ok && via_word.key() == via_datum.key();
        }
        rep.require("embedding-words-act-correctly", embed_ok);
    }
    if (type == TypeLabel::D) {
        SignedPerm outer = folded_action_of_word(type, rank, embed_outer_D(rank));
        SignedPerm flip = SignedPerm::identity(rank);
        flip.sign[0] = -1;
        rep.require("outer-flip-action", outer.key() == flip.key(),
                    "diagram flip negates the first folded coordinate");
    }
    if (type == TypeLabel::B && weyl_order(type, rank) <= Integer(50000)) {
        auto wb = weyl_enumerate(TypeLabel::B, rank);
        auto wc = weyl_enumerate(TypeLabel::C, rank);
        std::set<std::string> kb, kc;
        for (const auto& w : wb.elements) kb.insert(w.key());
        for (const auto& w : wc.elements) kc.insert(w.key());
        rep.require("b-and-c-weyl-groups-coincide", kb == kc);
    }

    rep.elapsed_ms = ms_since(t0);
    return rep;
}

SuiteReport theta_fixed_suite(TypeLabel type, int rank) {
    auto t0 = Clock::now();
    SuiteReport rep;
    rep.suite = "theta-fixed";
    rep.type_label = std::string(1, type_char(type));
    rep.rank = rank;

    const int n = (type == TypeLabel::B) ? 2 * rank + 1 : 2 * rank;
    if (n <= 8) {
        long count = theta_fixed_weyl_order(type, rank);
        Integer expect(1);
        for (int k = 2; k <= rank; ++k) expect *= k;
        for (int k = 0; k < rank; ++k) expect *= 2;
        rep.require("fixed-permutation-count", Integer(count) == expect,
                    std::to_string(count) + " of n! permutations, expected " + expect.get_str());
    } else {
        rep.error("fixed-permutation-count", "ambient symmetric group too large (n > 8)");
    }

    int dim = theta_fixed_dimension(type, rank);
    int expect_dim = (type == TypeLabel::D) ? rank * (2 * rank - 1) : rank * (2 * rank + 1);
    rep.require("fixed-subalgebra-dimension", dim == expect_dim,
                std::to_string(dim) + ", expected " + std::to_string(expect_dim));

    rep.elapsed_ms = ms_since(t0);
    return rep;
}

void add_if_valid(std::vector<SuiteReport>& out, TypeLabel type, int rank,
                  SuiteReport (*fn)(TypeLabel, int)) {
    if (rank < 1 || (type == TypeLabel::D && rank < 2)) return;
    out.push_back(fn(type, rank));
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"gl",   "classical", "sl",      "so",         "pin",     "spin",
            "quat", "adjoint",   "serre",   "rootdata",   "theta-fixed", "outer-d", "all"};
}

std::vector<SuiteReport> run_suites(const std::string& suite, std::optional<char> type_c,
                                    std::optional<int> rank_opt) {
    std::vector<SuiteReport> out;
    std::optional<TypeLabel> type;
    if (type_c) type = type_from_char(*type_c);

    auto need_rank = [&](int fallback) { return rank_opt.value_or(fallback); };

    if (suite == "gl") {
        out.push_back(verify_gl_tits_presentation(need_rank(3)));
    } else if (suite == "classical") {
        if (type) out.push_back(verify_classical_suite(*type, need_rank(2)));
        else {
            int r = need_rank(2);
            for (TypeLabel t : {TypeLabel::B, TypeLabel::C, TypeLabel::D})
                if (!(t == TypeLabel::D && r < 2)) out.push_back(verify_classical_suite(t, r));
        }
    } else if (suite == "sl") {
        out.push_back(sl_lift(need_rank(2)).report);
    } else if (suite == "so") {
        out.push_back(so_odd_lift(need_rank(2)).report);
    } else if (suite == "pin") {
        if (type) out.push_back(pin_weyl_lift(*type, need_rank(2)).report);
        else {
            int r = need_rank(2);
            out.push_back(pin_weyl_lift(TypeLabel::B, r).report);
            if (r >= 2) out.push_back(pin_weyl_lift(TypeLabel::D, r).report);
        }
    } else if (suite == "spin") {
        out.push_back(spin_lift_B(need_rank(2)).report);
    } else if (suite == "quat") {
        out.push_back(quat_basics());
        out.push_back(quat_conj_complex_check());
        int m = std::min(need_rank(2), 3);
        out.push_back(quat_weyl_closure(m).report);
        out.push_back(monomial_normalizer_check(m));
    } else if (suite == "adjoint") {
        if (type) out.push_back(verify_adjoint_suite(*type, need_rank(2)));
        else {
            int r = need_rank(2);
            for (TypeLabel t : {TypeLabel::A, TypeLabel::B, TypeLabel::C, TypeLabel::D})
                if (!(t == TypeLabel::D && r < 2)) out.push_back(verify_adjoint_suite(t, r));
        }
    } else if (suite == "serre") {
        if (type) out.push_back(verify_serre(*type, need_rank(2)));
        else {
            int r = need_rank(2);
            for (TypeLabel t : {TypeLabel::A, TypeLabel::B, TypeLabel::C, TypeLabel::D})
                if (!(t == TypeLabel::D && r < 2)) out.push_back(verify_serre(t, r));
        }
    } else if (suite == "rootdata") {
        if (type) out.push_back(rootdata_suite(*type, need_rank(2)));
        else {
            int r = need_rank(2);
            for (TypeLabel t : {TypeLabel::A, TypeLabel::B, TypeLabel::C, TypeLabel::D})
                if (!(t == TypeLabel::D && r < 2)) out.push_back(rootdata_suite(t, r));
        }
    } else if (suite == "theta-fixed") {
        if (type) out.push_back(theta_fixed_suite(*type, need_rank(2)));
        else {
            int r = need_rank(2);
            for (TypeLabel t : {TypeLabel::B, TypeLabel::C, TypeLabel::D})
                if (!(t == TypeLabel::D && r < 2)) out.push_back(theta_fixed_suite(t, r));
        }
    } else if (suite == "outer-d") {
        out.push_back(outer_rep_D(need_rank(2)).report);
    } else if (suite == "all") {
        int r = need_rank(2);
        for (TypeLabel t : {TypeLabel::A, TypeLabel::B, TypeLabel::C, TypeLabel::D}) {
            add_if_valid(out, t, r, +[](TypeLabel tt, int rr) { return rootdata_suite(tt, rr); });
            add_if_valid(out, t, r, +[](TypeLabel tt, int rr) { return verify_serre(tt, rr); });
            add_if_valid(out, t, r,
                         +[](TypeLabel tt, int rr) { return verify_adjoint_suite(tt, rr); });
        }
        out.push_back(verify_gl_tits_presentation(2 * r));
        out.push_back(verify_gl_tits_presentation(2 * r + 1));
        for (TypeLabel t : {TypeLabel::B, TypeLabel::C, TypeLabel::D}) {
            add_if_valid(out, t, r,
                         +[](TypeLabel tt, int rr) { return verify_classical_suite(tt, rr); });
            // the fixed-permutation count enumerates S_n; stay inside its cap
            if ((t == TypeLabel::B ? 2 * r + 1 : 2 * r) <= 8)
                add_if_valid(out, t, r,
                             +[](TypeLabel tt, int rr) { return theta_fixed_suite(tt, rr); });
        }
        out.push_back(sl_lift(r).report);
        out.push_back(so_odd_lift(r).report);
        // Clifford closures grow quickly with the dimension; the aggregate
        // stays at desk scale and leaves larger ranks to direct invocation.
        if (r <= 3) {
            out.push_back(pin_weyl_lift(TypeLabel::B, r).report);
            if (r >= 2) out.push_back(pin_weyl_lift(TypeLabel::D, r).report);
            out.push_back(spin_lift_B(r).report);
        }
        if (r >= 2) out.push_back(outer_rep_D(r).report);
        out.push_back(quat_basics());
        out.push_back(quat_conj_complex_check());
        int m = std::min(r, 3);
        out.push_back(quat_weyl_closure(m).report);
        out.push_back(monomial_normalizer_check(m));
    } else {
        throw std::invalid_argument("unknown suite '" + suite + "'");
    }
    return out;
}

}  // namespace weylift
