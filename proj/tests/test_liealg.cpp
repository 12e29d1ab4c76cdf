#include <map>
#include <set>

#include "doctest.h"
#include "weylift/liealg.hpp"
#include "weylift/lifts.hpp"

using namespace weylift;

namespace {

ExactMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    ExactMatrix m(static_cast<int>(rows.size()), 1);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows.size(); ++j) m.at(i, j) = Cyclotomic(rows[i][j]);
    return m;
}

}  // namespace

TEST_CASE("Chevalley generators: pinned matrices") {
    ChevalleySet a1 = chevalley_generators(TypeLabel::A, 1);
    CHECK(a1.e[0] == from_rows({{0, 1}, {0, 0}}));
    CHECK(a1.f[0] == from_rows({{0, 0}, {1, 0}}));
    CHECK(a1.h[0] == from_rows({{1, 0}, {0, -1}}));
    CHECK(a1.e[0].commutator(a1.f[0]) == a1.h[0]);

    ChevalleySet b1 = chevalley_generators(TypeLabel::B, 1);
    ExactMatrix want(3, 8);
    want.at(0, 1) = Cyclotomic::sqrt2();
    want.at(1, 2) = Cyclotomic::sqrt2();
    CHECK(b1.e[0] == want);
    CHECK(b1.h[0] == from_rows({{2, 0, 0}, {0, 0, 0}, {0, 0, -2}}));

    ChevalleySet c1 = chevalley_generators(TypeLabel::C, 1);
    CHECK(c1.e[0] == from_rows({{0, 1}, {0, 0}}));

    ChevalleySet d2 = chevalley_generators(TypeLabel::D, 2);
    CHECK(d2.e[0] == from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}}));
}

TEST_CASE("Chevalley, Serre and compact-triple relations for all types") {
    for (TypeLabel t : {TypeLabel::A, TypeLabel::B, TypeLabel::C, TypeLabel::D})
        for (int rank = (t == TypeLabel::D ? 2 : 1); rank <= 4; ++rank) {
            SuiteReport rep = verify_serre(t, rank);
            INFO("type ", type_char(t), " rank ", rank);
            CHECK(rep.all_passed());
        }
}

TEST_CASE("the generators lie in the classical subalgebra") {
    for (TypeLabel t : {TypeLabel::B, TypeLabel::C, TypeLabel::D}) {
        int rank = 3;
        ChevalleySet ch = chevalley_generators(t, rank);
        ThetaInvolution theta(t, rank);
        for (int i = 0; i < rank; ++i) {
            CHECK(theta.apply_lie(ch.e[i]) == ch.e[i]);
            CHECK(theta.apply_lie(ch.f[i]) == ch.f[i]);
            CHECK(theta.apply_lie(ch.h[i]) == ch.h[i]);
        }
    }
}

TEST_CASE("quarter-turn exponentials: pinned values") {
    CHECK(exp_quarter_J(TypeLabel::A, 1, 1) == from_rows({{0, -1}, {1, 0}}));
    CHECK(exp_quarter_J(TypeLabel::B, 1, 1) == from_rows({{0, 0, 1}, {0, -1, 0}, {1, 0, 0}}));
    CHECK(exp_quarter_J(TypeLabel::C, 1, 1) == from_rows({{0, -1}, {1, 0}}));
    CHECK(exp_quarter_J(TypeLabel::D, 2, 1) ==
          from_rows({{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
}

TEST_CASE("quarter-turn exponentials equal the group-side quarter turns") {
    for (int rank = 1; rank <= 4; ++rank) {
        GlGeneratorSet g = gl_generators(rank + 1);
        for (int i = 1; i <= rank; ++i)
            CHECK(exp_quarter_J(TypeLabel::A, rank, i) == g.sdot[i - 1]);
    }
    for (TypeLabel t : {TypeLabel::B, TypeLabel::C, TypeLabel::D})
        for (int rank = (t == TypeLabel::D ? 2 : 1); rank <= 4; ++rank) {
            ClassicalLiftSet lift = classical_generators(t, rank);
            for (int i = 1; i <= rank; ++i) {
                INFO("type ", type_char(t), " rank ", rank, " index ", i);
                CHECK(exp_quarter_J(t, rank, i) == lift.sdotg[i - 1]);
            }
        }
}

TEST_CASE("theta-fixed subalgebra dimensions") {
    CHECK(theta_fixed_dimension(TypeLabel::B, 1) == 3);
    CHECK(theta_fixed_dimension(TypeLabel::C, 1) == 3);
    CHECK(theta_fixed_dimension(TypeLabel::D, 2) == 6);
    for (int rank = 1; rank <= 4; ++rank) {
        CHECK(theta_fixed_dimension(TypeLabel::B, rank) == rank * (2 * rank + 1));
        CHECK(theta_fixed_dimension(TypeLabel::C, rank) == rank * (2 * rank + 1));
        if (rank >= 2) CHECK(theta_fixed_dimension(TypeLabel::D, rank) == rank * (2 * rank - 1));
    }
}

TEST_CASE("adjoint suites for all types") {
    for (TypeLabel t : {TypeLabel::A, TypeLabel::B, TypeLabel::C, TypeLabel::D})
        for (int rank = (t == TypeLabel::D ? 2 : 1); rank <= 4; ++rank) {
            SuiteReport rep = verify_adjoint_suite(t, rank);
            INFO("type ", type_char(t), " rank ", rank);
            CHECK(rep.all_passed());
            for (const auto& c : rep.checks) CHECK(c.name != "table-erratum");
        }
}

TEST_CASE("adjoint action: pinned cells") {
    // type A: Ad_{S_1}(e_1) = f_1
    ChevalleySet a2 = chevalley_generators(TypeLabel::A, 2);
    GlGeneratorSet g3 = gl_generators(3);
    CHECK(g3.S[0] * a2.e[0] * g3.S[0].inverse() == a2.f[0]);

    // type C: Ad_{S^C_1}(e_1) = -f_1
    ChevalleySet c2 = chevalley_generators(TypeLabel::C, 2);
    ClassicalLiftSet lc2 = classical_generators(TypeLabel::C, 2);
    CHECK(lc2.Sg[0] * c2.e[0] * lc2.Sg[0].inverse() == -c2.f[0]);

    // type B: Ad_{S^B_1}(e_1) = f_1
    ChevalleySet b2 = chevalley_generators(TypeLabel::B, 2);
    ClassicalLiftSet lb2 = classical_generators(TypeLabel::B, 2);
    CHECK(lb2.Sg[0] * b2.e[0] * lb2.Sg[0].inverse() == b2.f[0]);

    // type D fork: Ad_{S^D_1}(e_2) = -e_2 at rank two
    ChevalleySet d2 = chevalley_generators(TypeLabel::D, 2);
    ClassicalLiftSet ld2 = classical_generators(TypeLabel::D, 2);
    CHECK(ld2.Sg[0] * d2.e[1] * ld2.Sg[0].inverse() == -d2.e[1]);
}

TEST_CASE("Cartan decomposition: ad-weights of the algebra are exactly the roots") {
    for (TypeLabel t : {TypeLabel::A, TypeLabel::B, TypeLabel::C, TypeLabel::D})
        for (int rank = 2; rank <= 3; ++rank) {
            ChevalleySet ch = chevalley_generators(t, rank);
            RootDatum datum = build_root_datum(t, rank);
            const int n = ch.n;

            // weight of the matrix unit E_{uv}: ([h_i]_uu - [h_i]_vv)_i
            auto weight_of_unit = [&](int u, int v) {
                std::vector<Rational> w(rank);
                for (int i = 0; i < rank; ++i)
                    w[i] = ch.h[i].at(u, u).rational_value() -
                           ch.h[i].at(v, v).rational_value();
                return w;
            };
            auto key_of = [](const std::vector<Rational>& w) {
                std::string s;
                for (const auto& x : w) s += x.get_str() + ",";
                return s;
            };

            // dimension of each nonzero weight space inside the subalgebra:
            // for types B, C, D project matrix units onto the fixed space of
            // the Lie involution, for type A onto trace zero (off-diagonal
            // units are already traceless).
            std::map<std::string, int> dim_of_weight;
            std::set<std::string> seen_units;
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) {
                    if (u == v) continue;
                    auto w = weight_of_unit(u, v);
                    bool zero = true;
                    for (const auto& x : w) zero = zero && sgn(x) == 0;
                    if (zero) continue;
                    if (t == TypeLabel::A) {
                        dim_of_weight[key_of(w)] += 1;
                        continue;
                    }
                    ThetaInvolution theta(t, rank);
                    ExactMatrix unit(n, 1);
                    unit.at(u, v) = Cyclotomic(1);
                    ExactMatrix proj = unit + theta.apply_lie(unit);
                    if (proj.is_zero()) continue;
                    // the projector maps paired units to the same line; count
                    // each orbit once
                    std::string orbit;
                    for (int a = 0; a < n; ++a)
                        for (int b = 0; b < n; ++b)
                            if (!proj.at(a, b).is_zero())
                                orbit += std::to_string(a) + ":" + std::to_string(b) + ";";
                    if (seen_units.insert(key_of(w) + "|" + orbit).second)
                        dim_of_weight[key_of(w)] += 1;
                }

            // expected: every root once, with weight <root, coroot_i>
            std::map<std::string, int> expected;
            for (const auto& r : generate_root_system(datum)) {
                std::vector<Rational> w(rank);
                for (int i = 0; i < rank; ++i) {
                    Rational s(0);
                    for (size_t c = 0; c < r.size(); ++c) s += r[c] * datum.simple_coroots[i][c];
                    w[i] = s;
                }
                expected[key_of(w)] += 1;
            }
            INFO("type ", type_char(t), " rank ", rank);
            CHECK(dim_of_weight == expected);
        }
}


TEST_CASE("conjugation by fixed group elements preserves the fixed subalgebra") {
    for (TypeLabel t : {TypeLabel::B, TypeLabel::C, TypeLabel::D}) {
        int rank = 2;
        ThetaInvolution theta(t, rank);
        ChevalleySet ch = chevalley_generators(t, rank);
        ClassicalLiftSet lift = classical_generators(t, rank);
        auto closure = matrix_closure(lift.Sg, 1000);
        for (const auto& g : closure.elements) {
            ExactMatrix inv = g.inverse();
            for (int i = 0; i < rank; ++i) {
                for (const ExactMatrix* x : {&ch.e[i], &ch.f[i], &ch.h[i]}) {
                    ExactMatrix ad = g * *x * inv;
                    CHECK(theta.apply_lie(ad) == ad);
                }
            }
        }
    }
}
