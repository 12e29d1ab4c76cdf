#include <set>

#include "doctest.h"
#include "weylift/rootdata.hpp"

using namespace weylift;

namespace {

std::vector<std::vector<long>> cartan_of(TypeLabel t, int rank) {
    return build_root_datum(t, rank).cartan;
}

Rational dot(const RationalVec& a, const RationalVec& b) {
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

TEST_CASE("Cartan matrices match the classical patterns") {
    CHECK(cartan_of(TypeLabel::A, 3) ==
          std::vector<std::vector<long>>{{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
    CHECK(cartan_of(TypeLabel::B, 2) == std::vector<std::vector<long>>{{2, -2}, {-1, 2}});
    CHECK(cartan_of(TypeLabel::C, 2) == std::vector<std::vector<long>>{{2, -1}, {-2, 2}});
    CHECK(cartan_of(TypeLabel::D, 3) ==
          std::vector<std::vector<long>>{{2, 0, -1}, {0, 2, -1}, {-1, -1, 2}});
    CHECK(cartan_of(TypeLabel::D, 4) ==
          std::vector<std::vector<long>>{
              {2, 0, -1, 0}, {0, 2, -1, 0}, {-1, -1, 2, -1}, {0, 0, -1, 2}});
}

TEST_CASE("inverse Cartan matrices are exact inverses and match the closed forms") {
    RootDatum b2 = build_root_datum(TypeLabel::B, 2);
    CHECK(b2.inverse_cartan ==
          std::vector<RationalVec>{{rational(1), rational(1)}, {rational(1, 2), rational(1)}});

    for (TypeLabel t : {TypeLabel::A, TypeLabel::B, TypeLabel::C, TypeLabel::D})
        for (int rank = (t == TypeLabel::D ? 2 : 1); rank <= 5; ++rank) {
            RootDatum d = build_root_datum(t, rank);
            for (int i = 0; i < rank; ++i)
                for (int j = 0; j < rank; ++j) {
                    Rational s(0);
                    for (int k = 0; k < rank; ++k)
                        s += Rational(d.cartan[i][k]) * d.inverse_cartan[k][j];
                    CHECK(s == (i == j ? 1 : 0));
                }
        }
}

TEST_CASE("pairings: weights against coroots and cartan from the datum") {
    for (TypeLabel t : {TypeLabel::A, TypeLabel::B, TypeLabel::C, TypeLabel::D})
        for (int rank = (t == TypeLabel::D ? 2 : 1); rank <= 4; ++rank) {
            RootDatum d = build_root_datum(t, rank);
            for (int i = 0; i < rank; ++i)
                for (int j = 0; j < rank; ++j) {
                    CHECK(dot(d.fundamental_weights[i], d.simple_coroots[j]) == (i == j ? 1 : 0));
                    CHECK(dot(d.simple_roots[i], d.fundamental_coweights[j]) == (i == j ? 1 : 0));
                    CHECK(dot(d.simple_roots[j], d.simple_coroots[i]) == d.cartan[i][j]);
                }
        }
}

TEST_CASE("reflections: pinned examples") {
    RootDatum a2 = build_root_datum(TypeLabel::A, 2);
    RationalVec img = reflect(a2, 1, a2.simple_roots[1]);  // s_1(alpha_2)
    RationalVec want(3, rational(0));
    for (int k = 0; k < 3; ++k) want[k] = a2.simple_roots[0][k] + a2.simple_roots[1][k];
    CHECK(img == want);

    for (TypeLabel t : {TypeLabel::A, TypeLabel::B, TypeLabel::C, TypeLabel::D}) {
        RootDatum d = build_root_datum(t, 3);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                if (i != j) CHECK(reflect(d, i, d.fundamental_weights[j - 1]) ==
                                  d.fundamental_weights[j - 1]);
    }

    RootDatum b2 = build_root_datum(TypeLabel::B, 2);
    RationalVec e1{rational(1), rational(0)};
    CHECK(reflect(b2, 1, e1) == RationalVec{rational(-1), rational(0)});

    CHECK_THROWS_AS(reflect(b2, 1, RationalVec{rational(1)}), std::invalid_argument);
    CHECK_THROWS_AS(reflect(b2, 5, e1), std::invalid_argument);
}

TEST_CASE("root systems: counts and short roots") {
    CHECK(generate_root_system(build_root_datum(TypeLabel::A, 2)).size() == 6);
    CHECK(generate_root_system(build_root_datum(TypeLabel::D, 3)).size() == 12);
    CHECK(generate_root_system(build_root_datum(TypeLabel::C, 3)).size() == 18);

    auto roots_b2 = generate_root_system(build_root_datum(TypeLabel::B, 2));
    CHECK(roots_b2.size() == 8);
    int short_roots = 0;
    for (const auto& r : roots_b2)
        if (dot(r, r) == 1) ++short_roots;  // +-eps_i
    CHECK(short_roots == 4);
}

TEST_CASE("fundamental groups via Smith invariants") {
    CHECK(fundamental_group(TypeLabel::A, 4) == std::vector<Integer>{Integer(5)});
    CHECK(fundamental_group(TypeLabel::B, 3) == std::vector<Integer>{Integer(2)});
    CHECK(fundamental_group(TypeLabel::C, 3) == std::vector<Integer>{Integer(2)});
    CHECK(fundamental_group(TypeLabel::D, 4) == std::vector<Integer>{Integer(2), Integer(2)});
    CHECK(fundamental_group(TypeLabel::D, 3) == std::vector<Integer>{Integer(4)});
    CHECK(fundamental_group(TypeLabel::D, 6) == std::vector<Integer>{Integer(2), Integer(2)});
    CHECK(fundamental_group(TypeLabel::D, 5) == std::vector<Integer>{Integer(4)});
}

TEST_CASE("Smith normal form on a generic integer matrix") {
    std::vector<std::vector<Integer>> m = {{Integer(2), Integer(4)}, {Integer(6), Integer(8)}};
    CHECK(smith_invariants(m) == std::vector<Integer>{Integer(2), Integer(4)});
    std::vector<std::vector<Integer>> zero = {{Integer(0), Integer(0)}, {Integer(0), Integer(0)}};
    CHECK(smith_invariants(zero).empty());
}

TEST_CASE("Weyl enumeration orders") {
    CHECK(weyl_enumerate(TypeLabel::A, 3).order == 24);
    CHECK(weyl_enumerate(TypeLabel::B, 3).order == 48);
    CHECK(weyl_enumerate(TypeLabel::C, 3).order == 48);
    CHECK(weyl_enumerate(TypeLabel::D, 3).order == 24);
    CHECK(weyl_enumerate(TypeLabel::D, 4).order == 192);
    CHECK_THROWS_AS(weyl_enumerate(TypeLabel::B, 10, 1000), ClosureCapExceeded);
}

TEST_CASE("signed permutation model: sign parity per type") {
    auto wb = weyl_enumerate(TypeLabel::B, 2);
    auto wd = weyl_enumerate(TypeLabel::D, 3);
    auto wa = weyl_enumerate(TypeLabel::A, 2);
    for (const auto& w : wa.elements)
        for (int s : w.sign) CHECK(s == 1);
    int with_flip = 0;
    for (const auto& w : wb.elements) {
        int flips = 0;
        for (int s : w.sign)
            if (s < 0) ++flips;
        if (flips) ++with_flip;
    }
    CHECK(with_flip > 0);
    for (const auto& w : wd.elements) {
        int flips = 0;
        for (int s : w.sign)
            if (s < 0) ++flips;
        CHECK(flips % 2 == 0);
    }
}

TEST_CASE("B and C have the same Weyl group although the root data differ") {
    for (int rank : {2, 3}) {
        auto wb = weyl_enumerate(TypeLabel::B, rank);
        auto wc = weyl_enumerate(TypeLabel::C, rank);
        std::set<std::string> kb, kc;
        for (const auto& w : wb.elements) kb.insert(w.key());
        for (const auto& w : wc.elements) kc.insert(w.key());
        CHECK(kb == kc);
    }
}

TEST_CASE("embedding words into type A") {
    CHECK(embed_in_type_A(TypeLabel::B, 3, 1) == std::vector<int>{3, 4, 3});
    CHECK(embed_in_type_A(TypeLabel::C, 3, 1) == std::vector<int>{3});
    CHECK(embed_in_type_A(TypeLabel::D, 3, 1) == std::vector<int>{3, 2, 4, 3});
    CHECK(embed_in_type_A(TypeLabel::B, 3, 2) == std::vector<int>{2, 5});
    CHECK(embed_outer_D(3) == std::vector<int>{3});
    CHECK_THROWS_AS(embed_in_type_A(TypeLabel::A, 3, 1), std::invalid_argument);
}

TEST_CASE("embedding words reproduce the folded reflections") {
    for (TypeLabel t : {TypeLabel::B, TypeLabel::C, TypeLabel::D})
        for (int rank = (t == TypeLabel::D ? 2 : 1); rank <= 4; ++rank) {
            RootDatum d = build_root_datum(t, rank);
            for (int k = 1; k <= rank; ++k) {
                SignedPerm via_word = folded_action_of_word(t, rank, embed_in_type_A(t, rank, k));
                SignedPerm via_datum = signed_perm_of_simple_reflection(d, k);
                CHECK(via_word.key() == via_datum.key());
            }
        }
}

TEST_CASE("rank validation") {
    CHECK_THROWS_AS(build_root_datum(TypeLabel::A, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_root_datum(TypeLabel::D, 1), std::invalid_argument);
}

TEST_CASE("root datum JSON export") {
    std::string j = rootdatum_to_json(build_root_datum(TypeLabel::B, 2));
    CHECK(j.find("\"cartan\"") != std::string::npos);
    CHECK(j.find("\"fundamental_group\"") != std::string::npos);
    CHECK(j.find("1/2") != std::string::npos);  // rationals as p/q strings
}
