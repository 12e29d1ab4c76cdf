#include "doctest.h"
#include "weylift/clifford.hpp"
#include "weylift/lifts.hpp"

using namespace weylift;

namespace {

CliffordElement e(int n, int k) { return CliffordElement::basis_vector(n, k); }

CliffordElement one(int n) { return CliffordElement::scalar(n, Cyclotomic(1)); }

}  // namespace

TEST_CASE("Clifford product: defining relations") {
    const int n = 4;
    CHECK(e(n, 1) * e(n, 1) == one(n));
    CHECK(e(n, 1) * e(n, 2) == -(e(n, 2) * e(n, 1)));
    CHECK((e(n, 1) * e(n, 2)) * e(n, 3) == e(n, 1) * (e(n, 2) * e(n, 3)));
    CHECK_THROWS_AS(e(3, 1) * e(4, 1), std::invalid_argument);
}

TEST_CASE("Clifford product: reflection lift composition expands as expected") {
    const int n = 5;
    PinGeneratorSet g = pin_generators(n);
    Cyclotomic half = Cyclotomic::rational_at(rational(1, 2), 8);
    for (int i = 1; i <= 2; ++i) {
        CliffordElement want = (e(n, i) * e(n, i + 1) - e(n, i) * e(n, i + 2) +
                                e(n, i + 1) * e(n, i + 2) - one(n)).scaled(half);
        CHECK(g.S[i - 1] * g.S[i] == want);
        CHECK((g.S[i - 1] * g.S[i]) * (g.S[i - 1] * g.S[i]) * (g.S[i - 1] * g.S[i]) == one(n));
    }
}

TEST_CASE("structure maps") {
    const int n = 4;
    auto m1 = structure_maps(e(n, 1));
    REQUIRE(m1.norm);
    CHECK(*m1.norm == Cyclotomic(-1));  // Nm(v) = -|v|^2
    CHECK(m1.alpha == -e(n, 1));

    CliffordElement biv = e(n, 1) * e(n, 2);
    auto m2 = structure_maps(biv);
    CHECK(m2.alpha == biv);           // even degree
    CHECK(m2.transpose == -biv);      // reversal sign on degree two
    REQUIRE(m2.norm);
    CHECK(*m2.norm == Cyclotomic(1));

    PinGeneratorSet g = pin_generators(n);
    for (const auto& s : g.S) {
        auto m = structure_maps(s);
        REQUIRE(m.norm);
        CHECK(*m.norm == Cyclotomic(-1));
    }

    // an element whose norm form is not scalar: 1 + e1 e2 e3
    CliffordElement x = one(n) + e(n, 1) * e(n, 2) * e(n, 3);
    CHECK(!structure_maps(x).norm.has_value());
}

TEST_CASE("twisted conjugation action: reflections") {
    const int n = 4;
    PinGeneratorSet g = pin_generators(n);
    GlGeneratorSet gl = gl_generators(n);

    CHECK(pin_action_matrix(one(n)) == ExactMatrix::identity(n));
    for (int k = 1; k <= n; ++k) CHECK(pin_action_matrix(g.T[k - 1]) == gl.T[k - 1]);
    for (int i = 1; i < n; ++i) CHECK(pin_action_matrix(g.S[i - 1]) == gl.S[i - 1]);
}

TEST_CASE("twisted conjugation action is a homomorphism") {
    const int n = 4;
    PinGeneratorSet g = pin_generators(n);
    std::vector<CliffordElement> sample = {g.S[0], g.S[1], g.T[0] * g.S[2],
                                           g.S[0] * g.S[1] * g.T[3]};
    for (const auto& a : sample)
        for (const auto& b : sample)
            CHECK(pin_action_matrix(a * b) == pin_action_matrix(a) * pin_action_matrix(b));

    // and on every pair of the generated pin group at rank two
    auto closure = clifford_closure(pin_weyl_lift(TypeLabel::B, 2).generators, 1000);
    std::vector<ExactMatrix> images;
    for (const auto& x : closure.elements) images.push_back(pin_action_matrix(x));
    for (size_t i = 0; i < closure.elements.size(); ++i)
        for (size_t j = 0; j < closure.elements.size(); ++j)
            CHECK(pin_action_matrix(closure.elements[i] * closure.elements[j]) ==
                  images[i] * images[j]);
}

TEST_CASE("pin lifts of the orthogonal Weyl groups") {
    for (int rank : {1, 2, 3}) {
        PinLiftResult b = pin_weyl_lift(TypeLabel::B, rank);
        INFO("type B rank ", rank);
        CHECK(b.report.all_passed());
    }
    for (int rank : {2, 3}) {
        PinLiftResult d = pin_weyl_lift(TypeLabel::D, rank);
        INFO("type D rank ", rank);
        CHECK(d.report.all_passed());
    }
}

TEST_CASE("pin lift closure orders double the Weyl orders") {
    CHECK(clifford_closure(pin_weyl_lift(TypeLabel::B, 2).generators, 10000).order == 16);
    CHECK(clifford_closure(pin_weyl_lift(TypeLabel::B, 3).generators, 10000).order == 96);
    CHECK(clifford_closure(pin_weyl_lift(TypeLabel::D, 2).generators, 10000).order == 8);
    CHECK(clifford_closure(pin_weyl_lift(TypeLabel::D, 3).generators, 10000).order == 48);
}

TEST_CASE("pin lift squares") {
    PinLiftResult b2 = pin_weyl_lift(TypeLabel::B, 2);
    CHECK(b2.generators[0] * b2.generators[0] == one(5));
    CHECK(b2.generators[1] * b2.generators[1] == -one(5));
    PinLiftResult d3 = pin_weyl_lift(TypeLabel::D, 3);
    for (const auto& s : d3.generators) CHECK(s * s == -one(6));
    CHECK(d3.generators[0] * d3.generators[1] == -(d3.generators[1] * d3.generators[0]));
    CHECK(d3.generators[0] * d3.generators[2] * d3.generators[0] ==
          -(d3.generators[2] * d3.generators[0] * d3.generators[2]));
}

TEST_CASE("spin lift of the odd orthogonal Weyl group") {
    PinLiftResult s2 = spin_lift_B(2);
    CHECK(s2.report.all_passed());
    CHECK(s2.generators[0] * s2.generators[0] == one(5));   // (-1)^2

    PinLiftResult s3 = spin_lift_B(3);
    CHECK(s3.report.all_passed());
    CHECK(s3.generators[0] * s3.generators[0] == -one(7));  // (-1)^3

    for (const auto& g : s2.generators) CHECK(g.is_even());
    for (const auto& g : s3.generators) CHECK(g.is_even());
}

TEST_CASE("kernel of the covering is the central pair") {
    PinLiftResult b2 = pin_weyl_lift(TypeLabel::B, 2);
    auto closure = clifford_closure(b2.generators, 10000);
    size_t kernel = 0;
    for (const auto& x : closure.elements)
        if (pin_action_matrix(x).is_identity()) {
            ++kernel;
            CHECK((x == one(5) || x == -one(5)));
        }
    CHECK(kernel == 2);
}

TEST_CASE("covering square: pin action reproduces the matrix lifts") {
    for (auto [t, rank] : {std::pair{TypeLabel::B, 2}, {TypeLabel::B, 3}, {TypeLabel::D, 2},
                           {TypeLabel::D, 3}}) {
        PinLiftResult pin = pin_weyl_lift(t, rank);
        ClassicalLiftSet lift = classical_generators(t, rank);
        for (int i = 0; i < rank; ++i)
            CHECK(pin_action_matrix(pin.generators[i]) == lift.Sg[i]);
    }
}

TEST_CASE("twisted conjugation rejects elements outside the Clifford group") {
    const int n = 4;
    // invertible (norm form 8) but its action does not preserve V
    CliffordElement x = CliffordElement::scalar(n, Cyclotomic(3)) + e(n, 1);
    CHECK_THROWS_AS(pin_action_matrix(x), std::domain_error);
    // vector plus trivector: the norm form is not even scalar
    CliffordElement y = e(n, 1) + e(n, 2) * e(n, 3) * e(n, 4);
    CHECK(!structure_maps(y).norm.has_value());
    CHECK_THROWS_AS(y.inverse(), std::domain_error);
}

TEST_CASE("reflection-lift group inside the pinor group") {
    // T_k and S_i generate a double cover of the hyperoctahedral group:
    // order 2^(n+1) n!
    for (int n : {2, 3}) {
        PinGeneratorSet g = pin_generators(n);
        std::vector<CliffordElement> gens = g.S;
        gens.insert(gens.end(), g.T.begin(), g.T.end());
        size_t expected = 1;
        for (int k = 2; k <= n; ++k) expected *= k;
        for (int k = 0; k <= n; ++k) expected *= 2;
        CHECK(clifford_closure(gens, 10000).order == expected);
    }
}

TEST_CASE("pin section rejects dimensions beyond the configured cap") {
    CHECK_THROWS_AS(pin_weyl_lift(TypeLabel::B, 6), std::invalid_argument);   // n = 13
    CHECK_THROWS_AS(spin_lift_B(6), std::invalid_argument);
    CHECK_THROWS_AS(pin_weyl_lift(TypeLabel::D, 1), std::invalid_argument);
}
