#include <random>

#include "doctest.h"
#include "weylift/closure.hpp"
#include "weylift/lifts.hpp"
#include "weylift/matrix.hpp"

using namespace weylift;

namespace {

ExactMatrix random_monomial(std::mt19937& rng, int n, int conductor) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::uniform_int_distribution<int> pow(0, conductor - 1);
    ExactMatrix g(n, conductor);
    for (int j = 0; j < n; ++j) g.at(perm[j], j) = Cyclotomic::zeta(conductor, pow(rng));
    return g;
}

}  // namespace

TEST_CASE("antidiagonal transpose") {
    CHECK(ExactMatrix::identity(4).antidiag_transpose() == ExactMatrix::identity(4));

    ExactMatrix m(2, 1);
    m.at(0, 0) = Cyclotomic(1);  // a
    m.at(0, 1) = Cyclotomic(2);  // b
    m.at(1, 0) = Cyclotomic(3);  // c
    m.at(1, 1) = Cyclotomic(4);  // d
    ExactMatrix t = m.antidiag_transpose();
    CHECK(t.at(0, 0) == Cyclotomic(4));
    CHECK(t.at(0, 1) == Cyclotomic(2));
    CHECK(t.at(1, 0) == Cyclotomic(3));
    CHECK(t.at(1, 1) == Cyclotomic(1));

    ExactMatrix d = ExactMatrix::diagonal({Cyclotomic(1), Cyclotomic(2), Cyclotomic(3)});
    ExactMatrix rd = d.antidiag_transpose();
    CHECK(rd == ExactMatrix::diagonal({Cyclotomic(3), Cyclotomic(2), Cyclotomic(1)}));

    std::mt19937 rng(7);
    for (int t2 = 0; t2 < 25; ++t2) {
        ExactMatrix a = random_monomial(rng, 4, 8), b = random_monomial(rng, 4, 8);
        CHECK(a.antidiag_transpose().antidiag_transpose() == a);
        CHECK((a * b).antidiag_transpose() == b.antidiag_transpose() * a.antidiag_transpose());
    }
}

TEST_CASE("theta involution fixes the classical groups") {
    ThetaInvolution tc(TypeLabel::C, 1);
    ExactMatrix sp(2, 1);
    sp.at(0, 1) = Cyclotomic(-1);
    sp.at(1, 0) = Cyclotomic(1);
    CHECK(tc.apply(sp) == sp);  // rotation lies in Sp_2

    ThetaInvolution tb(TypeLabel::B, 1);
    ExactMatrix anti(3, 1);
    anti.at(0, 2) = Cyclotomic(1);
    anti.at(1, 1) = Cyclotomic(1);
    anti.at(2, 0) = Cyclotomic(1);
    CHECK(tb.apply(anti) == anti);  // reversal lies in O_3
    CHECK(tb.apply(ExactMatrix::identity(3)) == ExactMatrix::identity(3));
}

TEST_CASE("theta is an involutive automorphism on random monomial matrices") {
    std::mt19937 rng(2024);
    for (auto [type, rank] : {std::pair{TypeLabel::B, 2}, {TypeLabel::C, 2}, {TypeLabel::D, 2}}) {
        ThetaInvolution theta(type, rank);
        size_t bad = 0;
        for (int t = 0; t < 10000; ++t) {
            ExactMatrix g = random_monomial(rng, theta.n, 8);
            if (!(theta.apply(theta.apply(g)) == g)) ++bad;
        }
        CHECK(bad == 0);
        for (int t = 0; t < 500; ++t) {
            ExactMatrix g = random_monomial(rng, theta.n, 8);
            ExactMatrix h = random_monomial(rng, theta.n, 8);
            CHECK(theta.apply(g * h) == theta.apply(g) * theta.apply(h));
        }
    }
}

TEST_CASE("group closure: pinned orders") {
    CHECK(matrix_closure({ExactMatrix::identity(3)}, 10).order == 1);

    ExactMatrix swap2(2, 1);
    swap2.at(0, 1) = Cyclotomic(1);
    swap2.at(1, 0) = Cyclotomic(1);
    CHECK(matrix_closure({swap2}, 10).order == 2);

    ExactMatrix rot(2, 1);
    rot.at(0, 1) = Cyclotomic(-1);
    rot.at(1, 0) = Cyclotomic(1);
    CHECK(matrix_closure({rot}, 10).order == 4);
}

TEST_CASE("group closure: cap aborts on unbounded growth") {
    ExactMatrix shear(2, 1);
    shear.at(0, 0) = Cyclotomic(1);
    shear.at(0, 1) = Cyclotomic(1);
    shear.at(1, 1) = Cyclotomic(1);
    CHECK_THROWS_AS(matrix_closure({shear}, 50), ClosureCapExceeded);
}

TEST_CASE("group closure: order of a subset divides the order of a superset") {
    GlGeneratorSet g = gl_generators(4);
    size_t sub = matrix_closure({g.S[0], g.S[1]}, 100000).order;
    size_t full = matrix_closure({g.S[0], g.S[1], g.S[2]}, 100000).order;
    size_t with_torsion = matrix_closure({g.S[0], g.S[1], g.S[2], g.T[0]}, 100000).order;
    CHECK(sub == 6);
    CHECK(full == 24);
    CHECK(full % sub == 0);
    CHECK(with_torsion % full == 0);
}

TEST_CASE("monomial decomposition") {
    ExactMatrix d = ExactMatrix::diagonal({Cyclotomic(5), Cyclotomic(7)});
    auto parts = monomial_decompose(d);
    REQUIRE(parts);
    CHECK(parts->perm == std::vector<int>{0, 1});
    CHECK(parts->diag[0] == Cyclotomic(5));
    CHECK(parts->diag[1] == Cyclotomic(7));

    ExactMatrix rot(2, 1);
    rot.at(0, 1) = Cyclotomic(-1);
    rot.at(1, 0) = Cyclotomic(1);
    parts = monomial_decompose(rot);
    REQUIRE(parts);
    CHECK(parts->perm == std::vector<int>{1, 0});  // column 0 hits row 1
    CHECK(parts->diag[0] == Cyclotomic(-1));
    CHECK(parts->diag[1] == Cyclotomic(1));

    ExactMatrix shear = ExactMatrix::identity(2);
    shear.at(0, 1) = Cyclotomic(1);
    CHECK(!monomial_decompose(shear));
}

TEST_CASE("monomial decomposition round-trips") {
    std::mt19937 rng(31);
    for (int t = 0; t < 50; ++t) {
        ExactMatrix g = random_monomial(rng, 5, 8);
        auto parts = monomial_decompose(g);
        REQUIRE(parts);
        CHECK(monomial_compose(*parts, 8) == g);
    }
}

TEST_CASE("inverse and determinant") {
    std::mt19937 rng(55);
    for (int t = 0; t < 30; ++t) {
        ExactMatrix g = random_monomial(rng, 4, 8);
        CHECK(g * g.inverse() == ExactMatrix::identity(4));
        ExactMatrix h = random_monomial(rng, 4, 8);
        CHECK((g * h).det() == g.det() * h.det());
    }
    // dense invertible example via Gauss-Jordan
    ExactMatrix a(3, 1);
    long vals[3][3] = {{2, 1, 0}, {1, 1, 1}, {0, 3, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) a.at(i, j) = Cyclotomic(vals[i][j]);
    CHECK(a * a.inverse() == ExactMatrix::identity(3));
    CHECK(a.det() == Cyclotomic(-5));
    ExactMatrix sing(2, 1);
    sing.at(0, 0) = Cyclotomic(1);
    sing.at(1, 0) = Cyclotomic(1);
    CHECK_THROWS_AS(sing.inverse(), std::domain_error);
    CHECK(sing.det() == Cyclotomic(0));
}

TEST_CASE("theta rejects singular input") {
    ThetaInvolution theta(TypeLabel::C, 1);
    ExactMatrix sing(2, 1);
    sing.at(0, 0) = Cyclotomic(1);
    sing.at(1, 0) = Cyclotomic(1);
    CHECK_THROWS_AS(theta.apply(sing), std::domain_error);
}

TEST_CASE("closure cap error carries the partial count") {
    ExactMatrix shear = ExactMatrix::identity(2);
    shear.at(0, 1) = Cyclotomic(1);
    try {
        matrix_closure({shear}, 25);
        FAIL("expected the cap to abort the closure");
    } catch (const ClosureCapExceeded& e) {
        CHECK(e.partial_count == 25);
    }
}
