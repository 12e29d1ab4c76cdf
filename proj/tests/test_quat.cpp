#include <random>

#include "doctest.h"
#include "weylift/quat.hpp"

using namespace weylift;

namespace {

const Quaternion I = Quaternion::i();
const Quaternion J = Quaternion::j();
const Quaternion K = Quaternion::k();

ExactMatrix diag3(long a, long b, long c) {
    ExactMatrix m(3, 1);
    m.at(0, 0) = Cyclotomic(a);
    m.at(1, 1) = Cyclotomic(b);
    m.at(2, 2) = Cyclotomic(c);
    return m;
}

// the 24 Hurwitz units: rational unit quaternions closed under products
std::vector<Quaternion> hurwitz_units() {
    std::vector<Quaternion> out;
    for (int s : {1, -1}) {
        out.push_back(Quaternion{Rational(s), 0, 0, 0});
        out.push_back(Quaternion{0, Rational(s), 0, 0});
        out.push_back(Quaternion{0, 0, Rational(s), 0});
        out.push_back(Quaternion{0, 0, 0, Rational(s)});
    }
    for (int a : {1, -1})
        for (int b : {1, -1})
            for (int c : {1, -1})
                for (int d : {1, -1})
                    out.push_back(Quaternion{rational(a, 2), rational(b, 2), rational(c, 2),
                                             rational(d, 2)});
    return out;
}

}  // namespace

TEST_CASE("quaternion arithmetic") {
    CHECK(J * J == -Quaternion::unit());
    CHECK(I * J == K);
    CHECK(J * K == I);
    CHECK(K * I == J);
    CHECK(Quaternion{1, 1, 1, 1}.norm() == 4);
    CHECK(J.inverse() == -J);
    CHECK_THROWS_AS(Quaternion{}.inverse(), std::domain_error);

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-5, 5);
    for (int t = 0; t < 100; ++t) {
        Quaternion a{rational(c(rng)), rational(c(rng)), rational(c(rng)), rational(c(rng))};
        Quaternion b{rational(c(rng)), rational(c(rng)), rational(c(rng)), rational(c(rng))};
        CHECK((a * b).norm() == a.norm() * b.norm());
        CHECK((a * b).conj() == b.conj() * a.conj());
        if (!a.is_zero()) CHECK(a * a.inverse() == Quaternion::unit());
    }
}

TEST_CASE("hat embedding") {
    ExactMatrix jhat = hat_embedding(J);
    CHECK(jhat.at(0, 1) == Cyclotomic(1));
    CHECK(jhat.at(1, 0) == Cyclotomic(-1));
    CHECK(jhat.at(0, 0).is_zero());

    Quaternion z{rational(3, 5), rational(4, 5), 0, 0};
    ExactMatrix zhat = hat_embedding(z);
    CHECK(zhat.at(0, 1).is_zero());
    CHECK(zhat.at(1, 0).is_zero());
    CHECK(zhat.at(0, 0) == zhat.at(1, 1).conj());

    CHECK(hat_embedding(I).det() == Cyclotomic(1));

    std::mt19937 rng(6);
    std::uniform_int_distribution<int> c(-4, 4);
    for (int t = 0; t < 100; ++t) {
        Quaternion a{rational(c(rng)), rational(c(rng)), rational(c(rng)), rational(c(rng))};
        Quaternion b{rational(c(rng)), rational(c(rng)), rational(c(rng)), rational(c(rng))};
        CHECK(hat_embedding(a * b) == hat_embedding(a) * hat_embedding(b));
        CHECK(hat_embedding(a).det() == Cyclotomic::rational_at(a.norm(), 4));
    }
}

TEST_CASE("conjugation rotation: pinned values") {
    CHECK(su2_to_so3(Quaternion::unit()) == ExactMatrix::identity(3));
    CHECK(su2_to_so3(J) == diag3(-1, 1, -1));
    CHECK(su2_to_so3(I) == diag3(1, -1, -1));
    CHECK_THROWS_AS(su2_to_so3(Quaternion{2, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("conjugation rotation is a double cover on the Hurwitz units") {
    auto units = hurwitz_units();
    CHECK(units.size() == 24);
    for (const auto& q : units) {
        REQUIRE(q.norm() == 1);
        CHECK(su2_to_so3(q) == su2_to_so3(-q));
        ExactMatrix m = su2_to_so3(q);
        CHECK(m.det() == Cyclotomic(1));
        CHECK(m.transpose() * m == ExactMatrix::identity(3));
    }
    std::mt19937 rng(77);
    std::uniform_int_distribution<size_t> pick(0, units.size() - 1);
    for (int t = 0; t < 50; ++t) {
        const Quaternion &a = units[pick(rng)], &b = units[pick(rng)];
        CHECK(su2_to_so3(a * b) == su2_to_so3(a) * su2_to_so3(b));
    }
}

TEST_CASE("rotation lifting") {
    auto l1 = so3_lift(ExactMatrix::identity(3));
    REQUIRE(l1);
    CHECK((*l1 == Quaternion::unit() || *l1 == -Quaternion::unit()));

    auto lj = so3_lift(diag3(-1, 1, -1));
    REQUIRE(lj);
    CHECK((*lj == J || *lj == -J));
    CHECK(*lj * *lj == -Quaternion::unit());

    auto lk = so3_lift(diag3(-1, -1, 1));
    REQUIRE(lk);
    CHECK((*lk == K || *lk == -K));

    for (const auto& q : hurwitz_units()) {
        auto back = so3_lift(su2_to_so3(q));
        REQUIRE(back);
        CHECK((*back == q || *back == -q));
    }

    // quarter turn about the third axis needs sqrt(2): no rational lift
    ExactMatrix quarter(3, 1);
    quarter.at(0, 1) = Cyclotomic(-1);
    quarter.at(1, 0) = Cyclotomic(1);
    quarter.at(2, 2) = Cyclotomic(1);
    CHECK(!so3_lift(quarter));

    CHECK_THROWS_AS(so3_lift(diag3(1, 1, -1)), std::invalid_argument);  // det = -1
}

TEST_CASE("complex conjugation inside the quaternions") {
    SuiteReport rep = quat_conj_complex_check();
    CHECK(rep.all_passed());
    Quaternion z{rational(3, 5), rational(4, 5), 0, 0};
    CHECK(J * z * J.inverse() == z.conj());
    CHECK(J * I * J.inverse() == -I);
}

TEST_CASE("quaternionic Weyl closures") {
    QuatClosureResult m1 = quat_weyl_closure(1);
    CHECK(m1.report.all_passed());
    CHECK(m1.closure.order == 4);

    QuatClosureResult m2 = quat_weyl_closure(2);
    CHECK(m2.report.all_passed());
    CHECK(m2.closure.order == 32);

    // permutation conjugation moves the j-flip between the slots
    QuatMatrix swap = QuatMatrix::permutation({1, 0});
    QuatMatrix j2 = QuatMatrix::diagonal({Quaternion::unit(), J});
    QuatMatrix j1 = QuatMatrix::diagonal({J, Quaternion::unit()});
    CHECK(swap * j2 * swap == j1);

    CHECK_THROWS_AS(quat_weyl_closure(5), std::invalid_argument);
}

TEST_CASE("monomial matrices are exactly the normalizer of the diagonal") {
    for (int m : {1, 2, 3}) {
        SuiteReport rep = monomial_normalizer_check(m);
        INFO("m = ", m);
        CHECK(rep.all_passed());
    }
    // the unipotent witness moves some diagonal off the diagonal
    QuatMatrix u = QuatMatrix::identity(2);
    u.at(0, 1) = Quaternion::unit();
    QuatMatrix d = QuatMatrix::diagonal({I, Quaternion::unit()});
    CHECK(!(u * d * u.inverse()).is_diagonal());
}

TEST_CASE("quaternion basics suite") {
    SuiteReport rep = quat_basics(2000);
    CHECK(rep.all_passed());
}

TEST_CASE("rank three quaternionic closure") {
    QuatClosureResult m3 = quat_weyl_closure(3);
    CHECK(m3.report.all_passed());
    CHECK(m3.closure.order == 384);  // (Z/4)^3 by the permutations of three slots
}
