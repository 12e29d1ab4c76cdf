#include <random>

#include "doctest.h"
#include "weylift/cyclotomic.hpp"

using namespace weylift;

namespace {

Cyclotomic random_scalar(std::mt19937& rng, int conductor) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 4);
    std::uniform_int_distribution<int> pow(0, conductor - 1);
    Cyclotomic x(0);
    for (int t = 0; t < 3; ++t)
        x += Cyclotomic::rational_at(rational(num(rng), den(rng)), 1) *
             Cyclotomic::zeta(conductor, pow(rng));
    return x;
}

std::vector<Integer> poly_mul(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> out(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials: small cases") {
    CHECK(cyclotomic_polynomial(1) == std::vector<Integer>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<Integer>{1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<Integer>{1, 0, 1});
    CHECK(cyclotomic_polynomial(8) == std::vector<Integer>{1, 0, 0, 0, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<Integer>{1, 1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<Integer>{1, 0, -1, 0, 1});
}

TEST_CASE("cyclotomic polynomials: product over divisors reconstructs x^n - 1") {
    for (int n = 1; n <= 30; ++n) {
        std::vector<Integer> prod{Integer(1)};
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) prod = poly_mul(prod, cyclotomic_polynomial(d));
        std::vector<Integer> want(n + 1, Integer(0));
        want[0] = -1;
        want[n] = 1;
        CHECK(prod == want);
    }
}

TEST_CASE("scalar arithmetic: pinned identities") {
    Cyclotomic i = Cyclotomic::zeta(4);
    CHECK(i * i == Cyclotomic(-1));
    CHECK(Cyclotomic(1) / i == -i);

    Cyclotomic rt2 = Cyclotomic::sqrt2();
    CHECK(rt2 * rt2 == Cyclotomic(2));
    CHECK(rt2 == Cyclotomic::zeta(8) + Cyclotomic::zeta(8, 7));

    // zeta_{2m}^m = -1
    for (int m = 2; m <= 6; ++m) {
        Cyclotomic z = Cyclotomic::zeta(2 * m);
        Cyclotomic p(1);
        for (int k = 0; k < m; ++k) p = p * z;
        CHECK(p == Cyclotomic(-1));
    }
}

TEST_CASE("scalar arithmetic: equality across conductors") {
    CHECK(Cyclotomic::zeta(8) * Cyclotomic::zeta(8) == Cyclotomic::zeta(4));
    CHECK(Cyclotomic::zeta(24, 6) == Cyclotomic::zeta(4));
    CHECK(Cyclotomic::rational_at(rational(1, 2), 8) == Cyclotomic(rational(1, 2)));
}

TEST_CASE("field axioms on randomized triples") {
    std::mt19937 rng(1234);
    for (int conductor : {4, 8, 12, 24}) {
        for (int trial = 0; trial < 60; ++trial) {
            Cyclotomic a = random_scalar(rng, conductor);
            Cyclotomic b = random_scalar(rng, conductor);
            Cyclotomic c = random_scalar(rng, conductor);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
            if (!a.is_zero()) {
                CHECK(a * a.inverse() == Cyclotomic(1));
                CHECK(a / a == Cyclotomic(1));
            }
        }
    }
}

TEST_CASE("conjugation is an involutive automorphism") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 80; ++trial) {
        Cyclotomic a = random_scalar(rng, 24);
        Cyclotomic b = random_scalar(rng, 24);
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
    }
    CHECK(Cyclotomic::zeta(8).conj() == Cyclotomic::zeta(8, 7));
    CHECK(Cyclotomic::imaginary_unit().conj() == -Cyclotomic::imaginary_unit());
    CHECK(Cyclotomic::sqrt2().conj() == Cyclotomic::sqrt2());
}

TEST_CASE("division by zero raises") {
    CHECK_THROWS_AS(Cyclotomic(1) / Cyclotomic(0), std::domain_error);
    CHECK_THROWS_AS(Cyclotomic(0).inverse(), std::domain_error);
}

TEST_CASE("numeric embedding for sanity checks") {
    auto [re_i, im_i] = Cyclotomic::zeta(4).to_complex(12);
    CHECK(std::abs(re_i) < 1e-10);
    CHECK(std::abs(im_i - 1.0) < 1e-10);

    auto [re_s, im_s] = Cyclotomic::sqrt2().to_complex(12);
    CHECK(std::abs(re_s - 1.4142135623730951) < 1e-10);
    CHECK(std::abs(im_s) < 1e-10);

    auto [re_z, im_z] = Cyclotomic(0).to_complex(5);
    CHECK(re_z == 0.0);
    CHECK(im_z == 0.0);
}

TEST_CASE("cyclotomic polynomials: the first coefficient of magnitude two") {
    // Phi_105 is the smallest with a coefficient outside {-1, 0, 1}: its
    // degree-7 (and degree-41) coefficients equal -2
    const auto& phi = cyclotomic_polynomial(105);
    CHECK(phi.size() == 49);  // phi(105) = 48
    CHECK(phi[7] == -2);
    CHECK(phi[41] == -2);
    CHECK(phi[0] == 1);
    CHECK(phi[48] == 1);
    Integer largest(0);
    for (const auto& c : phi) {
        Integer a = abs(c);
        if (a > largest) largest = a;
    }
    CHECK(largest == 2);
}
