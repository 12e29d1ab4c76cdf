#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "weylift/numbers.hpp"

namespace weylift {

// N-th cyclotomic polynomial, monic, coefficients in ascending degree order.
// Computed by dividing x^N - 1 by the cyclotomic polynomials of the proper
// divisors of N; results are cached.
const std::vector<Integer>& cyclotomic_polynomial(int n);

// Element of Q(zeta_N), stored as the unique polynomial in zeta_N of degree
// < deg(Phi_N).  Arithmetic between different conductors lifts both operands
// into the least common conductor first.  Modules that hash or sort scalars
// construct everything at one fixed conductor so that keys are canonical.
class Cyclotomic {
public:
    Cyclotomic() : n_(1), c_(1) {}
    explicit Cyclotomic(const Rational& r) : n_(1), c_{r} {}
    explicit Cyclotomic(long v) : n_(1), c_{rational(v)} {}

    static Cyclotomic zeta(int n, long power = 1);
    static Cyclotomic rational_at(const Rational& r, int conductor);
    // i = zeta_4
    static Cyclotomic imaginary_unit() { return zeta(4); }
    // sqrt(2) = zeta_8 + zeta_8^-1
    static Cyclotomic sqrt2() { return zeta(8) + zeta(8, 7); }

    int conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // Requires is_rational().
    Rational rational_value() const;

    Cyclotomic promoted(int conductor) const;

    Cyclotomic operator-() const;
    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator/(const Cyclotomic& o) const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Galois automorphism zeta -> zeta^-1 (complex conjugation).
    Cyclotomic conj() const;
    // Throws std::domain_error on zero.
    Cyclotomic inverse() const;

    // Numeric embedding zeta_N -> exp(2*pi*i/N), for display and sanity
    // checks only.  `digits` rounds the result to that many decimals.
    std::pair<double, double> to_complex(int digits = 17) const;

    // Canonical encoding; equal iff scalars are equal at equal conductor.
    std::string key() const;
    std::string str() const;  // human-readable, e.g. "1/2*z8^3 - 1"

private:
    int n_;
    std::vector<Rational> c_;

    static Cyclotomic reduce(int n, std::vector<Rational> poly);
};

inline Cyclotomic operator*(const Rational& r, const Cyclotomic& x) {
    return Cyclotomic::rational_at(r, x.conductor()) * x;
}

}  // namespace weylift
