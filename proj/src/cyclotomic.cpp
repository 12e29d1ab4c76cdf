#include "weylift/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace weylift {

namespace {

// Exact division of integer polynomials, quotient must be exact.
std::vector<Integer> poly_div_exact(std::vector<Integer> num, const std::vector<Integer>& den) {
    const size_t dd = den.size() - 1;
    if (num.size() < den.size()) throw std::logic_error("poly_div_exact: degree mismatch");
    std::vector<Integer> q(num.size() - dd, Integer(0));
    for (size_t k = num.size(); k-- > den.size() - 1;) {
        size_t qi = k - dd;
        Integer coef = num[k] / den[dd];  // den is monic here, but keep the division
        q[qi] = coef;
        for (size_t j = 0; j <= dd; ++j) num[qi + j] -= coef * den[j];
        if (k == 0) break;
    }
    for (const auto& c : num)
        if (c != 0) throw std::logic_error("poly_div_exact: remainder nonzero");
    return q;
}

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be >= 1");
    static std::map<int, std::vector<Integer>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // x^n - 1
    std::vector<Integer> f(n + 1, Integer(0));
    f[0] = -1;
    f[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) f = poly_div_exact(std::move(f), cyclotomic_polynomial(d));
    return cache.emplace(n, std::move(f)).first->second;
}

Cyclotomic Cyclotomic::reduce(int n, std::vector<Rational> poly) {
    const auto& phi = cyclotomic_polynomial(n);
    const size_t deg = phi.size() - 1;
    // Divide by the monic Phi_n, keep the remainder.
    for (size_t k = poly.size(); k-- > deg;) {
        Rational coef = poly[k];
        if (sgn(coef) == 0) continue;
        for (size_t j = 0; j < deg; ++j) poly[k - deg + j] -= coef * Rational(phi[j]);
        poly[k] = 0;
    }
    poly.resize(deg);
    for (auto& c : poly) c.canonicalize();
    Cyclotomic out;
    out.n_ = n;
    out.c_ = std::move(poly);
    return out;
}

Cyclotomic Cyclotomic::zeta(int n, long power) {
    if (n < 1) throw std::invalid_argument("zeta: conductor must be >= 1");
    long e = ((power % n) + n) % n;
    std::vector<Rational> poly(e + 1, rational(0));
    poly[e] = rational(1);
    return reduce(n, std::move(poly));
}

Cyclotomic Cyclotomic::rational_at(const Rational& r, int conductor) {
    std::vector<Rational> poly(1, r);
    return reduce(conductor, std::move(poly));
}

bool Cyclotomic::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return sgn(r) == 0; });
}

bool Cyclotomic::is_rational() const {
    for (size_t j = 1; j < c_.size(); ++j)
        if (sgn(c_[j]) != 0) return false;
    return true;
}

Rational Cyclotomic::rational_value() const {
    if (!is_rational()) throw std::domain_error("rational_value: scalar is not rational");
    return c_[0];
}

Cyclotomic Cyclotomic::promoted(int conductor) const {
    if (conductor == n_) return *this;
    if (conductor % n_ != 0)
        throw std::invalid_argument("promoted: target conductor must be a multiple");
    const long step = conductor / n_;
    std::vector<Rational> poly(static_cast<size_t>(conductor), rational(0));
    for (size_t j = 0; j < c_.size(); ++j) poly[(j * step) % conductor] += c_[j];
    return reduce(conductor, std::move(poly));
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    const int n = std::lcm(n_, o.n_);
    Cyclotomic a = promoted(n), b = o.promoted(n);
    for (size_t j = 0; j < a.c_.size(); ++j) a.c_[j] += b.c_[j];
    return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    const int n = std::lcm(n_, o.n_);
    Cyclotomic a = promoted(n), b = o.promoted(n);
    std::vector<Rational> prod(a.c_.size() + b.c_.size() - 1, rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (sgn(b.c_[j]) == 0) continue;
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return reduce(n, std::move(prod));
}

Cyclotomic Cyclotomic::operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (n_ == o.n_) return c_ == o.c_;
    const int n = std::lcm(n_, o.n_);
    return promoted(n).c_ == o.promoted(n).c_;
}

Cyclotomic Cyclotomic::conj() const {
    std::vector<Rational> poly(static_cast<size_t>(n_), rational(0));
    for (size_t j = 0; j < c_.size(); ++j) poly[j == 0 ? 0 : n_ - j] += c_[j];
    return reduce(n_, std::move(poly));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw std::domain_error("inverse: division by zero");
    // Extended Euclid in Q[x] against Phi_n: u*this + v*Phi = 1.
    using Poly = std::vector<Rational>;
    auto deg = [](const Poly& p) {
        for (size_t k = p.size(); k-- > 0;)
            if (sgn(p[k]) != 0) return static_cast<long>(k);
        return -1L;
    };
    const auto& phi_int = cyclotomic_polynomial(n_);
    Poly r0(phi_int.size());
    for (size_t j = 0; j < phi_int.size(); ++j) r0[j] = Rational(phi_int[j]);
    Poly r1 = c_;
    Poly u0{rational(0)}, u1{rational(1)};  // coefficients of `this`
    while (deg(r1) > 0) {
        // r0 = q*r1 + r2
        Poly q(deg(r0) - deg(r1) + 1, rational(0));
        Poly rem = r0;
        long d1 = deg(r1);
        Rational lead = r1[d1];
        for (long k = deg(rem); k >= d1; --k) {
            if (sgn(rem[k]) == 0) continue;
            Rational coef = rem[k] / lead;
            q[k - d1] = coef;
            for (long j = 0; j <= d1; ++j) rem[k - d1 + j] -= coef * r1[j];
        }
        // u2 = u0 - q*u1
        Poly u2(std::max(u0.size(), q.size() + u1.size()), rational(0));
        for (size_t j = 0; j < u0.size(); ++j) u2[j] = u0[j];
        for (size_t i = 0; i < q.size(); ++i) {
            if (sgn(q[i]) == 0) continue;
            for (size_t j = 0; j < u1.size(); ++j) u2[i + j] -= q[i] * u1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (deg(r1) != 0) throw std::logic_error("inverse: gcd with Phi_n not constant");
    Rational scale = Rational(1) / r1[0];
    for (auto& c : u1) c *= scale;
    return reduce(n_, std::move(u1));
}

std::pair<double, double> Cyclotomic::to_complex(int digits) const {
    if (digits < 1) throw std::invalid_argument("to_complex: digits must be >= 1");
    long double re = 0, im = 0;
    const long double tau = 6.283185307179586476925286766559L;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (sgn(c_[j]) == 0) continue;
        long double v = mpq_get_d(c_[j].get_mpq_t());
        long double ang = tau * static_cast<long double>(j) / n_;
        re += v * std::cos(ang);
        im += v * std::sin(ang);
    }
    const double scale = std::pow(10.0, std::min(digits, 15));
    auto round_to = [&](long double x) {
        return static_cast<double>(std::round(static_cast<double>(x) * scale) / scale);
    };
    return {round_to(re), round_to(im)};
}

std::string Cyclotomic::key() const {
    std::ostringstream os;
    os << n_ << ':';
    for (const auto& c : c_) os << c.get_str() << ',';
    return os.str();
}

std::string Cyclotomic::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < c_.size(); ++j) {
        if (sgn(c_[j]) == 0) continue;
        Rational c = c_[j];
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        Rational a = abs(c);
        if (j == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "z" << n_;
            if (j > 1) os << "^" << j;
        }
    }
    return os.str();
}

}  // namespace weylift
