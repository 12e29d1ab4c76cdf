#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylift/closure.hpp"
#include "weylift/matrix.hpp"
#include "weylift/report.hpp"

namespace weylift {

// Quaternion with rational coefficients q0 + q1 i + q2 j + q3 k.
struct Quaternion {
    Rational q0, q1, q2, q3;

    Quaternion() : q0(0), q1(0), q2(0), q3(0) {}
    Quaternion(Rational a, Rational b, Rational c, Rational d)
        : q0(std::move(a)), q1(std::move(b)), q2(std::move(c)), q3(std::move(d)) {}
    static Quaternion unit() { return {1, 0, 0, 0}; }
    static Quaternion i() { return {0, 1, 0, 0}; }
    static Quaternion j() { return {0, 0, 1, 0}; }
    static Quaternion k() { return {0, 0, 0, 1}; }

    Quaternion operator+(const Quaternion& o) const;
    Quaternion operator-(const Quaternion& o) const;
    Quaternion operator*(const Quaternion& o) const;
    Quaternion operator-() const;
    bool operator==(const Quaternion& o) const;
    bool operator!=(const Quaternion& o) const { return !(*this == o); }

    Quaternion conj() const { return {q0, -q1, -q2, -q3}; }
    Rational norm() const;  // q * conj(q)
    bool is_zero() const;
    Quaternion inverse() const;  // throws on zero

    std::string key() const;
    std::string str() const;
};

// Faithful embedding into 2x2 matrices over Q(i); det(hat q) = Nm(q).
ExactMatrix hat_embedding(const Quaternion& q);

// The conjugation action of a unit quaternion on span{i, j, k}: a rational
// 3x3 rotation matrix.
ExactMatrix su2_to_so3(const Quaternion& q);

// Rational unit quaternion with su2_to_so3(q) = R, when one exists; the
// result is unique up to sign and verified exactly before returning.
std::optional<Quaternion> so3_lift(const ExactMatrix& rotation);

// Square quaternionic matrix.
class QuatMatrix {
public:
    QuatMatrix() : m_(0) {}
    explicit QuatMatrix(int m) : m_(m), a_(static_cast<size_t>(m) * m) {}
    static QuatMatrix identity(int m);
    static QuatMatrix permutation(const std::vector<int>& perm);  // eps_j -> eps_perm[j]
    static QuatMatrix diagonal(const std::vector<Quaternion>& d);

    int dim() const { return m_; }
    Quaternion& at(int i, int j) { return a_[static_cast<size_t>(i) * m_ + j]; }
    const Quaternion& at(int i, int j) const { return a_[static_cast<size_t>(i) * m_ + j]; }

    QuatMatrix operator*(const QuatMatrix& o) const;
    bool operator==(const QuatMatrix& o) const;
    bool operator!=(const QuatMatrix& o) const { return !(*this == o); }
    bool is_diagonal() const;
    bool is_identity() const;
    QuatMatrix inverse() const;  // Gauss over the division ring

    std::string key() const;

private:
    int m_;
    std::vector<Quaternion> a_;
};

SuiteReport quat_conj_complex_check(int samples = 64);

// Defining relations, the hat-embedding determinant identity on random
// quaternions, and the covering witnesses around j.
SuiteReport quat_basics(int samples = 10000);

struct QuatClosureResult {
    ClosureResult<QuatMatrix> closure;
    SuiteReport report;
};

// Closure of the permutation matrices together with the diagonal j-flips:
// the finite quaternionic lift of the hyperoctahedral group W(C_m), an
// extension by the diagonal {+-1}^m.
QuatClosureResult quat_weyl_closure(int m, size_t cap = kDefaultClosureCap);

// Monomial matrices conjugate diagonals to diagonals; specific non-monomial
// witnesses do not.
SuiteReport monomial_normalizer_check(int m, int trials = 64);

}  // namespace weylift
