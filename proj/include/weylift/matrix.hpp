#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weylift/cyclotomic.hpp"

namespace weylift {

enum class TypeLabel { A, B, C, D };

char type_char(TypeLabel t);
TypeLabel type_from_char(char c);

// Dense square matrix over Q(zeta_N).  Entries of one matrix share a
// conductor; products of matrices with different conductors lift entries
// into the least common one.
class ExactMatrix {
public:
    ExactMatrix() : n_(0) {}
    ExactMatrix(int n, int conductor)
        : n_(n), a_(static_cast<size_t>(n) * n, Cyclotomic::rational_at(rational(0), conductor)) {}

    static ExactMatrix identity(int n, int conductor = 1);
    static ExactMatrix diagonal(const std::vector<Cyclotomic>& d);

    int dim() const { return n_; }
    Cyclotomic& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Cyclotomic& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    ExactMatrix operator+(const ExactMatrix& o) const;
    ExactMatrix operator-(const ExactMatrix& o) const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    ExactMatrix operator-() const;
    ExactMatrix scaled(const Cyclotomic& s) const;
    bool operator==(const ExactMatrix& o) const;
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    ExactMatrix transpose() const;
    // Reflection at the opposite diagonal: (g^tau)_{ij} = g_{n+1-j, n+1-i}.
    ExactMatrix antidiag_transpose() const;

    bool is_identity() const;
    bool is_zero() const;
    // True if the matrix is a rational scalar multiple of the identity.
    bool is_scalar() const;

    Cyclotomic det() const;
    // Throws std::domain_error on singular input.  Monomial matrices are
    // inverted directly, everything else by Gauss-Jordan elimination.
    ExactMatrix inverse() const;

    ExactMatrix commutator(const ExactMatrix& o) const;  // [this, o]
    ExactMatrix conjugated_by(const ExactMatrix& g) const { return g * *this * g.inverse(); }

    ExactMatrix promoted(int conductor) const;
    // Least common conductor over all entries.
    int conductor_lcm() const;
    std::string key() const;
    std::string str() const;

private:
    int n_;
    std::vector<Cyclotomic> a_;
};

// Monomial decomposition g = D * P with P a permutation matrix
// (P eps_j = eps_{perm[j]}) and D the diagonal of nonzero entries read off
// by row.  Empty if some row or column does not have exactly one nonzero
// entry (such g does not normalize the diagonal torus).
struct MonomialParts {
    std::vector<int> perm;           // 0-based, column -> row
    std::vector<Cyclotomic> diag;    // diag[row]
};
std::optional<MonomialParts> monomial_decompose(const ExactMatrix& g);
ExactMatrix monomial_compose(const MonomialParts& parts, int conductor = 1);

// The involution theta_G : g -> S_G (g^tau)^{-1} S_G^{-1} whose fixed
// subgroup in GL_n is the classical group of the given type.
struct ThetaInvolution {
    TypeLabel type;
    int rank;  // ell
    int n;     // 2*ell+1 for B, 2*ell for C and D
    ExactMatrix S;

    explicit ThetaInvolution(TypeLabel t, int ell);
    ExactMatrix apply(const ExactMatrix& g) const;
    // Lie algebra version X -> -S_G X^tau S_G^{-1}.
    ExactMatrix apply_lie(const ExactMatrix& x) const;
    bool fixes(const ExactMatrix& g) const { return apply(g) == g; }
};

}  // namespace weylift
