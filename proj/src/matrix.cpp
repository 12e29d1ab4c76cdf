#include "weylift/matrix.hpp"

#include <numeric>
#include <sstream>

namespace weylift {

char type_char(TypeLabel t) {
    switch (t) {
        case TypeLabel::A: return 'A';
        case TypeLabel::B: return 'B';
        case TypeLabel::C: return 'C';
        case TypeLabel::D: return 'D';
    }
    return '?';
}

TypeLabel type_from_char(char c) {
    switch (c) {
        case 'A': case 'a': return TypeLabel::A;
        case 'B': case 'b': return TypeLabel::B;
        case 'C': case 'c': return TypeLabel::C;
        case 'D': case 'd': return TypeLabel::D;
    }
    throw std::invalid_argument("type label must be one of A, B, C, D");
}

ExactMatrix ExactMatrix::identity(int n, int conductor) {
    ExactMatrix m(n, conductor);
    for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic::rational_at(rational(1), conductor);
    return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Cyclotomic>& d) {
    ExactMatrix m(static_cast<int>(d.size()), 1);
    for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
    ExactMatrix out = *this;
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] += o.a_[k];
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const { return *this + (-o); }

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix out = *this;
    for (auto& x : out.a_) x = -x;
    return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix dimension mismatch");
    ExactMatrix out(n_, 1);
    for (int i = 0; i < n_; ++i)
        for (int k = 0; k < n_; ++k) {
            const Cyclotomic& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                const Cyclotomic& y = o.at(k, j);
                if (y.is_zero()) continue;
                out.at(i, j) += x * y;
            }
        }
    return out;
}

ExactMatrix ExactMatrix::scaled(const Cyclotomic& s) const {
    ExactMatrix out = *this;
    for (auto& x : out.a_) x = x * s;
    return out;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    if (n_ != o.n_) return false;
    for (size_t k = 0; k < a_.size(); ++k)
        if (a_[k] != o.a_[k]) return false;
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(n_, 1);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out.at(j, i) = at(i, j);
    return out;
}

ExactMatrix ExactMatrix::antidiag_transpose() const {
    ExactMatrix out(n_, 1);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) out.at(i, j) = at(n_ - 1 - j, n_ - 1 - i);
    return out;
}

bool ExactMatrix::is_identity() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i == j ? !(at(i, j) == Cyclotomic(1)) : !at(i, j).is_zero()) return false;
        }
    return true;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool ExactMatrix::is_scalar() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            if (i != j && !at(i, j).is_zero()) return false;
            if (i != 0 && i == j && at(i, i) != at(0, 0)) return false;
        }
    return true;
}

Cyclotomic ExactMatrix::det() const {
    // Fraction-free enough at these sizes: plain Gauss with division.
    ExactMatrix m = *this;
    Cyclotomic d(1);
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int r = col; r < n_; ++r)
            if (!m.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) return Cyclotomic(0);
        if (pivot != col) {
            for (int j = 0; j < n_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
            d = -d;
        }
        d = d * m.at(col, col);
        Cyclotomic inv = m.at(col, col).inverse();
        for (int r = col + 1; r < n_; ++r) {
            if (m.at(r, col).is_zero()) continue;
            Cyclotomic f = m.at(r, col) * inv;
            for (int j = col; j < n_; ++j) m.at(r, j) -= f * m.at(col, j);
        }
    }
    return d;
}

ExactMatrix ExactMatrix::inverse() const {
    if (auto parts = monomial_decompose(*this)) {
        // (D P)^-1 = P^-1 D^-1: one nonzero per line again.
        ExactMatrix out(n_, 1);
        for (int j = 0; j < n_; ++j) {
            int i = parts->perm[j];  // entry at (i, j) equals diag[i]
            out.at(j, i) = parts->diag[i].inverse();
        }
        return out;
    }
    ExactMatrix m = *this;
    ExactMatrix inv = identity(n_);
    for (int col = 0; col < n_; ++col) {
        int pivot = -1;
        for (int r = col; r < n_; ++r)
            if (!m.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) throw std::domain_error("inverse: singular matrix");
        if (pivot != col)
            for (int j = 0; j < n_; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Cyclotomic f = m.at(col, col).inverse();
        for (int j = 0; j < n_; ++j) {
            m.at(col, j) = m.at(col, j) * f;
            inv.at(col, j) = inv.at(col, j) * f;
        }
        for (int r = 0; r < n_; ++r) {
            if (r == col || m.at(r, col).is_zero()) continue;
            Cyclotomic g = m.at(r, col);
            for (int j = 0; j < n_; ++j) {
                m.at(r, j) -= g * m.at(col, j);
                inv.at(r, j) -= g * inv.at(col, j);
            }
        }
    }
    return inv;
}

ExactMatrix ExactMatrix::commutator(const ExactMatrix& o) const {
    return *this * o - o * *this;
}

ExactMatrix ExactMatrix::promoted(int conductor) const {
    ExactMatrix out = *this;
    for (auto& x : out.a_) x = x.promoted(conductor);
    return out;
}

int ExactMatrix::conductor_lcm() const {
    int n = 1;
    for (const auto& x : a_) n = std::lcm(n, x.conductor());
    return n;
}

std::string ExactMatrix::key() const {
    std::ostringstream os;
    os << n_ << '#';
    for (const auto& x : a_) os << x.key() << ';';
    return os.str();
}

std::string ExactMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        os << (i == 0 ? "[" : " ") << "[";
        for (int j = 0; j < n_; ++j) os << (j ? ", " : "") << at(i, j).str();
        os << "]" << (i + 1 == n_ ? "]" : "\n");
    }
    return os.str();
}

std::optional<MonomialParts> monomial_decompose(const ExactMatrix& g) {
    const int n = g.dim();
    MonomialParts parts;
    parts.perm.assign(n, -1);
    parts.diag.assign(n, Cyclotomic(0));
    std::vector<bool> row_used(n, false);
    for (int j = 0; j < n; ++j) {
        int hit = -1;
        for (int i = 0; i < n; ++i) {
            if (g.at(i, j).is_zero()) continue;
            if (hit >= 0) return std::nullopt;  // two nonzeros in a column
            hit = i;
        }
        if (hit < 0 || row_used[hit]) return std::nullopt;
        row_used[hit] = true;
        parts.perm[j] = hit;
        parts.diag[hit] = g.at(hit, j);
    }
    return parts;
}

ExactMatrix monomial_compose(const MonomialParts& parts, int conductor) {
    const int n = static_cast<int>(parts.perm.size());
    ExactMatrix g(n, conductor);
    for (int j = 0; j < n; ++j) g.at(parts.perm[j], j) = parts.diag[parts.perm[j]];
    return g;
}

ThetaInvolution::ThetaInvolution(TypeLabel t, int ell) : type(t), rank(ell) {
    if (t == TypeLabel::A) throw std::invalid_argument("theta: no involution for type A");
    if (ell < 1 || (t == TypeLabel::D && ell < 2))
        throw std::invalid_argument("theta: rank below the type's minimum");
    n = (t == TypeLabel::B) ? 2 * ell + 1 : 2 * ell;
    std::vector<Cyclotomic> d(n);
    for (int k = 0; k < n; ++k) {
        int sign = (k % 2 == 0) ? 1 : -1;              // S_B, S_C alternate starting at +1
        if (t == TypeLabel::D && k >= ell) sign = -sign;  // S_D = S_C * diag(Id, -Id)
        d[k] = Cyclotomic(sign);
    }
    S = ExactMatrix::diagonal(d);
}

ExactMatrix ThetaInvolution::apply(const ExactMatrix& g) const {
    if (g.dim() != n) throw std::invalid_argument("theta: dimension mismatch");
    return S * g.antidiag_transpose().inverse() * S.inverse();
}

ExactMatrix ThetaInvolution::apply_lie(const ExactMatrix& x) const {
    if (x.dim() != n) throw std::invalid_argument("theta: dimension mismatch");
    return -(S * x.antidiag_transpose() * S.inverse());
}

}  // namespace weylift
