#include "weylift/clifford.hpp"

#include <bit>
#include <chrono>
#include <numeric>
#include <sstream>

#include "weylift/lifts.hpp"

namespace weylift {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

constexpr int kCliffordConductor = 8;

// Sign of e_a * e_b brought to canonical ascending order with e_i^2 = 1.
int merge_sign(uint32_t a, uint32_t b) {
    int swaps = 0;
    while (b) {
        uint32_t low = b & -b;
        int idx = std::countr_zero(low);
        b ^= low;
        swaps += std::popcount(a & ~((low << 1) - 1));  // elements of a above idx
        a ^= (uint32_t{1} << idx);
    }
    return (swaps % 2) ? -1 : 1;
}

Cyclotomic inv_sqrt2() {
    // 1/sqrt(2) = (zeta_8 + zeta_8^-1)/2
    return Cyclotomic::sqrt2() * Cyclotomic::rational_at(rational(1, 2), kCliffordConductor);
}

}  // namespace

CliffordElement CliffordElement::scalar(int n, const Cyclotomic& c) {
    CliffordElement x(n);
    x.add_term(0, c);
    return x;
}

CliffordElement CliffordElement::basis_vector(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("basis_vector: index out of range");
    CliffordElement x(n);
    x.add_term(uint32_t{1} << (k - 1), Cyclotomic(1));
    return x;
}

void CliffordElement::add_term(uint32_t subset, const Cyclotomic& c) {
    auto it = terms_.find(subset);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(subset, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

bool CliffordElement::is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Cyclotomic CliffordElement::scalar_part() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? Cyclotomic(0) : it->second;
}

bool CliffordElement::is_even() const {
    for (const auto& [s, c] : terms_)
        if (std::popcount(s) % 2) return false;
    return true;
}

CliffordElement CliffordElement::operator+(const CliffordElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("clifford: dimension mismatch");
    CliffordElement out = *this;
    for (const auto& [s, c] : o.terms_) out.add_term(s, c);
    return out;
}

CliffordElement CliffordElement::operator-(const CliffordElement& o) const {
    return *this + (-o);
}

CliffordElement CliffordElement::operator-() const {
    CliffordElement out(n_);
    for (const auto& [s, c] : terms_) out.terms_.emplace(s, -c);
    return out;
}

CliffordElement CliffordElement::operator*(const CliffordElement& o) const {
    if (n_ != o.n_) throw std::invalid_argument("clifford: dimension mismatch");
    CliffordElement out(n_);
    for (const auto& [sa, ca] : terms_)
        for (const auto& [sb, cb] : o.terms_) {
            Cyclotomic c = ca * cb;
            if (merge_sign(sa, sb) < 0) c = -c;
            out.add_term(sa ^ sb, c);
        }
    return out;
}

CliffordElement CliffordElement::scaled(const Cyclotomic& c) const {
    CliffordElement out(n_);
    if (c.is_zero()) return out;
    for (const auto& [s, x] : terms_) out.add_term(s, x * c);
    return out;
}

bool CliffordElement::operator==(const CliffordElement& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
}

CliffordElement CliffordElement::grade_involution() const {
    CliffordElement out(n_);
    for (const auto& [s, c] : terms_)
        out.terms_.emplace(s, (std::popcount(s) % 2) ? -c : c);
    return out;
}

CliffordElement CliffordElement::transpose_anti() const {
    CliffordElement out(n_);
    for (const auto& [s, c] : terms_) {
        int k = std::popcount(s);
        out.terms_.emplace(s, (k * (k - 1) / 2) % 2 ? -c : c);
    }
    return out;
}

CliffordElement CliffordElement::bar() const { return grade_involution().transpose_anti(); }

CliffordElement CliffordElement::inverse() const {
    CliffordElement b = bar();
    CliffordElement nm = *this * b;
    if (!nm.is_scalar() || nm.is_zero())
        throw std::domain_error("clifford inverse: x * bar(x) is not a nonzero scalar");
    return b.scaled(nm.scalar_part().inverse());
}

CliffordElement CliffordElement::promoted(int conductor) const {
    CliffordElement out(n_);
    for (const auto& [s, c] : terms_) out.terms_.emplace(s, c.promoted(conductor));
    return out;
}

int CliffordElement::conductor_lcm() const {
    int n = 1;
    for (const auto& [s, c] : terms_) n = std::lcm(n, c.conductor());
    return n;
}

std::string CliffordElement::key() const {
    std::ostringstream os;
    os << n_ << '#';
    for (const auto& [s, c] : terms_) os << s << ':' << c.key() << ';';
    return os.str();
}

std::string CliffordElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (int k = 0; k < n_; ++k)
            if (s & (uint32_t{1} << k)) os << "*e" << (k + 1);
    }
    return os.str();
}

StructureMaps structure_maps(const CliffordElement& x) {
    StructureMaps out;
    out.alpha = x.grade_involution();
    out.transpose = x.transpose_anti();
    out.bar = x.bar();
    CliffordElement nm = x * out.bar;
    if (nm.is_scalar()) out.norm = nm.scalar_part();
    return out;
}

ExactMatrix pin_action_matrix(const CliffordElement& x) {
    const int n = x.dim();
    CliffordElement alpha_inv = x.inverse().grade_involution();
    ExactMatrix m(n, kCliffordConductor);
    for (int j = 1; j <= n; ++j) {
        CliffordElement img = x * CliffordElement::basis_vector(n, j) * alpha_inv;
        for (const auto& [s, c] : img.terms()) {
            if (std::popcount(s) != 1)
                throw std::domain_error("pin_action_matrix: action does not preserve V");
            m.at(std::countr_zero(s), j - 1) = c;
        }
    }
    if (!(m.transpose() * m == ExactMatrix::identity(n)))
        throw std::logic_error("pin_action_matrix: action is not orthogonal");
    return m;
}

PinGeneratorSet pin_generators(int n) {
    if (n < 2) throw std::invalid_argument("pin_generators: n must be >= 2");
    PinGeneratorSet g;
    g.n = n;
    const Cyclotomic c = inv_sqrt2();
    for (int k = 1; k <= n; ++k) g.T.push_back(CliffordElement::basis_vector(n, k));
    for (int i = 1; i < n; ++i)
        g.S.push_back((CliffordElement::basis_vector(n, i) -
                       CliffordElement::basis_vector(n, i + 1)).scaled(c));

    const CliffordElement one = CliffordElement::scalar(n, Cyclotomic(1));
    for (int k = 0; k < n; ++k)
        if (g.T[k] * g.T[k] != one) throw std::logic_error("pin_generators: T_k^2 != 1");
    for (int i = 0; i + 1 < n; ++i)
        if (g.S[i] * g.S[i] != one) throw std::logic_error("pin_generators: S_i^2 != 1");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && g.T[i] * g.T[j] != -(g.T[j] * g.T[i]))
                throw std::logic_error("pin_generators: T_i T_j != -T_j T_i");
    for (int i = 1; i < n; ++i) {
        if (g.T[i - 1] * g.S[i - 1] != -(g.S[i - 1] * g.T[i]))
            throw std::logic_error("pin_generators: T_i S_i != -S_i T_{i+1}");
        for (int j = 1; j < n; ++j) {
            if (i == j) continue;
            if (std::abs(i - j) > 1 && g.S[i - 1] * g.S[j - 1] != -(g.S[j - 1] * g.S[i - 1]))
                throw std::logic_error("pin_generators: distant S_i do not anticommute");
            if (std::abs(i - j) == 1 &&
                g.S[i - 1] * g.S[j - 1] * g.S[i - 1] != g.S[j - 1] * g.S[i - 1] * g.S[j - 1])
                throw std::logic_error("pin_generators: braid relation fails");
        }
    }
    return g;
}

ClosureResult<CliffordElement> clifford_closure(const std::vector<CliffordElement>& gens,
                                                size_t cap) {
    if (gens.empty()) throw std::invalid_argument("closure: no generators");
    int ctx = 1;
    for (const auto& g : gens) ctx = std::lcm(ctx, g.conductor_lcm());
    std::vector<std::string> labels;
    for (size_t k = 0; k < gens.size(); ++k) labels.push_back("g" + std::to_string(k + 1));
    return group_closure(
        CliffordElement::scalar(gens.front().dim(), Cyclotomic(1)), gens, labels, cap,
        [](const CliffordElement& a, const CliffordElement& b) { return a * b; },
        [ctx](const CliffordElement& x) { return x.promoted(ctx).key(); });
}

PinLiftResult pin_weyl_lift(TypeLabel type, int rank, size_t cap, int max_dim) {
    auto t0 = Clock::now();
    if (type != TypeLabel::B && type != TypeLabel::D)
        throw std::invalid_argument("pin_weyl_lift: defined for types B and D");
    if (rank < 1 || (type == TypeLabel::D && rank < 2))
        throw std::invalid_argument("pin_weyl_lift: rank below the type's minimum");
    const int ell = rank;
    const int n = (type == TypeLabel::B) ? 2 * ell + 1 : 2 * ell;
    if (n > max_dim)
        throw std::invalid_argument("pin_weyl_lift: ambient dimension exceeds the cap of " +
                                    std::to_string(max_dim));

    PinLiftResult out;
    out.report.suite = "pin";
    out.report.type_label = std::string(1, type_char(type));
    out.report.rank = rank;

    PinGeneratorSet g = pin_generators(n);
    auto S = [&](int i) -> const CliffordElement& { return g.S[i - 1]; };
    auto T = [&](int i) -> const CliffordElement& { return g.T[i - 1]; };

    if (type == TypeLabel::B) {
        out.generators.push_back(S(ell) * S(ell + 1) * S(ell));
        for (int k = 2; k <= ell; ++k)
            out.generators.push_back(S(ell + 1 - k) * T(ell + k) * S(ell + k) * T(ell + k));
    } else {
        out.generators.push_back(S(ell) * S(ell - 1) * T(ell + 1) * S(ell + 1) * T(ell + 1) *
                                 S(ell));
        for (int k = 2; k <= ell; ++k)
            out.generators.push_back(S(ell + 1 - k) * T(ell - 1 + k) * S(ell - 1 + k) *
                                     T(ell - 1 + k));
    }

    const CliffordElement one = CliffordElement::scalar(n, Cyclotomic(1));
    const CliffordElement minus_one = -one;
    RootDatum datum = build_root_datum(type, rank);
    auto aij = [&](int i, int j) { return datum.cartan[i - 1][j - 1]; };

    // Generator norms lie in {+-1}.
    bool norm_ok = true;
    for (const auto& x : out.generators) {
        auto maps = structure_maps(x);
        norm_ok = norm_ok && maps.norm &&
                  (*maps.norm == Cyclotomic(1) || *maps.norm == Cyclotomic(-1));
    }
    out.report.require("spinor-norm-unit", norm_ok);

    if (type == TypeLabel::B) {
        out.report.require("first-square", out.generators[0] * out.generators[0] == one,
                           "(S^B_1)^2 = 1");
        bool sq = true;
        for (int k = 2; k <= ell; ++k)
            sq = sq && out.generators[k - 1] * out.generators[k - 1] == minus_one;
        out.report.require("higher-squares", sq, "(S^B_k)^2 = -1 for k > 1");
        bool comm = true, braid = true, four = true;
        for (int i = 1; i <= ell; ++i)
            for (int j = 1; j <= ell; ++j) {
                if (i == j) continue;
                const CliffordElement &A = out.generators[i - 1], &B = out.generators[j - 1];
                long prod = aij(i, j) * aij(j, i);
                if (aij(i, j) == 0) comm = comm && A * B == B * A;
                else if (prod == 1) braid = braid && A * B * A == -(B * A * B);
                else four = four && A * B * A * B == -(B * A * B * A);
            }
        out.report.require("commuting-pairs", comm);
        // Single-bond pairs braid only up to the central sign.
        if (ell >= 3)
            out.report.require("braid-pairs", braid,
                               "S_i S_j S_i = -S_j S_i S_j for single bonds");
        if (ell >= 2)
            out.report.require("fourfold-braid", four,
                               "S_1 S_2 S_1 S_2 = -S_2 S_1 S_2 S_1 across the double bond");
    } else {
        bool sq = true;
        for (const auto& x : out.generators) sq = sq && x * x == minus_one;
        out.report.require("squares-minus-one", sq, "(S^D_i)^2 = -1");
        if (ell >= 2) {
            const CliffordElement &A = out.generators[0], &B = out.generators[1];
            out.report.require("fork-anticommute", A * B == -(B * A), "S^D_1 S^D_2 = -S^D_2 S^D_1");
        }
        if (ell >= 3) {
            const CliffordElement &A = out.generators[0], &C = out.generators[2];
            out.report.require("fork-anti-braid", A * C * A == -(C * A * C),
                               "S^D_1 S^D_3 S^D_1 = -S^D_3 S^D_1 S^D_3");
        }
        bool comm = true, braid = true;
        for (int i = 1; i <= ell; ++i)
            for (int j = 1; j <= ell; ++j) {
                if (i == j) continue;
                bool fork_pair = (i == 1 && j == 2) || (i == 2 && j == 1);
                bool anti_pair = (i == 1 && j == 3) || (i == 3 && j == 1);
                const CliffordElement &A = out.generators[i - 1], &B = out.generators[j - 1];
                if (aij(i, j) == 0 && !fork_pair) comm = comm && A * B == B * A;
                if (aij(i, j) == -1 && !anti_pair) braid = braid && A * B * A == -(B * A * B);
            }
        out.report.require("commuting-pairs", comm);
        if (ell >= 3)
            out.report.require("braid-pairs", braid,
                               "S_i S_j S_i = -S_j S_i S_j for all single bonds, matching the "
                               "(1,3) pair");
    }

    // Covering: the twisted conjugation action reproduces the matrix lift.
    {
        ClassicalLiftSet lifted = classical_generators(type, rank);
        bool cover = true;
        for (int i = 1; i <= ell; ++i)
            cover = cover && pin_action_matrix(out.generators[i - 1]) == lifted.Sg[i - 1];
        out.report.require("covers-matrix-lift", cover);
    }

    auto closure = clifford_closure(out.generators, cap);
    // At rank one the single B generator squares to 1 and the extension
    // collapses; from rank two on the group contains -1 and doubles.
    bool doubled = !(type == TypeLabel::B && ell == 1);
    Integer expected = doubled ? weyl_order(type, rank) * 2 : weyl_order(type, rank);
    out.report.require("closure-order",
                       Integer(static_cast<unsigned long>(closure.order)) == expected,
                       "order " + std::to_string(closure.order) + ", expected " +
                           expected.get_str());

    size_t kernel = 0;
    bool kernel_pm1 = true;
    for (const auto& x : closure.elements) {
        if (pin_action_matrix(x).is_identity()) {
            ++kernel;
            kernel_pm1 = kernel_pm1 && (x == one || x == minus_one);
        }
    }
    out.report.require("kernel-is-center", kernel == (doubled ? 2u : 1u) && kernel_pm1,
                       "kernel size " + std::to_string(kernel));

    out.report.elapsed_ms = ms_since(t0);
    return out;
}

PinLiftResult spin_lift_B(int rank, size_t cap, int max_dim) {
    auto t0 = Clock::now();
    if (rank < 1) throw std::invalid_argument("spin_lift_B: rank must be >= 1");
    const int ell = rank;
    const int n = 2 * ell + 1;
    if (n > max_dim)
        throw std::invalid_argument("spin_lift_B: ambient dimension exceeds the cap of " +
                                    std::to_string(max_dim));

    PinLiftResult out;
    out.report.suite = "spin";
    out.report.type_label = "B";
    out.report.rank = rank;

    PinLiftResult pin = pin_weyl_lift(TypeLabel::B, rank, cap, max_dim);
    CliffordElement zhat = CliffordElement::scalar(n, Cyclotomic(1));
    for (int k = 1; k <= n; ++k) zhat = zhat * CliffordElement::basis_vector(n, k);

    out.generators.push_back(zhat * pin.generators[0]);
    for (int k = 2; k <= ell; ++k) out.generators.push_back(pin.generators[k - 1]);

    const CliffordElement one = CliffordElement::scalar(n, Cyclotomic(1));
    const CliffordElement minus_one = -one;

    bool even = true;
    for (const auto& x : out.generators) even = even && x.is_even();
    out.report.require("even-grade", even, "all generators lie in Spin");

    bool central = true;
    for (const auto& x : pin.generators) central = central && zhat * x == x * zhat;
    out.report.require("pseudoscalar-central", central);

    CliffordElement sq1 = out.generators[0] * out.generators[0];
    out.report.require("first-square-sign", sq1 == ((ell % 2) ? minus_one : one),
                       "(Stilde^B_1)^2 = (-1)^l");
    bool sq = true;
    for (int k = 2; k <= ell; ++k)
        sq = sq && out.generators[k - 1] * out.generators[k - 1] == minus_one;
    out.report.require("higher-squares", sq);

    RootDatum datum = build_root_datum(TypeLabel::B, rank);
    bool comm = true, braid = true, four = true;
    for (int i = 1; i <= ell; ++i)
        for (int j = 1; j <= ell; ++j) {
            if (i == j) continue;
            long a = datum.cartan[i - 1][j - 1], b = datum.cartan[j - 1][i - 1];
            const CliffordElement &A = out.generators[i - 1], &B = out.generators[j - 1];
            if (a == 0) comm = comm && A * B == B * A;
            else if (a * b == 1) braid = braid && A * B * A == -(B * A * B);
            else four = four && A * B * A * B == -(B * A * B * A);
        }
    out.report.require("commuting-pairs", comm);
    if (ell >= 3)
        out.report.require("braid-pairs", braid, "anti-braid across single bonds");
    if (ell >= 2) out.report.require("fourfold-braid", four, "anti-braid across the double bond");

    auto closure = clifford_closure(out.generators, cap);
    Integer expected = weyl_order(TypeLabel::B, rank) * 2;
    out.report.require("closure-order",
                       Integer(static_cast<unsigned long>(closure.order)) == expected,
                       "order " + std::to_string(closure.order) + ", expected " +
                           expected.get_str());
    bool all_even = true;
    for (const auto& x : closure.elements) all_even = all_even && x.is_even();
    out.report.require("closure-in-spin", all_even);

    out.report.elapsed_ms = ms_since(t0);
    return out;
}

}  // namespace weylift
