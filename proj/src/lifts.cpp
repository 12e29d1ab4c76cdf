#include "weylift/lifts.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <numeric>
#include <sstream>

#include "weylift/liealg.hpp"

namespace weylift {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

ExactMatrix product(const std::vector<ExactMatrix>& factors) {
    ExactMatrix out = factors.front();
    for (size_t k = 1; k < factors.size(); ++k) out = out * factors[k];
    return out;
}

ExactMatrix power(const ExactMatrix& g, int e) {
    ExactMatrix out = ExactMatrix::identity(g.dim());
    for (int k = 0; k < e; ++k) out = out * g;
    return out;
}

// Invariant factors d_1 | d_2 | ... of a finite abelian matrix group, from
// the counts of p-power torsion elements.
std::vector<long> abelian_invariant_factors(const std::vector<ExactMatrix>& elements) {
    long n = static_cast<long>(elements.size());
    std::map<long, std::vector<int>> cyclic_exponents;  // prime -> sorted descending
    long rest = n;
    for (long p = 2; p <= rest; ++p) {
        if (rest % p) continue;
        while (rest % p == 0) rest /= p;
        // c_k = #{x : x^(p^k) = 1}; the conjugate partition reads off the ratios
        std::vector<int> conj;
        long prev = 1;
        long pk = 1;
        while (true) {
            pk *= p;
            long count = 0;
            for (const auto& a : elements) {
                ExactMatrix acc = ExactMatrix::identity(a.dim());
                for (long e = 0; e < pk; ++e) acc = acc * a;
                if (acc.is_identity()) ++count;
            }
            if (count == prev) break;
            long ratio = count / prev;
            int log = 0;
            while (ratio > 1) { ratio /= p; ++log; }
            conj.push_back(log);
            prev = count;
        }
        std::vector<int> lambda;
        for (int row = 1;; ++row) {
            int cnt = 0;
            for (int c : conj)
                if (c >= row) ++cnt;
            if (!cnt) break;
            lambda.push_back(cnt);
        }
        if (!lambda.empty()) cyclic_exponents[p] = lambda;
    }
    size_t maxlen = 0;
    for (auto& [p, lam] : cyclic_exponents) maxlen = std::max(maxlen, lam.size());
    std::vector<long> factors;
    for (size_t k = 0; k < maxlen; ++k) {
        long f = 1;
        for (auto& [p, lam] : cyclic_exponents)
            if (k < lam.size()) {
                for (int t = 0; t < lam[k]; ++t) f *= p;
            }
        factors.push_back(f);
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

// Signed permutation induced on the folded basis by the conjugation action
// of a monomial matrix on the torus: only the underlying index permutation
// acts, and the signs emerge from permuting the folded difference vectors.
SignedPerm folded_action_of_matrix(TypeLabel type, int rank, const ExactMatrix& g) {
    auto basis = folded_basis(type, rank);
    const int n = g.dim();
    auto parts = monomial_decompose(g);
    if (!parts) throw std::logic_error("matrix is not monomial");
    SignedPerm w = SignedPerm::identity(rank);
    for (int j = 0; j < rank; ++j) {
        RationalVec img(n, rational(0));
        for (int t = 0; t < n; ++t) img[parts->perm[t]] = basis[j][t];
        int hits = 0;
        for (int i = 0; i < rank; ++i) {
            RationalVec dp = img, dm = img;
            for (int t = 0; t < n; ++t) { dp[t] -= basis[i][t]; dm[t] += basis[i][t]; }
            auto zero = [](const RationalVec& v) {
                return std::all_of(v.begin(), v.end(),
                                   [](const Rational& x) { return sgn(x) == 0; });
            };
            if (zero(dp)) { w.perm[j] = i; w.sign[i] = 1; ++hits; }
            else if (zero(dm)) { w.perm[j] = i; w.sign[i] = -1; ++hits; }
        }
        if (hits != 1)
            throw std::logic_error("matrix does not act as a signed permutation of the folded basis");
    }
    return w;
}

}  // namespace

int context_conductor(int rank) { return std::lcm(8, 2 * (rank + 1)); }

GlGeneratorSet gl_generators(int n, int conductor) {
    if (n < 2) throw std::invalid_argument("gl_generators: n must be >= 2");
    GlGeneratorSet g;
    g.n = n;
    const Cyclotomic one = Cyclotomic::rational_at(rational(1), conductor);
    for (int i = 1; i < n; ++i) {
        ExactMatrix s = ExactMatrix::identity(n, conductor);
        s.at(i - 1, i - 1) = Cyclotomic(0); s.at(i, i) = Cyclotomic(0);
        s.at(i - 1, i) = one; s.at(i, i - 1) = one;
        g.S.push_back(s);

        ExactMatrix sb = ExactMatrix::identity(n, conductor);
        sb.at(i - 1, i - 1) = Cyclotomic(0); sb.at(i, i) = Cyclotomic(0);
        sb.at(i - 1, i) = -one; sb.at(i, i - 1) = -one;
        g.Sbar.push_back(sb);

        ExactMatrix sd = ExactMatrix::identity(n, conductor);
        sd.at(i - 1, i - 1) = Cyclotomic(0); sd.at(i, i) = Cyclotomic(0);
        sd.at(i - 1, i) = -one; sd.at(i, i - 1) = one;
        g.sdot.push_back(sd);
    }
    for (int k = 1; k <= n; ++k) {
        ExactMatrix t = ExactMatrix::identity(n, conductor);
        t.at(k - 1, k - 1) = -one;
        g.T.push_back(t);
    }
    return g;
}

ClosureResult<ExactMatrix> matrix_closure(const std::vector<ExactMatrix>& gens, size_t cap,
                                          bool track_words) {
    if (gens.empty()) throw std::invalid_argument("closure: no generators");
    for (const auto& g : gens) g.inverse();  // throws if some generator is singular
    int ctx = 1;
    for (const auto& g : gens) ctx = std::lcm(ctx, g.conductor_lcm());
    std::vector<std::string> labels;
    for (size_t k = 0; k < gens.size(); ++k) labels.push_back("g" + std::to_string(k + 1));
    return group_closure(
        ExactMatrix::identity(gens.front().dim()), gens, labels, cap,
        [](const ExactMatrix& a, const ExactMatrix& b) { return a * b; },
        [ctx](const ExactMatrix& m) { return m.promoted(ctx).key(); }, track_words);
}

SuiteReport verify_gl_tits_presentation(int n, size_t cap) {
    auto t0 = Clock::now();
    SuiteReport rep;
    rep.suite = "gl";
    rep.rank = n;
    GlGeneratorSet g = gl_generators(n);
    const int ell = n - 1;
    const ExactMatrix id = ExactMatrix::identity(n);

    bool ok = true;
    for (int i = 1; i <= ell; ++i) ok = ok && power(g.S[i - 1], 2) == id;
    rep.require("s-squares", ok);
    ok = true;
    for (int k = 1; k <= n; ++k) ok = ok && power(g.T[k - 1], 2) == id;
    rep.require("t-squares", ok);
    ok = true;
    for (int k = 1; k <= n; ++k)
        for (int m = 1; m <= n; ++m)
            ok = ok && g.T[k - 1] * g.T[m - 1] == g.T[m - 1] * g.T[k - 1];
    rep.require("t-commute", ok);

    bool cox2 = true, cox3 = true;
    for (int i = 1; i <= ell; ++i)
        for (int j = 1; j <= ell; ++j) {
            if (i == j) continue;
            if (std::abs(i - j) > 1) cox2 = cox2 && power(g.S[i - 1] * g.S[j - 1], 2) == id;
            else cox3 = cox3 && power(g.S[i - 1] * g.S[j - 1], 3) == id;
        }
    rep.require("coxeter-commuting", cox2);
    rep.require("coxeter-braid", cox3);

    ok = true;
    for (int i = 1; i <= ell; ++i)
        for (int k = 1; k <= n; ++k) {
            int sk = (k == i) ? i + 1 : (k == i + 1 ? i : k);  // s_i acting on indices
            ok = ok && g.S[i - 1] * g.T[k - 1] == g.T[sk - 1] * g.S[i - 1];
        }
    rep.require("exchange-s-t", ok);

    // The twisted generator suite.
    ok = true;
    for (int i = 1; i <= ell; ++i) ok = ok && power(g.Sbar[i - 1], 2) == id;
    rep.require("sbar-squares", ok);
    ok = true;
    for (int i = 1; i <= ell; ++i) {
        ExactMatrix tt = g.T[i - 1] * g.T[i];
        ok = ok && g.S[i - 1] * g.Sbar[i - 1] == tt && g.Sbar[i - 1] * g.S[i - 1] == tt;
    }
    rep.require("s-sbar-gives-torsion", ok);
    ok = true;
    bool braid_bar = true, mixed = true;
    for (int i = 1; i <= ell; ++i)
        for (int j = 1; j <= ell; ++j) {
            if (i == j) continue;
            if (std::abs(i - j) > 1) {
                ok = ok && power(g.S[i - 1] * g.Sbar[j - 1], 2) == id &&
                     power(g.Sbar[i - 1] * g.Sbar[j - 1], 2) == id;
            } else {
                braid_bar = braid_bar && power(g.Sbar[i - 1] * g.Sbar[j - 1], 3) == id;
                mixed = mixed && g.S[i - 1] * g.S[j - 1] * g.S[i - 1] ==
                                     g.Sbar[j - 1] * g.Sbar[i - 1] * g.Sbar[j - 1];
            }
        }
    rep.require("sbar-commuting", ok);
    rep.require("sbar-braid", braid_bar);
    rep.require("mixed-braid", mixed);

    // Quarter-turn generators.
    ok = true;
    for (int i = 1; i <= ell; ++i)
        ok = ok && power(g.sdot[i - 1], 2) == g.T[i - 1] * g.T[i].inverse();
    rep.require("sdot-square-is-torsion", ok);
    ok = true;
    for (int i = 1; i <= ell; ++i)
        ok = ok && g.S[i - 1] == g.T[i - 1] * g.sdot[i - 1] &&
             g.S[i - 1] == g.sdot[i - 1] * g.T[i] &&
             g.Sbar[i - 1] == g.T[i] * g.sdot[i - 1] &&
             g.Sbar[i - 1] == g.sdot[i - 1] * g.T[i - 1];
    rep.require("s-from-t-sdot", ok);
    bool dot2 = true, dot3 = true;
    for (int i = 1; i <= ell; ++i)
        for (int j = 1; j <= ell; ++j) {
            if (i == j) continue;
            if (std::abs(i - j) > 1)
                dot2 = dot2 && g.sdot[i - 1] * g.sdot[j - 1] == g.sdot[j - 1] * g.sdot[i - 1];
            else
                dot3 = dot3 && g.sdot[i - 1] * g.sdot[j - 1] * g.sdot[i - 1] ==
                                   g.sdot[j - 1] * g.sdot[i - 1] * g.sdot[j - 1];
        }
    rep.require("sdot-commuting", dot2);
    rep.require("sdot-braid", dot3);

    ok = true;
    for (int i = 1; i <= ell; ++i) {
        ExactMatrix inv = g.sdot[i - 1].inverse();
        for (int k = 1; k <= n; ++k) {
            int sk = (k == i) ? i + 1 : (k == i + 1 ? i : k);
            ExactMatrix ekk(n, 1);
            ekk.at(k - 1, k - 1) = Cyclotomic(1);
            ExactMatrix skk(n, 1);
            skk.at(sk - 1, sk - 1) = Cyclotomic(1);
            ok = ok && g.sdot[i - 1] * ekk * inv == skk;
        }
    }
    rep.require("ad-sdot-permutes-torus", ok);

    if (n <= 6) {
        Integer expected(1);
        for (int k = 2; k <= n; ++k) expected *= k;
        auto c = matrix_closure(g.S, cap);
        rep.require("closure-weyl-order", Integer(static_cast<unsigned long>(c.order)) == expected,
                    "order " + std::to_string(c.order) + ", expected " + expected.get_str());
    }
    if (n <= 4) {
        Integer expected(1);
        for (int k = 2; k <= n; ++k) expected *= k;
        for (int k = 0; k < n; ++k) expected *= 2;
        std::vector<ExactMatrix> gens = g.S;
        gens.insert(gens.end(), g.T.begin(), g.T.end());
        auto c = matrix_closure(gens, cap);
        rep.require("closure-tits-order", Integer(static_cast<unsigned long>(c.order)) == expected,
                    "order " + std::to_string(c.order) + ", expected " + expected.get_str());
    }

    rep.elapsed_ms = ms_since(t0);
    return rep;
}

ClassicalLiftSet classical_generators(TypeLabel type, int rank) {
    if (type == TypeLabel::A)
        throw std::invalid_argument("classical_generators: defined for types B, C, D");
    if (rank < 1 || (type == TypeLabel::D && rank < 2))
        throw std::invalid_argument("classical_generators: rank below the type's minimum");
    const int ell = rank;
    const int n = (type == TypeLabel::B) ? 2 * ell + 1 : 2 * ell;
    GlGeneratorSet g = gl_generators(n);
    auto S = [&](int i) -> const ExactMatrix& { return g.S[i - 1]; };
    auto Sb = [&](int i) -> const ExactMatrix& { return g.Sbar[i - 1]; };
    auto T = [&](int i) -> const ExactMatrix& { return g.T[i - 1]; };
    auto Sd = [&](int i) -> const ExactMatrix& { return g.sdot[i - 1]; };

    ClassicalLiftSet out;
    out.type = type;
    out.rank = ell;
    out.n = n;

    switch (type) {
        case TypeLabel::B: {
            ExactMatrix s1 = product({S(ell + 1), S(ell), S(ell + 1)});
            if (s1 != product({S(ell), S(ell + 1), S(ell)}))
                throw std::logic_error("classical_generators: braid form mismatch for S^B_1");
            out.Sg.push_back(s1);
            for (int k = 2; k <= ell; ++k) out.Sg.push_back(S(ell + 1 - k) * Sb(ell + k));
            for (int i = 1; i <= ell; ++i) out.Tg.push_back(T(ell + 1 - i) * T(ell + 1 + i));
            out.T0 = T(ell + 1);
            out.sdotg.push_back(product({Sd(ell), Sd(ell + 1), Sd(ell)}));
            for (int k = 2; k <= ell; ++k) out.sdotg.push_back(Sd(ell + 1 - k) * Sd(ell + k));
            if (out.Sg[0] != out.T0 * out.sdotg[0])
                throw std::logic_error("classical_generators: S^B_1 != T^B_0 sdot^B_1");
            for (int k = 2; k <= ell; ++k)
                if (out.Sg[k - 1] != out.Tg[k - 1] * out.sdotg[k - 1])
                    throw std::logic_error("classical_generators: S^B_k != T^B_k sdot^B_k");
            break;
        }
        case TypeLabel::C: {
            ExactMatrix s1 = T(ell) * S(ell);
            if (s1 != T(ell + 1) * Sb(ell))
                throw std::logic_error("classical_generators: two forms of S^C_1 disagree");
            out.Sg.push_back(s1);
            for (int k = 2; k <= ell; ++k) out.Sg.push_back(S(ell + 1 - k) * Sb(ell - 1 + k));
            for (int i = 1; i <= ell; ++i) out.Tg.push_back(T(ell + 1 - i) * T(ell + i));
            out.Stilde1 = S(ell) * Sb(ell);
            if (out.Stilde1 != T(ell) * T(ell + 1).inverse())
                throw std::logic_error("classical_generators: Stilde^C_1 != T_l T_{l+1}^-1");
            out.sdotg.push_back(Sd(ell));
            for (int k = 2; k <= ell; ++k) out.sdotg.push_back(Sd(ell + 1 - k) * Sd(ell - 1 + k));
            if (out.Sg[0] != out.sdotg[0])
                throw std::logic_error("classical_generators: S^C_1 != sdot^C_1");
            for (int k = 2; k <= ell; ++k)
                if (out.Sg[k - 1] != out.Tg[k - 1] * out.sdotg[k - 1])
                    throw std::logic_error("classical_generators: S^C_k != T^C_k sdot^C_k");
            break;
        }
        case TypeLabel::D: {
            out.Sg.push_back(product({S(ell), S(ell - 1), Sb(ell + 1), S(ell)}));
            for (int k = 2; k <= ell; ++k) out.Sg.push_back(S(ell + 1 - k) * Sb(ell - 1 + k));
            for (int i = 1; i <= ell; ++i) out.Tg.push_back(T(ell + 1 - i) * T(ell + i));
            // sdot^D_1 = exp((pi/2) J_1): the product of the two commuting
            // quarter turns in the planes (ell-1, ell+1) and (ell, ell+2).
            ExactMatrix r1 = product({Sd(ell), Sd(ell - 1), Sd(ell).inverse()});
            ExactMatrix r2 = product({Sd(ell + 1), Sd(ell), Sd(ell + 1).inverse()});
            if (r1 * r2 != r2 * r1)
                throw std::logic_error("classical_generators: plane rotations do not commute");
            out.sdotg.push_back(r1 * r2);
            for (int k = 2; k <= ell; ++k) out.sdotg.push_back(Sd(ell + 1 - k) * Sd(ell - 1 + k));
            if (out.Sg[0] != out.Tg[1] * out.sdotg[0])
                throw std::logic_error("classical_generators: S^D_1 != T^D_2 sdot^D_1");
            for (int k = 2; k <= ell; ++k)
                if (out.Sg[k - 1] != out.Tg[k - 1] * out.sdotg[k - 1])
                    throw std::logic_error("classical_generators: S^D_k != T^D_k sdot^D_k");
            out.outer = S(ell);
            break;
        }
        default: break;
    }

    ThetaInvolution theta(type, ell);
    for (const auto& m : out.Sg)
        if (!theta.fixes(m)) throw std::logic_error("classical_generators: S^G_i not theta-fixed");
    for (const auto& m : out.Tg)
        if (!theta.fixes(m)) throw std::logic_error("classical_generators: T^G_i not theta-fixed");
    for (const auto& m : out.sdotg)
        if (!theta.fixes(m))
            throw std::logic_error("classical_generators: sdot^G_i not theta-fixed");
    if (type == TypeLabel::B && !theta.fixes(out.T0))
        throw std::logic_error("classical_generators: T^B_0 not theta-fixed");
    if (type == TypeLabel::C && !theta.fixes(out.Stilde1))
        throw std::logic_error("classical_generators: Stilde^C_1 not theta-fixed");
    if (type == TypeLabel::D && !theta.fixes(out.outer))
        throw std::logic_error("classical_generators: outer flip not theta-fixed");
    return out;
}

SuiteReport verify_classical_suite(TypeLabel type, int rank, size_t cap, bool run_closures) {
    auto t0 = Clock::now();
    SuiteReport rep;
    rep.suite = "classical";
    rep.type_label = std::string(1, type_char(type));
    rep.rank = rank;

    ClassicalLiftSet lift = classical_generators(type, rank);
    const int ell = rank, n = lift.n;
    const ExactMatrix id = ExactMatrix::identity(n);
    ThetaInvolution theta(type, ell);
    RootDatum datum = build_root_datum(type, rank);
    GlGeneratorSet g = gl_generators(n);

    bool ok = true;
    for (const auto& m : lift.Sg) ok = ok && theta.fixes(m);
    for (const auto& m : lift.Tg) ok = ok && theta.fixes(m);
    for (const auto& m : lift.sdotg) ok = ok && theta.fixes(m);
    rep.require("theta-fixed-generators", ok);

    // Action of theta on the ambient GL generators.
    bool perm_s = true, perm_sdot = true, perm_t = true;
    for (int i = 1; i < n; ++i) {
        ExactMatrix ts = theta.apply(g.S[i - 1]);
        ExactMatrix tdot = theta.apply(g.sdot[i - 1]);
        if (type == TypeLabel::B) {
            perm_s = perm_s && ts == g.Sbar[2 * ell + 1 - i - 1];
            perm_sdot = perm_sdot && tdot == g.sdot[2 * ell + 1 - i - 1];
        } else if (type == TypeLabel::C) {
            perm_s = perm_s && ts == g.Sbar[2 * ell - i - 1];
            perm_sdot = perm_sdot && tdot == g.sdot[2 * ell - i - 1];
        } else {
            if (i == ell) {
                perm_s = perm_s && ts == g.S[ell - 1];
                // theta_D inverts the middle quarter turn (it is its own
                // partner under the diagram flip, up to 2-torsion)
                perm_sdot = perm_sdot && tdot == g.sdot[ell - 1].inverse();
            } else {
                perm_s = perm_s && ts == g.Sbar[2 * ell - i - 1];
                perm_sdot = perm_sdot && tdot == g.sdot[2 * ell - i - 1];
            }
        }
    }
    for (int k = 1; k <= n; ++k) {
        int img = (type == TypeLabel::B) ? 2 * ell + 2 - k : 2 * ell + 1 - k;
        perm_t = perm_t && theta.apply(g.T[k - 1]) == g.T[img - 1];
    }
    rep.require("theta-on-gl-s", perm_s);
    rep.require("theta-on-gl-sdot", perm_sdot);
    rep.require("theta-on-gl-t", perm_t);

    // Identification of the two generator families.
    ok = true;
    if (type == TypeLabel::B) {
        ok = lift.Sg[0] == lift.T0 * lift.sdotg[0];
        for (int k = 2; k <= ell; ++k) ok = ok && lift.Sg[k - 1] == lift.Tg[k - 1] * lift.sdotg[k - 1];
    } else if (type == TypeLabel::C) {
        ok = lift.Sg[0] == lift.sdotg[0];
        for (int k = 2; k <= ell; ++k) ok = ok && lift.Sg[k - 1] == lift.Tg[k - 1] * lift.sdotg[k - 1];
    } else {
        ok = lift.Sg[0] == lift.Tg[1] * lift.sdotg[0];
        for (int k = 2; k <= ell; ++k) ok = ok && lift.Sg[k - 1] == lift.Tg[k - 1] * lift.sdotg[k - 1];
    }
    rep.require("tits-identification", ok);

    // Relation suite.
    if (type == TypeLabel::C) {
        ExactMatrix sq = power(lift.Sg[0], 2);
        rep.require("square-of-s1-is-t1", sq == lift.Tg[0]);
        rep.require("non-split-witness", !(sq == id), "(S^C_1)^2 != Id");
        ok = true;
        for (int k = 2; k <= ell; ++k) ok = ok && power(lift.Sg[k - 1], 2) == id;
        rep.require("higher-squares-identity", ok);
    } else {
        ok = true;
        for (int i = 1; i <= ell; ++i) ok = ok && power(lift.Sg[i - 1], 2) == id;
        rep.require("squares-identity", ok);
    }

    bool comm = true, braid = true;
    for (int i = 1; i <= ell; ++i)
        for (int j = 1; j <= ell; ++j) {
            if (i == j) continue;
            long aij = datum.cartan[i - 1][j - 1], aji = datum.cartan[j - 1][i - 1];
            const ExactMatrix &A = lift.Sg[i - 1], &B = lift.Sg[j - 1];
            if (aij == 0) comm = comm && A * B == B * A;
            else if (aij == -1 && aji == -1) braid = braid && A * B * A == B * A * B;
        }
    rep.require("commuting-pairs", comm);
    rep.require("braid-pairs", braid);
    if ((type == TypeLabel::B || type == TypeLabel::C) && ell >= 2) {
        ExactMatrix ab = lift.Sg[0] * lift.Sg[1];
        ExactMatrix ba = lift.Sg[1] * lift.Sg[0];
        rep.require("fourfold-braid", power(ab, 2) == power(ba, 2),
                    "S1 S2 S1 S2 = S2 S1 S2 S1");
        if (type == TypeLabel::B) {
            rep.require("fourfold-power", power(ab, 4) == id, "(S^B_1 S^B_2)^4 = 1");
        } else {
            // The fourth power of the braid word is not the identity but the
            // central 2-torsion element T^C_1 T^C_2.  This is forced: were it
            // the identity, the generated group could not reach the full Tits
            // order 4^l l!.
            ExactMatrix p4 = power(ab, 4);
            if (p4 == lift.Tg[0] * lift.Tg[1] && !(p4 == id))
                rep.pass("fourfold-power-erratum",
                         "(S^C_1 S^C_2)^4 = T^C_1 T^C_2 != 1");
            else
                rep.fail("fourfold-power-erratum",
                         "unexpected value of (S^C_1 S^C_2)^4: " + p4.str());
        }
    }

    // Projection to the abstract Weyl group.
    ok = true;
    for (int k = 1; k <= ell; ++k) {
        SignedPerm from_matrix = folded_action_of_matrix(type, rank, lift.Sg[k - 1]);
        SignedPerm from_datum = signed_perm_of_simple_reflection(datum, k);
        ok = ok && from_matrix.key() == from_datum.key();
    }
    rep.require("projection-matches-folded-reflection", ok);

    if (run_closures) {
        Integer expected;
        if (type == TypeLabel::C) {
            expected = weyl_order(type, rank);
            for (int k = 0; k < ell; ++k) expected *= 2;  // full Tits group 2^l * |W(C_l)|
        } else {
            expected = weyl_order(type, rank);
        }
        auto c = matrix_closure(lift.Sg, cap);
        rep.require("closure-order", Integer(static_cast<unsigned long>(c.order)) == expected,
                    "order " + std::to_string(c.order) + ", expected " + expected.get_str());
        if (type == TypeLabel::C) {
            std::vector<ExactMatrix> gens;
            gens.push_back(lift.Stilde1);
            for (int k = 2; k <= ell; ++k) gens.push_back(lift.Sg[k - 1]);
            auto ci = matrix_closure(gens, cap);
            bool abelian = true;
            for (const auto& a : ci.elements) {
                for (const auto& b : ci.elements)
                    if (!(a * b == b * a)) { abelian = false; break; }
                if (!abelian) break;
            }
            std::ostringstream detail;
            detail << "order " << ci.order << (abelian ? ", abelian" : ", non-abelian");
            if (abelian) {
                detail << ", invariants:";
                auto factors = abelian_invariant_factors(ci.elements);
                if (factors.empty()) detail << " trivial";
                for (long f : factors) detail << " " << f;
            }
            // No isomorphism type is asserted; the group is reported and its
            // image downstairs is confirmed to land inside the Weyl group.
            auto wgrp = weyl_enumerate(type, rank);
            std::set<std::string> weyl_keys;
            for (const auto& w : wgrp.elements) weyl_keys.insert(w.key());
            bool projects = true;
            for (const auto& g : ci.elements) {
                SignedPerm image = folded_action_of_matrix(type, rank, g);
                projects = projects && weyl_keys.count(image.key()) > 0;
            }
            rep.require("invariant-combination-subgroup", projects, detail.str());
        }
    }

    rep.elapsed_ms = ms_since(t0);
    return rep;
}

long theta_fixed_weyl_order(TypeLabel type, int rank, int max_n) {
    if (type == TypeLabel::A)
        throw std::invalid_argument("theta_fixed_weyl_order: defined for types B, C, D");
    const int n = (type == TypeLabel::B) ? 2 * rank + 1 : 2 * rank;
    if (n > max_n) throw ClosureCapExceeded(static_cast<size_t>(max_n));
    ThetaInvolution theta(type, rank);
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 0);
    long count = 0;
    do {
        ExactMatrix p(n, 1);
        for (int j = 0; j < n; ++j) p.at(w[j], j) = Cyclotomic(1);
        auto parts = monomial_decompose(theta.apply(p));
        if (!parts) throw std::logic_error("theta image of a permutation matrix not monomial");
        bool same = true;
        for (int j = 0; j < n; ++j) same = same && parts->perm[j] == w[j];
        if (same) ++count;
    } while (std::next_permutation(w.begin(), w.end()));
    return count;
}

LiftResult sl_lift(int rank, size_t cap) {
    auto t0 = Clock::now();
    if (rank < 1) throw std::invalid_argument("sl_lift: rank must be >= 1");
    const int n = rank + 1;
    const int conductor = context_conductor(rank);
    LiftResult out;
    out.report.suite = "sl";
    out.report.type_label = "A";
    out.report.rank = rank;

    GlGeneratorSet g = gl_generators(n, conductor);
    Cyclotomic eta = Cyclotomic::zeta(2 * (rank + 1)).promoted(conductor);
    Cyclotomic zeta_center = Cyclotomic::zeta(rank + 1).promoted(conductor);
    for (int i = 1; i <= rank; ++i) out.generators.push_back(g.S[i - 1].scaled(eta));

    bool ok = true;
    for (const auto& s : out.generators) ok = ok && s.det() == Cyclotomic(1);
    out.report.require("determinant-one", ok);

    ExactMatrix center = ExactMatrix::identity(n, conductor).scaled(zeta_center);
    ok = true;
    for (const auto& s : out.generators) ok = ok && power(s, 2) == center;
    out.report.require("square-is-central", ok, "sigma_i^2 = zeta Id");

    Cyclotomic zpow = Cyclotomic::rational_at(rational(1), conductor);
    for (int k = 0; k < rank + 1; ++k) zpow = zpow * zeta_center;
    out.report.require("center-order", zpow == Cyclotomic(1), "zeta^(l+1) = 1");

    bool comm = true, braid = true;
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= rank; ++j) {
            if (i == j) continue;
            const ExactMatrix &A = out.generators[i - 1], &B = out.generators[j - 1];
            if (std::abs(i - j) > 1) comm = comm && A * B == B * A;
            else braid = braid && A * B * A == B * A * B;
        }
    out.report.require("commuting-pairs", comm);
    out.report.require("braid-pairs", braid);

    Integer expected(rank + 1);
    for (int k = 2; k <= rank + 1; ++k) expected *= k;
    auto c = matrix_closure(out.generators, cap);
    out.report.require("closure-order", Integer(static_cast<unsigned long>(c.order)) == expected,
                       "order " + std::to_string(c.order) + ", expected " + expected.get_str());

    out.report.elapsed_ms = ms_since(t0);
    return out;
}

LiftResult so_odd_lift(int rank, size_t cap) {
    auto t0 = Clock::now();
    if (rank < 1) throw std::invalid_argument("so_odd_lift: rank must be >= 1");
    const int n = 2 * rank + 1;
    LiftResult out;
    out.report.suite = "so";
    out.report.type_label = "B";
    out.report.rank = rank;

    ClassicalLiftSet lift = classical_generators(TypeLabel::B, rank);
    ExactMatrix z = -ExactMatrix::identity(n);
    ExactMatrix z_from_torsion = lift.T0;
    for (const auto& t : lift.Tg) z_from_torsion = z_from_torsion * t;
    out.report.require("central-element", z == z_from_torsion,
                       "T^B_0 T^B_1 ... T^B_l = -Id");

    out.generators.push_back(z * lift.Sg[0]);
    for (int k = 2; k <= rank; ++k) out.generators.push_back(lift.Sg[k - 1]);

    bool ok = true;
    for (const auto& s : out.generators) ok = ok && s.det() == Cyclotomic(1);
    out.report.require("determinant-one", ok);

    const ExactMatrix id = ExactMatrix::identity(n);
    out.report.require("sigma1-square", power(out.generators[0], 2) == id);

    RootDatum datum = build_root_datum(TypeLabel::B, rank);
    bool comm = true, braid = true, four = true;
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= rank; ++j) {
            if (i == j) continue;
            long aij = datum.cartan[i - 1][j - 1], aji = datum.cartan[j - 1][i - 1];
            const ExactMatrix &A = out.generators[i - 1], &B = out.generators[j - 1];
            if (aij == 0) comm = comm && A * B == B * A;
            else if (aij == -1 && aji == -1) braid = braid && A * B * A == B * A * B;
            else four = four && power(A * B, 4) == id;
        }
    out.report.require("commuting-pairs", comm);
    out.report.require("braid-pairs", braid);
    if (rank >= 2) out.report.require("fourfold-braid", four);

    Integer expected = weyl_order(TypeLabel::B, rank);
    auto c = matrix_closure(out.generators, cap);
    out.report.require("closure-order", Integer(static_cast<unsigned long>(c.order)) == expected,
                       "order " + std::to_string(c.order) + ", expected " + expected.get_str());

    out.report.elapsed_ms = ms_since(t0);
    return out;
}

OuterRepD outer_rep_D(int rank) {
    auto t0 = Clock::now();
    if (rank < 2) throw std::invalid_argument("outer_rep_D: rank must be >= 2");
    const int n = 2 * rank;
    OuterRepD out;
    out.report.suite = "outer-d";
    out.report.type_label = "D";
    out.report.rank = rank;

    GlGeneratorSet g = gl_generators(n);
    out.rep = g.S[rank - 1];

    out.report.require("determinant", out.rep.det() == Cyclotomic(-1), "det = -1");
    ThetaInvolution theta(TypeLabel::D, rank);
    out.report.require("theta-fixed", theta.fixes(out.rep));
    out.report.require("involution", power(out.rep, 2) == ExactMatrix::identity(n));

    ChevalleySet ch = chevalley_generators(TypeLabel::D, rank);
    ExactMatrix inv = out.rep.inverse();
    bool swaps = out.rep * ch.e[0] * inv == ch.e[1] && out.rep * ch.e[1] * inv == ch.e[0] &&
                 out.rep * ch.f[0] * inv == ch.f[1] && out.rep * ch.f[1] * inv == ch.f[0] &&
                 out.rep * ch.h[0] * inv == ch.h[1] && out.rep * ch.h[1] * inv == ch.h[0];
    out.report.require("swaps-fork-chevalley-generators", swaps);
    bool fixes_rest = true;
    for (int k = 3; k <= rank; ++k)
        fixes_rest = fixes_rest && out.rep * ch.e[k - 1] * inv == ch.e[k - 1] &&
                     out.rep * ch.f[k - 1] * inv == ch.f[k - 1];
    out.report.require("fixes-remaining-generators", fixes_rest);

    out.report.elapsed_ms = ms_since(t0);
    return out;
}

}  // namespace weylift
