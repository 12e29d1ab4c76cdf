#include "weylift/rootdata.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace weylift {

namespace {

Rational dot(const RationalVec& a, const RationalVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational s(0);
    for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

RationalVec unit(int dim, int k) {
    RationalVec v(dim, rational(0));
    v[k] = rational(1);
    return v;
}

void check_rank(TypeLabel type, int rank) {
    int min_rank = (type == TypeLabel::D) ? 2 : 1;
    if (rank < min_rank)
        throw std::invalid_argument(std::string("rank below the minimum for type ") +
                                    type_char(type));
}

std::vector<RationalVec> invert_rational(const std::vector<RationalVec>& m) {
    const int n = static_cast<int>(m.size());
    std::vector<RationalVec> a = m;
    std::vector<RationalVec> inv(n, RationalVec(n, rational(0)));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (sgn(a[r][col]) != 0) { pivot = r; break; }
        if (pivot < 0) throw std::domain_error("invert: singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        Rational f = 1 / a[col][col];
        for (int j = 0; j < n; ++j) { a[col][j] *= f; inv[col][j] *= f; }
        for (int r = 0; r < n; ++r) {
            if (r == col || sgn(a[r][col]) == 0) continue;
            Rational g = a[r][col];
            for (int j = 0; j < n; ++j) { a[r][j] -= g * a[col][j]; inv[r][j] -= g * inv[col][j]; }
        }
    }
    return inv;
}

}  // namespace

RootDatum build_root_datum(TypeLabel type, int rank) {
    check_rank(type, rank);
    RootDatum d;
    d.type = type;
    d.rank = rank;
    d.ambient_dim = (type == TypeLabel::A) ? rank + 1 : rank;
    const int ell = rank, n = d.ambient_dim;

    switch (type) {
        case TypeLabel::A:
            for (int i = 1; i <= ell; ++i) {
                RationalVec a(n, rational(0));
                a[i - 1] = 1;
                a[i] = -1;
                d.simple_roots.push_back(a);
                d.simple_coroots.push_back(a);
                // traceless fundamental (co)weights of sl_{ell+1}
                RationalVec w(n, rational(-i, ell + 1));
                for (int k = 0; k < i; ++k) w[k] += 1;
                d.fundamental_weights.push_back(w);
                d.fundamental_coweights.push_back(w);
            }
            break;
        case TypeLabel::B:
            for (int k = 1; k <= ell; ++k) {
                RationalVec a(n, rational(0)), av(n, rational(0));
                if (k == 1) {
                    a[0] = 1;            // alpha_1 = eps_1
                    av[0] = 2;           // alpha_1^vee = 2 eps_1
                } else {
                    a[k - 1] = 1; a[k - 2] = -1;
                    av = a;
                }
                d.simple_roots.push_back(a);
                d.simple_coroots.push_back(av);
                RationalVec w(n, rational(0)), wv(n, rational(0));
                for (int j = k - 1; j < n; ++j) { w[j] = 1; wv[j] = 1; }
                if (k == 1)
                    for (auto& x : w) x /= 2;  // varpi_1 = (eps_1 + ... + eps_ell)/2
                d.fundamental_weights.push_back(w);
                d.fundamental_coweights.push_back(wv);
            }
            break;
        case TypeLabel::C:
            for (int k = 1; k <= ell; ++k) {
                RationalVec a(n, rational(0)), av(n, rational(0));
                if (k == 1) {
                    a[0] = 2;            // alpha_1 = 2 eps_1
                    av[0] = 1;
                } else {
                    a[k - 1] = 1; a[k - 2] = -1;
                    av = a;
                }
                d.simple_roots.push_back(a);
                d.simple_coroots.push_back(av);
                RationalVec w(n, rational(0)), wv(n, rational(0));
                for (int j = k - 1; j < n; ++j) { w[j] = 1; wv[j] = 1; }
                if (k == 1)
                    for (auto& x : wv) x /= 2;  // varpi_1^vee = (eps_1 + ... + eps_ell)/2
                d.fundamental_weights.push_back(w);
                d.fundamental_coweights.push_back(wv);
            }
            break;
        case TypeLabel::D:
            for (int k = 1; k <= ell; ++k) {
                RationalVec a(n, rational(0));
                if (k == 1) {
                    a[0] = 1; a[1] = 1;  // alpha_1 = eps_1 + eps_2
                } else {
                    a[k - 1] = 1; a[k - 2] = -1;
                }
                d.simple_roots.push_back(a);
                d.simple_coroots.push_back(a);
                RationalVec w(n, rational(0));
                if (k <= 2) {
                    for (int j = 0; j < n; ++j) w[j] = rational(1, 2);
                    if (k == 2) w[0] = rational(-1, 2);
                } else {
                    for (int j = k - 1; j < n; ++j) w[j] = 1;
                }
                d.fundamental_weights.push_back(w);
                d.fundamental_coweights.push_back(w);
            }
            break;
    }

    d.cartan.assign(ell, std::vector<long>(ell, 0));
    std::vector<RationalVec> cartan_q(ell, RationalVec(ell, rational(0)));
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < ell; ++j) {
            Rational a = dot(d.simple_roots[j], d.simple_coroots[i]);
            if (a.get_den() != 1) throw std::logic_error("cartan entry not integral");
            d.cartan[i][j] = static_cast<long>(a.get_num().get_si());
            cartan_q[i][j] = a;
        }
    d.inverse_cartan = invert_rational(cartan_q);
    return d;
}

std::vector<RationalVec> generate_root_system(const RootDatum& datum) {
    auto key = [](const RationalVec& v) {
        std::string s;
        for (const auto& x : v) s += x.get_str() + ",";
        return s;
    };
    std::map<std::string, RationalVec> seen;
    std::vector<RationalVec> frontier = datum.simple_roots;
    for (const auto& r : frontier) seen.emplace(key(r), r);
    while (!frontier.empty()) {
        std::vector<RationalVec> next;
        for (const auto& r : frontier)
            for (int i = 1; i <= datum.rank; ++i) {
                RationalVec s = reflect(datum, i, r);
                if (seen.emplace(key(s), s).second) next.push_back(s);
            }
        frontier = std::move(next);
    }
    std::vector<RationalVec> out;
    out.reserve(seen.size());
    for (auto& [k, v] : seen) out.push_back(std::move(v));
    return out;
}

RationalVec reflect(const RootDatum& datum, int i, const RationalVec& v) {
    if (i < 1 || i > datum.rank) throw std::invalid_argument("reflect: bad simple index");
    if (static_cast<int>(v.size()) != datum.ambient_dim)
        throw std::invalid_argument("reflect: dimension mismatch");
    Rational c = dot(v, datum.simple_coroots[i - 1]);
    RationalVec out = v;
    for (size_t k = 0; k < out.size(); ++k) out[k] -= c * datum.simple_roots[i - 1][k];
    return out;
}

std::vector<Integer> smith_invariants(std::vector<std::vector<Integer>> m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<Integer> inv;
    int s = 0;
    while (s < rows && s < cols) {
        // locate a nonzero entry of minimal absolute value in the corner
        int pi = -1, pj = -1;
        Integer best(0);
        for (int i = s; i < rows; ++i)
            for (int j = s; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                Integer a = abs(m[i][j]);
                if (pi < 0 || a < best) { best = a; pi = i; pj = j; }
            }
        if (pi < 0) break;
        std::swap(m[pi], m[s]);
        for (int i = 0; i < rows; ++i) std::swap(m[i][pj], m[i][s]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = s + 1; i < rows; ++i) {
                if (m[i][s] == 0) continue;
                Integer q = m[i][s] / m[s][s];
                for (int j = s; j < cols; ++j) m[i][j] -= q * m[s][j];
                if (m[i][s] != 0) {  // remainder smaller: swap up and retry
                    std::swap(m[i], m[s]);
                    clean = false;
                }
            }
            for (int j = s + 1; j < cols; ++j) {
                if (m[s][j] == 0) continue;
                Integer q = m[s][j] / m[s][s];
                for (int i = s; i < rows; ++i) m[i][j] -= q * m[i][s];
                if (m[s][j] != 0) {
                    for (int i = 0; i < rows; ++i) std::swap(m[i][j], m[i][s]);
                    clean = false;
                }
            }
        }
        inv.push_back(abs(m[s][s]));
        ++s;
    }
    // enforce the divisibility chain d_1 | d_2 | ...
    for (size_t i = 0; i < inv.size(); ++i)
        for (size_t j = i + 1; j < inv.size(); ++j) {
            Integer g = gcd(inv[i], inv[j]);
            Integer l = inv[i] / g * inv[j];
            inv[i] = g;
            inv[j] = l;
        }
    std::sort(inv.begin(), inv.end());
    return inv;
}

std::vector<Integer> fundamental_group(TypeLabel type, int rank) {
    RootDatum d = build_root_datum(type, rank);
    std::vector<std::vector<Integer>> m(rank, std::vector<Integer>(rank));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j) m[i][j] = d.cartan[i][j];
    std::vector<Integer> inv = smith_invariants(std::move(m));
    std::vector<Integer> out;
    for (const auto& x : inv)
        if (x > 1) out.push_back(x);
    return out;
}

SignedPerm SignedPerm::identity(int m) {
    SignedPerm w;
    w.perm.resize(m);
    w.sign.assign(m, 1);
    for (int i = 0; i < m; ++i) w.perm[i] = i;
    return w;
}

SignedPerm SignedPerm::then(const SignedPerm& o) const {
    SignedPerm out;
    const int m = static_cast<int>(perm.size());
    out.perm.resize(m);
    out.sign.assign(m, 1);
    for (int j = 0; j < m; ++j) {
        int img = o.perm[perm[j]];
        out.perm[j] = img;
        out.sign[img] = sign[perm[j]] * o.sign[img];
    }
    return out;
}

RationalVec SignedPerm::apply(const RationalVec& v) const {
    RationalVec out(v.size(), rational(0));
    for (size_t j = 0; j < v.size(); ++j)
        out[perm[j]] = Rational(sign[perm[j]]) * v[j];
    return out;
}

std::string SignedPerm::key() const {
    std::ostringstream os;
    for (size_t j = 0; j < perm.size(); ++j) os << perm[j] << (sign[perm[j]] < 0 ? "-" : "+");
    return os.str();
}

std::vector<SignedPerm> simple_reflection_perms(TypeLabel type, int rank) {
    check_rank(type, rank);
    RootDatum d = build_root_datum(type, rank);
    std::vector<SignedPerm> out;
    for (int k = 1; k <= rank; ++k) out.push_back(signed_perm_of_simple_reflection(d, k));
    return out;
}

SignedPerm signed_perm_of_simple_reflection(const RootDatum& datum, int k) {
    const int m = datum.ambient_dim;
    SignedPerm w = SignedPerm::identity(m);
    for (int j = 0; j < m; ++j) {
        RationalVec img = reflect(datum, k, unit(m, j));
        int hits = 0;
        for (int i = 0; i < m; ++i) {
            if (sgn(img[i]) == 0) continue;
            ++hits;
            w.perm[j] = i;
            if (img[i] == 1) w.sign[i] = 1;
            else if (img[i] == -1) w.sign[i] = -1;
            else throw std::logic_error("simple reflection is not a signed permutation");
        }
        if (hits != 1) throw std::logic_error("simple reflection is not a signed permutation");
    }
    return w;
}

Integer weyl_order(TypeLabel type, int rank) {
    Integer f(1);
    for (int k = 2; k <= rank; ++k) f *= k;
    Integer two_pow(1);
    for (int k = 0; k < rank; ++k) two_pow *= 2;
    switch (type) {
        case TypeLabel::A: return f * (rank + 1);
        case TypeLabel::B:
        case TypeLabel::C: return f * two_pow;
        case TypeLabel::D: return f * two_pow / 2;
    }
    return 0;
}

ClosureResult<SignedPerm> weyl_enumerate(TypeLabel type, int rank, size_t cap) {
    check_rank(type, rank);
    Integer expected = weyl_order(type, rank);
    if (expected > Integer(static_cast<unsigned long>(cap)))
        throw ClosureCapExceeded(cap);
    auto gens = simple_reflection_perms(type, rank);
    std::vector<std::string> labels;
    for (int k = 1; k <= rank; ++k) labels.push_back("s" + std::to_string(k));
    return group_closure(
        SignedPerm::identity((type == TypeLabel::A) ? rank + 1 : rank), gens, labels, cap,
        [](const SignedPerm& a, const SignedPerm& b) { return a.then(b); },
        [](const SignedPerm& w) { return w.key(); });
}

std::vector<int> embed_in_type_A(TypeLabel type, int rank, int k) {
    check_rank(type, rank);
    if (type == TypeLabel::A)
        throw std::invalid_argument("embed_in_type_A: identity embedding is not meaningful");
    if (k < 1 || k > rank) throw std::invalid_argument("embed_in_type_A: bad simple index");
    const int ell = rank;
    if (k == 1) {
        switch (type) {
            case TypeLabel::B: return {ell, ell + 1, ell};
            case TypeLabel::C: return {ell};
            case TypeLabel::D: return {ell, ell - 1, ell + 1, ell};
            default: break;
        }
    }
    if (type == TypeLabel::B) return {ell + 1 - k, ell + k};
    return {ell + 1 - k, ell - 1 + k};
}

std::vector<int> embed_outer_D(int rank) {
    check_rank(TypeLabel::D, rank);
    return {rank};
}

std::vector<RationalVec> folded_basis(TypeLabel type, int rank) {
    check_rank(type, rank);
    if (type == TypeLabel::A) throw std::invalid_argument("folded_basis: defined for B, C, D");
    const int ell = rank;
    const int n = (type == TypeLabel::B) ? 2 * ell + 1 : 2 * ell;
    std::vector<RationalVec> out;
    for (int k = 1; k <= ell; ++k) {
        RationalVec v(n, rational(0));
        v[ell - k] = 1;  // eps_{ell+1-k}
        if (type == TypeLabel::B) v[ell + k] = -1;      // - eps_{ell+1+k}
        else v[ell + k - 1] = -1;                       // - eps_{ell+k}
        out.push_back(v);
    }
    return out;
}

SignedPerm folded_action_of_word(TypeLabel type, int rank, const std::vector<int>& word) {
    auto basis = folded_basis(type, rank);
    const int n = static_cast<int>(basis[0].size());
    // apply the rightmost reflection first, as for matrices acting on columns
    std::vector<RationalVec> images = basis;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int i = *it;
        if (i < 1 || i >= n) throw std::invalid_argument("word index out of range");
        for (auto& v : images) std::swap(v[i - 1], v[i]);
    }
    SignedPerm w = SignedPerm::identity(rank);
    for (int j = 0; j < rank; ++j) {
        int hits = 0;
        for (int i = 0; i < rank; ++i) {
            RationalVec diff_plus = images[j], diff_minus = images[j];
            for (int t = 0; t < n; ++t) {
                diff_plus[t] -= basis[i][t];
                diff_minus[t] += basis[i][t];
            }
            auto zero = [](const RationalVec& v) {
                return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
            };
            if (zero(diff_plus)) { w.perm[j] = i; w.sign[i] = 1; ++hits; }
            else if (zero(diff_minus)) { w.perm[j] = i; w.sign[i] = -1; ++hits; }
        }
        if (hits != 1)
            throw std::logic_error("word does not act as a signed permutation of the folded basis");
    }
    return w;
}

std::string rootdatum_to_json(const RootDatum& datum, int indent) {
    nlohmann::json j;
    j["type"] = std::string(1, type_char(datum.type));
    j["rank"] = datum.rank;
    j["ambient_dim"] = datum.ambient_dim;
    auto vecs = [](const std::vector<RationalVec>& vs) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& v : vs) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& x : v) row.push_back(x.get_str());
            out.push_back(row);
        }
        return out;
    };
    j["simple_roots"] = vecs(datum.simple_roots);
    j["simple_coroots"] = vecs(datum.simple_coroots);
    j["fundamental_weights"] = vecs(datum.fundamental_weights);
    j["fundamental_coweights"] = vecs(datum.fundamental_coweights);
    j["cartan"] = datum.cartan;
    j["inverse_cartan"] = vecs(datum.inverse_cartan);
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& r : generate_root_system(datum)) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& x : r) row.push_back(x.get_str());
        roots.push_back(row);
    }
    j["roots"] = roots;
    j["root_count"] = roots.size();
    nlohmann::json fg = nlohmann::json::array();
    for (const auto& x : fundamental_group(datum.type, datum.rank)) fg.push_back(x.get_str());
    j["fundamental_group"] = fg;
    j["weyl_order"] = weyl_order(datum.type, datum.rank).get_str();
    return j.dump(indent);
}

}  // namespace weylift
