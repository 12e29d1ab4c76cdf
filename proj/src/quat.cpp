#include "weylift/quat.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

namespace weylift {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

}  // namespace

Quaternion Quaternion::operator+(const Quaternion& o) const {
    return {q0 + o.q0, q1 + o.q1, q2 + o.q2, q3 + o.q3};
}

Quaternion Quaternion::operator-(const Quaternion& o) const {
    return {q0 - o.q0, q1 - o.q1, q2 - o.q2, q3 - o.q3};
}

Quaternion Quaternion::operator-() const { return {-q0, -q1, -q2, -q3}; }

Quaternion Quaternion::operator*(const Quaternion& o) const {
    return {q0 * o.q0 - q1 * o.q1 - q2 * o.q2 - q3 * o.q3,
            q0 * o.q1 + q1 * o.q0 + q2 * o.q3 - q3 * o.q2,
            q0 * o.q2 - q1 * o.q3 + q2 * o.q0 + q3 * o.q1,
            q0 * o.q3 + q1 * o.q2 - q2 * o.q1 + q3 * o.q0};
}

bool Quaternion::operator==(const Quaternion& o) const {
    return q0 == o.q0 && q1 == o.q1 && q2 == o.q2 && q3 == o.q3;
}

Rational Quaternion::norm() const { return q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3; }

bool Quaternion::is_zero() const {
    return sgn(q0) == 0 && sgn(q1) == 0 && sgn(q2) == 0 && sgn(q3) == 0;
}

Quaternion Quaternion::inverse() const {
    if (is_zero()) throw std::domain_error("quaternion inverse: zero");
    Rational n = norm();
    Quaternion c = conj();
    return {c.q0 / n, c.q1 / n, c.q2 / n, c.q3 / n};
}

std::string Quaternion::key() const {
    return q0.get_str() + "," + q1.get_str() + "," + q2.get_str() + "," + q3.get_str();
}

std::string Quaternion::str() const {
    std::ostringstream os;
    os << q0.get_str();
    if (sgn(q1)) os << (sgn(q1) > 0 ? "+" : "") << q1.get_str() << "i";
    if (sgn(q2)) os << (sgn(q2) > 0 ? "+" : "") << q2.get_str() << "j";
    if (sgn(q3)) os << (sgn(q3) > 0 ? "+" : "") << q3.get_str() << "k";
    return os.str();
}

ExactMatrix hat_embedding(const Quaternion& q) {
    const Cyclotomic im = Cyclotomic::imaginary_unit();
    ExactMatrix m(2, 4);
    m.at(0, 0) = Cyclotomic::rational_at(q.q0, 4) + im * Cyclotomic::rational_at(q.q1, 4);
    m.at(0, 1) = Cyclotomic::rational_at(q.q2, 4) + im * Cyclotomic::rational_at(q.q3, 4);
    m.at(1, 0) = Cyclotomic::rational_at(-q.q2, 4) + im * Cyclotomic::rational_at(q.q3, 4);
    m.at(1, 1) = Cyclotomic::rational_at(q.q0, 4) - im * Cyclotomic::rational_at(q.q1, 4);
    return m;
}

ExactMatrix su2_to_so3(const Quaternion& q) {
    if (q.norm() != 1) throw std::invalid_argument("su2_to_so3: quaternion must have norm one");
    ExactMatrix m(3, 1);
    const Quaternion basis[3] = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
    Quaternion qc = q.conj();
    for (int col = 0; col < 3; ++col) {
        Quaternion img = q * basis[col] * qc;
        if (sgn(img.q0) != 0) throw std::logic_error("su2_to_so3: image not purely imaginary");
        m.at(0, col) = Cyclotomic::rational_at(img.q1, 1);
        m.at(1, col) = Cyclotomic::rational_at(img.q2, 1);
        m.at(2, col) = Cyclotomic::rational_at(img.q3, 1);
    }
    return m;
}

std::optional<Quaternion> so3_lift(const ExactMatrix& rotation) {
    if (rotation.dim() != 3) throw std::invalid_argument("so3_lift: need a 3x3 matrix");
    auto entry = [&](int i, int j) {
        if (!rotation.at(i, j).is_rational())
            throw std::invalid_argument("so3_lift: matrix must be rational");
        return rotation.at(i, j).rational_value();
    };
    if (!(rotation.transpose() * rotation == ExactMatrix::identity(3)) ||
        rotation.det() != Cyclotomic(1))
        throw std::invalid_argument("so3_lift: input is not a rotation");

    Rational r[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = entry(i, j);

    // Four trace branches; any rational-square one determines q up to sign.
    std::vector<Quaternion> candidates;
    {
        Rational t = 1 + r[0][0] + r[1][1] + r[2][2];
        if (auto s = rational_sqrt(t / 4); s && sgn(*s) != 0) {
            Rational q0 = *s;
            candidates.push_back({q0, (r[2][1] - r[1][2]) / (4 * q0),
                                  (r[0][2] - r[2][0]) / (4 * q0),
                                  (r[1][0] - r[0][1]) / (4 * q0)});
        }
    }
    {
        Rational t = 1 + r[0][0] - r[1][1] - r[2][2];
        if (auto s = rational_sqrt(t / 4); s && sgn(*s) != 0) {
            Rational q1 = *s;
            candidates.push_back({(r[2][1] - r[1][2]) / (4 * q1), q1,
                                  (r[0][1] + r[1][0]) / (4 * q1),
                                  (r[0][2] + r[2][0]) / (4 * q1)});
        }
    }
    {
        Rational t = 1 - r[0][0] + r[1][1] - r[2][2];
        if (auto s = rational_sqrt(t / 4); s && sgn(*s) != 0) {
            Rational q2 = *s;
            candidates.push_back({(r[0][2] - r[2][0]) / (4 * q2),
                                  (r[0][1] + r[1][0]) / (4 * q2), q2,
                                  (r[1][2] + r[2][1]) / (4 * q2)});
        }
    }
    {
        Rational t = 1 - r[0][0] - r[1][1] + r[2][2];
        if (auto s = rational_sqrt(t / 4); s && sgn(*s) != 0) {
            Rational q3 = *s;
            candidates.push_back({(r[1][0] - r[0][1]) / (4 * q3),
                                  (r[0][2] + r[2][0]) / (4 * q3),
                                  (r[1][2] + r[2][1]) / (4 * q3), q3});
        }
    }
    for (const auto& q : candidates)
        if (q.norm() == 1 && su2_to_so3(q) == rotation) return q;
    return std::nullopt;
}

QuatMatrix QuatMatrix::identity(int m) {
    QuatMatrix out(m);
    for (int i = 0; i < m; ++i) out.at(i, i) = Quaternion::unit();
    return out;
}

QuatMatrix QuatMatrix::permutation(const std::vector<int>& perm) {
    QuatMatrix out(static_cast<int>(perm.size()));
    for (size_t j = 0; j < perm.size(); ++j) out.at(perm[j], static_cast<int>(j)) = Quaternion::unit();
    return out;
}

QuatMatrix QuatMatrix::diagonal(const std::vector<Quaternion>& d) {
    QuatMatrix out(static_cast<int>(d.size()));
    for (size_t i = 0; i < d.size(); ++i) out.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
    return out;
}

QuatMatrix QuatMatrix::operator*(const QuatMatrix& o) const {
    if (m_ != o.m_) throw std::invalid_argument("quat matrix dimension mismatch");
    QuatMatrix out(m_);
    for (int i = 0; i < m_; ++i)
        for (int k = 0; k < m_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (int j = 0; j < m_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                out.at(i, j) = out.at(i, j) + at(i, k) * o.at(k, j);
            }
        }
    return out;
}

bool QuatMatrix::operator==(const QuatMatrix& o) const {
    return m_ == o.m_ && a_ == o.a_;
}

bool QuatMatrix::is_diagonal() const {
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j)
            if (i != j && !at(i, j).is_zero()) return false;
    return true;
}

bool QuatMatrix::is_identity() const {
    for (int i = 0; i < m_; ++i)
        for (int j = 0; j < m_; ++j)
            if (!(at(i, j) == (i == j ? Quaternion::unit() : Quaternion()))) return false;
    return true;
}

QuatMatrix QuatMatrix::inverse() const {
    QuatMatrix a = *this;
    QuatMatrix inv = identity(m_);
    for (int col = 0; col < m_; ++col) {
        int pivot = -1;
        for (int r = col; r < m_; ++r)
            if (!a.at(r, col).is_zero()) { pivot = r; break; }
        if (pivot < 0) throw std::domain_error("quat matrix inverse: singular");
        if (pivot != col)
            for (int j = 0; j < m_; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        Quaternion f = a.at(col, col).inverse();
        for (int j = 0; j < m_; ++j) {  // left multiply the row
            a.at(col, j) = f * a.at(col, j);
            inv.at(col, j) = f * inv.at(col, j);
        }
        for (int r = 0; r < m_; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            Quaternion g = a.at(r, col);
            for (int j = 0; j < m_; ++j) {
                a.at(r, j) = a.at(r, j) - g * a.at(col, j);
                inv.at(r, j) = inv.at(r, j) - g * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::string QuatMatrix::key() const {
    std::ostringstream os;
    os << m_ << '#';
    for (const auto& q : a_) os << q.key() << ';';
    return os.str();
}

SuiteReport quat_conj_complex_check(int samples) {
    auto t0 = Clock::now();
    SuiteReport rep;
    rep.suite = "quat-complex";

    const Quaternion j = Quaternion::j(), i = Quaternion::i();
    auto complex_q = [](const Rational& a, const Rational& b) {
        return Quaternion{a, b, 0, 0};
    };

    std::mt19937 rng(20240911);
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 7);
    bool conj_ok = true, fix_ok = true;
    std::vector<Quaternion> zs = {complex_q(0, 1), complex_q(1, 0),
                                  complex_q(rational(3, 5), rational(4, 5))};
    for (int t = 0; t < samples; ++t)
        zs.push_back(complex_q(rational(num(rng), den(rng)), rational(num(rng), den(rng))));
    for (const auto& z : zs) {
        conj_ok = conj_ok && j * z * j.inverse() == z.conj();
        fix_ok = fix_ok && i * z * i.inverse() == z;
    }
    rep.require("j-conjugation-is-complex-conjugation", conj_ok, "j z j^-1 = conj(z)");
    rep.require("i-centralizes-complex-line", fix_ok);

    // Elements of C* and C* j normalize C, acting trivially resp. by
    // conjugation: the two components of the complex-linear automorphisms.
    bool comp_ok = true;
    for (const auto& z : zs) {
        if (z.is_zero()) continue;
        Quaternion w = complex_q(rational(2, 3), rational(-1, 4));
        Quaternion g = z * j;  // element of C* j
        comp_ok = comp_ok && g * w * g.inverse() == w.conj();
    }
    rep.require("twisted-component-conjugates", comp_ok);

    rep.elapsed_ms = ms_since(t0);
    return rep;
}

SuiteReport quat_basics(int samples) {
    auto t0 = Clock::now();
    SuiteReport rep;
    rep.suite = "quat-basics";

    const Quaternion i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
    rep.require("defining-relations",
                i * i == -Quaternion::unit() && j * j == -Quaternion::unit() &&
                    k * k == -Quaternion::unit() && i * j == k && j * k == i && k * i == j);

    ExactMatrix rot_j = su2_to_so3(j);
    ExactMatrix want(3, 1);
    want.at(0, 0) = Cyclotomic(-1);
    want.at(1, 1) = Cyclotomic(1);
    want.at(2, 2) = Cyclotomic(-1);
    rep.require("j-rotation", rot_j == want, "Ad_j = diag(-1, 1, -1)");

    auto lift = so3_lift(want);
    rep.require("j-rotation-lift", lift && (*lift == j || *lift == -j) &&
                                       *lift * *lift == -Quaternion::unit(),
                "lift is +-j and squares to -1");

    ExactMatrix rot_k(3, 1);
    rot_k.at(0, 0) = Cyclotomic(-1);
    rot_k.at(1, 1) = Cyclotomic(-1);
    rot_k.at(2, 2) = Cyclotomic(1);
    auto lift_k = so3_lift(rot_k);
    rep.require("k-rotation-lift", lift_k && (*lift_k == k || *lift_k == -k));

    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    bool det_ok = true, mult_ok = true, hom_ok = true;
    for (int t = 0; t < samples; ++t) {
        Quaternion a{rational(num(rng), den(rng)), rational(num(rng), den(rng)),
                     rational(num(rng), den(rng)), rational(num(rng), den(rng))};
        Quaternion b{rational(num(rng), den(rng)), rational(num(rng), den(rng)),
                     rational(num(rng), den(rng)), rational(num(rng), den(rng))};
        det_ok = det_ok && hat_embedding(a).det() == Cyclotomic::rational_at(a.norm(), 4);
        mult_ok = mult_ok && (a * b).norm() == a.norm() * b.norm();
        hom_ok = hom_ok && hat_embedding(a * b) == hat_embedding(a) * hat_embedding(b);
    }
    rep.require("hat-determinant-is-norm", det_ok, std::to_string(samples) + " random samples");
    rep.require("norm-multiplicative", mult_ok);
    rep.require("hat-is-homomorphism", hom_ok);

    rep.elapsed_ms = ms_since(t0);
    return rep;
}

QuatClosureResult quat_weyl_closure(int m, size_t cap) {
    auto t0 = Clock::now();
    if (m < 1 || m > 3) throw std::invalid_argument("quat_weyl_closure: m must be 1..3");
    QuatClosureResult out;
    out.report.suite = "quat";
    out.report.rank = m;

    std::vector<QuatMatrix> gens;
    std::vector<std::string> labels;
    for (int i = 0; i + 1 < m; ++i) {
        std::vector<int> p(m);
        for (int t = 0; t < m; ++t) p[t] = t;
        std::swap(p[i], p[i + 1]);
        gens.push_back(QuatMatrix::permutation(p));
        labels.push_back("s" + std::to_string(i + 1));
    }
    for (int t = 0; t < m; ++t) {
        std::vector<Quaternion> d(m, Quaternion::unit());
        d[t] = Quaternion::j();
        gens.push_back(QuatMatrix::diagonal(d));
        labels.push_back("j" + std::to_string(t + 1));
    }

    out.closure = group_closure(
        QuatMatrix::identity(m), gens, labels, cap,
        [](const QuatMatrix& a, const QuatMatrix& b) { return a * b; },
        [](const QuatMatrix& g) { return g.key(); });
    out.report.pass("closure-order", "order " + std::to_string(out.closure.order));

    // -Id realizes the nontrivial central element.
    bool has_minus = false;
    std::vector<Quaternion> minus_d(m, -Quaternion::unit());
    QuatMatrix minus = QuatMatrix::diagonal(minus_d);
    for (const auto& g : out.closure.elements) has_minus = has_minus || g == minus;
    out.report.require("contains-minus-identity", has_minus);

    // The quotient by the diagonal kernel is the hyperoctahedral group.
    std::set<std::string> images;
    bool monomial_ok = true;
    for (const auto& g : out.closure.elements) {
        std::ostringstream img;
        for (int jcol = 0; jcol < m; ++jcol) {
            int hit = -1;
            for (int irow = 0; irow < m; ++irow)
                if (!g.at(irow, jcol).is_zero()) {
                    if (hit >= 0) { monomial_ok = false; break; }
                    hit = irow;
                }
            if (hit < 0) { monomial_ok = false; break; }
            const Quaternion& q = g.at(hit, jcol);
            bool flip = sgn(q.q2) != 0 || sgn(q.q3) != 0;  // in {+-j}: a sign flip downstairs
            img << hit << (flip ? '-' : '+');
        }
        images.insert(img.str());
    }
    Integer expected_w(1);
    for (int k = 2; k <= m; ++k) expected_w *= k;
    for (int k = 0; k < m; ++k) expected_w *= 2;
    out.report.require("elements-are-monomial", monomial_ok);
    out.report.require("image-is-hyperoctahedral",
                       Integer(static_cast<unsigned long>(images.size())) == expected_w,
                       "image order " + std::to_string(images.size()) + ", expected " +
                           expected_w.get_str());

    if (m == 1) {
        out.report.require("rank-one-cyclic-four", out.closure.order == 4,
                           "closure of {j} is Z/4: the non-split extension witness");
        bool expected_elems = true;
        std::vector<Quaternion> want = {Quaternion::unit(), -Quaternion::unit(),
                                        Quaternion::j(), -Quaternion::j()};
        for (const auto& w : want) {
            bool found = false;
            for (const auto& g : out.closure.elements) found = found || g.at(0, 0) == w;
            expected_elems = expected_elems && found;
        }
        out.report.require("rank-one-elements", expected_elems, "{1, -1, j, -j}");
    }

    out.report.elapsed_ms = ms_since(t0);
    return out;
}

SuiteReport monomial_normalizer_check(int m, int trials) {
    auto t0 = Clock::now();
    if (m < 1 || m > 3) throw std::invalid_argument("monomial_normalizer_check: m must be 1..3");
    SuiteReport rep;
    rep.suite = "quat-normalizer";
    rep.rank = m;

    std::mt19937 rng(777);
    std::uniform_int_distribution<int> coef(-3, 3);
    auto random_unit_free = [&]() {
        Quaternion q;
        do {
            q = Quaternion{rational(coef(rng)), rational(coef(rng)), rational(coef(rng)),
                           rational(coef(rng))};
        } while (q.is_zero());
        return q;
    };

    bool forward = true;
    for (int t = 0; t < trials; ++t) {
        std::vector<int> p(m);
        for (int i = 0; i < m; ++i) p[i] = i;
        std::shuffle(p.begin(), p.end(), rng);
        QuatMatrix mono = QuatMatrix::permutation(p);
        std::vector<Quaternion> scale(m);
        for (int i = 0; i < m; ++i) scale[i] = random_unit_free();
        mono = QuatMatrix::diagonal(scale) * mono;
        std::vector<Quaternion> d(m);
        for (int i = 0; i < m; ++i) d[i] = random_unit_free();
        QuatMatrix conj = mono * QuatMatrix::diagonal(d) * mono.inverse();
        forward = forward && conj.is_diagonal();
    }
    rep.require("monomial-conjugates-diagonal-to-diagonal", forward,
                std::to_string(trials) + " random trials");

    if (m >= 2) {
        bool witness_found = true;
        std::vector<QuatMatrix> bad;
        {
            QuatMatrix u = QuatMatrix::identity(m);
            u.at(0, 1) = Quaternion::unit();  // unipotent
            bad.push_back(u);
            QuatMatrix v = QuatMatrix::identity(m);
            v.at(0, 0) = Quaternion::unit();
            v.at(0, 1) = Quaternion::i();
            v.at(1, 0) = Quaternion::j();
            v.at(1, 1) = Quaternion::unit();  // dense invertible block
            bad.push_back(v);
        }
        for (const auto& g : bad) {
            bool found = false;
            for (int slot = 0; slot < m && !found; ++slot) {
                std::vector<Quaternion> d(m, Quaternion::unit());
                d[slot] = Quaternion::i();
                QuatMatrix conj = g * QuatMatrix::diagonal(d) * g.inverse();
                found = !conj.is_diagonal();
            }
            witness_found = witness_found && found;
        }
        rep.require("non-monomial-witness-moves-diagonal", witness_found);
    }

    rep.elapsed_ms = ms_since(t0);
    return rep;
}

}  // namespace weylift
