#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "weylift/closure.hpp"
#include "weylift/matrix.hpp"
#include "weylift/report.hpp"

namespace weylift {

// Element of the Clifford algebra C(V) of positive-definite R^n, stored as
// a sparse table from canonical ascending basis monomials (subsets of the
// orthonormal basis, encoded as bitmasks) to scalars.  e_i^2 = 1.
class CliffordElement {
public:
    CliffordElement() : n_(0) {}
    explicit CliffordElement(int n) : n_(n) {}

    static CliffordElement scalar(int n, const Cyclotomic& c);
    static CliffordElement basis_vector(int n, int k);  // 1-based index

    int dim() const { return n_; }
    const std::map<uint32_t, Cyclotomic>& terms() const { return terms_; }
    void add_term(uint32_t subset, const Cyclotomic& c);

    bool is_zero() const { return terms_.empty(); }
    bool is_scalar() const;
    Cyclotomic scalar_part() const;
    // All monomials of even degree (the Spin condition).
    bool is_even() const;

    CliffordElement operator+(const CliffordElement& o) const;
    CliffordElement operator-(const CliffordElement& o) const;
    CliffordElement operator-() const;
    CliffordElement operator*(const CliffordElement& o) const;
    CliffordElement scaled(const Cyclotomic& c) const;
    bool operator==(const CliffordElement& o) const;
    bool operator!=(const CliffordElement& o) const { return !(*this == o); }

    // Grade involution alpha, transposition anti-automorphism, and their
    // composite bar = alpha . transpose.
    CliffordElement grade_involution() const;
    CliffordElement transpose_anti() const;
    CliffordElement bar() const;

    // Inverse for elements with scalar x * bar(x); throws otherwise.
    CliffordElement inverse() const;

    // All coefficients lifted into the given conductor (for canonical keys).
    CliffordElement promoted(int conductor) const;
    int conductor_lcm() const;

    std::string key() const;
    std::string str() const;

private:
    int n_;
    std::map<uint32_t, Cyclotomic> terms_;  // zero coefficients never stored
};

struct StructureMaps {
    CliffordElement alpha;
    CliffordElement transpose;
    CliffordElement bar;
    std::optional<Cyclotomic> norm;  // empty when x * bar(x) is not scalar
};
StructureMaps structure_maps(const CliffordElement& x);

// Matrix of v -> x v alpha(x)^{-1} on V in the orthonormal basis; throws if
// the action does not preserve V or is not orthogonal.
ExactMatrix pin_action_matrix(const CliffordElement& x);

// The reflection lifts T_k = e_k and S_i = (e_i - e_{i+1})/sqrt(2); their
// defining sign relations are asserted on construction.
struct PinGeneratorSet {
    int n = 0;
    std::vector<CliffordElement> T;  // n of them
    std::vector<CliffordElement> S;  // n-1 of them
};
PinGeneratorSet pin_generators(int n);

struct PinLiftResult {
    std::vector<CliffordElement> generators;
    SuiteReport report;
};

// Largest ambient dimension the Pin/Spin section builders accept by default;
// beyond it the closures outgrow desk scale.
constexpr int kCliffordDimensionCap = 11;

// Central extensions of W(B_ell) inside Pin(2*ell+1) and of W(D_ell) inside
// Pin(2*ell), with the full sign-relation suites and closure orders.
PinLiftResult pin_weyl_lift(TypeLabel type, int rank, size_t cap = kDefaultClosureCap,
                            int max_dim = kCliffordDimensionCap);

// The Spin_{2*ell+1} lift: the first generator corrected by the pseudoscalar.
PinLiftResult spin_lift_B(int rank, size_t cap = kDefaultClosureCap,
                          int max_dim = kCliffordDimensionCap);

ClosureResult<CliffordElement> clifford_closure(const std::vector<CliffordElement>& gens,
                                                size_t cap);

}  // namespace weylift
