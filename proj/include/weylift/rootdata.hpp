#pragma once

#include <string>
#include <vector>

#include "weylift/closure.hpp"
#include "weylift/matrix.hpp"
#include "weylift/numbers.hpp"

namespace weylift {

using RationalVec = std::vector<Rational>;

// Root datum of a classical type in the coordinates used throughout:
// type A lives in the (ell+1)-dimensional general-linear convention, types
// B, C, D in the ell-dimensional folded basis eps^G_k.
struct RootDatum {
    TypeLabel type;
    int rank = 0;
    int ambient_dim = 0;
    std::vector<RationalVec> simple_roots;
    std::vector<RationalVec> simple_coroots;
    std::vector<RationalVec> fundamental_weights;
    std::vector<RationalVec> fundamental_coweights;
    std::vector<std::vector<long>> cartan;        // a_ij = <alpha_j, alpha_i^vee>
    std::vector<RationalVec> inverse_cartan;      // exact inverse of cartan
};

RootDatum build_root_datum(TypeLabel type, int rank);

// Full root system as the closure of the simple roots under the simple
// reflections.
std::vector<RationalVec> generate_root_system(const RootDatum& datum);

// s_i(v) = v - <v, alpha_i^vee> alpha_i, with 1-based simple index i.
RationalVec reflect(const RootDatum& datum, int i, const RationalVec& v);

// Smith normal form invariants (> 1) of the Cartan matrix: the abelian
// invariants of the weight/root lattice quotient.
std::vector<Integer> fundamental_group(TypeLabel type, int rank);
std::vector<Integer> smith_invariants(std::vector<std::vector<Integer>> m);

// Signed permutation w: eps_j -> sign[w.perm[j]] * eps_{w.perm[j]} (0-based).
// Type A elements carry no signs, type D an even number of -1 signs.
struct SignedPerm {
    std::vector<int> perm;
    std::vector<int> sign;

    static SignedPerm identity(int m);
    // this followed by o (left-to-right composition).
    SignedPerm then(const SignedPerm& o) const;
    RationalVec apply(const RationalVec& v) const;
    std::string key() const;
};

// The simple reflections of the Weyl group as signed permutations of the
// folded basis (type A: plain adjacent transpositions of ell+1 letters).
std::vector<SignedPerm> simple_reflection_perms(TypeLabel type, int rank);

constexpr size_t kWeylEnumerationCap = 1'000'000;

// Every element of the Weyl group, deduplicated, deterministically ordered.
ClosureResult<SignedPerm> weyl_enumerate(TypeLabel type, int rank,
                                         size_t cap = kWeylEnumerationCap);

// Expected group orders (independent of enumeration).
Integer weyl_order(TypeLabel type, int rank);

// The word in type-A simple reflections realizing the k-th simple reflection
// of the folded type (1-based indices into the A_{n-1} generator list).
std::vector<int> embed_in_type_A(TypeLabel type, int rank, int k);
// The outer diagram flip of type D, realized as a single type-A reflection.
std::vector<int> embed_outer_D(int rank);

// Folded basis vectors eps^G_k as vectors in the ambient type-A coordinates
// (dimension 2*ell+1 for B, 2*ell for C and D).
std::vector<RationalVec> folded_basis(TypeLabel type, int rank);

// Signed permutation action of a type-A reflection word on the folded basis;
// used to check the embeddings against the folded root datum.
SignedPerm folded_action_of_word(TypeLabel type, int rank, const std::vector<int>& word);
SignedPerm signed_perm_of_simple_reflection(const RootDatum& datum, int k);

std::string rootdatum_to_json(const RootDatum& datum, int indent = 2);

}  // namespace weylift
