#pragma once

#include <vector>

#include "weylift/closure.hpp"
#include "weylift/matrix.hpp"
#include "weylift/report.hpp"
#include "weylift/rootdata.hpp"

namespace weylift {

// Conductor housing i, sqrt(2) and exp(pi*i/(ell+1)) at rank ell.
int context_conductor(int rank);

// The standard generators of the Weyl and Tits lifts inside GL_n: the
// permutation blocks S_i, their twisted companions Sbar_i, the 2-torsion
// diagonals T_k and the quarter-turn rotations sdot_i (all 1-based: S[i-1]).
struct GlGeneratorSet {
    int n = 0;
    std::vector<ExactMatrix> S;     // ell = n-1 of them
    std::vector<ExactMatrix> Sbar;
    std::vector<ExactMatrix> T;     // n of them
    std::vector<ExactMatrix> sdot;
};

GlGeneratorSet gl_generators(int n, int conductor = 1);

SuiteReport verify_gl_tits_presentation(int n, size_t cap = kDefaultClosureCap);

// The classical lifts: S^G_i together with the torus 2-torsion T^G_i and the
// Tits generators sdot^G_i, built from GL words and checked theta-fixed.
struct ClassicalLiftSet {
    TypeLabel type;
    int rank = 0;
    int n = 0;
    std::vector<ExactMatrix> Sg;      // S^G_1 .. S^G_ell
    std::vector<ExactMatrix> Tg;      // T^G_1 .. T^G_ell
    ExactMatrix T0;                   // type B only: central T^B_0
    std::vector<ExactMatrix> sdotg;   // sdot^G_1 .. sdot^G_ell
    ExactMatrix Stilde1;              // type C only: S_ell * Sbar_ell
    ExactMatrix outer;                // type D only: the diagram flip S_ell
};

ClassicalLiftSet classical_generators(TypeLabel type, int rank);

SuiteReport verify_classical_suite(TypeLabel type, int rank, size_t cap = kDefaultClosureCap,
                                   bool run_closures = true);

// Counts permutations w of S_n whose permutation-matrix lift is sent to a
// monomial matrix with the same underlying permutation by theta_G; equals
// |Aut(Phi_G)| = 2^ell * ell!.
long theta_fixed_weyl_order(TypeLabel type, int rank, int max_n = 8);

struct LiftResult {
    std::vector<ExactMatrix> generators;
    SuiteReport report;
};

// Unimodular lift sigma_i = zeta_{2(ell+1)} S_i in SL_{ell+1}.
LiftResult sl_lift(int rank, size_t cap = kDefaultClosureCap);

// Special-orthogonal lift sigma_1 = -S^B_1, sigma_k = S^B_k in SO_{2ell+1}.
LiftResult so_odd_lift(int rank, size_t cap = kDefaultClosureCap);

// The outer automorphism representative of O_{2ell}: the transposition block
// S_ell, with its determinant, theta-fixedness and Chevalley swap checks.
struct OuterRepD {
    ExactMatrix rep;
    SuiteReport report;
};
OuterRepD outer_rep_D(int rank);

ClosureResult<ExactMatrix> matrix_closure(const std::vector<ExactMatrix>& gens, size_t cap,
                                          bool track_words = false);

}  // namespace weylift
