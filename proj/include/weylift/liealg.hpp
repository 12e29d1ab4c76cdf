#pragma once

#include <vector>

#include "weylift/matrix.hpp"
#include "weylift/report.hpp"
#include "weylift/rootdata.hpp"

namespace weylift {

// Chevalley generators of the classical Lie algebras in their standard
// faithful matrix representations (1-based: e[i-1] is e_i), together with
// the coweight matrices and the compact combinations J, P, H.
struct ChevalleySet {
    TypeLabel type;
    int rank = 0;
    int n = 0;
    std::vector<ExactMatrix> e, f, h;
    std::vector<ExactMatrix> coweight;  // varpi_i^vee as matrices
    std::vector<ExactMatrix> J, P, H;   // J = f - e, P = i(e + f), H = i h
};

ChevalleySet chevalley_generators(TypeLabel type, int rank);

// Chevalley relations, Serre relations, the coweight presentation and the
// compact-triple brackets, all as exact matrix identities.
SuiteReport verify_serre(TypeLabel type, int rank);

// exp((pi/2) J_i) in closed form.  J_i cubes to -J_i (simply-laced columns)
// or to -4 J_i (the short type-B node); anything else is a representation
// bug and throws.
ExactMatrix exp_quarter_J(TypeLabel type, int rank, int i);

// Dimension of the fixed subspace of X -> -S_G X^tau S_G^{-1} inside gl_n.
int theta_fixed_dimension(TypeLabel type, int rank);

// The adjoint action of the lifted reflections S^G_i on the Chevalley
// generators, compared cell by cell against the closed-form tables; exact
// conjugation is the ground truth and any table mismatch is reported with
// both matrices.
SuiteReport verify_adjoint_suite(TypeLabel type, int rank);

}  // namespace weylift
