#ifndef RBQ_RBME_HPP
#define RBQ_RBME_HPP

#include <utility>
#include <vector>

#include "rbq/lsq.hpp"
#include "rbq/structure.hpp"

namespace rbq {

struct SolveOptions {
    double tol = 1e-10; // consistency / uniqueness tolerance
};

/// sum_l A_l X_l B_l = E with one structured unknown per term.
struct MultiTermProblem {
    struct Term {
        RBQMatrix a; // m x n_l
        RBQMatrix b; // s_l x t
        LStructure structure; // n_l x s_l
    };
    std::vector<Term> terms;
    RBQMatrix e; // m x t
};

/// sum_l A_l X B_l + sum_p C_p X^T D_p = E with a single structured unknown.
struct TransposeProblem {
    std::vector<std::pair<RBQMatrix, RBQMatrix>> direct_terms;     // (A_l, B_l)
    std::vector<std::pair<RBQMatrix, RBQMatrix>> transpose_terms;  // (C_p, D_p)
    LStructure structure; // n x s
    RBQMatrix e;          // m x t
};

/// (A_1 X B_1, ..., A_r X B_r) = (E_1, ..., E_r), one structured unknown.
struct CoupledProblem {
    struct Equation {
        RBQMatrix a;
        RBQMatrix b;
        RBQMatrix e;
    };
    std::vector<Equation> equations;
    LStructure structure;
};

struct SolveReport {
    std::vector<RBQMatrix> solutions;
    double residual = 0.0; // Frobenius norm of the defining equation
    bool consistent = false;
    bool unique = false;
    RealVector parameters;
    Index nullspace_dim = 0;
};

/// Complex 2mt x p map with S * pack(X) = vec_psi(A X B) for structured X:
/// S = (hrep(B)^T kron A1 + hrep(B*j)^T kron A2) * W * basis.
ComplexMatrix build_term_matrix(const RBQMatrix& a, const RBQMatrix& b, const LStructure& l);

/// Same for a transposed unknown: vec_psi(C X^T D) = N * pack(X).
ComplexMatrix build_transpose_term_matrix(const RBQMatrix& c, const RBQMatrix& d,
                                          const LStructure& l);

StackedSystem assemble_multi(const MultiTermProblem& prob);
StackedSystem assemble_transpose(const TransposeProblem& prob);
StackedSystem assemble_coupled(const CoupledProblem& prob);

SolveReport solve_multi(const MultiTermProblem& prob, const SolveOptions& opts = {});
SolveReport solve_transpose(const TransposeProblem& prob, const SolveOptions& opts = {});
SolveReport solve_coupled(const CoupledProblem& prob, const SolveOptions& opts = {});

} // namespace rbq

#endif
