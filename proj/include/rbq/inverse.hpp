#ifndef RBQ_INVERSE_HPP
#define RBQ_INVERSE_HPP

#include <string>
#include <vector>

#include "rbq/rbme.hpp"

namespace rbq {

/// Partial spectral data: k eigenvalues with their eigenvectors (columns),
/// plus the field the reconstructed matrix lives in.
class EigenData {
public:
    EigenData(ComplexVector lambdas, ComplexMatrix vectors, FieldMask field);

    Index n() const { return vectors_.rows(); }
    Index k() const { return lambdas_.size(); }
    const ComplexVector& lambdas() const { return lambdas_; }
    const ComplexMatrix& vectors() const { return vectors_; }
    FieldMask field() const { return field_; }

private:
    ComplexVector lambdas_;
    ComplexMatrix vectors_;
    FieldMask field_;
};

/// Structured matrix M minimizing ||M Phi - Phi Lambda||_F, min-norm among
/// the minimizers; solved as the single-term equation I * M * Phi = Phi Lambda.
SolveReport pdiep(const EigenData& data, const LStructure& structure,
                  const SolveOptions& opts = {});
SolveReport pdiep(const EigenData& data, StructureKind kind, const SolveOptions& opts = {});

struct PencilSolution {
    bool nontrivial = false;
    RBQMatrix m_left;  // M
    RBQMatrix n_right; // N
    std::vector<double> residuals; // ||M u_i - lambda_i N u_i||_2 per pair
    Index nullspace_dim = 0;
    std::string normalization;
};

/// Structured pencil (M, N) with M u_i = lambda_i N u_i. The equation is
/// homogeneous, so the min-norm solution is zero; instead the solver picks a
/// canonical element of the nullspace of the stacked matrix: the first
/// orthonormal basis vector in the factorization's descending singular-
/// direction order, sign fixed so its first nonzero component is positive,
/// scaled so ||(M, N)||_F = 1. A trivial nullspace is reported via
/// nontrivial = false ("no nontrivial structured pencil").
PencilSolution gpdiep(const EigenData& data, const LStructure& structure,
                      const SolveOptions& opts = {});
PencilSolution gpdiep(const EigenData& data, StructureKind kind, const SolveOptions& opts = {});

/// ||M u_i - lambda_i u_i||_2 per eigenpair.
std::vector<double> pdiep_residuals(const RBQMatrix& m, const EigenData& data);
/// ||M u_i - lambda_i N u_i||_2 per eigenpair.
std::vector<double> pencil_residuals(const RBQMatrix& m, const RBQMatrix& n,
                                     const EigenData& data);

/// Hankel pair (X, Y) minimizing ||A X B + C Y D - E||_F over complex n x n
/// Hankel matrices, min-norm; A, C are m x n, B, D are n x s, E is m x s.
std::pair<ComplexMatrix, ComplexMatrix> solve_complex_hankel_pair(const ComplexMatrix& a,
                                                                  const ComplexMatrix& b,
                                                                  const ComplexMatrix& c,
                                                                  const ComplexMatrix& d,
                                                                  const ComplexMatrix& e);

/// Symmetric Toeplitz pair (X, Y) for the real equation A X B + C Y D = E.
std::pair<RealMatrix, RealMatrix> solve_real_symtoeplitz_pair(const RealMatrix& a,
                                                              const RealMatrix& b,
                                                              const RealMatrix& c,
                                                              const RealMatrix& d,
                                                              const RealMatrix& e);

} // namespace rbq

#endif
