#ifndef RBQ_LSQ_HPP
#define RBQ_LSQ_HPP

#include "rbq/matrix.hpp"

namespace rbq {

/// Real system [Q1; Q2] x = e. Q1 and Q2 share the column count; the first
/// Q1.rows() entries of e belong to Q1.
struct StackedSystem {
    RealMatrix q1;
    RealMatrix q2;
    RealVector e;

    Index params() const { return q1.cols(); }
    RealMatrix stacked() const;
};

/// Moore-Penrose pseudoinverse by SVD with rank cutoff
/// max(dims) * machine_epsilon * sigma_max.
RealMatrix pinv(const RealMatrix& a);

/// Pseudoinverse with the retained rank forced explicitly (the largest
/// `rank` singular directions are inverted, the rest dropped).
RealMatrix pinv_with_rank(const RealMatrix& a, Index rank);

/// Numerical rank at the pinv cutoff.
Index numerical_rank(const RealMatrix& a);

/// Block factors for the pseudoinverse of a stacked matrix [Q1; Q2]:
///   r        = (I - Q1p Q1) Q2^T
///   z        = (I + (I - Rp R) Q2 Q1p Q1p^T Q2^T (I - Rp R))^{-1}
///   h        = Rp + (I - Rp R) Z Q2 Q1p Q1p^T (I - Q2^T Rp)
///   assembled pseudoinverse = [Q1p - H^T Q2 Q1p, H^T]
///   projector = I - Q1p Q1 - R Rp   (onto the nullspace of the stack)
/// The rank of R is pinned to rank([Q1;Q2]) - rank(Q1), which holds exactly
/// and keeps Rp finite when R vanishes up to rounding.
struct PartitionedFactors {
    RealMatrix q1_pinv;
    RealMatrix r;
    RealMatrix r_pinv;
    RealMatrix z;
    RealMatrix h;
    RealMatrix pseudoinverse;
    RealMatrix projector;
    Index stack_rank = 0;
};

PartitionedFactors partitioned_factors(const RealMatrix& q1, const RealMatrix& q2);

/// Least-squares solution of minimum 2-norm, x = pseudoinverse * e.
RealVector solve_min_norm(const StackedSystem& sys);

/// Min-norm solution plus the nullspace offset projector * y; every choice
/// of y attains the same residual.
RealVector general_solution(const StackedSystem& sys, const RealVector& y);

/// ||stack stack^+ e - e|| <= tol * max(1, ||e||).
bool is_consistent(const StackedSystem& sys, double tol = 1e-10);

/// Numerical rank of the stack equals the parameter count.
bool is_unique(const StackedSystem& sys, double tol = 1e-10);

} // namespace rbq

#endif
