#include "rbq/lsq.hpp"

#include <Eigen/SVD>
#include <limits>
#include <stdexcept>

namespace rbq {

RealMatrix StackedSystem::stacked() const {
    if (q1.cols() != q2.cols() && q2.size() != 0)
        throw std::invalid_argument("StackedSystem: Q1/Q2 column counts differ");
    RealMatrix s(q1.rows() + q2.rows(), q1.cols());
    s.topRows(q1.rows()) = q1;
    s.bottomRows(q2.rows()) = q2;
    return s;
}

namespace {

double rank_cutoff(const RealMatrix& a, double sigma_max) {
    return static_cast<double>(std::max(a.rows(), a.cols())) *
           std::numeric_limits<double>::epsilon() * sigma_max;
}

} // namespace

RealMatrix pinv(const RealMatrix& a) {
    if (a.size() == 0) return RealMatrix::Zero(a.cols(), a.rows());
    Eigen::JacobiSVD<RealMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return RealMatrix::Zero(a.cols(), a.rows());
    const double cutoff = rank_cutoff(a, sv(0));
    RealVector inv = RealVector::Zero(sv.size());
    for (Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) inv(i) = 1.0 / sv(i);
    return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

RealMatrix pinv_with_rank(const RealMatrix& a, Index rank) {
    if (a.size() == 0) return RealMatrix::Zero(a.cols(), a.rows());
    Eigen::JacobiSVD<RealMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    RealVector inv = RealVector::Zero(sv.size());
    for (Index i = 0; i < std::min<Index>(rank, sv.size()); ++i)
        if (sv(i) > 0.0) inv(i) = 1.0 / sv(i);
    return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

Index numerical_rank(const RealMatrix& a) {
    if (a.size() == 0) return 0;
    Eigen::JacobiSVD<RealMatrix> svd(a);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    const double cutoff = rank_cutoff(a, sv(0));
    Index r = 0;
    for (Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++r;
    return r;
}

PartitionedFactors partitioned_factors(const RealMatrix& q1, const RealMatrix& q2) {
    if (q2.size() != 0 && q1.cols() != q2.cols())
        throw std::invalid_argument("partitioned_factors: column counts differ");
    const Index p = q1.cols();
    const Index b = q2.rows();

    PartitionedFactors f;
    f.q1_pinv = pinv(q1);

    if (b == 0) {
        f.r = RealMatrix::Zero(p, 0);
        f.r_pinv = RealMatrix::Zero(0, p);
        f.z = RealMatrix::Zero(0, 0);
        f.h = RealMatrix::Zero(0, p);
        f.pseudoinverse = f.q1_pinv;
        f.projector = RealMatrix::Identity(p, p) - f.q1_pinv * q1;
        f.stack_rank = numerical_rank(q1);
        return f;
    }

    RealMatrix stack(q1.rows() + b, p);
    stack.topRows(q1.rows()) = q1;
    stack.bottomRows(b) = q2;
    f.stack_rank = numerical_rank(stack);

    const RealMatrix q1p_q1 = f.q1_pinv * q1;
    f.r = (RealMatrix::Identity(p, p) - q1p_q1) * q2.transpose();
    // exact: rank(R) = rank(stack) - rank(Q1); pinning it discards the
    // rounding-level directions that remain when R is analytically zero
    f.r_pinv = pinv_with_rank(f.r, f.stack_rank - numerical_rank(q1));

    const RealMatrix i_rr = RealMatrix::Identity(b, b) - f.r_pinv * f.r;
    const RealMatrix g = q2 * f.q1_pinv * f.q1_pinv.transpose(); // b x p
    f.z = (RealMatrix::Identity(b, b) + i_rr * g * q2.transpose() * i_rr)
              .partialPivLu()
              .solve(RealMatrix::Identity(b, b));
    f.h = f.r_pinv + i_rr * f.z * g * (RealMatrix::Identity(p, p) - q2.transpose() * f.r_pinv);

    f.pseudoinverse.resize(p, q1.rows() + b);
    f.pseudoinverse.leftCols(q1.rows()) = f.q1_pinv - f.h.transpose() * q2 * f.q1_pinv;
    f.pseudoinverse.rightCols(b) = f.h.transpose();

    f.projector = RealMatrix::Identity(p, p) - q1p_q1 - f.r * f.r_pinv;
    return f;
}

RealVector solve_min_norm(const StackedSystem& sys) {
    if (sys.e.size() != sys.q1.rows() + sys.q2.rows())
        throw std::invalid_argument("solve_min_norm: right-hand side length mismatch");
    return partitioned_factors(sys.q1, sys.q2).pseudoinverse * sys.e;
}

RealVector general_solution(const StackedSystem& sys, const RealVector& y) {
    if (sys.e.size() != sys.q1.rows() + sys.q2.rows())
        throw std::invalid_argument("general_solution: right-hand side length mismatch");
    if (y.size() != sys.params())
        throw std::invalid_argument("general_solution: y length mismatch");
    PartitionedFactors f = partitioned_factors(sys.q1, sys.q2);
    return f.pseudoinverse * sys.e + f.projector * y;
}

bool is_consistent(const StackedSystem& sys, double tol) {
    if (tol <= 0) throw std::invalid_argument("is_consistent: tol must be positive");
    if (sys.e.size() != sys.q1.rows() + sys.q2.rows())
        throw std::invalid_argument("is_consistent: right-hand side length mismatch");
    PartitionedFactors f = partitioned_factors(sys.q1, sys.q2);
    RealMatrix stack = sys.stacked();
    double residual = (stack * (f.pseudoinverse * sys.e) - sys.e).norm();
    return residual <= tol * std::max(1.0, sys.e.norm());
}

bool is_unique(const StackedSystem& sys, double tol) {
    if (tol <= 0) throw std::invalid_argument("is_unique: tol must be positive");
    RealMatrix stack = sys.stacked();
    Eigen::JacobiSVD<RealMatrix> svd(stack);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return sys.params() == 0;
    Index r = 0;
    for (Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol * sv(0)) ++r;
    return r == sys.params();
}

} // namespace rbq
