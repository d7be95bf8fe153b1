#include "rbq/inverse.hpp"

#include <Eigen/SVD>
#include <sstream>
#include <stdexcept>

#include "rbq/vectorize.hpp"

namespace rbq {

EigenData::EigenData(ComplexVector lambdas, ComplexMatrix vectors, FieldMask field)
    : lambdas_(std::move(lambdas)), vectors_(std::move(vectors)), field_(field) {
    if (lambdas_.size() < 1) throw std::invalid_argument("EigenData: need at least one eigenpair");
    if (vectors_.cols() != lambdas_.size())
        throw std::invalid_argument("EigenData: eigenvalue/eigenvector counts differ");
    if (lambdas_.size() > vectors_.rows())
        throw std::invalid_argument("EigenData: more eigenpairs than the matrix order");
    for (Index i = 0; i < vectors_.cols(); ++i)
        if (vectors_.col(i).norm() == 0.0)
            throw std::invalid_argument("EigenData: zero eigenvector");
}

SolveReport pdiep(const EigenData& data, const LStructure& structure, const SolveOptions& opts) {
    if (structure.rows() != data.n() || structure.cols() != data.n())
        throw std::invalid_argument("pdiep: structure shape must match the matrix order");
    MultiTermProblem prob;
    prob.terms.push_back({RBQMatrix::identity(data.n()),
                          RBQMatrix::from_complex(data.vectors()), structure});
    prob.e = RBQMatrix::from_complex(data.vectors() * data.lambdas().asDiagonal());
    return solve_multi(prob, opts);
}

SolveReport pdiep(const EigenData& data, StructureKind kind, const SolveOptions& opts) {
    return pdiep(data, LStructure::make(kind, data.field(), data.n()), opts);
}

namespace {

RBQMatrix embed_column(const ComplexVector& u) {
    ComplexMatrix m(u.size(), 1);
    m.col(0) = u;
    return RBQMatrix::from_complex(m);
}

} // namespace

std::vector<double> pdiep_residuals(const RBQMatrix& m, const EigenData& data) {
    std::vector<double> out;
    for (Index i = 0; i < data.k(); ++i) {
        RBQMatrix u = embed_column(data.vectors().col(i));
        RBQMatrix lam_u = scale(RBQScalar::from_complex_pair(data.lambdas()(i), 0.0), u);
        out.push_back(frobenius_norm(m * u - lam_u));
    }
    return out;
}

std::vector<double> pencil_residuals(const RBQMatrix& m, const RBQMatrix& n,
                                     const EigenData& data) {
    std::vector<double> out;
    for (Index i = 0; i < data.k(); ++i) {
        RBQMatrix u = embed_column(data.vectors().col(i));
        RBQMatrix rhs = scale(RBQScalar::from_complex_pair(data.lambdas()(i), 0.0), n * u);
        out.push_back(frobenius_norm(m * u - rhs));
    }
    return out;
}

PencilSolution gpdiep(const EigenData& data, const LStructure& structure,
                      const SolveOptions& opts) {
    const Index n = data.n();
    if (structure.rows() != n || structure.cols() != n)
        throw std::invalid_argument("gpdiep: structure shape must match the matrix order");

    ComplexMatrix phi = data.vectors();
    ComplexMatrix phi_lam = phi * data.lambdas().asDiagonal();
    ComplexMatrix s1 = build_term_matrix(RBQMatrix::identity(n), RBQMatrix::from_complex(phi),
                                         structure);
    ComplexMatrix s2 = build_term_matrix(RBQMatrix::from_real(-RealMatrix::Identity(n, n)),
                                         RBQMatrix::from_complex(phi_lam), structure);
    const Index p = structure.param_count();
    RealMatrix stack(2 * s1.rows(), 2 * p);
    stack.topLeftCorner(s1.rows(), p) = s1.real();
    stack.topRightCorner(s1.rows(), p) = s2.real();
    stack.bottomLeftCorner(s1.rows(), p) = s1.imag();
    stack.bottomRightCorner(s1.rows(), p) = s2.imag();

    Eigen::JacobiSVD<RealMatrix> svd(stack, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double cutoff = sv.size() > 0 && sv(0) > 0.0 ? opts.tol * sv(0) : 0.0;
    Index rank = 0;
    for (Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;

    PencilSolution sol;
    sol.nullspace_dim = 2 * p - rank;
    if (sol.nullspace_dim == 0) {
        sol.nontrivial = false;
        sol.normalization = "no nontrivial structured pencil";
        return sol;
    }

    // first nullspace direction in descending singular-value order
    RealVector v = svd.matrixV().col(rank);
    for (Index i = 0; i < v.size(); ++i) {
        if (std::abs(v(i)) > 1e-14) {
            if (v(i) < 0) v = -v;
            break;
        }
    }
    RBQMatrix m = structure.unpack(v.head(p));
    RBQMatrix nn = structure.unpack(v.tail(p));
    const double f = std::hypot(frobenius_norm(m), frobenius_norm(nn));
    m = (1.0 / f) * m;
    nn = (1.0 / f) * nn;

    sol.nontrivial = true;
    sol.m_left = m;
    sol.n_right = nn;
    sol.residuals = pencil_residuals(m, nn, data);
    std::ostringstream rec;
    rec << "nullspace direction 0 of " << sol.nullspace_dim
        << ", first nonzero component positive, scaled to unit pencil Frobenius norm";
    sol.normalization = rec.str();
    return sol;
}

PencilSolution gpdiep(const EigenData& data, StructureKind kind, const SolveOptions& opts) {
    return gpdiep(data, LStructure::make(kind, data.field(), data.n()), opts);
}

std::pair<ComplexMatrix, ComplexMatrix> solve_complex_hankel_pair(const ComplexMatrix& a,
                                                                  const ComplexMatrix& b,
                                                                  const ComplexMatrix& c,
                                                                  const ComplexMatrix& d,
                                                                  const ComplexMatrix& e) {
    const Index n = a.cols();
    if (c.rows() != a.rows() || c.cols() != n || b.rows() != n || d.rows() != n ||
        d.cols() != b.cols() || e.rows() != a.rows() || e.cols() != b.cols())
        throw std::invalid_argument("solve_complex_hankel_pair: shapes do not chain");

    const ComplexMatrix kh = basis_real(StructureKind::Hankel, n).cast<std::complex<double>>();
    const std::complex<double> iu(0, 1);
    auto lifted = [&](const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
        ComplexMatrix pk = kron(rhs.transpose(), lhs) * kh; // maps vec_H of one component
        ComplexMatrix out(pk.rows(), 2 * pk.cols());
        out.leftCols(pk.cols()) = pk;
        out.rightCols(pk.cols()) = iu * pk;
        return out;
    };
    ComplexMatrix w = lifted(a, b);
    ComplexMatrix j = lifted(c, d);

    StackedSystem sys;
    sys.q1.resize(w.rows(), w.cols() + j.cols());
    sys.q1 << w.real(), j.real();
    sys.q2.resize(w.rows(), w.cols() + j.cols());
    sys.q2 << w.imag(), j.imag();
    ComplexVector ve = vec(e);
    sys.e.resize(2 * ve.size());
    sys.e.head(ve.size()) = ve.real();
    sys.e.tail(ve.size()) = ve.imag();

    RealVector x = solve_min_norm(sys);
    const Index q = 2 * n - 1;
    RealMatrix khr = basis_real(StructureKind::Hankel, n);
    auto comp = [&](Index blockIndex) -> ComplexMatrix {
        return unvec(RealVector(khr * x.segment(blockIndex * q, q)), n, n)
            .cast<std::complex<double>>();
    };
    ComplexMatrix xsol = comp(0) + iu * comp(1);
    ComplexMatrix ysol = comp(2) + iu * comp(3);
    return {xsol, ysol};
}

std::pair<RealMatrix, RealMatrix> solve_real_symtoeplitz_pair(const RealMatrix& a,
                                                              const RealMatrix& b,
                                                              const RealMatrix& c,
                                                              const RealMatrix& d,
                                                              const RealMatrix& e) {
    const Index n = a.cols();
    if (c.rows() != a.rows() || c.cols() != n || b.rows() != n || d.rows() != n ||
        d.cols() != b.cols() || e.rows() != a.rows() || e.cols() != b.cols())
        throw std::invalid_argument("solve_real_symtoeplitz_pair: shapes do not chain");

    const RealMatrix kst = basis_real(StructureKind::SymToeplitz, n);
    StackedSystem sys;
    sys.q1.resize(a.rows() * b.cols(), 2 * n);
    sys.q1 << kron(b.transpose(), a) * kst, kron(d.transpose(), c) * kst;
    sys.q2.resize(0, 2 * n);
    sys.e = vec(e);

    RealVector x = solve_min_norm(sys);
    RealMatrix xsol = unvec(RealVector(kst * x.head(n)), n, n);
    RealMatrix ysol = unvec(RealVector(kst * x.tail(n)), n, n);
    return {xsol, ysol};
}

} // namespace rbq
