#include "rbq/structure.hpp"

#include <Eigen/SVD>
#include <sstream>
#include <stdexcept>

namespace rbq {

const char* to_string(StructureKind kind) {
    switch (kind) {
        case StructureKind::Toeplitz: return "toeplitz";
        case StructureKind::SymToeplitz: return "sym-toeplitz";
        case StructureKind::Hankel: return "hankel";
        case StructureKind::Circulant: return "circulant";
        case StructureKind::Diagonal: return "diagonal";
        case StructureKind::Full: return "full";
        case StructureKind::Custom: return "custom";
    }
    return "?";
}

const char* to_string(FieldMask mask) {
    switch (mask) {
        case FieldMask::RBQ: return "rbq";
        case FieldMask::Complex: return "complex";
        case FieldMask::Real: return "real";
    }
    return "?";
}

std::optional<StructureKind> structure_kind_from_string(const std::string& s) {
    if (s == "toeplitz") return StructureKind::Toeplitz;
    if (s == "sym-toeplitz" || s == "symtoeplitz") return StructureKind::SymToeplitz;
    if (s == "hankel") return StructureKind::Hankel;
    if (s == "circulant") return StructureKind::Circulant;
    if (s == "diagonal") return StructureKind::Diagonal;
    if (s == "full") return StructureKind::Full;
    if (s == "custom") return StructureKind::Custom;
    return std::nullopt;
}

std::optional<FieldMask> field_mask_from_string(const std::string& s) {
    if (s == "rbq") return FieldMask::RBQ;
    if (s == "complex") return FieldMask::Complex;
    if (s == "real") return FieldMask::Real;
    return std::nullopt;
}

Index active_components(FieldMask mask) {
    switch (mask) {
        case FieldMask::RBQ: return 4;
        case FieldMask::Complex: return 2;
        case FieldMask::Real: return 1;
    }
    return 0;
}

Index component_param_count(StructureKind kind, Index m, Index n) {
    switch (kind) {
        case StructureKind::Toeplitz:
        case StructureKind::Hankel: return 2 * n - 1;
        case StructureKind::SymToeplitz:
        case StructureKind::Circulant:
        case StructureKind::Diagonal: return n;
        case StructureKind::Full: return m * n;
        case StructureKind::Custom:
            throw std::invalid_argument("component_param_count: Custom has no fixed count");
    }
    return 0;
}

namespace {

// Parameter index of entry (i, j), or -1 for a forced zero. Index maps:
//   Toeplitz      X(i,j) = x_{j-i},   params ordered x_{-n+1} .. x_{n-1}
//   SymToeplitz   X(i,j) = x_{|i-j|}, params x_0 .. x_{n-1}
//   Hankel        X(i,j) = x_{n-1-i-j}, params ordered x_{n-1} .. x_{-n+1}
//   Circulant     X(i,j) = x_{(i-j) mod n}, params x_0 .. x_{n-1}
Index entry_param(StructureKind kind, Index n, Index i, Index j) {
    switch (kind) {
        case StructureKind::Toeplitz: return (j - i) + (n - 1);
        case StructureKind::SymToeplitz: return i >= j ? i - j : j - i;
        case StructureKind::Hankel: return i + j;
        case StructureKind::Circulant: return (i - j + n) % n;
        case StructureKind::Diagonal: return i == j ? i : -1;
        default: return -1;
    }
}

} // namespace

RealMatrix basis_real(StructureKind kind, Index m, Index n) {
    if (m < 1 || n < 1) throw std::invalid_argument("basis_real: dimensions must be >= 1");
    if (kind == StructureKind::Custom)
        throw std::invalid_argument("basis_real: Custom needs a constraint matrix");
    if (kind == StructureKind::Full) return RealMatrix::Identity(m * n, m * n);
    if (m != n) throw std::invalid_argument("basis_real: this kind requires a square shape");

    RealMatrix k = RealMatrix::Zero(n * n, component_param_count(kind, n, n));
    for (Index j = 0; j < n; ++j)
        for (Index i = 0; i < n; ++i) {
            Index p = entry_param(kind, n, i, j);
            if (p >= 0) k(i + j * n, p) = 1.0;
        }
    return k;
}

ComplexMatrix make_toeplitz(const ComplexVector& c, const ComplexVector& r) {
    const Index n = c.size();
    if (r.size() != n) throw std::invalid_argument("make_toeplitz: c and r lengths differ");
    ComplexMatrix x(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) x(i, j) = i >= j ? c(i - j) : r(j - i);
    return x;
}

RealMatrix make_sym_toeplitz(const RealVector& c) {
    const Index n = c.size();
    RealMatrix x(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) x(i, j) = c(i >= j ? i - j : j - i);
    return x;
}

ComplexMatrix make_hankel(const ComplexVector& c, const ComplexVector& r) {
    const Index n = c.size();
    if (r.size() != n) throw std::invalid_argument("make_hankel: c and r lengths differ");
    ComplexMatrix x(n, n);
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j) {
            const Index t = i + j;
            x(i, j) = t < n ? c(t) : r(t - n + 1);
        }
    return x;
}

RealMatrix kernel_basis(const RealMatrix& constraint) {
    const Index mn = constraint.cols();
    if (constraint.rows() == 0 || constraint.isZero(0.0)) return RealMatrix::Identity(mn, mn);
    Eigen::JacobiSVD<RealMatrix> svd(constraint, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    Index rank = 0;
    for (Index i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-10 * sv(0)) ++rank;
    return svd.matrixV().rightCols(mn - rank);
}

static RealMatrix lift_basis(const RealMatrix& k, FieldMask mask, Index mn) {
    const Index comps = active_components(mask);
    const Index p = k.cols();
    RealMatrix basis = RealMatrix::Zero(4 * mn, comps * p);
    for (Index c = 0; c < comps; ++c) basis.block(c * mn, c * p, mn, p) = k;
    return basis;
}

LStructure LStructure::make(StructureKind kind, FieldMask mask, Index m, Index n) {
    RealMatrix k = basis_real(kind, m, n);
    return LStructure(kind, mask, m, n, lift_basis(k, mask, m * n));
}

LStructure LStructure::custom(const RealMatrix& constraint, FieldMask mask, Index m, Index n) {
    if (constraint.cols() != m * n)
        throw std::invalid_argument("LStructure::custom: constraint must have m*n columns");
    RealMatrix k = kernel_basis(constraint);
    return LStructure(StructureKind::Custom, mask, m, n, lift_basis(k, mask, m * n));
}

RealVector LStructure::pack(const RBQMatrix& x, double tol) const {
    if (x.rows() != m_ || x.cols() != n_)
        throw std::invalid_argument("pack: matrix shape does not match the structure");
    RealVector target = vec_arrow(x);
    RealVector v = basis_.completeOrthogonalDecomposition().solve(target);
    double violation = (basis_ * v - target).norm();
    if (violation > tol * std::max(1.0, target.norm())) {
        std::ostringstream msg;
        msg << "pack: matrix violates " << to_string(kind_) << "/" << to_string(mask_)
            << " structure by " << violation;
        throw std::invalid_argument(msg.str());
    }
    return v;
}

RBQMatrix LStructure::unpack(const RealVector& v) const {
    if (v.size() != param_count())
        throw std::invalid_argument("unpack: parameter vector length mismatch");
    return from_vec_arrow(basis_ * v, m_, n_);
}

bool LStructure::contains(const RBQMatrix& x, double tol) const {
    if (x.rows() != m_ || x.cols() != n_) return false;
    RealVector target = vec_arrow(x);
    RealVector v = basis_.completeOrthogonalDecomposition().solve(target);
    return (basis_ * v - target).norm() <= tol * std::max(1.0, target.norm());
}

} // namespace rbq
