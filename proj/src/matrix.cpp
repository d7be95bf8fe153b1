#include "rbq/matrix.hpp"

#include <stdexcept>

namespace rbq {

RBQMatrix RBQMatrix::from_parts(RealMatrix re1, RealMatrix im1, RealMatrix re2, RealMatrix im2) {
    if (im1.rows() != re1.rows() || im1.cols() != re1.cols() ||
        re2.rows() != re1.rows() || re2.cols() != re1.cols() ||
        im2.rows() != re1.rows() || im2.cols() != re1.cols()) {
        throw std::invalid_argument("RBQMatrix: component shapes differ");
    }
    RBQMatrix z;
    z.re1_ = std::move(re1);
    z.im1_ = std::move(im1);
    z.re2_ = std::move(re2);
    z.im2_ = std::move(im2);
    return z;
}

RBQMatrix RBQMatrix::from_complex(const ComplexMatrix& z1, const ComplexMatrix& z2) {
    return from_parts(z1.real(), z1.imag(), z2.real(), z2.imag());
}

RBQMatrix RBQMatrix::from_complex(const ComplexMatrix& z1) {
    return from_parts(z1.real(), z1.imag(), RealMatrix::Zero(z1.rows(), z1.cols()),
                      RealMatrix::Zero(z1.rows(), z1.cols()));
}

RBQMatrix RBQMatrix::from_real(const RealMatrix& r) {
    RealMatrix zero = RealMatrix::Zero(r.rows(), r.cols());
    return from_parts(r, zero, zero, zero);
}

RBQMatrix RBQMatrix::identity(Index n) { return from_real(RealMatrix::Identity(n, n)); }

ComplexMatrix RBQMatrix::z1() const {
    return re1_.cast<std::complex<double>>() + std::complex<double>(0, 1) * im1_.cast<std::complex<double>>();
}

ComplexMatrix RBQMatrix::z2() const {
    return re2_.cast<std::complex<double>>() + std::complex<double>(0, 1) * im2_.cast<std::complex<double>>();
}

RBQMatrix RBQMatrix::transpose() const {
    return from_parts(re1_.transpose(), im1_.transpose(), re2_.transpose(), im2_.transpose());
}

RBQMatrix operator+(const RBQMatrix& a, const RBQMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("RBQMatrix +: shape mismatch");
    return RBQMatrix::from_parts(a.re1_ + b.re1_, a.im1_ + b.im1_, a.re2_ + b.re2_, a.im2_ + b.im2_);
}

RBQMatrix operator-(const RBQMatrix& a, const RBQMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("RBQMatrix -: shape mismatch");
    return RBQMatrix::from_parts(a.re1_ - b.re1_, a.im1_ - b.im1_, a.re2_ - b.re2_, a.im2_ - b.im2_);
}

// (YZ)1 = Y1 Z1 + Y2 Z2, (YZ)2 = Y1 Z2 + Y2 Z1
RBQMatrix operator*(const RBQMatrix& y, const RBQMatrix& z) {
    if (y.cols() != z.rows())
        throw std::invalid_argument("RBQMatrix *: inner dimensions disagree");
    ComplexMatrix y1 = y.z1(), y2 = y.z2(), z1 = z.z1(), z2 = z.z2();
    return RBQMatrix::from_complex(y1 * z1 + y2 * z2, y1 * z2 + y2 * z1);
}

RBQMatrix operator*(double s, const RBQMatrix& z) {
    return RBQMatrix::from_parts(s * z.re1_, s * z.im1_, s * z.re2_, s * z.im2_);
}

RBQMatrix jflip(const RBQMatrix& z) {
    return RBQMatrix::from_parts(z.re2(), z.im2(), z.re1(), z.im1());
}

RBQMatrix scale(RBQScalar q, const RBQMatrix& y) {
    std::complex<double> q1 = q.d1(), q2 = q.d2();
    ComplexMatrix y1 = y.z1(), y2 = y.z2();
    return RBQMatrix::from_complex(q1 * y1 + q2 * y2, q1 * y2 + q2 * y1);
}

double frobenius_norm(const RBQMatrix& z) {
    return std::sqrt(z.re1().squaredNorm() + z.im1().squaredNorm() + z.re2().squaredNorm() +
                     z.im2().squaredNorm());
}

ComplexMatrix psi(const RBQMatrix& z) {
    ComplexMatrix out(z.rows(), 2 * z.cols());
    out.leftCols(z.cols()) = z.z1();
    out.rightCols(z.cols()) = z.z2();
    return out;
}

ComplexMatrix hrep(const RBQMatrix& z) {
    ComplexMatrix z1 = z.z1(), z2 = z.z2();
    ComplexMatrix out(2 * z.rows(), 2 * z.cols());
    out.topLeftCorner(z.rows(), z.cols()) = z1;
    out.topRightCorner(z.rows(), z.cols()) = z2;
    out.bottomLeftCorner(z.rows(), z.cols()) = z2;
    out.bottomRightCorner(z.rows(), z.cols()) = z1;
    return out;
}

std::vector<RBQScalar> vec(const RBQMatrix& z) {
    std::vector<RBQScalar> out;
    out.reserve(static_cast<std::size_t>(z.rows() * z.cols()));
    for (Index j = 0; j < z.cols(); ++j)
        for (Index i = 0; i < z.rows(); ++i) out.push_back(z.at(i, j));
    return out;
}

RealVector vec_arrow(const RBQMatrix& z) {
    const Index mn = z.rows() * z.cols();
    RealVector v(4 * mn);
    v.segment(0, mn) = Eigen::Map<const RealVector>(z.re1().data(), mn);
    v.segment(mn, mn) = Eigen::Map<const RealVector>(z.im1().data(), mn);
    v.segment(2 * mn, mn) = Eigen::Map<const RealVector>(z.re2().data(), mn);
    v.segment(3 * mn, mn) = Eigen::Map<const RealVector>(z.im2().data(), mn);
    return v;
}

ComplexVector vec_psi(const RBQMatrix& z) {
    const Index mn = z.rows() * z.cols();
    ComplexVector v(2 * mn);
    ComplexMatrix z1 = z.z1(), z2 = z.z2();
    v.segment(0, mn) = Eigen::Map<const ComplexVector>(z1.data(), mn);
    v.segment(mn, mn) = Eigen::Map<const ComplexVector>(z2.data(), mn);
    return v;
}

RBQMatrix from_vec_arrow(const RealVector& v, Index m, Index n) {
    const Index mn = m * n;
    if (v.size() != 4 * mn) throw std::invalid_argument("from_vec_arrow: length != 4*m*n");
    auto part = [&](Index k) {
        return RealMatrix(Eigen::Map<const RealMatrix>(v.data() + k * mn, m, n));
    };
    return RBQMatrix::from_parts(part(0), part(1), part(2), part(3));
}

} // namespace rbq
