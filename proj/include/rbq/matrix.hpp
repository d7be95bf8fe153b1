#ifndef RBQ_MATRIX_HPP
#define RBQ_MATRIX_HPP

#include <Eigen/Dense>
#include <vector>

#include "rbq/scalar.hpp"

namespace rbq {

using RealMatrix = Eigen::MatrixXd;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Dense m x n matrix over commutative quaternions, Z = Z1 + Z2*j,
/// stored as the four real component matrices Re(Z1), Im(Z1), Re(Z2), Im(Z2).
/// Values are immutable in spirit: operations return new matrices.
class RBQMatrix {
public:
    RBQMatrix() = default;
    RBQMatrix(Index m, Index n)
        : re1_(RealMatrix::Zero(m, n)), im1_(RealMatrix::Zero(m, n)),
          re2_(RealMatrix::Zero(m, n)), im2_(RealMatrix::Zero(m, n)) {}

    static RBQMatrix from_parts(RealMatrix re1, RealMatrix im1, RealMatrix re2, RealMatrix im2);
    static RBQMatrix from_complex(const ComplexMatrix& z1, const ComplexMatrix& z2);
    static RBQMatrix from_complex(const ComplexMatrix& z1); // j-part zero
    static RBQMatrix from_real(const RealMatrix& r);
    static RBQMatrix identity(Index n);

    Index rows() const { return re1_.rows(); }
    Index cols() const { return re1_.cols(); }

    const RealMatrix& re1() const { return re1_; }
    const RealMatrix& im1() const { return im1_; }
    const RealMatrix& re2() const { return re2_; }
    const RealMatrix& im2() const { return im2_; }

    ComplexMatrix z1() const;
    ComplexMatrix z2() const;

    RBQScalar at(Index i, Index j) const {
        return {re1_(i, j), im1_(i, j), re2_(i, j), im2_(i, j)};
    }
    void set(Index i, Index j, RBQScalar v) {
        re1_(i, j) = v.r0;
        im1_(i, j) = v.r1;
        re2_(i, j) = v.r2;
        im2_(i, j) = v.r3;
    }

    RBQMatrix transpose() const;

    friend RBQMatrix operator+(const RBQMatrix& a, const RBQMatrix& b);
    friend RBQMatrix operator-(const RBQMatrix& a, const RBQMatrix& b);
    friend RBQMatrix operator*(const RBQMatrix& y, const RBQMatrix& z); // matrix product
    friend RBQMatrix operator*(double s, const RBQMatrix& z);

private:
    RealMatrix re1_, im1_, re2_, im2_;
};

/// Right multiplication by the unit j: Z*j = Z2 + Z1*j (component swap).
RBQMatrix jflip(const RBQMatrix& z);

/// Scalar q times matrix Y under the commutative product.
RBQMatrix scale(RBQScalar q, const RBQMatrix& y);

double frobenius_norm(const RBQMatrix& z);

/// Complex row representation [Z1, Z2] of size m x 2n.
ComplexMatrix psi(const RBQMatrix& z);

/// Block representation [[Z1, Z2], [Z2, Z1]] of size 2m x 2n; multiplicative:
/// hrep(Y*Z) == hrep(Y)*hrep(Z).
ComplexMatrix hrep(const RBQMatrix& z);

/// Column-major stack of entries as scalars.
std::vector<RBQScalar> vec(const RBQMatrix& z);

/// [vec(Re Z1); vec(Im Z1); vec(Re Z2); vec(Im Z2)], length 4mn.
RealVector vec_arrow(const RBQMatrix& z);

/// [vec(Z1); vec(Z2)], length 2mn.
ComplexVector vec_psi(const RBQMatrix& z);

/// Inverse of vec_arrow for an m x n shape.
RBQMatrix from_vec_arrow(const RealVector& v, Index m, Index n);

} // namespace rbq

#endif
