#ifndef RBQ_VECTORIZE_HPP
#define RBQ_VECTORIZE_HPP

#include "rbq/matrix.hpp"

namespace rbq {

/// Column-major vectorization of a dense real/complex matrix.
inline RealVector vec(const RealMatrix& x) {
    return Eigen::Map<const RealVector>(x.data(), x.size());
}
inline ComplexVector vec(const ComplexMatrix& x) {
    return Eigen::Map<const ComplexVector>(x.data(), x.size());
}
inline RealMatrix unvec(const RealVector& v, Index m, Index n) {
    return Eigen::Map<const RealMatrix>(v.data(), m, n);
}
inline ComplexMatrix unvec(const ComplexVector& v, Index m, Index n) {
    return Eigen::Map<const ComplexMatrix>(v.data(), m, n);
}

/// Kronecker product, a_ij * B blocks.
template <typename Derived1, typename Derived2>
auto kron(const Eigen::MatrixBase<Derived1>& a, const Eigen::MatrixBase<Derived2>& b) {
    using Scalar = decltype(typename Derived1::Scalar{} * typename Derived2::Scalar{});
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(),
                                                              a.cols() * b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b.template cast<Scalar>();
    return out;
}

/// Permutation Q with Q*vec(X) = vec(X^T) for every n x s matrix X.
RealMatrix commutation_matrix(Index n, Index s);

/// 2ns x 4ns map with W * vec_arrow(X) = vec_psi(X) for n x s matrices:
/// [[I, i*I, 0, 0], [0, 0, I, i*I]].
ComplexMatrix w_matrix(Index n, Index s);

/// Block diagonal of two commutation matrices; maps vec_psi(X) to vec_psi(X^T).
RealMatrix s_matrix(Index n, Index s);

} // namespace rbq

#endif
