#include "rbq/vectorize.hpp"

#include <stdexcept>

namespace rbq {

RealMatrix commutation_matrix(Index n, Index s) {
    if (n < 1 || s < 1) throw std::invalid_argument("commutation_matrix: n, s must be >= 1");
    RealMatrix q = RealMatrix::Zero(n * s, n * s);
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < s; ++b) q(b + a * s, a + b * n) = 1.0;
    return q;
}

ComplexMatrix w_matrix(Index n, Index s) {
    if (n < 1 || s < 1) throw std::invalid_argument("w_matrix: n, s must be >= 1");
    const Index ns = n * s;
    ComplexMatrix w = ComplexMatrix::Zero(2 * ns, 4 * ns);
    const std::complex<double> iu(0, 1);
    for (Index t = 0; t < ns; ++t) {
        w(t, t) = 1.0;
        w(t, ns + t) = iu;
        w(ns + t, 2 * ns + t) = 1.0;
        w(ns + t, 3 * ns + t) = iu;
    }
    return w;
}

RealMatrix s_matrix(Index n, Index s) {
    const Index ns = n * s;
    RealMatrix out = RealMatrix::Zero(2 * ns, 2 * ns);
    RealMatrix q = commutation_matrix(n, s);
    out.topLeftCorner(ns, ns) = q;
    out.bottomRightCorner(ns, ns) = q;
    return out;
}

} // namespace rbq
