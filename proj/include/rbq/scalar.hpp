#ifndef RBQ_SCALAR_HPP
#define RBQ_SCALAR_HPP

#include <cmath>
#include <complex>

namespace rbq {

/// Commutative quaternion r = r0 + r1*i + r2*j + r3*k with unit rules
/// i^2 = k^2 = -1, j^2 = +1, ij = ji = k, jk = kj = i, ki = ik = -j.
/// The algebra has zero divisors (e.g. (1+j)(1-j) = 0), so there is no
/// general multiplicative inverse.
struct RBQScalar {
    double r0 = 0.0;
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;

    constexpr RBQScalar() = default;
    constexpr RBQScalar(double w, double x, double y, double z) : r0(w), r1(x), r2(y), r3(z) {}

    // complex pair form: r = d1 + d2*j
    static RBQScalar from_complex_pair(std::complex<double> d1, std::complex<double> d2) {
        return {d1.real(), d1.imag(), d2.real(), d2.imag()};
    }
    std::complex<double> d1() const { return {r0, r1}; }
    std::complex<double> d2() const { return {r2, r3}; }

    friend constexpr RBQScalar operator+(RBQScalar a, RBQScalar b) {
        return {a.r0 + b.r0, a.r1 + b.r1, a.r2 + b.r2, a.r3 + b.r3};
    }
    friend constexpr RBQScalar operator-(RBQScalar a, RBQScalar b) {
        return {a.r0 - b.r0, a.r1 - b.r1, a.r2 - b.r2, a.r3 - b.r3};
    }
    friend constexpr RBQScalar operator-(RBQScalar a) { return {-a.r0, -a.r1, -a.r2, -a.r3}; }
    friend constexpr RBQScalar operator*(double s, RBQScalar a) {
        return {s * a.r0, s * a.r1, s * a.r2, s * a.r3};
    }

    // commutative product; in the complex pair form
    // (a1 + a2 j)(b1 + b2 j) = (a1 b1 + a2 b2) + (a1 b2 + a2 b1) j.
    friend RBQScalar operator*(RBQScalar a, RBQScalar b) {
        return from_complex_pair(a.d1() * b.d1() + a.d2() * b.d2(),
                                 a.d1() * b.d2() + a.d2() * b.d1());
    }
};

inline RBQScalar conj(RBQScalar a) { return {a.r0, -a.r1, -a.r2, -a.r3}; }

/// Euclidean 4-norm. Note that norm(r)^2 and r*conj(r) differ in general.
inline double norm(RBQScalar a) {
    return std::sqrt(a.r0 * a.r0 + a.r1 * a.r1 + a.r2 * a.r2 + a.r3 * a.r3);
}

inline constexpr RBQScalar rbq_one() { return {1, 0, 0, 0}; }
inline constexpr RBQScalar rbq_i() { return {0, 1, 0, 0}; }
inline constexpr RBQScalar rbq_j() { return {0, 0, 1, 0}; }
inline constexpr RBQScalar rbq_k() { return {0, 0, 0, 1}; }

} // namespace rbq

#endif
