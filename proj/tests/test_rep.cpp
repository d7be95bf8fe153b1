#include <doctest.h>

#include "rbq/vectorize.hpp"
#include "test_support.hpp"

using namespace rbq;
using rbqtest::Rng;

TEST_CASE("matrix product: identity, complex reduction, scalar-loop oracle") {
    Rng rng(1);
    RBQMatrix z = rng.rbq_matrix(3, 4);
    CHECK(frobenius_norm(RBQMatrix::identity(3) * z - z) == doctest::Approx(0.0));

    // vanishing j-parts reduce to the ordinary complex product
    RBQMatrix y1 = RBQMatrix::from_complex(rng.complex_matrix(2, 3));
    RBQMatrix z1 = RBQMatrix::from_complex(rng.complex_matrix(3, 2));
    ComplexMatrix expect = y1.z1() * z1.z1();
    RBQMatrix prod = y1 * z1;
    CHECK((prod.z1() - expect).norm() < 1e-14);
    CHECK(prod.z2().norm() == 0.0);

    RBQMatrix a = rng.rbq_matrix(2, 3), b = rng.rbq_matrix(3, 2);
    CHECK(frobenius_norm(a * b - rbqtest::scalar_loop_product(a, b)) < 1e-13);

    CHECK_THROWS_AS(rng.rbq_matrix(2, 3) * rng.rbq_matrix(2, 3), std::invalid_argument);
}

TEST_CASE("psi and hrep") {
    Rng rng(2);
    RBQMatrix z = RBQMatrix::from_complex(rng.complex_matrix(3, 3));
    ComplexMatrix h = hrep(z);
    CHECK((h.topLeftCorner(3, 3) - z.z1()).norm() == 0.0);
    CHECK(h.topRightCorner(3, 3).norm() == 0.0);
    CHECK(h.bottomLeftCorner(3, 3).norm() == 0.0);
    CHECK((h.bottomRightCorner(3, 3) - z.z1()).norm() == 0.0);

    for (int trial = 0; trial < 100; ++trial) {
        RBQMatrix y = rng.rbq_matrix(3, 3), w = rng.rbq_matrix(3, 3);
        ComplexMatrix lhs = hrep(y * w);
        ComplexMatrix rhs = hrep(y) * hrep(w);
        CHECK((lhs - rhs).norm() <= 1e-12 * std::max(1.0, rhs.norm()));
    }

    // psi(q * Y) = psi(q) * hrep(Y) for a scalar q
    RBQScalar q{0.3, -1.2, 0.7, 2.0};
    RBQMatrix qm(1, 1);
    qm.set(0, 0, q);
    RBQMatrix y = rng.rbq_matrix(4, 2);
    ComplexMatrix lhs = psi(scale(q, y));
    // hrep of a 4x2 against a 1x1 scalar row: [q1, q2] * [[Y1, Y2], [Y2, Y1]]
    ComplexMatrix psi_q = psi(qm); // 1 x 2
    ComplexMatrix rhs(y.rows(), 2 * y.cols());
    rhs.leftCols(y.cols()) = psi_q(0, 0) * y.z1() + psi_q(0, 1) * y.z2();
    rhs.rightCols(y.cols()) = psi_q(0, 0) * y.z2() + psi_q(0, 1) * y.z1();
    CHECK((lhs - rhs).norm() < 1e-13);
}

TEST_CASE("vec variants and norm identities") {
    RBQMatrix one(1, 1);
    one.set(0, 0, RBQScalar{1, 2, 3, 4});
    auto v = vec(one);
    REQUIRE(v.size() == 1);
    CHECK(v[0].r0 == 1.0);
    CHECK(vec_arrow(one).isApprox(RealVector::Map((const double[]){1, 2, 3, 4}, 4)));

    // column-major order on a real 2x2: vec([[a, c], [b, d]]) = [a, b, c, d]
    RealMatrix x(2, 2);
    x << 1, 3, 2, 4;
    RealVector vx = vec(x);
    CHECK(vx(0) == 1.0);
    CHECK(vx(1) == 2.0);
    CHECK(vx(2) == 3.0);
    CHECK(vx(3) == 4.0);

    Rng rng(3);
    RBQMatrix z = rng.rbq_matrix(4, 5);
    const double f = frobenius_norm(z);
    CHECK(psi(z).norm() == doctest::Approx(f));
    CHECK(vec_psi(z).norm() == doctest::Approx(f));
    CHECK(vec_arrow(z).norm() == doctest::Approx(f));
    CHECK(frobenius_norm(from_vec_arrow(vec_arrow(z), 4, 5) - z) == 0.0);

    // vec is linear
    RBQMatrix y = rng.rbq_matrix(4, 5);
    RealVector lhs = vec_arrow(y + (-2.5) * z);
    RealVector rhs = vec_arrow(y) - 2.5 * vec_arrow(z);
    CHECK((lhs - rhs).norm() == 0.0);
}

TEST_CASE("kron") {
    Rng rng(4);
    RealMatrix a = rng.real_matrix(2, 2);
    RealMatrix id2 = RealMatrix::Identity(2, 2);
    RealMatrix block = kron(id2, a);
    CHECK((block.topLeftCorner(2, 2) - a).norm() == 0.0);
    CHECK((block.bottomRightCorner(2, 2) - a).norm() == 0.0);
    CHECK(block.topRightCorner(2, 2).norm() == 0.0);

    // vec(A X B) = (B^T kron A) vec(X) over complex matrices
    ComplexMatrix ac = rng.complex_matrix(2, 3), xc = rng.complex_matrix(3, 2),
                  bc = rng.complex_matrix(2, 4);
    ComplexVector lhs = vec(ComplexMatrix(ac * xc * bc));
    ComplexVector rhs = kron(bc.transpose(), ac) * vec(xc);
    CHECK((lhs - rhs).norm() < 1e-13);

    // mixed product (A kron B)(C kron D) = AC kron BD
    RealMatrix am = rng.real_matrix(2, 3), bm = rng.real_matrix(3, 2), cm = rng.real_matrix(3, 2),
               dm = rng.real_matrix(2, 3);
    RealMatrix lhs2 = kron(am, bm) * kron(cm, dm);
    RealMatrix rhs2 = kron(RealMatrix(am * cm), RealMatrix(bm * dm));
    CHECK((lhs2 - rhs2).norm() < 1e-13);
}

TEST_CASE("commutation matrix") {
    CHECK(commutation_matrix(1, 1)(0, 0) == 1.0);

    // n = s = 2 swaps the two middle positions
    RealMatrix q22 = commutation_matrix(2, 2);
    RealMatrix expect(4, 4);
    expect << 1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1;
    CHECK((q22 - expect).norm() == 0.0);

    CHECK((commutation_matrix(2, 3) * commutation_matrix(3, 2) - RealMatrix::Identity(6, 6))
              .norm() == 0.0);

    // permutation: single 1 in each row and column
    RealMatrix q = commutation_matrix(3, 4);
    for (Index i = 0; i < q.rows(); ++i) {
        CHECK(q.row(i).sum() == 1.0);
        CHECK(q.col(i).sum() == 1.0);
        for (Index j = 0; j < q.cols(); ++j) CHECK((q(i, j) == 0.0 || q(i, j) == 1.0));
    }

    Rng rng(5);
    RealMatrix x = rng.real_matrix(3, 4);
    CHECK((commutation_matrix(3, 4) * vec(x) - vec(RealMatrix(x.transpose()))).norm() == 0.0);

    CHECK_THROWS_AS(commutation_matrix(0, 2), std::invalid_argument);
}

TEST_CASE("w and s matrices") {
    ComplexMatrix w11 = w_matrix(1, 1);
    REQUIRE(w11.rows() == 2);
    REQUIRE(w11.cols() == 4);
    CHECK(w11(0, 0) == std::complex<double>(1, 0));
    CHECK(w11(0, 1) == std::complex<double>(0, 1));
    CHECK(w11(1, 2) == std::complex<double>(1, 0));
    CHECK(w11(1, 3) == std::complex<double>(0, 1));
    CHECK(w11(0, 2) == std::complex<double>(0, 0));

    Rng rng(6);
    RBQMatrix x = rng.rbq_matrix(3, 2);
    CHECK((w_matrix(3, 2) * vec_arrow(x) - vec_psi(x)).norm() < 1e-14);

    RBQMatrix y = rng.rbq_matrix(2, 3);
    CHECK((s_matrix(2, 3) * vec_psi(y) - vec_psi(y.transpose())).norm() == 0.0);
}

TEST_CASE("product vectorization identity") {
    Rng rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        RBQMatrix a = rng.rbq_matrix(3, 4), x = rng.rbq_matrix(4, 2), b = rng.rbq_matrix(2, 3);
        ComplexVector lhs = vec_psi(a * x * b);
        ComplexMatrix g =
            kron(hrep(b).transpose(), a.z1()) + kron(hrep(jflip(b)).transpose(), a.z2());
        ComplexVector rhs = g * vec_psi(x);
        CHECK((lhs - rhs).norm() <= 1e-12 * std::max(1.0, lhs.norm()));
    }
}

TEST_CASE("psi of a product") {
    Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        RBQMatrix y = rng.rbq_matrix(3, 4), z = rng.rbq_matrix(4, 2);
        ComplexMatrix lhs = psi(y * z);
        ComplexMatrix rhs = psi(y) * hrep(z);
        CHECK((lhs - rhs).norm() <= 1e-12 * std::max(1.0, rhs.norm()));
    }
}
