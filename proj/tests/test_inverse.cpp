#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numeric>

#include "rbq/inverse.hpp"
#include "rbq/vectorize.hpp"
#include "test_support.hpp"

using namespace rbq;
using rbqtest::Rng;

namespace {

ComplexVector cv(std::initializer_list<std::complex<double>> vals) {
    ComplexVector v(static_cast<Index>(vals.size()));
    Index i = 0;
    for (auto x : vals) v(i++) = x;
    return v;
}

RealVector rv(std::initializer_list<double> vals) {
    RealVector v(static_cast<Index>(vals.size()));
    Index i = 0;
    for (auto x : vals) v(i++) = x;
    return v;
}

// eigen-decomposition sorted by ascending real part of the eigenvalue
std::pair<ComplexVector, ComplexMatrix> sorted_eigen(const ComplexMatrix& m) {
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(m);
    REQUIRE(solver.info() == Eigen::Success);
    ComplexVector lam = solver.eigenvalues();
    ComplexMatrix vec = solver.eigenvectors();
    std::vector<Index> order(static_cast<std::size_t>(lam.size()));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](Index a, Index b) { return lam(a).real() < lam(b).real(); });
    ComplexVector lam_s(lam.size());
    ComplexMatrix vec_s(vec.rows(), vec.cols());
    for (Index i = 0; i < lam.size(); ++i) {
        lam_s(i) = lam(order[static_cast<std::size_t>(i)]);
        vec_s.col(i) = vec.col(order[static_cast<std::size_t>(i)]);
    }
    return {lam_s, vec_s};
}

const ComplexMatrix kHankel63 = make_hankel(cv({{1, 2}, {2, -4}, {-1, 3}, {4, 0}}),
                                            cv({{4, 0}, {3, 4}, {0, 2}, {3, 0}}));

} // namespace

TEST_CASE("EigenData invariants") {
    CHECK_THROWS_AS(EigenData(ComplexVector(), ComplexMatrix(4, 0), FieldMask::Complex),
                    std::invalid_argument);
    CHECK_THROWS_AS(EigenData(cv({1.0, 2.0}), ComplexMatrix::Identity(4, 4), FieldMask::Real),
                    std::invalid_argument);
    ComplexMatrix with_zero = ComplexMatrix::Zero(4, 2);
    with_zero(0, 0) = 1.0;
    CHECK_THROWS_AS(EigenData(cv({1.0, 2.0}), with_zero, FieldMask::Real),
                    std::invalid_argument);
    ComplexVector five(5);
    five.setOnes();
    CHECK_THROWS_AS(EigenData(five, ComplexMatrix::Ones(4, 5), FieldMask::Real),
                    std::invalid_argument);
}

TEST_CASE("complex Hankel reconstruction from partial eigenpairs") {
    auto [lam, phi] = sorted_eigen(kHankel63);

    SUBCASE("two eigenpairs recover the planted matrix entrywise") {
        EigenData data(lam.segment(1, 2), phi.middleCols(1, 2), FieldMask::Complex);
        SolveReport report = pdiep(data, StructureKind::Hankel);
        CHECK((report.solutions[0].z1() - kHankel63).cwiseAbs().maxCoeff() < 1e-10);
        for (double r : pdiep_residuals(report.solutions[0], data)) CHECK(r <= 1e-12);
    }

    SUBCASE("one eigenpair gives the recorded min-norm completion") {
        EigenData data(lam.segment(2, 1), phi.middleCols(2, 1), FieldMask::Complex);
        SolveReport report = pdiep(data, StructureKind::Hankel);
        for (double r : pdiep_residuals(report.solutions[0], data)) CHECK(r <= 1e-12);
        ComplexMatrix recorded = make_hankel(
            cv({{1.6614, 0.3115}, {1.0564, 0.6597}, {-1.8088, 0.4921}, {2.6736, -0.4763}}),
            cv({{2.6736, -0.4763}, {2.0823, -0.5222}, {-1.7415, 0.7505}, {1.2459, 0.2833}}));
        CHECK((report.solutions[0].z1() - recorded).cwiseAbs().maxCoeff() < 1e-3);
        CHECK_FALSE(report.unique);
    }
}

TEST_CASE("symmetric Toeplitz reconstruction from partial eigenpairs") {
    RealMatrix planted = make_sym_toeplitz(rv({5.30, 2.50, 4.60, -3.70, 2.80}));
    Eigen::SelfAdjointEigenSolver<RealMatrix> solver(planted);
    ComplexVector lam = solver.eigenvalues().cast<std::complex<double>>();
    ComplexMatrix phi = solver.eigenvectors().cast<std::complex<double>>();

    SUBCASE("one symmetric plus one skew-symmetric eigenvector recover the matrix") {
        EigenData data(lam.head(2), phi.leftCols(2), FieldMask::Real);
        SolveReport report = pdiep(data, StructureKind::SymToeplitz);
        RealVector first_row = report.solutions[0].re1().row(0);
        CHECK((first_row - rv({5.30, 2.50, 4.60, -3.70, 2.80})).cwiseAbs().maxCoeff() < 1e-10);
        for (double r : pdiep_residuals(report.solutions[0], data)) CHECK(r <= 1e-12);
    }

    SUBCASE("two skew-symmetric eigenvectors give the recorded min-norm fit") {
        ComplexVector lam2(2);
        lam2 << lam(0), lam(2);
        ComplexMatrix phi2(5, 2);
        phi2 << phi.col(0), phi.col(2);
        EigenData data(lam2, phi2, FieldMask::Real);
        SolveReport report = pdiep(data, StructureKind::SymToeplitz);
        RealMatrix recorded = make_sym_toeplitz(rv({1.0667, 3.1000, 0.3667, -3.1000, -1.4333}));
        CHECK((report.solutions[0].re1() - recorded).cwiseAbs().maxCoeff() < 1e-3);
        for (double r : pdiep_residuals(report.solutions[0], data)) CHECK(r <= 1e-12);
    }
}

TEST_CASE("full eigendecomposition reconstructs exactly") {
    Rng rng(51);
    ComplexMatrix planted = make_hankel(rng.complex_matrix(4, 1).col(0).eval(),
                                        rng.complex_matrix(4, 1).col(0).eval());
    auto [lam, phi] = sorted_eigen(planted);
    EigenData data(lam, phi, FieldMask::Complex);
    SolveReport report = pdiep(data, StructureKind::Hankel);
    CHECK((report.solutions[0].z1() - planted).cwiseAbs().maxCoeff() <=
          1e-8 * planted.cwiseAbs().maxCoeff());
}

TEST_CASE("pdiep residual equals the stacked least-squares optimum") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Rng rng(seed);
        EigenData data(cv({{0.5, 0.2}, {-1.0, 0.4}}), rng.complex_matrix(4, 2),
                       FieldMask::Complex);
        SolveReport report = pdiep(data, StructureKind::Hankel);
        RBQMatrix m = report.solutions[0];
        ComplexMatrix residual_mat =
            m.z1() * data.vectors() - data.vectors() * data.lambdas().asDiagonal();
        CHECK(std::abs(residual_mat.norm() - report.residual) <= 1e-12 *
                                                                     std::max(1.0, report.residual));

        // unit structured deviations never improve the fit
        LStructure l = LStructure::make(StructureKind::Hankel, FieldMask::Complex, 4);
        for (int trial = 0; trial < 100; ++trial) {
            RealVector d = rng.real_vector(l.param_count());
            RBQMatrix dev = l.unpack(d);
            dev = (1.0 / frobenius_norm(dev)) * dev;
            ComplexMatrix alt = (m + dev).z1() * data.vectors() -
                                data.vectors() * data.lambdas().asDiagonal();
            CHECK(alt.norm() >= report.residual - 1e-12);
        }
    }
}

TEST_CASE("generalized reconstruction: Hankel pencil") {
    ComplexMatrix m65 = make_hankel(cv({{4, 2}, {2, -4}, {-1, 3}, {4, 3}}),
                                    cv({{4, 3}, {0, 4}, {9, 2}, {3, 1}}));
    ComplexMatrix n65 = make_hankel(cv({{3, 2}, {6, -1}, {-5, 2}, {4, 7}}),
                                    cv({{4, 7}, {3, 4}, {2, 2}, {3, -8}}));
    auto [lam, phi] = sorted_eigen(n65.partialPivLu().solve(m65));

    SUBCASE("single eigenpair") {
        EigenData data(lam.head(1), phi.leftCols(1), FieldMask::Complex);
        PencilSolution sol = gpdiep(data, StructureKind::Hankel);
        REQUIRE(sol.nontrivial);
        CHECK(sol.residuals[0] <= 1e-12);
        const double combined =
            std::hypot(frobenius_norm(sol.m_left), frobenius_norm(sol.n_right));
        CHECK(combined == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("two eigenpairs") {
        ComplexVector lam2(2);
        lam2 << lam(0), lam(2);
        ComplexMatrix phi2(4, 2);
        phi2 << phi.col(0), phi.col(2);
        EigenData data(lam2, phi2, FieldMask::Complex);
        PencilSolution sol = gpdiep(data, StructureKind::Hankel);
        REQUIRE(sol.nontrivial);
        for (double r : sol.residuals) CHECK(r <= 1e-12);
    }

    SUBCASE("scaling the eigenvectors leaves normalized residuals unchanged") {
        EigenData data(lam.head(1), phi.leftCols(1), FieldMask::Complex);
        PencilSolution base = gpdiep(data, StructureKind::Hankel);
        EigenData scaled(lam.head(1),
                         ComplexMatrix(std::complex<double>(0.3, 1.1) * phi.leftCols(1)),
                         FieldMask::Complex);
        PencilSolution other = gpdiep(scaled, StructureKind::Hankel);
        REQUIRE(base.nontrivial);
        REQUIRE(other.nontrivial);
        for (std::size_t i = 0; i < base.residuals.size(); ++i)
            CHECK(std::abs(base.residuals[i] - other.residuals[i]) <= 1e-10);
    }
}

TEST_CASE("generalized reconstruction: symmetric Toeplitz pencil") {
    RealMatrix m66 = make_sym_toeplitz(rv({7.80, 5.50, 3.70, -2.30, 8.90}));
    RealMatrix n66 = make_sym_toeplitz(rv({4.20, 1.20, -3.50, 3.90, 9.80}));
    ComplexMatrix g = n66.cast<std::complex<double>>().partialPivLu().solve(
        m66.cast<std::complex<double>>());
    Eigen::ComplexEigenSolver<ComplexMatrix> solver(g);
    REQUIRE(solver.info() == Eigen::Success);

    // the three real eigenvalues, located by their vanishing imaginary part
    std::vector<Index> real_idx;
    for (Index i = 0; i < 5; ++i)
        if (std::abs(solver.eigenvalues()(i).imag()) < 1e-9) real_idx.push_back(i);
    REQUIRE(real_idx.size() == 3);
    std::sort(real_idx.begin(), real_idx.end(), [&](Index a, Index b) {
        return solver.eigenvalues()(a).real() > solver.eigenvalues()(b).real();
    }); // descending: 4.1157, 0.2371, -1.7144 -> reorder below
    ComplexVector lam(3);
    ComplexMatrix phi(5, 3);
    // order as (largest, smallest-positive, negative) = recorded order
    lam << solver.eigenvalues()(real_idx[0]), solver.eigenvalues()(real_idx[2]),
        solver.eigenvalues()(real_idx[1]);
    phi << solver.eigenvectors().col(real_idx[0]), solver.eigenvectors().col(real_idx[2]),
        solver.eigenvectors().col(real_idx[1]);

    EigenData data(lam, phi, FieldMask::Real);
    PencilSolution sol = gpdiep(data, StructureKind::SymToeplitz);
    REQUIRE(sol.nontrivial);
    CHECK(sol.nullspace_dim == 1);
    for (double r : sol.residuals) CHECK(r <= 1e-12);

    // one-dimensional nullspace: the result is a scalar multiple of the
    // planted pencil up to optimal scaling
    RealVector got(50);
    got << vec(sol.m_left.re1()), vec(sol.n_right.re1());
    RealVector want(50);
    want << vec(m66), vec(n66);
    const double alpha = got.dot(want) / got.squaredNorm();
    CHECK((alpha * got - want).norm() <= 1e-8 * want.norm());

    // solutions carry the structure
    CHECK(rbqtest::scan_kind(StructureKind::SymToeplitz, sol.m_left, 1e-12));
    CHECK(rbqtest::scan_kind(StructureKind::SymToeplitz, sol.n_right, 1e-12));
}

TEST_CASE("gpdiep reports a trivial nullspace") {
    Rng rng(52);
    // five random complex eigenpairs over-determine a real symmetric
    // Toeplitz pencil of order five
    EigenData data(cv({{1, 1}, {2, -1}, {-1, 2}, {0.5, 0.5}, {3, 0.2}}),
                   rng.complex_matrix(5, 5), FieldMask::Real);
    PencilSolution sol = gpdiep(data, StructureKind::SymToeplitz);
    CHECK_FALSE(sol.nontrivial);
    CHECK(sol.nullspace_dim == 0);
    CHECK(sol.normalization == "no nontrivial structured pencil");
}

TEST_CASE("complex Hankel pair solver") {
    Rng rng(53);
    const Index n = 4;

    SUBCASE("plant and recover") {
        ComplexMatrix a = rng.complex_matrix(5, n), b = rng.complex_matrix(n, 5);
        ComplexMatrix c = rng.complex_matrix(5, n), d = rng.complex_matrix(n, 5);
        ComplexMatrix x = make_hankel(rng.complex_matrix(n, 1).col(0).eval(),
                                      rng.complex_matrix(n, 1).col(0).eval());
        ComplexMatrix y = make_hankel(rng.complex_matrix(n, 1).col(0).eval(),
                                      rng.complex_matrix(n, 1).col(0).eval());
        ComplexMatrix e = a * x * b + c * y * d;
        auto [xs, ys] = solve_complex_hankel_pair(a, b, c, d, e);
        CHECK((xs - x).norm() <= 1e-10 * std::max(1.0, x.norm()));
        CHECK((ys - y).norm() <= 1e-10 * std::max(1.0, y.norm()));
    }

    SUBCASE("zero data gives the zero pair") {
        ComplexMatrix a = rng.complex_matrix(3, n), b = rng.complex_matrix(n, 3);
        auto [xs, ys] = solve_complex_hankel_pair(a, b, a, b, ComplexMatrix::Zero(3, 3));
        CHECK(xs.norm() == 0.0);
        CHECK(ys.norm() == 0.0);
    }

    SUBCASE("agrees with the general solver under a complex field mask") {
        for (int trial = 0; trial < 20; ++trial) {
            ComplexMatrix a = rng.complex_matrix(3, n), b = rng.complex_matrix(n, 3);
            ComplexMatrix c = rng.complex_matrix(3, n), d = rng.complex_matrix(n, 3);
            ComplexMatrix e = rng.complex_matrix(3, 3);
            auto [xs, ys] = solve_complex_hankel_pair(a, b, c, d, e);

            LStructure l = LStructure::make(StructureKind::Hankel, FieldMask::Complex, n);
            MultiTermProblem prob;
            prob.terms.push_back({RBQMatrix::from_complex(a), RBQMatrix::from_complex(b), l});
            prob.terms.push_back({RBQMatrix::from_complex(c), RBQMatrix::from_complex(d), l});
            prob.e = RBQMatrix::from_complex(e);
            SolveReport general = solve_multi(prob);
            CHECK((general.solutions[0].z1() - xs).norm() <= 1e-10 * std::max(1.0, xs.norm()));
            CHECK((general.solutions[1].z1() - ys).norm() <= 1e-10 * std::max(1.0, ys.norm()));
        }
    }

    SUBCASE("shape mismatch") {
        CHECK_THROWS_AS(solve_complex_hankel_pair(rng.complex_matrix(3, 4),
                                                  rng.complex_matrix(4, 3),
                                                  rng.complex_matrix(3, 4),
                                                  rng.complex_matrix(4, 3),
                                                  rng.complex_matrix(2, 3)),
                        std::invalid_argument);
    }
}

TEST_CASE("real symmetric Toeplitz pair solver") {
    Rng rng(54);
    const Index n = 5;

    SUBCASE("plant and recover") {
        RealMatrix a = rng.real_matrix(6, n), b = rng.real_matrix(n, 6);
        RealMatrix c = rng.real_matrix(6, n), d = rng.real_matrix(n, 6);
        RealMatrix x = make_sym_toeplitz(rng.real_vector(n));
        RealMatrix y = make_sym_toeplitz(rng.real_vector(n));
        auto [xs, ys] = solve_real_symtoeplitz_pair(a, b, c, d, RealMatrix(a * x * b + c * y * d));
        CHECK((xs - x).norm() <= 1e-10 * std::max(1.0, x.norm()));
        CHECK((ys - y).norm() <= 1e-10 * std::max(1.0, y.norm()));
    }

    SUBCASE("identity coefficients split a structured target evenly") {
        RealMatrix eye = RealMatrix::Identity(n, n);
        RealMatrix e = make_sym_toeplitz(rng.real_vector(n));
        auto [xs, ys] = solve_real_symtoeplitz_pair(eye, eye, eye, eye, e);
        CHECK((xs - 0.5 * e).norm() < 1e-10);
        CHECK((ys - 0.5 * e).norm() < 1e-10);

        // independent pseudoinverse oracle on the assembled system
        RealMatrix kst = basis_real(StructureKind::SymToeplitz, n);
        RealMatrix q(n * n, 2 * n);
        q << kst, kst;
        RealVector params = pinv(q) * vec(e);
        CHECK((vec(xs) - kst * params.head(n)).norm() < 1e-10);
        CHECK((vec(ys) - kst * params.tail(n)).norm() < 1e-10);
    }

    SUBCASE("zero data gives the zero pair") {
        RealMatrix a = rng.real_matrix(4, n), b = rng.real_matrix(n, 4);
        auto [xs, ys] = solve_real_symtoeplitz_pair(a, b, a, b, RealMatrix::Zero(4, 4));
        CHECK(xs.norm() == 0.0);
        CHECK(ys.norm() == 0.0);
    }

    SUBCASE("agrees with the general solver under a real field mask") {
        for (int trial = 0; trial < 20; ++trial) {
            RealMatrix a = rng.real_matrix(4, n), b = rng.real_matrix(n, 4);
            RealMatrix c = rng.real_matrix(4, n), d = rng.real_matrix(n, 4);
            RealMatrix e = rng.real_matrix(4, 4);
            auto [xs, ys] = solve_real_symtoeplitz_pair(a, b, c, d, e);

            LStructure l = LStructure::make(StructureKind::SymToeplitz, FieldMask::Real, n);
            MultiTermProblem prob;
            prob.terms.push_back({RBQMatrix::from_real(a), RBQMatrix::from_real(b), l});
            prob.terms.push_back({RBQMatrix::from_real(c), RBQMatrix::from_real(d), l});
            prob.e = RBQMatrix::from_real(e);
            SolveReport general = solve_multi(prob);
            CHECK((general.solutions[0].re1() - xs).norm() <= 1e-10 * std::max(1.0, xs.norm()));
            CHECK((general.solutions[1].re1() - ys).norm() <= 1e-10 * std::max(1.0, ys.norm()));
        }
    }
}
