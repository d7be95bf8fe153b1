#include "rbq/rbme.hpp"

#include <cmath>
#include <stdexcept>

#include "rbq/vectorize.hpp"

namespace rbq {

namespace {

ComplexMatrix coefficient_map(const RBQMatrix& a, const RBQMatrix& b) {
    return kron(hrep(b).transpose(), a.z1()) + kron(hrep(jflip(b)).transpose(), a.z2());
}

void check_term_shapes(const RBQMatrix& a, const RBQMatrix& b, const LStructure& l,
                       const char* what) {
    if (a.cols() != l.rows() || b.rows() != l.cols())
        throw std::invalid_argument(std::string(what) + ": coefficient/unknown shapes do not chain");
}

struct StackedSolution {
    RealVector x;
    double stacked_residual;
    bool consistent;
    bool unique;
    Index nullspace_dim;
};

StackedSolution run_stacked(const StackedSystem& sys, const SolveOptions& opts) {
    PartitionedFactors f = partitioned_factors(sys.q1, sys.q2);
    StackedSolution out;
    out.x = f.pseudoinverse * sys.e;
    RealMatrix stack = sys.stacked();
    out.stacked_residual = (stack * out.x - sys.e).norm();
    out.consistent = out.stacked_residual <= opts.tol * std::max(1.0, sys.e.norm());

    Eigen::JacobiSVD<RealMatrix> svd(stack);
    const auto& sv = svd.singularValues();
    Index rank = 0;
    if (sv.size() > 0 && sv(0) > 0.0)
        for (Index i = 0; i < sv.size(); ++i)
            if (sv(i) > opts.tol * sv(0)) ++rank;
    out.unique = rank == sys.params();
    out.nullspace_dim = sys.params() - rank;
    return out;
}

// Frobenius residual of the original equation must agree with the 2-norm
// residual of the stacked system.
void check_residual_identity(double fro, double stacked) {
    if (std::abs(fro - stacked) > 1e-6 * std::max(1.0, stacked))
        throw std::logic_error("stacked residual and equation residual disagree");
}

} // namespace

ComplexMatrix build_term_matrix(const RBQMatrix& a, const RBQMatrix& b, const LStructure& l) {
    check_term_shapes(a, b, l, "build_term_matrix");
    ComplexMatrix wl = w_matrix(l.rows(), l.cols()) * l.basis().cast<std::complex<double>>();
    return coefficient_map(a, b) * wl;
}

ComplexMatrix build_transpose_term_matrix(const RBQMatrix& c, const RBQMatrix& d,
                                          const LStructure& l) {
    if (c.cols() != l.cols() || d.rows() != l.rows())
        throw std::invalid_argument(
            "build_transpose_term_matrix: coefficient/unknown shapes do not chain");
    ComplexMatrix swl = s_matrix(l.rows(), l.cols()).cast<std::complex<double>>() *
                        w_matrix(l.rows(), l.cols()) * l.basis().cast<std::complex<double>>();
    return coefficient_map(c, d) * swl;
}

StackedSystem assemble_multi(const MultiTermProblem& prob) {
    if (prob.terms.empty()) throw std::invalid_argument("assemble_multi: no terms");
    const Index m = prob.e.rows(), t = prob.e.cols();
    Index p_total = 0;
    for (const auto& term : prob.terms) {
        if (term.a.rows() != m || term.b.cols() != t)
            throw std::invalid_argument("assemble_multi: term shapes do not chain to E");
        check_term_shapes(term.a, term.b, term.structure, "assemble_multi");
        p_total += term.structure.param_count();
    }
    ComplexMatrix s(2 * m * t, p_total);
    Index col = 0;
    for (const auto& term : prob.terms) {
        const Index p = term.structure.param_count();
        s.middleCols(col, p) = build_term_matrix(term.a, term.b, term.structure);
        col += p;
    }
    ComplexVector epsi = vec_psi(prob.e);
    StackedSystem sys;
    sys.q1 = s.real();
    sys.q2 = s.imag();
    sys.e.resize(4 * m * t);
    sys.e.head(2 * m * t) = epsi.real();
    sys.e.tail(2 * m * t) = epsi.imag();
    return sys;
}

StackedSystem assemble_transpose(const TransposeProblem& prob) {
    if (prob.direct_terms.empty() && prob.transpose_terms.empty())
        throw std::invalid_argument("assemble_transpose: no terms");
    const Index m = prob.e.rows(), t = prob.e.cols();
    const Index p = prob.structure.param_count();
    ComplexMatrix s = ComplexMatrix::Zero(2 * m * t, p);
    for (const auto& [a, b] : prob.direct_terms) {
        if (a.rows() != m || b.cols() != t)
            throw std::invalid_argument("assemble_transpose: direct term shapes do not chain");
        s += build_term_matrix(a, b, prob.structure);
    }
    for (const auto& [c, d] : prob.transpose_terms) {
        if (c.rows() != m || d.cols() != t)
            throw std::invalid_argument("assemble_transpose: transpose term shapes do not chain");
        s += build_transpose_term_matrix(c, d, prob.structure);
    }
    ComplexVector epsi = vec_psi(prob.e);
    StackedSystem sys;
    sys.q1 = s.real();
    sys.q2 = s.imag();
    sys.e.resize(4 * m * t);
    sys.e.head(2 * m * t) = epsi.real();
    sys.e.tail(2 * m * t) = epsi.imag();
    return sys;
}

StackedSystem assemble_coupled(const CoupledProblem& prob) {
    if (prob.equations.empty()) throw std::invalid_argument("assemble_coupled: no equations");
    const Index m = prob.equations.front().a.rows();
    const Index t = prob.equations.front().b.cols();
    const Index p = prob.structure.param_count();
    const Index block = 2 * m * t;
    ComplexMatrix tmat(block * static_cast<Index>(prob.equations.size()), p);
    ComplexVector z(block * static_cast<Index>(prob.equations.size()));
    Index row = 0;
    for (const auto& eq : prob.equations) {
        if (eq.a.rows() != m || eq.b.cols() != t || eq.e.rows() != m || eq.e.cols() != t)
            throw std::invalid_argument("assemble_coupled: equations must share the output shape");
        check_term_shapes(eq.a, eq.b, prob.structure, "assemble_coupled");
        tmat.middleRows(row, block) = build_term_matrix(eq.a, eq.b, prob.structure);
        z.segment(row, block) = vec_psi(eq.e);
        row += block;
    }
    StackedSystem sys;
    sys.q1 = tmat.real();
    sys.q2 = tmat.imag();
    sys.e.resize(2 * z.size());
    sys.e.head(z.size()) = z.real();
    sys.e.tail(z.size()) = z.imag();
    return sys;
}

SolveReport solve_multi(const MultiTermProblem& prob, const SolveOptions& opts) {
    StackedSystem sys = assemble_multi(prob);
    StackedSolution sol = run_stacked(sys, opts);

    SolveReport report;
    report.parameters = sol.x;
    Index offset = 0;
    for (const auto& term : prob.terms) {
        const Index p = term.structure.param_count();
        report.solutions.push_back(term.structure.unpack(sol.x.segment(offset, p)));
        offset += p;
    }
    RBQMatrix acc(prob.e.rows(), prob.e.cols());
    for (std::size_t l = 0; l < prob.terms.size(); ++l)
        acc = acc + prob.terms[l].a * report.solutions[l] * prob.terms[l].b;
    report.residual = frobenius_norm(acc - prob.e);
    check_residual_identity(report.residual, sol.stacked_residual);
    report.consistent = sol.consistent;
    report.unique = sol.unique;
    report.nullspace_dim = sol.nullspace_dim;
    return report;
}

SolveReport solve_transpose(const TransposeProblem& prob, const SolveOptions& opts) {
    StackedSystem sys = assemble_transpose(prob);
    StackedSolution sol = run_stacked(sys, opts);

    SolveReport report;
    report.parameters = sol.x;
    RBQMatrix x = prob.structure.unpack(sol.x);
    report.solutions.push_back(x);
    RBQMatrix acc(prob.e.rows(), prob.e.cols());
    for (const auto& [a, b] : prob.direct_terms) acc = acc + a * x * b;
    RBQMatrix xt = x.transpose();
    for (const auto& [c, d] : prob.transpose_terms) acc = acc + c * xt * d;
    report.residual = frobenius_norm(acc - prob.e);
    check_residual_identity(report.residual, sol.stacked_residual);
    report.consistent = sol.consistent;
    report.unique = sol.unique;
    report.nullspace_dim = sol.nullspace_dim;
    return report;
}

SolveReport solve_coupled(const CoupledProblem& prob, const SolveOptions& opts) {
    StackedSystem sys = assemble_coupled(prob);
    StackedSolution sol = run_stacked(sys, opts);

    SolveReport report;
    report.parameters = sol.x;
    RBQMatrix x = prob.structure.unpack(sol.x);
    report.solutions.push_back(x);
    double sq = 0.0;
    for (const auto& eq : prob.equations) {
        double r = frobenius_norm(eq.a * x * eq.b - eq.e);
        sq += r * r;
    }
    report.residual = std::sqrt(sq);
    check_residual_identity(report.residual, sol.stacked_residual);
    report.consistent = sol.consistent;
    report.unique = sol.unique;
    report.nullspace_dim = sol.nullspace_dim;
    return report;
}

} // namespace rbq
