#ifndef RBQ_STRUCTURE_HPP
#define RBQ_STRUCTURE_HPP

#include <optional>
#include <string>

#include "rbq/matrix.hpp"

namespace rbq {

enum class StructureKind { Toeplitz, SymToeplitz, Hankel, Circulant, Diagonal, Full, Custom };

/// Which real components of a matrix carry free parameters. Inactive
/// components are forced to zero.
///   RBQ     -> Re(Z1), Im(Z1), Re(Z2), Im(Z2)
///   Complex -> Re(Z1), Im(Z1)
///   Real    -> Re(Z1)
enum class FieldMask { RBQ, Complex, Real };

const char* to_string(StructureKind kind);
const char* to_string(FieldMask mask);
std::optional<StructureKind> structure_kind_from_string(const std::string& s);
std::optional<FieldMask> field_mask_from_string(const std::string& s);
Index active_components(FieldMask mask);

/// Parameter basis of one real component: the mn x p matrix K with
/// vec(X) = K * params for every structured real X. Entries are 0/1.
/// Square kinds require m == n; Full allows any shape. For Custom use
/// kernel_basis.
RealMatrix basis_real(StructureKind kind, Index m, Index n);
inline RealMatrix basis_real(StructureKind kind, Index n) { return basis_real(kind, n, n); }

/// Orthonormal basis of the kernel of a constraint matrix C (k x mn); the
/// structure is {X : C*vec(X) = 0}. Rank is decided by a singular value
/// cutoff of 1e-10 relative to the largest.
RealMatrix kernel_basis(const RealMatrix& constraint);

/// Number of free parameters per component for a built-in kind.
Index component_param_count(StructureKind kind, Index m, Index n);

/// Toeplitz matrix with first column c and first row r; the diagonal entry
/// comes from c(0).
ComplexMatrix make_toeplitz(const ComplexVector& c, const ComplexVector& r);

/// Real symmetric Toeplitz matrix with first column (and row) c.
RealMatrix make_sym_toeplitz(const RealVector& c);

/// Hankel matrix with first column c and last row r; the corner entry comes
/// from c(n-1).
ComplexMatrix make_hankel(const ComplexVector& c, const ComplexVector& r);

/// A linear structure on m x n matrices over the masked field: the real
/// basis M with vec_arrow(X) = M * params, replicated block-diagonally over
/// the active components (zero rows for inactive ones).
class LStructure {
public:
    /// Built-in kinds.
    static LStructure make(StructureKind kind, FieldMask mask, Index m, Index n);
    static LStructure make(StructureKind kind, FieldMask mask, Index n) {
        return make(kind, mask, n, n);
    }
    /// Kernel of a constraint matrix (k x mn), applied per active component.
    static LStructure custom(const RealMatrix& constraint, FieldMask mask, Index m, Index n);

    StructureKind kind() const { return kind_; }
    FieldMask mask() const { return mask_; }
    Index rows() const { return m_; }
    Index cols() const { return n_; }
    Index param_count() const { return basis_.cols(); }
    const RealMatrix& basis() const { return basis_; }

    /// Parameters of a structured X; least-squares fit with a residual
    /// check. Throws std::invalid_argument when X violates the structure by
    /// more than tol * max(1, ||X||_F), reporting the violation magnitude.
    RealVector pack(const RBQMatrix& x, double tol = 1e-10) const;

    /// Matrix from parameters; vec_arrow(unpack(v)) == basis * v exactly.
    RBQMatrix unpack(const RealVector& v) const;

    /// Structure membership within tol * max(1, ||X||_F).
    bool contains(const RBQMatrix& x, double tol = 1e-10) const;

private:
    LStructure(StructureKind kind, FieldMask mask, Index m, Index n, RealMatrix basis)
        : kind_(kind), mask_(mask), m_(m), n_(n), basis_(std::move(basis)) {}

    StructureKind kind_;
    FieldMask mask_;
    Index m_, n_;
    RealMatrix basis_; // 4mn x p
};

} // namespace rbq

#endif
