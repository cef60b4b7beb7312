#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mocklie/algebra.hpp"
#include "mocklie/matrix.hpp"

namespace mocklie {

// Matrix convention: column j of a derivation matrix is the image of e_j,
// i.e. d(e_j) = sum_i d(i, j) e_i.

/// Raised when the commutator of two computed derivations leaves their span.
class ClosureError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// d(e_i e_j) - d(e_i) e_j - e_i d(e_j).
Vector leibniz_defect(const Algebra& a, const Matrix& d, std::size_t i, std::size_t j);

/// Zero Leibniz defect on every basis pair, which by bilinearity is
/// equivalent to the Leibniz rule on all of L.
bool is_derivation(const Algebra& a, const Matrix& d);

enum class PairSelection {
    /// Pairs i <= j only; enough when the product is commutative.
    UpperTriangle,
    AllPairs,
};

/// Linearised Leibniz conditions. Rows are (i, j, k) for the selected pairs
/// (lexicographic) and k in [0, n); column r*n + s is the unknown d(r, s).
/// The flattened row-major matrix is thus a solution vector.
Matrix constraint_matrix(const Algebra& a, PairSelection pairs = PairSelection::UpperTriangle);

struct DerivationSpace {
    std::size_t algebra_dim = 0;
    Field field = Field::rationals();
    /// Flattened row-major these form the RREF basis of the space.
    std::vector<Matrix> basis;

    std::size_t dim() const noexcept { return basis.size(); }
    /// Basis matrices flattened row-major, stacked as rows.
    Matrix flattened() const;
};

/// Der(L) as a subspace of n x n matrices. Non-commutative inputs are
/// solved with every (i, j) pair.
DerivationSpace derivation_basis(const Algebra& a);

/// d1 d2 - d2 d1.
Matrix bracket(const Matrix& d1, const Matrix& d2);

/// Coordinates of m in the space's basis; nullopt if m lies outside it.
std::optional<Vector> coordinates(const DerivationSpace& space, const Matrix& m);

/// Lie structure constants of Der(L) in the canonical basis D_1..D_m:
/// [D_p, D_q] = sum_r c_{pq}^r D_r. Throws ClosureError if a bracket
/// escapes the span.
StructureTensor der_structure_constants(const Algebra& a);
StructureTensor der_structure_constants(const DerivationSpace& space);

/// A linear form in named parameters with no constant term.
struct LinearForm {
    std::map<std::string, Scalar> terms;

    bool is_zero() const noexcept { return terms.empty(); }
    Scalar coefficient(const std::string& name, const Field& f) const;
    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

/// An n x n grid of linear forms: the "one matrix with parameters" view of
/// a linear space of matrices.
struct ParametricFamily {
    std::size_t n = 0;
    Field field = Field::rationals();
    std::vector<std::string> parameters;
    /// Row-major, n * n entries.
    std::vector<LinearForm> entries;

    const LinearForm& at(std::size_t r, std::size_t c) const { return entries[r * n + c]; }
    std::size_t dim() const;
    /// One matrix per parameter that actually occurs, in parameter order.
    std::vector<Matrix> basis() const;
    /// Substitutes values (in parameter order) into every entry.
    Matrix evaluate(const std::vector<Scalar>& values) const;
    /// Same family with coefficients mapped into another field.
    ParametricFamily to_field(const Field& target) const;
};

/// Parameter name for matrix position (r, s): "d{r+1}{s+1}", with an
/// underscore separator once n >= 10.
std::string parameter_name(std::size_t n, std::size_t r, std::size_t s);

/// Parametric rendering of a space. Positions are scanned column by column
/// (d11, d21, ..., dn1, d12, ...); each position whose value is not already
/// determined by earlier ones becomes a free parameter named after it.
ParametricFamily render_parametric(const DerivationSpace& s);

/// "-d41", "2*d11", "d44 - d33", "0".
std::string to_string(const LinearForm& form, const std::vector<std::string>& order);
/// Bracketed grid with right-aligned columns, one matrix row per line.
std::string render_grid(const ParametricFamily& family);

/// Builds a family from entry strings such as "2*d44 - 2*d33" or "-d31".
/// Parameters are ordered by matrix position.
ParametricFamily family_from_strings(const Field& f, const std::vector<std::vector<std::string>>& rows);

/// The published derivation-matrix family for a non-abelian catalog entry,
/// transcribed as printed. Throws std::invalid_argument for abelian or
/// unknown names.
ParametricFamily published_family(const std::string& catalog_name);

struct VerificationReport {
    std::string catalog_name;
    std::size_t computed_dim = 0;
    std::size_t published_dim = 0;
    bool spaces_equal = false;
    /// A matrix in exactly one of the two spaces when they differ.
    std::optional<Matrix> discrepancy;
    /// True when the witness is a computed derivation absent from the family.
    bool witness_is_derivation = false;
};

/// Compares Der(a) with a family. The computed space is treated as ground
/// truth; the witness comes from whichever side has a vector outside the
/// other.
VerificationReport verify_family(const Algebra& a, const ParametricFamily& family);

/// verify_family on a catalog entry and its published family, over `field`
/// (the rationals by default). Characteristic 2 and 3 are rejected.
VerificationReport verify_published_family(const std::string& catalog_name,
                                           const Field& field = Field::rationals());

/// verify_published_family for every non-abelian catalog entry, in table
/// order. Entries are checked concurrently.
std::vector<VerificationReport> verify_catalog(const Field& field = Field::rationals());

}  // namespace mocklie
