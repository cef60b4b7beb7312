#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mocklie/field.hpp"
#include "mocklie/matrix.hpp"

namespace mocklie {

// Basis indices are 0-based throughout the C++ API; documents, reports and
// parameter names use 1-based e1..en.

/// Structure constants c_{ij}^k of e_i * e_j = sum_k c_{ij}^k e_k.
/// Only nonzero coefficients are stored.
class StructureTensor {
public:
    using Key = std::array<std::size_t, 3>;  // (i, j, k)

    StructureTensor(const Field& f, std::size_t dim) : field_(f), dim_(dim) {}

    const Field& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }

    Scalar coeff(std::size_t i, std::size_t j, std::size_t k) const;
    /// Setting a zero coefficient erases the entry.
    void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value);

    /// Nonzero entries in lexicographic (i, j, k) order.
    const std::map<Key, Scalar>& entries() const noexcept { return coeffs_; }
    /// Coefficient vector of e_i * e_j.
    Vector product(std::size_t i, std::size_t j) const;

    bool is_commutative() const;

    /// Same constants with every coefficient mapped into `target`.
    StructureTensor to_field(const Field& target) const;

    friend bool operator==(const StructureTensor&, const StructureTensor&);

private:
    void check_index(std::size_t i) const;

    Field field_;
    std::size_t dim_;
    std::map<Key, Scalar> coeffs_;
};

struct Algebra {
    std::string name;
    StructureTensor tensor;

    std::size_t dim() const noexcept { return tensor.dim(); }
    const Field& field() const noexcept { return tensor.field(); }
};

/// Bilinear extension of the tensor: sum_{i,j} x_i y_j (e_i * e_j).
Vector multiply(const Algebra& a, std::span<const Scalar> x, std::span<const Scalar> y);

/// (e_i e_j) e_k + (e_k e_i) e_j + (e_j e_k) e_i.
Vector jacobiator(const Algebra& a, std::size_t i, std::size_t j, std::size_t k);

struct AxiomReport {
    bool commutative = true;
    /// First (i, j, k) with c_{ij}^k != c_{ji}^k.
    std::optional<std::array<std::size_t, 3>> commutative_witness;
    bool jacobi = true;
    /// First (i, j, k, l) with a nonzero l-th jacobiator component.
    std::optional<std::array<std::size_t, 4>> jacobi_witness;
    bool mock_lie = true;
};

AxiomReport check_axioms(const Algebra& a);

/// Block sum: a on indices [0, dim a), b shifted by dim a, cross products zero.
Algebra direct_sum(const Algebra& a, const Algebra& b);
Algebra direct_sum(const Algebra& a, const Algebra& b, std::string name);

/// The algebra pushed forward along the invertible matrix P:
/// x *' y = P((P^-1 x)(P^-1 y)). P is then an isomorphism a -> result,
/// so Der(result) = P Der(a) P^-1.
Algebra transport(const Algebra& a, const Matrix& p);

Algebra abelian(const Field& f, std::size_t dim, std::string name);

/// All twelve Mock-Lie algebras of dimension <= 4, over the rationals, in
/// table order.
const std::vector<Algebra>& catalog();
/// Throws std::out_of_range for unknown names.
const Algebra& catalog_entry(const std::string& name);
/// The eight non-abelian entries, in table order.
std::vector<std::string> nonabelian_catalog_names();

struct Invariants {
    std::size_t dim = 0;
    std::size_t dim_square = 0;
    std::size_t dim_annihilator = 0;
    std::size_t dim_der = 0;
};

/// Rank of the matrix rows {e_i e_j}: the dimension of L*L.
std::size_t dim_square(const Algebra& a);
/// Dimension of {x : x e_i = 0 for all i}.
std::size_t dim_annihilator(const Algebra& a);
Invariants invariants(const Algebra& a);

}  // namespace mocklie
