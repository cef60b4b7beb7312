#include "mocklie/algebra.hpp"

#include <stdexcept>

#include "mocklie/derivations.hpp"

namespace mocklie {

void StructureTensor::check_index(std::size_t i) const
{
    if (i >= dim_) {
        throw std::out_of_range("basis index " + std::to_string(i + 1) + " exceeds dim " +
                                std::to_string(dim_));
    }
}

Scalar StructureTensor::coeff(std::size_t i, std::size_t j, std::size_t k) const
{
    check_index(i);
    check_index(j);
    check_index(k);
    const auto it = coeffs_.find({i, j, k});
    return it == coeffs_.end() ? Scalar::zero(field_) : it->second;
}

void StructureTensor::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& value)
{
    check_index(i);
    check_index(j);
    check_index(k);
    if (!(value.field() == field_)) throw FieldMismatchError("structure constant in wrong field");
    if (value.is_zero()) {
        coeffs_.erase({i, j, k});
    } else {
        coeffs_.insert_or_assign({i, j, k}, value);
    }
}

Vector StructureTensor::product(std::size_t i, std::size_t j) const
{
    check_index(i);
    check_index(j);
    Vector v = zero_vector(field_, dim_);
    for (auto it = coeffs_.lower_bound({i, j, 0}); it != coeffs_.end(); ++it) {
        const auto& [key, c] = *it;
        if (key[0] != i || key[1] != j) break;
        v[key[2]] = c;
    }
    return v;
}

bool StructureTensor::is_commutative() const
{
    for (const auto& [key, c] : coeffs_) {
        const auto it = coeffs_.find({key[1], key[0], key[2]});
        if (it == coeffs_.end() || !(it->second == c)) return false;
    }
    return true;
}

StructureTensor StructureTensor::to_field(const Field& target) const
{
    StructureTensor out(target, dim_);
    for (const auto& [key, c] : coeffs_) out.set(key[0], key[1], key[2], c.to_field(target));
    return out;
}

bool operator==(const StructureTensor& a, const StructureTensor& b)
{
    return a.field_ == b.field_ && a.dim_ == b.dim_ && a.coeffs_ == b.coeffs_;
}

Vector multiply(const Algebra& a, std::span<const Scalar> x, std::span<const Scalar> y)
{
    if (x.size() != a.dim() || y.size() != a.dim()) {
        throw ShapeError("multiply: vector length differs from algebra dimension");
    }
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (!(x[i].field() == a.field()) || !(y[i].field() == a.field())) {
            throw FieldMismatchError("multiply: vector over a different field");
        }
    }
    Vector out = zero_vector(a.field(), a.dim());
    for (const auto& [key, c] : a.tensor.entries()) {
        const auto& xi = x[key[0]];
        const auto& yj = y[key[1]];
        if (xi.is_zero() || yj.is_zero()) continue;
        out[key[2]] += xi * yj * c;
    }
    return out;
}

Vector jacobiator(const Algebra& a, std::size_t i, std::size_t j, std::size_t k)
{
    const auto& t = a.tensor;
    const auto e = [&](std::size_t idx) { return unit_vector(a.field(), a.dim(), idx); };
    return multiply(a, t.product(i, j), e(k)) + multiply(a, t.product(k, i), e(j)) +
           multiply(a, t.product(j, k), e(i));
}

AxiomReport check_axioms(const Algebra& a)
{
    AxiomReport report;
    const std::size_t n = a.dim();
    const auto& t = a.tensor;
    for (std::size_t i = 0; i < n && report.commutative; ++i) {
        for (std::size_t j = 0; j < n && report.commutative; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (!(t.coeff(i, j, k) == t.coeff(j, i, k))) {
                    report.commutative = false;
                    report.commutative_witness = {i, j, k};
                    break;
                }
            }
        }
    }
    for (std::size_t i = 0; i < n && report.jacobi; ++i) {
        for (std::size_t j = 0; j < n && report.jacobi; ++j) {
            for (std::size_t k = 0; k < n && report.jacobi; ++k) {
                const Vector jac = jacobiator(a, i, j, k);
                for (std::size_t l = 0; l < n; ++l) {
                    if (!jac[l].is_zero()) {
                        report.jacobi = false;
                        report.jacobi_witness = {i, j, k, l};
                        break;
                    }
                }
            }
        }
    }
    report.mock_lie = report.commutative && report.jacobi;
    return report;
}

Algebra direct_sum(const Algebra& a, const Algebra& b, std::string name)
{
    if (!(a.field() == b.field())) throw FieldMismatchError("direct_sum: field mismatch");
    const std::size_t shift = a.dim();
    StructureTensor t(a.field(), a.dim() + b.dim());
    for (const auto& [key, c] : a.tensor.entries()) t.set(key[0], key[1], key[2], c);
    for (const auto& [key, c] : b.tensor.entries()) {
        t.set(key[0] + shift, key[1] + shift, key[2] + shift, c);
    }
    return {std::move(name), std::move(t)};
}

Algebra direct_sum(const Algebra& a, const Algebra& b)
{
    return direct_sum(a, b, a.name + "+" + b.name);
}

Algebra transport(const Algebra& a, const Matrix& p)
{
    if (p.rows() != a.dim() || !p.is_square()) throw ShapeError("transport: P has wrong shape");
    if (!(p.field() == a.field())) throw FieldMismatchError("transport: field mismatch");
    const Matrix q = inverse(p);
    const std::size_t n = a.dim();
    std::vector<Vector> preimage;
    for (std::size_t i = 0; i < n; ++i) preimage.push_back(q.column(i));

    StructureTensor t(a.field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Vector image = p.apply(multiply(a, preimage[i], preimage[j]));
            for (std::size_t k = 0; k < n; ++k) t.set(i, j, k, image[k]);
        }
    }
    return {a.name, std::move(t)};
}

Algebra abelian(const Field& f, std::size_t dim, std::string name)
{
    return {std::move(name), StructureTensor(f, dim)};
}

namespace {

// (i, j, k) triples, 1-based as written in the table, all with coefficient 1.
Algebra from_table(std::string name, std::size_t dim,
                   std::initializer_list<std::array<std::size_t, 3>> products)
{
    const Field q = Field::rationals();
    StructureTensor t(q, dim);
    for (const auto& [i, j, k] : products) t.set(i - 1, j - 1, k - 1, Scalar::one(q));
    return {std::move(name), std::move(t)};
}

std::vector<Algebra> build_catalog()
{
    const Field q = Field::rationals();
    const Algebra a01 = abelian(q, 1, "A_{0,1}");
    const Algebra a12 = from_table("A_{1,2}", 2, {{1, 1, 2}});
    const Algebra a13 = from_table("A_{1,3}", 3, {{1, 1, 2}, {3, 3, 2}});

    const Algebra a01_2 = direct_sum(a01, a01, "A_{0,1}^2");
    const Algebra a01_3 = direct_sum(a01_2, a01, "A_{0,1}^3");
    const Algebra a01_4 = direct_sum(a01_3, a01, "A_{0,1}^4");

    std::vector<Algebra> entries = {
        a01,
        a01_2,
        a12,
        a01_3,
        direct_sum(a12, a01, "A_{1,2}+A_{0,1}"),
        a13,
        a01_4,
        direct_sum(a12, a01_2, "A_{1,2}+A_{0,1}^2"),
        direct_sum(a13, a01, "A_{1,3}+A_{0,1}"),
        direct_sum(a12, a12, "A_{1,2}+A_{1,2}"),
        from_table("A_{1,4}", 4, {{1, 1, 2}, {1, 3, 4}, {3, 1, 4}}),
        from_table("A_{2,4}", 4, {{1, 1, 2}, {3, 4, 2}, {4, 3, 2}}),
    };

    // Composite rows, exactly as listed in the table.
    const std::vector<Algebra> listed = {
        abelian(q, 2, "A_{0,1}^2"),
        abelian(q, 3, "A_{0,1}^3"),
        abelian(q, 4, "A_{0,1}^4"),
        from_table("A_{1,2}+A_{0,1}", 3, {{1, 1, 2}}),
        from_table("A_{1,2}+A_{0,1}^2", 4, {{1, 1, 2}}),
        from_table("A_{1,3}+A_{0,1}", 4, {{1, 1, 2}, {3, 3, 2}}),
        from_table("A_{1,2}+A_{1,2}", 4, {{1, 1, 2}, {3, 3, 4}}),
    };
    for (const auto& want : listed) {
        for (const auto& got : entries) {
            if (got.name == want.name && !(got.tensor == want.tensor)) {
                throw std::logic_error("catalog: direct sum for " + want.name +
                                       " disagrees with its table row");
            }
        }
    }
    return entries;
}

}  // namespace

const std::vector<Algebra>& catalog()
{
    static const std::vector<Algebra> entries = build_catalog();
    return entries;
}

const Algebra& catalog_entry(const std::string& name)
{
    for (const auto& a : catalog()) {
        if (a.name == name) return a;
    }
    throw std::out_of_range("unknown catalog entry '" + name + "'");
}

std::vector<std::string> nonabelian_catalog_names()
{
    std::vector<std::string> names;
    for (const auto& a : catalog()) {
        if (!a.tensor.entries().empty()) names.push_back(a.name);
    }
    return names;
}

std::size_t dim_square(const Algebra& a)
{
    std::vector<Vector> products;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) products.push_back(a.tensor.product(i, j));
    }
    return rank(Matrix::from_rows(a.field(), a.dim(), products));
}

std::size_t dim_annihilator(const Algebra& a)
{
    // Row (i, k), column m: coefficient c_{mi}^k of x_m in (x e_i)_k.
    const std::size_t n = a.dim();
    Matrix system(a.field(), n * n, n);
    for (const auto& [key, c] : a.tensor.entries()) {
        system(key[1] * n + key[2], key[0]) = c;
    }
    return kernel_basis(system).size();
}

Invariants invariants(const Algebra& a)
{
    return {a.dim(), dim_square(a), dim_annihilator(a), derivation_basis(a).dim()};
}

}  // namespace mocklie
