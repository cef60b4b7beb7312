#include "mocklie/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace mocklie {

namespace {

void require_same_length(std::size_t a, std::size_t b, const char* op)
{
    if (a != b) {
        throw ShapeError(std::string(op) + ": length mismatch (" + std::to_string(a) + " vs " +
                         std::to_string(b) + ")");
    }
}

void require_same_field(const Field& a, const Field& b, const char* op)
{
    if (!(a == b)) {
        throw FieldMismatchError(std::string(op) + ": field mismatch (" + a.to_string() + " vs " +
                                 b.to_string() + ")");
    }
}

}  // namespace

Vector zero_vector(const Field& f, std::size_t n)
{
    return Vector(n, Scalar::zero(f));
}

Vector unit_vector(const Field& f, std::size_t n, std::size_t index)
{
    if (index >= n) throw ShapeError("unit vector index out of range");
    Vector v = zero_vector(f, n);
    v[index] = Scalar::one(f);
    return v;
}

bool is_zero(std::span<const Scalar> v)
{
    return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector operator+(const Vector& a, const Vector& b)
{
    require_same_length(a.size(), b.size(), "vector add");
    Vector out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

Vector operator-(const Vector& a, const Vector& b)
{
    require_same_length(a.size(), b.size(), "vector sub");
    Vector out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

Vector operator*(const Scalar& s, const Vector& v)
{
    Vector out(v);
    for (auto& x : out) x = s * x;
    return out;
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f))
{
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows)
{
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require_same_length(rows[r].size(), cols, "from_rows");
        for (std::size_t c = 0; c < cols; ++c) {
            require_same_field(rows[r][c].field(), f, "from_rows");
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

Matrix Matrix::identity(const Field& f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_ints(const Field& f, const std::vector<std::vector<long>>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        require_same_length(rows[r].size(), cols, "from_ints");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar::from_int(f, rows[r][c]);
    }
    return m;
}

Matrix Matrix::from_flat(const Field& f, std::size_t rows, std::size_t cols, Vector entries)
{
    require_same_length(entries.size(), rows * cols, "from_flat");
    Matrix m(f, rows, cols);
    for (const auto& s : entries) require_same_field(s.field(), f, "from_flat");
    m.data_ = std::move(entries);
    return m;
}

std::span<const Scalar> Matrix::row(std::size_t r) const
{
    return std::span<const Scalar>(data_).subspan(r * cols_, cols_);
}

Vector Matrix::row_vector(std::size_t r) const
{
    const auto s = row(r);
    return Vector(s.begin(), s.end());
}

Vector Matrix::column(std::size_t c) const
{
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

std::vector<Vector> Matrix::row_vectors() const
{
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
    return out;
}

bool Matrix::is_zero() const
{
    return mocklie::is_zero(data_);
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix matmul(const Matrix& a, const Matrix& b)
{
    require_same_field(a.field(), b.field(), "matmul");
    if (a.cols() != b.rows()) throw ShapeError("matmul: inner dimensions differ");
    Matrix out(a.field(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (!b(k, j).is_zero()) out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

Matrix add(const Matrix& a, const Matrix& b)
{
    require_same_field(a.field(), b.field(), "add");
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("add: shape mismatch");
    return Matrix::from_flat(a.field(), a.rows(), a.cols(), a.flat() + b.flat());
}

Matrix sub(const Matrix& a, const Matrix& b)
{
    require_same_field(a.field(), b.field(), "sub");
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("sub: shape mismatch");
    return Matrix::from_flat(a.field(), a.rows(), a.cols(), a.flat() - b.flat());
}

Matrix scale(const Scalar& s, const Matrix& m)
{
    require_same_field(s.field(), m.field(), "scale");
    return Matrix::from_flat(m.field(), m.rows(), m.cols(), s * m.flat());
}

Matrix transpose(const Matrix& m)
{
    Matrix out(m.field(), m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
    }
    return out;
}

Vector Matrix::apply(std::span<const Scalar> v) const
{
    require_same_length(cols_, v.size(), "apply");
    Vector out = zero_vector(field_, rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        require_same_field(v[c].field(), field_, "apply");
        if (v[c].is_zero()) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
        }
    }
    return out;
}

RrefResult rref(const Matrix& m)
{
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
        std::size_t pr = lead;
        while (pr < a.rows() && a(pr, c).is_zero()) ++pr;
        if (pr == a.rows()) continue;
        if (pr != lead) {
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(pr, j), a(lead, j));
        }
        const Scalar inv = a(lead, c).inv();
        for (std::size_t j = c; j < a.cols(); ++j) a(lead, j) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead || a(r, c).is_zero()) continue;
            const Scalar factor = a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j) {
                if (!a(lead, j).is_zero()) a(r, j) -= factor * a(lead, j);
            }
        }
        pivots.push_back(c);
        ++lead;
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m)
{
    return rref(m).pivots.size();
}

std::vector<Vector> kernel_basis(const Matrix& m)
{
    const auto [reduced, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v = zero_vector(m.field(), m.cols());
        v[free] = Scalar::one(m.field());
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

Matrix canonical_basis(const Matrix& basis)
{
    auto [reduced, pivots] = rref(basis);
    std::vector<Vector> rows;
    rows.reserve(pivots.size());
    for (std::size_t r = 0; r < pivots.size(); ++r) rows.push_back(reduced.row_vector(r));
    return Matrix::from_rows(basis.field(), basis.cols(), rows);
}

bool subspace_equal(const Matrix& a, const Matrix& b)
{
    require_same_field(a.field(), b.field(), "subspace_equal");
    require_same_length(a.cols(), b.cols(), "subspace_equal");
    return canonical_basis(a) == canonical_basis(b);
}

bool span_contains(const Matrix& basis, std::span<const Scalar> v)
{
    require_same_length(basis.cols(), v.size(), "span_contains");
    auto rows = basis.row_vectors();
    const std::size_t before = rank(basis);
    rows.emplace_back(v.begin(), v.end());
    return rank(Matrix::from_rows(basis.field(), basis.cols(), rows)) == before;
}

Matrix inverse(const Matrix& m)
{
    if (!m.is_square()) throw ShapeError("inverse: matrix is not square");
    const std::size_t n = m.rows();
    Matrix augmented(m.field(), n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) augmented(r, c) = m(r, c);
        augmented(r, n + r) = Scalar::one(m.field());
    }
    const auto [reduced, pivots] = rref(augmented);
    if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
        throw ShapeError("inverse: matrix is singular");
    }
    Matrix out(m.field(), n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) out(r, c) = reduced(r, n + c);
    }
    return out;
}

std::string to_string(const Matrix& m)
{
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << ", ";
        os << '[';
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c) os << ", ";
            os << m(r, c);
        }
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace mocklie
