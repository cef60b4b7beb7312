#include "mocklie/derivations.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <set>
#include <sstream>

namespace mocklie {

namespace {

void require_square_over(const Algebra& a, const Matrix& d)
{
    if (d.rows() != a.dim() || d.cols() != a.dim()) {
        throw ShapeError("derivation matrix must be " + std::to_string(a.dim()) + "x" +
                         std::to_string(a.dim()));
    }
    if (!(d.field() == a.field())) throw FieldMismatchError("derivation matrix over another field");
}

std::vector<std::pair<std::size_t, std::size_t>> selected_pairs(std::size_t n, PairSelection sel)
{
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = (sel == PairSelection::UpperTriangle ? i : 0); j < n; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    return pairs;
}

}  // namespace

Vector leibniz_defect(const Algebra& a, const Matrix& d, std::size_t i, std::size_t j)
{
    require_square_over(a, d);
    const std::size_t n = a.dim();
    const Vector ei = unit_vector(a.field(), n, i);
    const Vector ej = unit_vector(a.field(), n, j);
    const Vector lhs = d.apply(a.tensor.product(i, j));
    return lhs - multiply(a, d.column(i), ej) - multiply(a, ei, d.column(j));
}

bool is_derivation(const Algebra& a, const Matrix& d)
{
    require_square_over(a, d);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (!is_zero(leibniz_defect(a, d, i, j))) return false;
        }
    }
    return true;
}

Matrix constraint_matrix(const Algebra& a, PairSelection selection)
{
    const std::size_t n = a.dim();
    const auto& t = a.tensor;
    const auto pairs = selected_pairs(n, selection);
    Matrix m(a.field(), pairs.size() * n, n * n);

    // k-th component of the defect at (i, j) is
    //   sum_m c_{ij}^m d_{km} - d_{mi} c_{mj}^k - d_{mj} c_{im}^k,
    // so the coefficient of d_{rs} is
    //   [r = k] c_{ij}^s - [s = i] c_{rj}^k - [s = j] c_{ir}^k.
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto [i, j] = pairs[p];
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t row = p * n + k;
            for (std::size_t r = 0; r < n; ++r) {
                for (std::size_t s = 0; s < n; ++s) {
                    Scalar entry = Scalar::zero(a.field());
                    if (r == k) entry += t.coeff(i, j, s);
                    if (s == i) entry -= t.coeff(r, j, k);
                    if (s == j) entry -= t.coeff(i, r, k);
                    m(row, r * n + s) = entry;
                }
            }
        }
    }
    return m;
}

Matrix DerivationSpace::flattened() const
{
    std::vector<Vector> rows;
    rows.reserve(basis.size());
    for (const auto& d : basis) rows.push_back(d.flat());
    return Matrix::from_rows(field, algebra_dim * algebra_dim, rows);
}

DerivationSpace derivation_basis(const Algebra& a)
{
    const std::size_t n = a.dim();
    const auto selection =
        a.tensor.is_commutative() ? PairSelection::UpperTriangle : PairSelection::AllPairs;
    const auto kernel = kernel_basis(constraint_matrix(a, selection));
    const Matrix canonical = canonical_basis(Matrix::from_rows(a.field(), n * n, kernel));

    DerivationSpace space{n, a.field(), {}};
    for (std::size_t r = 0; r < canonical.rows(); ++r) {
        space.basis.push_back(Matrix::from_flat(a.field(), n, n, canonical.row_vector(r)));
    }
    return space;
}

Matrix bracket(const Matrix& d1, const Matrix& d2)
{
    return sub(matmul(d1, d2), matmul(d2, d1));
}

std::optional<Vector> coordinates(const DerivationSpace& space, const Matrix& m)
{
    const Field& f = space.field;
    if (!(m.field() == f)) throw FieldMismatchError("coordinates: field mismatch");
    if (m.rows() != space.algebra_dim || m.cols() != space.algebra_dim) {
        throw ShapeError("coordinates: shape mismatch");
    }
    // Flattened basis rows are in RREF: coordinate p is the entry at row p's pivot.
    Vector coords;
    Vector rebuilt = zero_vector(f, m.flat().size());
    for (const auto& d : space.basis) {
        const auto& flat = d.flat();
        const auto pivot = std::find_if(flat.begin(), flat.end(),
                                        [](const Scalar& s) { return !s.is_zero(); });
        const Scalar c = m.flat()[static_cast<std::size_t>(pivot - flat.begin())];
        coords.push_back(c);
        rebuilt = rebuilt + c * flat;
    }
    if (!(rebuilt == m.flat())) return std::nullopt;
    return coords;
}

StructureTensor der_structure_constants(const DerivationSpace& space)
{
    const std::size_t m = space.dim();
    StructureTensor t(space.field, m);
    for (std::size_t p = 0; p < m; ++p) {
        for (std::size_t q = 0; q < m; ++q) {
            const auto coords = coordinates(space, bracket(space.basis[p], space.basis[q]));
            if (!coords) {
                throw ClosureError("bracket of derivations " + std::to_string(p + 1) + " and " +
                                   std::to_string(q + 1) + " is not a derivation");
            }
            for (std::size_t r = 0; r < m; ++r) t.set(p, q, r, (*coords)[r]);
        }
    }
    return t;
}

StructureTensor der_structure_constants(const Algebra& a)
{
    return der_structure_constants(derivation_basis(a));
}

Scalar LinearForm::coefficient(const std::string& name, const Field& f) const
{
    const auto it = terms.find(name);
    return it == terms.end() ? Scalar::zero(f) : it->second;
}

namespace {

std::vector<std::string> used_parameters(const ParametricFamily& family)
{
    std::vector<std::string> used;
    for (const auto& p : family.parameters) {
        const bool occurs = std::any_of(family.entries.begin(), family.entries.end(),
                                        [&](const LinearForm& e) { return e.terms.count(p) != 0; });
        if (occurs) used.push_back(p);
    }
    return used;
}

}  // namespace

std::size_t ParametricFamily::dim() const
{
    return used_parameters(*this).size();
}

std::vector<Matrix> ParametricFamily::basis() const
{
    std::vector<Matrix> out;
    for (const auto& p : used_parameters(*this)) {
        Matrix m(field, n, n);
        for (std::size_t idx = 0; idx < entries.size(); ++idx) {
            m(idx / n, idx % n) = entries[idx].coefficient(p, field);
        }
        out.push_back(std::move(m));
    }
    return out;
}

Matrix ParametricFamily::evaluate(const std::vector<Scalar>& values) const
{
    if (values.size() != parameters.size()) throw ShapeError("evaluate: wrong number of values");
    Matrix m(field, n, n);
    for (std::size_t idx = 0; idx < entries.size(); ++idx) {
        Scalar v = Scalar::zero(field);
        for (std::size_t p = 0; p < parameters.size(); ++p) {
            v += entries[idx].coefficient(parameters[p], field) * values[p];
        }
        m(idx / n, idx % n) = v;
    }
    return m;
}

ParametricFamily ParametricFamily::to_field(const Field& target) const
{
    ParametricFamily out{n, target, parameters, {}};
    for (const auto& e : entries) {
        LinearForm f;
        for (const auto& [name, c] : e.terms) {
            Scalar mapped = c.to_field(target);
            if (!mapped.is_zero()) f.terms.emplace(name, std::move(mapped));
        }
        out.entries.push_back(std::move(f));
    }
    return out;
}

std::string parameter_name(std::size_t n, std::size_t r, std::size_t s)
{
    const std::string sep = n >= 10 ? "_" : "";
    return "d" + std::to_string(r + 1) + sep + std::to_string(s + 1);
}

ParametricFamily render_parametric(const DerivationSpace& s)
{
    const std::size_t n = s.algebra_dim;
    const Field& f = s.field;
    // Reorder coordinates column-major, then reduce.
    std::vector<Vector> rows;
    for (const auto& d : s.basis) {
        Vector v;
        v.reserve(n * n);
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t r = 0; r < n; ++r) v.push_back(d(r, c));
        }
        rows.push_back(std::move(v));
    }
    const auto [reduced, pivots] = rref(Matrix::from_rows(f, n * n, rows));

    ParametricFamily family{n, f, {}, std::vector<LinearForm>(n * n)};
    for (std::size_t t = 0; t < pivots.size(); ++t) {
        const std::string name = parameter_name(n, pivots[t] % n, pivots[t] / n);
        family.parameters.push_back(name);
        for (std::size_t idx = 0; idx < n * n; ++idx) {
            const Scalar& c = reduced(t, idx);
            if (!c.is_zero()) family.entries[(idx % n) * n + idx / n].terms.emplace(name, c);
        }
    }
    return family;
}

std::string to_string(const LinearForm& form, const std::vector<std::string>& order)
{
    if (form.terms.empty()) return "0";
    std::vector<std::string> names;
    for (const auto& p : order) {
        if (form.terms.count(p)) names.push_back(p);
    }
    for (const auto& [name, c] : form.terms) {
        if (std::find(names.begin(), names.end(), name) == names.end()) names.push_back(name);
    }
    // Positive terms lead, as in "d44 - d33".
    std::stable_partition(names.begin(), names.end(), [&](const std::string& name) {
        const Scalar& c = form.terms.at(name);
        return !c.field().is_rational() || sgn(c.rational()) > 0;
    });

    std::string out;
    for (const auto& name : names) {
        const Scalar& c = form.terms.at(name);
        const bool negative = c.field().is_rational() && sgn(c.rational()) < 0;
        const Scalar magnitude = negative ? -c : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (!magnitude.is_one()) out += magnitude.to_string() + "*";
        out += name;
    }
    return out;
}

std::string render_grid(const ParametricFamily& family)
{
    const std::size_t n = family.n;
    std::vector<std::string> cells(n * n);
    std::vector<std::size_t> width(n, 1);
    for (std::size_t idx = 0; idx < n * n; ++idx) {
        cells[idx] = to_string(family.entries[idx], family.parameters);
        width[idx % n] = std::max(width[idx % n], cells[idx].size());
    }
    std::ostringstream os;
    for (std::size_t r = 0; r < n; ++r) {
        os << "[ ";
        for (std::size_t c = 0; c < n; ++c) {
            const auto& cell = cells[r * n + c];
            os << std::string(width[c] - cell.size(), ' ') << cell << (c + 1 < n ? "  " : " ");
        }
        os << "]\n";
    }
    return os.str();
}

namespace {

// Parses "d12", "d1_12" into a (row, col) pair.
std::pair<std::size_t, std::size_t> position_of(const std::string& name, std::size_t n)
{
    const std::string digits = name.substr(1);
    const auto sep = digits.find('_');
    std::size_t r = 0, c = 0;
    if (sep != std::string::npos) {
        r = std::stoul(digits.substr(0, sep));
        c = std::stoul(digits.substr(sep + 1));
    } else if (digits.size() == 2) {
        r = static_cast<std::size_t>(digits[0] - '0');
        c = static_cast<std::size_t>(digits[1] - '0');
    } else {
        throw std::invalid_argument("ambiguous parameter name '" + name + "'");
    }
    if (r == 0 || c == 0 || r > n || c > n) {
        throw std::invalid_argument("parameter '" + name + "' is outside the matrix");
    }
    return {r - 1, c - 1};
}

LinearForm parse_linear_form(const Field& f, const std::string& text)
{
    LinearForm form;
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& why) {
        return std::invalid_argument("linear form '" + text + "': " + why);
    };
    skip();
    if (text.substr(pos) == "0") return form;
    bool first = true;
    while (true) {
        skip();
        if (pos == text.size()) break;
        bool negative = false;
        if (text[pos] == '+' || text[pos] == '-') {
            negative = text[pos] == '-';
            ++pos;
            skip();
        } else if (!first) {
            throw fail("expected '+' or '-'");
        }
        std::string coeff;
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) {
            coeff += text[pos++];
        }
        skip();
        if (!coeff.empty() && pos < text.size() && text[pos] == '*') {
            ++pos;
            skip();
        }
        if (pos == text.size() || text[pos] != 'd') throw fail("expected a parameter");
        std::string name(1, text[pos++]);
        while (pos < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
            name += text[pos++];
        }
        Scalar c = coeff.empty() ? Scalar::one(f) : Scalar::parse(f, coeff);
        if (negative) c = -c;
        const auto it = form.terms.find(name);
        Scalar total = it == form.terms.end() ? c : it->second + c;
        if (total.is_zero()) {
            form.terms.erase(name);
        } else {
            form.terms.insert_or_assign(name, total);
        }
        first = false;
    }
    return form;
}

}  // namespace

ParametricFamily family_from_strings(const Field& f, const std::vector<std::vector<std::string>>& rows)
{
    const std::size_t n = rows.size();
    ParametricFamily family{n, f, {}, {}};
    std::set<std::pair<std::size_t, std::size_t>> positions;
    for (const auto& row : rows) {
        if (row.size() != n) throw ShapeError("family_from_strings: grid is not square");
        for (const auto& cell : row) {
            LinearForm form = parse_linear_form(f, cell);
            for (const auto& [name, c] : form.terms) positions.insert(position_of(name, n));
            family.entries.push_back(std::move(form));
        }
    }
    for (const auto& [r, c] : positions) family.parameters.push_back(parameter_name(n, r, c));
    return family;
}

ParametricFamily published_family(const std::string& catalog_name)
{
    using Grid = std::vector<std::vector<std::string>>;
    static const std::map<std::string, Grid> families = {
        {"A_{1,2}",
         {{"d11", "0"},
          {"d21", "2*d11"}}},
        {"A_{1,2}+A_{0,1}",
         {{"d11", "0", "0"},
          {"d21", "2*d11", "d23"},
          {"d31", "0", "d33"}}},
        {"A_{1,3}",
         {{"d33", "0", "-d31"},
          {"d21", "2*d33", "d23"},
          {"d31", "0", "d33"}}},
        {"A_{1,2}+A_{0,1}^2",
         {{"d11", "0", "0", "0"},
          {"d21", "2*d11", "d23", "d24"},
          {"d31", "0", "d33", "d34"},
          {"d41", "0", "d43", "d44"}}},
        {"A_{1,3}+A_{0,1}",
         {{"d33", "0", "-d31", "0"},
          {"d21", "2*d33", "d23", "d24"},
          {"d31", "0", "d33", "0"},
          {"d41", "0", "d43", "d44"}}},
        {"A_{1,2}+A_{1,2}",
         {{"d11", "0", "0", "0"},
          {"d21", "2*d11", "d23", "0"},
          {"0", "0", "d33", "0"},
          {"d41", "0", "d43", "2*d33"}}},
        {"A_{1,4}",
         {{"d44 - d33", "0", "0", "0"},
          {"d21", "2*d44 - 2*d33", "d23", "0"},
          {"d31", "0", "d33", "0"},
          {"d41", "2*d31", "d43", "d44"}}},
        {"A_{2,4}",
         {{"d11", "0", "-d41", "-d31"},
          {"d21", "2*d11", "d23", "d24"},
          {"d31", "0", "2*d11 - d44", "0"},
          {"d41", "0", "0", "d44"}}},
    };
    const auto it = families.find(catalog_name);
    if (it == families.end()) {
        throw std::invalid_argument("no published derivation family for '" + catalog_name + "'");
    }
    return family_from_strings(Field::rationals(), it->second);
}

VerificationReport verify_family(const Algebra& a, const ParametricFamily& family)
{
    if (family.n != a.dim()) throw ShapeError("verify_family: family size differs from algebra");
    const ParametricFamily fam = family.to_field(a.field());
    const std::size_t nn = a.dim() * a.dim();

    const DerivationSpace computed = derivation_basis(a);
    const Matrix computed_rows = computed.flattened();
    std::vector<Vector> family_vectors;
    for (const auto& m : fam.basis()) family_vectors.push_back(m.flat());
    const Matrix family_rows = Matrix::from_rows(a.field(), nn, family_vectors);

    VerificationReport report;
    report.catalog_name = a.name;
    report.computed_dim = computed.dim();
    report.published_dim = rank(family_rows);
    report.spaces_equal = subspace_equal(computed_rows, family_rows);
    if (report.spaces_equal) return report;

    for (const auto& d : computed.basis) {
        if (!span_contains(family_rows, d.flat())) {
            report.discrepancy = d;
            report.witness_is_derivation = true;
            return report;
        }
    }
    for (const auto& v : family_vectors) {
        if (!span_contains(computed_rows, v)) {
            report.discrepancy = Matrix::from_flat(a.field(), a.dim(), a.dim(), v);
            return report;
        }
    }
    return report;
}

VerificationReport verify_published_family(const std::string& catalog_name, const Field& field)
{
    if (field.characteristic() == 2 || field.characteristic() == 3) {
        throw std::invalid_argument("catalog verification needs characteristic other than 2 and 3");
    }
    const ParametricFamily family = published_family(catalog_name);
    const Algebra& entry = catalog_entry(catalog_name);
    const Algebra a{entry.name, entry.tensor.to_field(field)};
    return verify_family(a, family);
}

std::vector<VerificationReport> verify_catalog(const Field& field)
{
    std::vector<std::future<VerificationReport>> jobs;
    for (const auto& name : nonabelian_catalog_names()) {
        jobs.push_back(std::async(std::launch::async,
                                  [name, field] { return verify_published_family(name, field); }));
    }
    std::vector<VerificationReport> reports;
    reports.reserve(jobs.size());
    for (auto& job : jobs) reports.push_back(job.get());
    return reports;
}

}  // namespace mocklie
