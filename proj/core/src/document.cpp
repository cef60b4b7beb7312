#include "mocklie/document.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace mocklie {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + message),
      line_(line),
      column_(column),
      message_(message)
{
}

namespace {

bool is_space(char c)
{
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_digit(char c)
{
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

// Scans one statement; columns are 1-based.
class Cursor {
public:
    Cursor(std::string_view line, std::size_t line_no) : text_(line), line_(line_no) {}

    void skip_space()
    {
        while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
    }
    bool at_end()
    {
        skip_space();
        return pos_ == text_.size();
    }
    char peek()
    {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    std::size_t column() const { return pos_ + 1; }

    [[noreturn]] void fail(const std::string& message) const { fail_at(column(), message); }
    [[noreturn]] void fail_at(std::size_t column, const std::string& message) const
    {
        throw ParseError(line_, column, message);
    }

    void expect(char c)
    {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    bool accept(char c)
    {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    std::string word()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && !is_space(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    bool rest_is(std::string_view expected)
    {
        skip_space();
        std::string_view r = text_.substr(pos_);
        while (!r.empty() && is_space(r.back())) r.remove_suffix(1);
        if (r != expected) return false;
        pos_ = text_.size();
        return true;
    }

    std::string rest()
    {
        skip_space();
        std::string_view r = text_.substr(pos_);
        while (!r.empty() && is_space(r.back())) r.remove_suffix(1);
        pos_ = text_.size();
        return std::string(r);
    }

    std::string digits()
    {
        std::string out;
        while (pos_ < text_.size() && is_digit(text_[pos_])) out += text_[pos_++];
        return out;
    }

    /// Unsigned integer or fraction literal, e.g. "3" or "1/2"; empty if none.
    std::string scalar_literal()
    {
        skip_space();
        std::string out = digits();
        if (!out.empty() && pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            const std::string den = digits();
            if (den.empty()) fail("malformed scalar '" + out + "/'");
            out += "/" + den;
        }
        return out;
    }

    /// "e<i>"; returns the 1-based index and its column.
    std::pair<std::size_t, std::size_t> basis_element()
    {
        skip_space();
        const std::size_t col = column();
        if (pos_ >= text_.size() || text_[pos_] != 'e') fail("expected a basis element e<i>");
        ++pos_;
        const std::string idx = digits();
        if (idx.empty()) fail("expected an index after 'e'");
        if (idx.size() > 9) fail_at(col, "basis index too large");
        return {std::stoul(idx), col};
    }

private:
    std::string_view text_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

struct RawTerm {
    mpq_class coeff;
    std::size_t index;  // 0-based
};

struct Statement {
    std::vector<RawTerm> terms;
    bool mirror;
    std::size_t line;
    std::size_t column;
};

}  // namespace

Algebra parse_algebra(std::string_view text, std::optional<Field> field_override,
                      std::string default_name)
{
    std::optional<Field> field;
    std::optional<std::size_t> dim;
    std::optional<std::string> name;
    bool symmetric = true;
    std::map<std::pair<std::size_t, std::size_t>, Statement> products;

    std::size_t line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('\n', start), text.size());
        std::string_view line = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        Cursor cur(line, line_no);
        if (cur.at_end()) continue;
        const std::size_t stmt_col = cur.column();

        if (cur.peek() == 'e' && line.size() > stmt_col && is_digit(line[stmt_col])) {
            if (!dim) cur.fail("'dim' must be given before any product");
            const auto [i, col_i] = cur.basis_element();
            cur.expect('*');
            const auto [j, col_j] = cur.basis_element();
            cur.expect('=');
            for (const auto& [idx, col] : {std::pair{i, col_i}, std::pair{j, col_j}}) {
                if (idx == 0 || idx > *dim) {
                    cur.fail_at(col, "index " + std::to_string(idx) + " exceeds dim " +
                                         std::to_string(*dim));
                }
            }

            Statement st{{}, symmetric, line_no, stmt_col};
            if (!cur.rest_is("0")) {
                bool first = true;
                while (!cur.at_end()) {
                    bool negative = false;
                    if (cur.accept('-')) {
                        negative = true;
                    } else if (!cur.accept('+') && !first) {
                        cur.fail("expected '+' or '-' between terms");
                    }
                    const std::size_t coeff_col = (cur.skip_space(), cur.column());
                    const std::string literal = cur.scalar_literal();
                    mpq_class coeff = 1;
                    if (!literal.empty()) {
                        try {
                            coeff = Scalar::parse(Field::rationals(), literal).rational();
                        } catch (const std::exception& e) {
                            cur.fail_at(coeff_col, e.what());
                        }
                        cur.accept('*');
                    }
                    const auto [k, col_k] = cur.basis_element();
                    if (k == 0 || k > *dim) {
                        cur.fail_at(col_k, "index " + std::to_string(k) + " exceeds dim " +
                                               std::to_string(*dim));
                    }
                    if (negative) coeff = -coeff;
                    st.terms.push_back({coeff, k - 1});
                    first = false;
                }
                if (first) cur.fail("expected a product value");
            }
            const auto key = std::pair{i - 1, j - 1};
            if (const auto it = products.find(key); it != products.end()) {
                cur.fail_at(stmt_col, "product e" + std::to_string(i) + " * e" + std::to_string(j) +
                                          " already given on line " +
                                          std::to_string(it->second.line));
            }
            products.emplace(key, std::move(st));
            continue;
        }

        const std::string keyword = cur.word();
        if (keyword == "field") {
            if (field) cur.fail_at(stmt_col, "duplicate 'field'");
            if (dim) cur.fail_at(stmt_col, "'field' must come before 'dim'");
            const std::string kind = cur.word();
            if (kind == "rational") {
                field = Field::rationals();
            } else if (kind == "gf") {
                const std::size_t col = (cur.skip_space(), cur.column());
                const std::string p = cur.digits();
                if (p.empty() || p.size() > 19) cur.fail_at(col, "expected a prime modulus");
                try {
                    field = Field::prime(std::stoull(p));
                } catch (const std::invalid_argument& e) {
                    cur.fail_at(col, e.what());
                }
            } else {
                cur.fail_at(stmt_col, "unknown field '" + kind + "'");
            }
        } else if (keyword == "dim") {
            if (dim) cur.fail_at(stmt_col, "duplicate 'dim'");
            const std::size_t col = (cur.skip_space(), cur.column());
            const std::string n = cur.digits();
            if (n.empty() || n.size() > 6) cur.fail_at(col, "expected a dimension");
            dim = std::stoul(n);
        } else if (keyword == "name") {
            if (name) cur.fail_at(stmt_col, "duplicate 'name'");
            name = cur.rest();
            if (name->empty()) cur.fail_at(stmt_col, "empty name");
        } else if (keyword == "symmetric") {
            const std::string mode = cur.word();
            if (mode == "on") {
                symmetric = true;
            } else if (mode == "off") {
                symmetric = false;
            } else {
                cur.fail_at(stmt_col, "expected 'symmetric on' or 'symmetric off'");
            }
        } else {
            cur.fail_at(stmt_col, "unknown statement '" + keyword + "'");
        }
        if (!cur.at_end()) cur.fail("unexpected trailing text");
    }
    if (!dim) throw ParseError(line_no, 1, "missing 'dim'");

    const Field target = field_override.value_or(field.value_or(Field::rationals()));
    auto convert = [&](const mpq_class& q, const Statement& st) {
        if (field_override && q.get_den() != 1) {
            throw ParseError(st.line, st.column,
                             "coefficient " + q.get_str() + " is not an integer; cannot use " +
                                 field_override->to_string());
        }
        try {
            return Scalar::from_rational(target, q);
        } catch (const DivisionByZeroError& e) {
            throw ParseError(st.line, st.column, e.what());
        }
    };

    StructureTensor tensor(target, *dim);
    auto assign = [&](std::size_t i, std::size_t j, const Statement& st) {
        Vector v = zero_vector(target, *dim);
        for (const auto& term : st.terms) v[term.index] += convert(term.coeff, st);
        for (std::size_t k = 0; k < *dim; ++k) tensor.set(i, j, k, v[k]);
    };
    for (const auto& [key, st] : products) {
        assign(key.first, key.second, st);
    }
    for (const auto& [key, st] : products) {
        const auto mirrored = std::pair{key.second, key.first};
        if (st.mirror && mirrored != key && !products.count(mirrored)) {
            assign(mirrored.first, mirrored.second, st);
        }
    }
    return {name.value_or(std::move(default_name)), std::move(tensor)};
}

std::string serialize_algebra(const Algebra& a)
{
    std::ostringstream os;
    os << "# format 1\n";
    os << "field " << a.field().to_string() << "\n";
    os << "dim " << a.dim() << "\n";
    os << "name " << a.name << "\n";
    os << "symmetric off\n";
    const auto& entries = a.tensor.entries();
    for (auto it = entries.begin(); it != entries.end();) {
        const std::size_t i = (*it).first[0];
        const std::size_t j = (*it).first[1];
        os << "e" << i + 1 << " * e" << j + 1 << " =";
        bool first = true;
        for (; it != entries.end() && it->first[0] == i && it->first[1] == j; ++it) {
            const Scalar& c = it->second;
            const bool negative = c.field().is_rational() && sgn(c.rational()) < 0;
            const Scalar magnitude = negative ? -c : c;
            os << (first ? (negative ? " -" : " ") : (negative ? " - " : " + "));
            if (!magnitude.is_one()) os << magnitude << " ";
            os << "e" << it->first[2] + 1;
            first = false;
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace mocklie
