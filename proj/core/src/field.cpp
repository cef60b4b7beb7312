#include "mocklie/field.hpp"

#include <cctype>
#include <ostream>
#include <utility>

namespace mocklie {

bool is_prime(std::uint64_t n) noexcept
{
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p)
{
    if (p > kMaxModulus) {
        throw std::invalid_argument("modulus " + std::to_string(p) + " is too large");
    }
    if (!is_prime(p)) {
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    }
    Field f;
    f.kind_ = Kind::PrimeField;
    f.modulus_ = p;
    return f;
}

std::string Field::to_string() const
{
    return is_rational() ? std::string("rational") : "gf " + std::to_string(modulus_);
}

namespace {

std::uint64_t reduce(const mpz_class& z, std::uint64_t p)
{
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

// Extended Euclid; a must be a nonzero residue mod prime p.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p)
{
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

Scalar Scalar::zero(const Field& f)
{
    return f.is_rational() ? Scalar(f, mpq_class(0)) : Scalar(f, std::uint64_t{0});
}

Scalar Scalar::one(const Field& f)
{
    return from_int(f, 1);
}

Scalar Scalar::from_int(const Field& f, long value)
{
    if (f.is_rational()) return Scalar(f, mpq_class(value));
    return Scalar(f, reduce(mpz_class(value), f.modulus()));
}

Scalar Scalar::from_rational(const Field& f, const mpq_class& value)
{
    mpq_class q(value);
    q.canonicalize();
    if (f.is_rational()) return Scalar(f, std::move(q));
    const std::uint64_t den = reduce(q.get_den(), f.modulus());
    if (den == 0) {
        throw DivisionByZeroError("denominator " + q.get_den().get_str() +
                                  " is not invertible in " + f.to_string());
    }
    const std::uint64_t num = reduce(q.get_num(), f.modulus());
    return Scalar(f, num * inverse_mod(den, f.modulus()) % f.modulus());
}

Scalar Scalar::parse(const Field& f, std::string_view text)
{
    auto malformed = [&] {
        return std::invalid_argument("malformed scalar '" + std::string(text) + "'");
    };
    const auto slash = text.find('/');
    auto integer_part = [&](std::string_view s, bool allow_sign) {
        if (s.empty()) throw malformed();
        std::size_t start = 0;
        if (allow_sign && (s[0] == '-' || s[0] == '+')) start = 1;
        if (start == s.size()) throw malformed();
        for (std::size_t i = start; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw malformed();
        }
        if (s[0] == '+') s.remove_prefix(1);
        return mpz_class(std::string(s), 10);
    };
    mpz_class num = integer_part(text.substr(0, slash), true);
    mpz_class den = 1;
    if (slash != std::string_view::npos) {
        den = integer_part(text.substr(slash + 1), false);
        if (den == 0) throw DivisionByZeroError("zero denominator in '" + std::string(text) + "'");
    }
    return from_rational(f, mpq_class(num, den));
}

bool Scalar::is_zero() const noexcept
{
    if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
    return std::get<std::uint64_t>(value_) == 0;
}

bool Scalar::is_one() const noexcept
{
    if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
    return std::get<std::uint64_t>(value_) == 1;
}

bool Scalar::is_integer() const noexcept
{
    if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_den() == 1;
    return true;
}

const mpq_class& Scalar::rational() const
{
    if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
    throw FieldMismatchError("scalar is not rational");
}

std::uint64_t Scalar::residue() const
{
    if (const auto* r = std::get_if<std::uint64_t>(&value_)) return *r;
    throw FieldMismatchError("scalar is not a prime-field residue");
}

Scalar Scalar::to_field(const Field& target) const
{
    if (target == field_) return *this;
    if (field_.is_rational()) return from_rational(target, rational());
    return from_rational(target, mpq_class(mpz_class(static_cast<unsigned long>(residue()))));
}

void Scalar::require_same_field(const Scalar& rhs, const char* op) const
{
    if (!(field_ == rhs.field_)) {
        throw FieldMismatchError(std::string("field mismatch in ") + op + ": " +
                                 field_.to_string() + " vs " + rhs.field_.to_string());
    }
}

Scalar Scalar::inv() const
{
    if (is_zero()) throw DivisionByZeroError("inverse of zero");
    if (field_.is_rational()) return Scalar(field_, mpq_class(1 / rational()));
    return Scalar(field_, inverse_mod(residue(), field_.modulus()));
}

Scalar Scalar::operator-() const
{
    if (field_.is_rational()) return Scalar(field_, mpq_class(-rational()));
    const auto r = residue();
    return Scalar(field_, r == 0 ? 0 : field_.modulus() - r);
}

Scalar& Scalar::operator+=(const Scalar& rhs)
{
    require_same_field(rhs, "add");
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) += rhs.rational();
    } else {
        auto& r = std::get<std::uint64_t>(value_);
        r = (r + rhs.residue()) % field_.modulus();
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs)
{
    require_same_field(rhs, "sub");
    return *this += -rhs;
}

Scalar& Scalar::operator*=(const Scalar& rhs)
{
    require_same_field(rhs, "mul");
    if (field_.is_rational()) {
        std::get<mpq_class>(value_) *= rhs.rational();
    } else {
        auto& r = std::get<std::uint64_t>(value_);
        r = r * rhs.residue() % field_.modulus();
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs)
{
    require_same_field(rhs, "div");
    return *this *= rhs.inv();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const
{
    if (field_.is_rational()) return rational().get_str();
    return std::to_string(residue());
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.to_string();
}

}  // namespace mocklie
