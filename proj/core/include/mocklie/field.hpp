#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace mocklie {

/// Raised when two operands live in different fields.
class FieldMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DivisionByZeroError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// The field a scalar lives in: the rationals or a prime field GF(p).
class Field {
public:
    enum class Kind { Rationals, PrimeField };

    /// Largest accepted modulus. Residue products stay below 2^64.
    static constexpr std::uint64_t kMaxModulus = 0xFFFFFFFBull;

    static Field rationals() noexcept { return Field(); }
    /// Throws std::invalid_argument unless p is a prime <= kMaxModulus.
    static Field prime(std::uint64_t p);

    Kind kind() const noexcept { return kind_; }
    bool is_rational() const noexcept { return kind_ == Kind::Rationals; }
    /// 0 for the rationals.
    std::uint64_t modulus() const noexcept { return modulus_; }
    std::uint64_t characteristic() const noexcept { return modulus_; }

    /// "rational" or "gf <p>", as used in algebra documents.
    std::string to_string() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    Field() = default;
    Kind kind_ = Kind::Rationals;
    std::uint64_t modulus_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

/// Exact field element. Rationals are kept as reduced GMP fractions with
/// positive denominator; prime-field elements as residues in [0, p).
class Scalar {
public:
    /// Zero of the rationals.
    Scalar() = default;

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar from_int(const Field& f, long value);
    /// num/den mapped into f. Over GF(p) the denominator must be invertible.
    static Scalar from_rational(const Field& f, const mpq_class& value);
    /// Parses "p", "-p" or "p/q" (decimal integers) into f.
    static Scalar parse(const Field& f, std::string_view text);

    const Field& field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;
    bool is_integer() const noexcept;

    /// Only valid for rational scalars.
    const mpq_class& rational() const;
    /// Only valid for prime-field scalars.
    std::uint64_t residue() const;

    /// Re-interprets this scalar in another field. A rational maps into
    /// GF(p) via its numerator and the inverse of its denominator; a residue
    /// maps as the integer it represents.
    Scalar to_field(const Field& target) const;

    Scalar inv() const;
    Scalar operator-() const;

    Scalar& operator+=(const Scalar& rhs);
    Scalar& operator-=(const Scalar& rhs);
    Scalar& operator*=(const Scalar& rhs);
    Scalar& operator/=(const Scalar& rhs);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Equal iff same field and same canonical representation.
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// "p/q" ("p" when q = 1) or the canonical residue.
    std::string to_string() const;

private:
    Scalar(const Field& f, mpq_class q) : field_(f), value_(std::move(q)) {}
    Scalar(const Field& f, std::uint64_t r) : field_(f), value_(r) {}
    void require_same_field(const Scalar& rhs, const char* op) const;

    Field field_ = Field::rationals();
    std::variant<mpq_class, std::uint64_t> value_ = mpq_class(0);
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace mocklie
