#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "mocklie/algebra.hpp"

namespace mocklie {

/// Error in an algebra document, positioned at a 1-based line and column.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

/// Algebra document grammar, one statement per line, '#' starts a comment:
///
///     field rational | field gf <p>    (optional, default rational; before dim)
///     dim <n>                           (required before any product)
///     name <label>                      (optional)
///     symmetric on|off                  (default on; affects later products)
///     e<i> * e<j> = <term> ((+|-) <term>)* | 0
///       term := [<scalar>] [*] e<k>
///
/// With symmetric on, a product e_i * e_j also sets e_j * e_i unless that
/// pair is stated explicitly. Stating the same (i, j) twice is an error.
///
/// `field_override` re-reads every coefficient in that field instead; it
/// only accepts integer coefficients.
Algebra parse_algebra(std::string_view text, std::optional<Field> field_override = std::nullopt,
                      std::string default_name = "L");

/// Canonical text: a "# format 1" header, then field, dim, name, "symmetric
/// off" and every nonzero product in (i, j) order. Parsing the result gives
/// back the same tensor.
std::string serialize_algebra(const Algebra& a);

}  // namespace mocklie
