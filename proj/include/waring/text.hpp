#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "waring/polynomial.hpp"

namespace waring {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Which letter names the variables: x0..xN for forms, X0..XN for the dual
/// ring of differential operators.
enum class Ring { primal, dual };

struct ParsedPolynomial {
    Polynomial polynomial;
    Ring ring;
};

/// Parses the text grammar, e.g. `12*x0^2*x1^2 - 3/4*x1 + 1`.
///
/// Terms are joined by `+`/`-`; a term is an optional integer or `p/q`
/// coefficient followed by `*`-separated factors `xK` or `xK^E`. Whitespace is
/// ignored. All variables must use the same letter. `nvars` fixes the ring
/// size; by default it is one more than the highest index seen.
ParsedPolynomial parse_polynomial(std::string_view text, std::optional<std::size_t> nvars = std::nullopt);

/// Parses a monomial with coefficient 1 in which every variable x0..xN occurs.
Monomial parse_monomial(std::string_view text);

/// Deterministic rendering in grlex order. The zero polynomial prints as "0".
std::string format_polynomial(const Polynomial& p, Ring ring = Ring::primal);

std::string format_monomial(const Monomial& m);

/// "(x0 + 1/2*x1 - x2)".
std::string format_linear_form(const LinearForm& form);

}  // namespace waring
