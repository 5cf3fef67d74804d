#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "daha/ring/laurent.hpp"

namespace daha {

/// h with f = g*h, dividing as Laurent polynomials in `var` with coefficients
/// in the other variables. The leading coefficient of g in `var` must be a unit
/// monomial. Throws NotDivisible (with the remainder) otherwise.
LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g, Var var);
std::optional<LaurentPoly> try_exact_div(const LaurentPoly& f, const LaurentPoly& g, Var var);
/// Picks a variable in which g has a unit-monomial leading coefficient.
std::optional<Var> division_var(const LaurentPoly& g);
LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g);
std::optional<LaurentPoly> try_exact_div(const LaurentPoly& f, const LaurentPoly& g);

/// Polynomial remainder in `var` (all exponents of var in f and g must be
/// nonnegative; g's leading coefficient in var must be a unit monomial).
LaurentPoly poly_rem(const LaurentPoly& f, const LaurentPoly& g, Var var);

/// var -> value. Negative powers of var need value to be a unit (a monomial).
LaurentPoly substitute(const LaurentPoly& f, Var var, const LaurentPoly& value);
/// var -> c * x^m (m may mention var itself, e.g. X -> q^{-2} X).
LaurentPoly substitute_monomial(const LaurentPoly& f, Var var, const Rational& c, const Exp& m);

/// Text form "c*q^a*t1^b + ...", terms in canonical order.
std::string to_text(const LaurentPoly& p);
LaurentPoly parse_text(std::string_view s);

nlohmann::json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const nlohmann::json& j);

/// Rational content (positive gcd of numerators over lcm of denominators).
Rational content(const LaurentPoly& p);

}  // namespace daha
