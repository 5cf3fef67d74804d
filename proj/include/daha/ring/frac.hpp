/**
 * @file frac.hpp
 * @brief Multivariate fractions with a factored denominator.
 *
 * The denominator is a multiset of normalized factors (monic in the canonical
 * term order, shifted so every variable has minimal exponent 0). Units are
 * folded into the numerator, so a fraction is zero iff its numerator is zero.
 * Cancellation is best-effort trial division of the numerator by each factor.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "daha/ring/laurent.hpp"

namespace daha {

class PoleAtEvaluation : public std::domain_error {
    using std::domain_error::domain_error;
};

struct DenFactor {
    LaurentPoly f;
    int mult = 0;
};

class FracMulti {
public:
    FracMulti() = default;
    FracMulti(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
    FracMulti(const Rational& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
    FracMulti(LaurentPoly num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
    /// num / den, den nonzero.
    static FracMulti ratio(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const { return num_; }
    const std::vector<DenFactor>& factors() const { return den_; }
    LaurentPoly denominator() const;
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.empty(); }

    FracMulti operator-() const;
    friend FracMulti operator+(const FracMulti& a, const FracMulti& b);
    friend FracMulti operator-(const FracMulti& a, const FracMulti& b);
    friend FracMulti operator*(const FracMulti& a, const FracMulti& b);
    friend FracMulti operator/(const FracMulti& a, const FracMulti& b);
    FracMulti& operator+=(const FracMulti& o) { return *this = *this + o; }
    FracMulti& operator-=(const FracMulti& o) { return *this = *this - o; }
    FracMulti& operator*=(const FracMulti& o) { return *this = *this * o; }
    FracMulti inverse() const;
    /// Cross-multiplication test: a/b == c/d iff a*d == c*b.
    friend bool operator==(const FracMulti& a, const FracMulti& b);
    friend bool operator!=(const FracMulti& a, const FracMulti& b) { return !(a == b); }

    /// var -> c * x^m in numerator and every factor. Throws PoleAtEvaluation
    /// when a factor becomes zero.
    FracMulti substitute_monomial(Var var, const Rational& c, const Exp& m) const;
    /// var -> value; value must be a monomial or constant, or var must occur
    /// with nonnegative exponents only.
    FracMulti substitute(Var var, const LaurentPoly& value) const;
    FracMulti substitute(Var var, const FracMulti& value) const;

    bool uses(Var v) const;
    std::string to_text() const;

private:
    void add_factor(const LaurentPoly& f, int mult);
    void reduce();
    LaurentPoly num_;
    std::vector<DenFactor> den_;  // sorted, distinct, mult > 0
};

/// Normalizes f (nonzero) as unit * normal, returning normal; `unit_inv` receives 1/unit.
LaurentPoly normalize_factor(const LaurentPoly& f, LaurentPoly& unit_inv);

/// Total order on polynomials used to keep factor lists sorted.
bool poly_less(const LaurentPoly& a, const LaurentPoly& b);

/// Substitutes a fraction for a variable in a Laurent polynomial.
FracMulti substitute(const LaurentPoly& f, Var var, const FracMulti& value);

}  // namespace daha
