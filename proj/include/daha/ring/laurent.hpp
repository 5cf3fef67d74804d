/**
 * @file laurent.hpp
 * @brief Sparse multivariate Laurent polynomials with exact rational coefficients.
 *
 * Every polynomial lives over the fixed variable universe
 * (q, t1, t2, t3, t4, X, U, x, I). Terms are kept sorted by exponent vector
 * (lexicographic, q most significant) with no zero coefficients, so structural
 * equality is mathematical equality.
 */
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "daha/ring/rational.hpp"

namespace daha {

enum class Var : std::uint8_t { q, t1, t2, t3, t4, X, U, x, I };
inline constexpr int kNumVars = 9;

std::string_view var_name(Var v);
std::optional<Var> parse_var(std::string_view name);

using Exp = std::array<std::int32_t, kNumVars>;

inline Exp exp_add(const Exp& a, const Exp& b) {
    Exp r;
    for (int i = 0; i < kNumVars; ++i) r[i] = a[i] + b[i];
    return r;
}
inline Exp exp_sub(const Exp& a, const Exp& b) {
    Exp r;
    for (int i = 0; i < kNumVars; ++i) r[i] = a[i] - b[i];
    return r;
}

struct Term {
    Exp e{};
    Rational c;
};

class LaurentPoly;

/// Thrown by exact_div; carries the nonzero remainder.
class NotDivisible : public std::runtime_error {
public:
    NotDivisible(const std::string& what, std::shared_ptr<const LaurentPoly> remainder);
    const LaurentPoly& remainder() const { return *remainder_; }

private:
    std::shared_ptr<const LaurentPoly> remainder_;
};

class NonInvertibleSubstitution : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
    LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

    static LaurentPoly var(Var v, int power = 1);
    static LaurentPoly monomial(const Rational& c, const Exp& e);
    /// Sorts, merges equal exponents and drops zeros.
    static LaurentPoly from_terms(std::vector<Term> terms);
    /// Caller guarantees the terms are sorted, distinct and nonzero.
    static LaurentPoly from_sorted_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    /// Constant coefficient (zero when absent).
    Rational constant_term() const;
    Rational coeff(const Exp& e) const;

    bool uses(Var v) const;
    /// Highest / lowest exponent of v; precondition: nonzero.
    int max_degree(Var v) const;
    int min_degree(Var v) const;
    /// Collects coefficients of v^k; the keys are k, the values have v-exponent 0.
    std::map<int, LaurentPoly> by_degree(Var v) const;
    /// Inverse of by_degree.
    static LaurentPoly from_degrees(Var v, const std::map<int, LaurentPoly>& parts);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Multiplies every exponent vector by the monomial e (no coefficient change).
    LaurentPoly shifted(const Exp& e) const;
    /// p^n; negative n requires a monomial.
    LaurentPoly pow(int n) const;
    /// Inverse of a monomial c*m.
    LaurentPoly monomial_inverse() const;

private:
    std::vector<Term> terms_;
};

LaurentPoly pow(const LaurentPoly& p, int n);

/// Single-exponent helper: make_exp({{Var::q, 2}, {Var::X, -1}}).
Exp make_exp(std::initializer_list<std::pair<Var, int>> parts);

inline LaurentPoly q_pow(int k) { return LaurentPoly::var(Var::q, k); }
inline LaurentPoly X_pow(int k) { return LaurentPoly::var(Var::X, k); }

}  // namespace daha
