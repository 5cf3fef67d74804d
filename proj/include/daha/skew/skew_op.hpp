/**
 * @file skew_op.hpp
 * @brief Elements sum f_{i,e}(X) P^i S^e of the localized crossed product.
 *
 * P is the q-shift (P f(X) = f(q^-2 X) P) and S the reflection
 * (S f(X) = f(X^-1) S), with S P = P^-1 S and S^2 = 1. Coefficients are
 * FracMulti in X and the parameters.
 */
#pragma once

#include <map>
#include <string>
#include <utility>

#include "daha/ring/frac.hpp"

namespace daha {

class SkewOp {
public:
    using Key = std::pair<int, int>;  // (shift power i, reflection flag e)

    SkewOp() = default;
    SkewOp(long c);  // NOLINT(google-explicit-constructor)
    SkewOp(const FracMulti& f);  // NOLINT(google-explicit-constructor)
    SkewOp(const LaurentPoly& f);  // NOLINT(google-explicit-constructor)

    static SkewOp term(const FracMulti& f, int i, int e);
    static SkewOp P(int i = 1) { return term(FracMulti(1L), i, 0); }
    static SkewOp S() { return term(FracMulti(1L), 0, 1); }
    static SkewOp X(int k = 1) { return SkewOp(X_pow(k)); }

    const std::map<Key, FracMulti>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Coefficient of P^i S^e (zero when absent).
    FracMulti coeff(int i, int e) const;

    SkewOp operator-() const;
    SkewOp& operator+=(const SkewOp& o);
    SkewOp& operator-=(const SkewOp& o);
    friend SkewOp operator+(SkewOp a, const SkewOp& b) { return a += b; }
    friend SkewOp operator-(SkewOp a, const SkewOp& b) { return a -= b; }
    friend SkewOp operator*(const SkewOp& a, const SkewOp& b);
    friend bool operator==(const SkewOp& a, const SkewOp& b) { return (a - b).is_zero(); }
    friend bool operator!=(const SkewOp& a, const SkewOp& b) { return !(a == b); }

    /// Specializes a parameter (or X) in every coefficient.
    SkewOp substitute(Var v, const LaurentPoly& value) const;
    /// Action on the defining representation: P f(X) = f(q^-2 X), S f(X) = f(X^-1).
    FracMulti apply(const FracMulti& f) const;

    /// "f(X)*P^i*S" summands joined by " + ".
    std::string to_text() const;

private:
    std::map<Key, FracMulti> terms_;
};

/// g(X) moved to the left across P^i S^e: g(q^-2i X) when e = 0, g(q^2i X^-1) when e = 1.
FracMulti skew_twist(const FracMulti& g, int i, int e);

}  // namespace daha
