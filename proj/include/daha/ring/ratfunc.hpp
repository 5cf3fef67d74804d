#pragma once

#include <string>

#include "daha/ring/laurent.hpp"

namespace daha {

/// Univariate rational function in q, kept canonical: gcd(num, den) = 1, den is
/// an ordinary polynomial with nonzero constant term and leading coefficient 1.
/// Structural equality is therefore equality of functions.
class RatFuncQ {
public:
    RatFuncQ() = default;
    RatFuncQ(long c) : num_(c), den_(1L) {}  // NOLINT(google-explicit-constructor)
    RatFuncQ(const Rational& c) : num_(c), den_(1L) {}  // NOLINT(google-explicit-constructor)
    RatFuncQ(const LaurentPoly& p);  // NOLINT(google-explicit-constructor)
    RatFuncQ(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_ == LaurentPoly(1L); }
    /// The Laurent polynomial this equals; throws if the denominator is nontrivial.
    const LaurentPoly& as_laurent() const;

    RatFuncQ operator-() const;
    RatFuncQ inverse() const;
    friend RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b);
    friend RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b);
    friend RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b);
    friend RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b);
    RatFuncQ& operator+=(const RatFuncQ& o) { return *this = *this + o; }
    RatFuncQ& operator-=(const RatFuncQ& o) { return *this = *this - o; }
    RatFuncQ& operator*=(const RatFuncQ& o) { return *this = *this * o; }
    friend bool operator==(const RatFuncQ& a, const RatFuncQ& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFuncQ& a, const RatFuncQ& b) { return !(a == b); }

    std::string to_text() const;

private:
    void canonicalize();
    LaurentPoly num_;
    LaurentPoly den_{1L};
};

namespace upoly {
// Dense univariate helpers over Q, coefficient i is the q^i coefficient.
using UPoly = std::vector<Rational>;
UPoly from_laurent(const LaurentPoly& p, Var v, int& shift);
LaurentPoly to_laurent(const UPoly& p, Var v, int shift);
void trim(UPoly& p);
UPoly gcd(UPoly a, UPoly b);
/// a / b exactly (b divides a).
UPoly div_exact(const UPoly& a, const UPoly& b);
}  // namespace upoly

}  // namespace daha
