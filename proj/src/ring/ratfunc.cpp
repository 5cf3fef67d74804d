#include "daha/ring/ratfunc.hpp"

#include <stdexcept>

#include "daha/ring/poly_ops.hpp"

namespace daha {

namespace upoly {

UPoly from_laurent(const LaurentPoly& p, Var v, int& shift) {
    if (p.is_zero()) {
        shift = 0;
        return {};
    }
    const int vi = static_cast<int>(v);
    shift = p.min_degree(v);
    UPoly out(static_cast<std::size_t>(p.max_degree(v) - shift + 1));
    for (const auto& t : p.terms()) {
        for (int i = 0; i < kNumVars; ++i)
            if (i != vi && t.e[i] != 0) throw std::invalid_argument("expected a univariate polynomial");
        out[static_cast<std::size_t>(t.e[vi] - shift)] = t.c;
    }
    return out;
}

LaurentPoly to_laurent(const UPoly& p, Var v, int shift) {
    std::vector<Term> ts;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (sgn(p[i]) == 0) continue;
        Term t;
        t.e[static_cast<int>(v)] = static_cast<int>(i) + shift;
        t.c = p[i];
        ts.push_back(std::move(t));
    }
    return LaurentPoly::from_sorted_terms(std::move(ts));
}

void trim(UPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

namespace {

void make_monic(UPoly& p) {
    if (p.empty()) return;
    Rational lc = p.back();
    for (auto& c : p) c /= lc;
}

// a <- a mod b, b monic and nonzero.
void reduce_mod(UPoly& a, const UPoly& b) {
    const std::size_t db = b.size() - 1;
    Rational tmp;
    while (a.size() > db && !a.empty()) {
        Rational c = a.back();
        const std::size_t off = a.size() - 1 - db;
        for (std::size_t i = 0; i < db; ++i) {
            tmp = c * b[i];
            a[off + i] -= tmp;
        }
        a.pop_back();
        trim(a);
    }
}

}  // namespace

UPoly gcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    if (a.size() < b.size()) std::swap(a, b);
    make_monic(b);
    while (!b.empty()) {
        reduce_mod(a, b);
        std::swap(a, b);
        make_monic(b);
    }
    make_monic(a);
    return a;
}

UPoly div_exact(const UPoly& a_in, const UPoly& b) {
    UPoly a = a_in;
    trim(a);
    if (a.empty()) return {};
    const std::size_t db = b.size() - 1;
    UPoly q(a.size() - db);
    const Rational& lc = b.back();
    for (std::size_t k = a.size(); k-- > db;) {
        Rational c = a[k] / lc;
        q[k - db] = c;
        for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
    }
    trim(q);
    return q;
}

}  // namespace upoly

RatFuncQ::RatFuncQ(const LaurentPoly& p) : num_(p), den_(1L) {
    for (int i = 1; i < kNumVars; ++i)
        if (p.uses(static_cast<Var>(i))) throw std::invalid_argument("RatFuncQ: polynomial is not in q alone");
}

RatFuncQ::RatFuncQ(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) { canonicalize(); }

void RatFuncQ::canonicalize() {
    if (den_.is_zero()) throw std::domain_error("RatFuncQ: zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPoly(1L);
        return;
    }
    int sn = 0, sd = 0;
    upoly::UPoly N = upoly::from_laurent(num_, Var::q, sn);
    upoly::UPoly D = upoly::from_laurent(den_, Var::q, sd);
    if (D.size() > 1) {
        upoly::UPoly g = upoly::gcd(N, D);
        if (g.size() > 1) {
            N = upoly::div_exact(N, g);
            D = upoly::div_exact(D, g);
        }
    }
    Rational lc = D.back();
    for (auto& c : N) c /= lc;
    for (auto& c : D) c /= lc;
    num_ = upoly::to_laurent(N, Var::q, sn - sd);
    den_ = upoly::to_laurent(D, Var::q, 0);
}

const LaurentPoly& RatFuncQ::as_laurent() const {
    if (!is_laurent()) throw std::domain_error("rational function is not a Laurent polynomial: " + to_text());
    return num_;
}

RatFuncQ RatFuncQ::operator-() const {
    RatFuncQ r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFuncQ RatFuncQ::inverse() const {
    if (is_zero()) throw std::domain_error("RatFuncQ: inverse of zero");
    return RatFuncQ(den_, num_);
}

RatFuncQ operator+(const RatFuncQ& a, const RatFuncQ& b) {
    if (a.is_laurent() && b.is_laurent()) return RatFuncQ(a.num_ + b.num_);
    if (a.den_ == b.den_) return RatFuncQ(a.num_ + b.num_, a.den_);
    return RatFuncQ(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFuncQ operator-(const RatFuncQ& a, const RatFuncQ& b) { return a + (-b); }

RatFuncQ operator*(const RatFuncQ& a, const RatFuncQ& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_laurent() && b.is_laurent()) return RatFuncQ(a.num_ * b.num_);
    return RatFuncQ(a.num_ * b.num_, a.den_ * b.den_);
}

RatFuncQ operator/(const RatFuncQ& a, const RatFuncQ& b) { return a * b.inverse(); }

std::string RatFuncQ::to_text() const {
    if (is_laurent()) return daha::to_text(num_);
    return "(" + daha::to_text(num_) + ")/(" + daha::to_text(den_) + ")";
}

}  // namespace daha
