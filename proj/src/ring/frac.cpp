#include "daha/ring/frac.hpp"

#include <algorithm>

#include "daha/ring/poly_ops.hpp"

namespace daha {

bool poly_less(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    const auto& x = a.terms();
    const auto& y = b.terms();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].e != y[i].e) return x[i].e < y[i].e;
        if (x[i].c != y[i].c) return x[i].c < y[i].c;
    }
    return false;
}

LaurentPoly normalize_factor(const LaurentPoly& f, LaurentPoly& unit_inv) {
    if (f.is_zero()) throw std::domain_error("zero denominator factor");
    Exp lo = f.terms()[0].e;
    for (const auto& t : f.terms())
        for (int i = 0; i < kNumVars; ++i) lo[i] = std::min(lo[i], t.e[i]);
    Exp neg{};
    neg = exp_sub(neg, lo);
    LaurentPoly shifted = f.shifted(neg);
    const Rational lc = shifted.terms().back().c;
    shifted *= Rational(1 / lc);
    unit_inv = LaurentPoly::monomial(Rational(1 / lc), neg);
    return shifted;
}

void FracMulti::add_factor(const LaurentPoly& f, int mult) {
    if (mult == 0) return;
    LaurentPoly unit_inv;
    LaurentPoly n = normalize_factor(f, unit_inv);
    num_ = num_ * unit_inv.pow(mult);
    if (n == LaurentPoly(1L)) return;
    auto it = std::lower_bound(den_.begin(), den_.end(), n,
                               [](const DenFactor& d, const LaurentPoly& k) { return poly_less(d.f, k); });
    if (it != den_.end() && it->f == n) {
        it->mult += mult;
    } else {
        den_.insert(it, DenFactor{std::move(n), mult});
    }
}

void FracMulti::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    for (auto& d : den_) {
        while (d.mult > 0) {
            auto q = try_exact_div(num_, d.f);
            if (!q) break;
            num_ = std::move(*q);
            --d.mult;
        }
    }
    den_.erase(std::remove_if(den_.begin(), den_.end(), [](const DenFactor& d) { return d.mult == 0; }),
               den_.end());
}

FracMulti FracMulti::ratio(const LaurentPoly& num, const LaurentPoly& den) {
    FracMulti r(num);
    r.add_factor(den, 1);
    r.reduce();
    return r;
}

LaurentPoly FracMulti::denominator() const {
    LaurentPoly d(1L);
    for (const auto& f : den_) d = d * f.f.pow(f.mult);
    return d;
}

FracMulti FracMulti::operator-() const {
    FracMulti r = *this;
    r.num_ = -r.num_;
    return r;
}

FracMulti operator+(const FracMulti& a, const FracMulti& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    if (a.den_.empty() && b.den_.empty()) return FracMulti(a.num_ + b.num_);
    FracMulti r;
    LaurentPoly fa(1L), fb(1L);
    std::size_t i = 0, j = 0;
    while (i < a.den_.size() || j < b.den_.size()) {
        if (j == b.den_.size() || (i < a.den_.size() && poly_less(a.den_[i].f, b.den_[j].f))) {
            fb = fb * a.den_[i].f.pow(a.den_[i].mult);
            r.den_.push_back(a.den_[i++]);
        } else if (i == a.den_.size() || poly_less(b.den_[j].f, a.den_[i].f)) {
            fa = fa * b.den_[j].f.pow(b.den_[j].mult);
            r.den_.push_back(b.den_[j++]);
        } else {
            const int ma = a.den_[i].mult, mb = b.den_[j].mult;
            if (ma < mb) fa = fa * a.den_[i].f.pow(mb - ma);
            if (mb < ma) fb = fb * a.den_[i].f.pow(ma - mb);
            r.den_.push_back(DenFactor{a.den_[i].f, std::max(ma, mb)});
            ++i;
            ++j;
        }
    }
    r.num_ = a.num_ * fa + b.num_ * fb;
    r.reduce();
    return r;
}

FracMulti operator-(const FracMulti& a, const FracMulti& b) { return a + (-b); }

FracMulti operator*(const FracMulti& a, const FracMulti& b) {
    if (a.is_zero() || b.is_zero()) return {};
    FracMulti r(a.num_ * b.num_);
    if (a.den_.empty() && b.den_.empty()) return r;
    std::size_t i = 0, j = 0;
    while (i < a.den_.size() || j < b.den_.size()) {
        if (j == b.den_.size() || (i < a.den_.size() && poly_less(a.den_[i].f, b.den_[j].f))) {
            r.den_.push_back(a.den_[i++]);
        } else if (i == a.den_.size() || poly_less(b.den_[j].f, a.den_[i].f)) {
            r.den_.push_back(b.den_[j++]);
        } else {
            r.den_.push_back(DenFactor{a.den_[i].f, a.den_[i].mult + b.den_[j].mult});
            ++i;
            ++j;
        }
    }
    r.reduce();
    return r;
}

FracMulti FracMulti::inverse() const {
    if (is_zero()) throw std::domain_error("FracMulti: inverse of zero");
    FracMulti r(denominator());
    r.add_factor(num_, 1);
    r.reduce();
    return r;
}

FracMulti operator/(const FracMulti& a, const FracMulti& b) { return a * b.inverse(); }

bool operator==(const FracMulti& a, const FracMulti& b) { return (a - b).is_zero(); }

FracMulti FracMulti::substitute_monomial(Var var, const Rational& c, const Exp& m) const {
    FracMulti r(daha::substitute_monomial(num_, var, c, m));
    for (const auto& d : den_) {
        LaurentPoly g = daha::substitute_monomial(d.f, var, c, m);
        if (g.is_zero()) throw PoleAtEvaluation("denominator factor " + daha::to_text(d.f) + " vanishes");
        r.add_factor(g, d.mult);
    }
    r.reduce();
    return r;
}

FracMulti FracMulti::substitute(Var var, const LaurentPoly& value) const {
    if (value.is_monomial()) return substitute_monomial(var, value.terms()[0].c, value.terms()[0].e);
    FracMulti r(daha::substitute(num_, var, value));
    for (const auto& d : den_) {
        LaurentPoly g = daha::substitute(d.f, var, value);
        if (g.is_zero()) throw PoleAtEvaluation("denominator factor " + daha::to_text(d.f) + " vanishes");
        r.add_factor(g, d.mult);
    }
    r.reduce();
    return r;
}

FracMulti FracMulti::substitute(Var var, const FracMulti& value) const {
    if (value.is_polynomial()) return substitute(var, value.num());
    FracMulti r = daha::substitute(num_, var, value);
    for (const auto& d : den_) {
        FracMulti g = daha::substitute(d.f, var, value);
        if (g.is_zero()) throw PoleAtEvaluation("denominator factor " + daha::to_text(d.f) + " vanishes");
        for (int k = 0; k < d.mult; ++k) r = r / g;
    }
    return r;
}

bool FracMulti::uses(Var v) const {
    if (num_.uses(v)) return true;
    return std::any_of(den_.begin(), den_.end(), [v](const DenFactor& d) { return d.f.uses(v); });
}

std::string FracMulti::to_text() const {
    if (den_.empty()) return daha::to_text(num_);
    std::string s = "(" + daha::to_text(num_) + ")/(";
    for (std::size_t i = 0; i < den_.size(); ++i) {
        if (i) s += "*";
        s += "(" + daha::to_text(den_[i].f) + ")";
        if (den_[i].mult != 1) s += "^" + std::to_string(den_[i].mult);
    }
    return s + ")";
}

FracMulti substitute(const LaurentPoly& f, Var var, const FracMulti& value) {
    if (!f.uses(var)) return FracMulti(f);
    if (value.is_polynomial() && (value.num().is_monomial() || f.min_degree(var) >= 0))
        return FracMulti(substitute(f, var, value.num()));
    const auto parts = f.by_degree(var);
    FracMulti result;
    for (const auto& [k, coeff] : parts) {
        FracMulti term(coeff);
        const FracMulti base = k < 0 ? value.inverse() : value;
        for (int i = 0; i < std::abs(k); ++i) term = term * base;
        result += term;
    }
    return result;
}

}  // namespace daha
