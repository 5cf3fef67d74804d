#include "daha/skew/skew_op.hpp"

#include "daha/ring/poly_ops.hpp"

namespace daha {

SkewOp::SkewOp(long c) : SkewOp(FracMulti(c)) {}

SkewOp::SkewOp(const LaurentPoly& f) : SkewOp(FracMulti(f)) {}

SkewOp::SkewOp(const FracMulti& f) {
    if (!f.is_zero()) terms_.emplace(Key{0, 0}, f);
}

SkewOp SkewOp::term(const FracMulti& f, int i, int e) {
    SkewOp r;
    if (!f.is_zero()) r.terms_.emplace(Key{i, e & 1}, f);
    return r;
}

FracMulti SkewOp::coeff(int i, int e) const {
    auto it = terms_.find({i, e});
    return it == terms_.end() ? FracMulti() : it->second;
}

SkewOp SkewOp::operator-() const {
    SkewOp r = *this;
    for (auto& [k, f] : r.terms_) f = -f;
    return r;
}

SkewOp& SkewOp::operator+=(const SkewOp& o) {
    for (const auto& [k, f] : o.terms_) {
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, f);
            continue;
        }
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

SkewOp& SkewOp::operator-=(const SkewOp& o) { return *this += -o; }

FracMulti skew_twist(const FracMulti& g, int i, int e) {
    if (i == 0 && e == 0) return g;
    if (!g.uses(Var::X)) return g;
    const Exp m = e == 0 ? make_exp({{Var::q, -2 * i}, {Var::X, 1}}) : make_exp({{Var::q, 2 * i}, {Var::X, -1}});
    return g.substitute_monomial(Var::X, Rational(1), m);
}

SkewOp operator*(const SkewOp& a, const SkewOp& b) {
    SkewOp r;
    for (const auto& [ka, fa] : a.terms_) {
        const auto [i, e] = ka;
        for (const auto& [kb, gb] : b.terms_) {
            const auto [j, d] = kb;
            const FracMulti c = fa * skew_twist(gb, i, e);
            r += SkewOp::term(c, i + (e ? -j : j), e ^ d);
        }
    }
    return r;
}

SkewOp SkewOp::substitute(Var v, const LaurentPoly& value) const {
    SkewOp r;
    for (const auto& [k, f] : terms_) r += term(f.substitute(v, value), k.first, k.second);
    return r;
}

FracMulti SkewOp::apply(const FracMulti& f) const {
    FracMulti acc;
    for (const auto& [k, c] : terms_) acc += c * skew_twist(f, k.first, k.second);
    return acc;
}

std::string SkewOp::to_text() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, f] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + f.to_text() + ")";
        if (k.first != 0) s += "*P^" + std::to_string(k.first);
        if (k.second) s += "*S";
    }
    return s;
}

}  // namespace daha
