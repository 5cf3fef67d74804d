#include "daha/ring/laurent.hpp"

#include <algorithm>

#include "daha/ring/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace daha {

namespace {

constexpr std::array<std::string_view, kNumVars> kVarNames = {"q", "t1", "t2", "t3", "t4",
                                                              "X", "U",  "x",  "I"};

bool exp_less(const Term& a, const Term& b) { return a.e < b.e; }

}  // namespace

std::string_view var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

std::optional<Var> parse_var(std::string_view name) {
    for (int i = 0; i < kNumVars; ++i)
        if (kVarNames[i] == name) return static_cast<Var>(i);
    return std::nullopt;
}

Rational parse_rational(std::string_view s) {
    Rational r(std::string(s), 10);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

NotDivisible::NotDivisible(const std::string& what, std::shared_ptr<const LaurentPoly> remainder)
    : std::runtime_error(what), remainder_(std::move(remainder)) {}

Exp make_exp(std::initializer_list<std::pair<Var, int>> parts) {
    Exp e{};
    for (auto [v, k] : parts) e[static_cast<int>(v)] += k;
    return e;
}

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_.push_back({Exp{}, Rational(c)});
}

LaurentPoly::LaurentPoly(const Rational& c) {
    if (sgn(c) != 0) terms_.push_back({Exp{}, c});
}

LaurentPoly LaurentPoly::var(Var v, int power) {
    Exp e{};
    e[static_cast<int>(v)] = power;
    return monomial(Rational(1), e);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, const Exp& e) {
    LaurentPoly p;
    if (sgn(c) != 0) p.terms_.push_back({e, c});
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), exp_less);
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto& t : terms) {
        if (!out.empty() && out.back().e == t.e) {
            out.back().c += t.c;
        } else {
            if (!out.empty() && sgn(out.back().c) == 0) out.pop_back();
            out.push_back(std::move(t));
        }
    }
    if (!out.empty() && sgn(out.back().c) == 0) out.pop_back();
    LaurentPoly p;
    p.terms_ = std::move(out);
    return p;
}

LaurentPoly LaurentPoly::from_sorted_terms(std::vector<Term> terms) {
    LaurentPoly p;
    p.terms_ = std::move(terms);
    return p;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].e == Exp{});
}

Rational LaurentPoly::constant_term() const { return coeff(Exp{}); }

Rational LaurentPoly::coeff(const Exp& e) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                               [](const Term& t, const Exp& k) { return t.e < k; });
    if (it != terms_.end() && it->e == e) return it->c;
    return Rational(0);
}

bool LaurentPoly::uses(Var v) const {
    const int i = static_cast<int>(v);
    return std::any_of(terms_.begin(), terms_.end(), [i](const Term& t) { return t.e[i] != 0; });
}

int LaurentPoly::max_degree(Var v) const {
    if (terms_.empty()) throw std::logic_error("max_degree of zero polynomial");
    const int i = static_cast<int>(v);
    int m = terms_[0].e[i];
    for (const auto& t : terms_) m = std::max(m, t.e[i]);
    return m;
}

int LaurentPoly::min_degree(Var v) const {
    if (terms_.empty()) throw std::logic_error("min_degree of zero polynomial");
    const int i = static_cast<int>(v);
    int m = terms_[0].e[i];
    for (const auto& t : terms_) m = std::min(m, t.e[i]);
    return m;
}

std::map<int, LaurentPoly> LaurentPoly::by_degree(Var v) const {
    const int i = static_cast<int>(v);
    std::map<int, std::vector<Term>> buckets;
    for (const auto& t : terms_) {
        Term u = t;
        u.e[i] = 0;
        // Removing one coordinate keeps the relative lex order within a bucket.
        buckets[t.e[i]].push_back(std::move(u));
    }
    std::map<int, LaurentPoly> out;
    for (auto& [k, ts] : buckets) out.emplace(k, from_sorted_terms(std::move(ts)));
    return out;
}

LaurentPoly LaurentPoly::from_degrees(Var v, const std::map<int, LaurentPoly>& parts) {
    const int i = static_cast<int>(v);
    std::vector<Term> ts;
    for (const auto& [k, p] : parts)
        for (const auto& t : p.terms_) {
            Term u = t;
            u.e[i] += k;
            ts.push_back(std::move(u));
        }
    return from_terms(std::move(ts));
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.c = -t.c;
    return r;
}

namespace {

std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b, bool negate_b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].e < b[j].e)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].e < a[i].e) {
            out.push_back(b[j++]);
            if (negate_b) out.back().c = -out.back().c;
        } else {
            Rational c = negate_b ? Rational(a[i].c - b[j].c) : Rational(a[i].c + b[j].c);
            if (sgn(c) != 0) out.push_back({a[i].e, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    terms_ = merge_add(terms_, o.terms_, false);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    terms_ = merge_add(terms_, o.terms_, true);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.c *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1) {
        const auto& m = a.terms_[0];
        std::vector<Term> ts;
        ts.reserve(b.size());
        for (const auto& t : b.terms_) ts.push_back({exp_add(m.e, t.e), m.c * t.c});
        return LaurentPoly::from_sorted_terms(std::move(ts));
    }
    if (b.size() == 1) return b * a;
#ifdef _OPENMP
    if (a.size() * b.size() >= kernels::kParallelWorkThreshold && omp_get_max_threads() > 1)
        return kernels::mul_parallel(a, b);
#endif
    return kernels::mul_serial(a, b);
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].e != b.terms_[i].e || a.terms_[i].c != b.terms_[i].c) return false;
    return true;
}

LaurentPoly LaurentPoly::shifted(const Exp& e) const {
    LaurentPoly r = *this;
    for (auto& t : r.terms_) t.e = exp_add(t.e, e);
    return r;
}

LaurentPoly LaurentPoly::monomial_inverse() const {
    if (!is_monomial()) throw NonInvertibleSubstitution("inverse of a non-monomial Laurent polynomial");
    Exp e{};
    e = exp_sub(e, terms_[0].e);
    return monomial(Rational(1) / terms_[0].c, e);
}

LaurentPoly LaurentPoly::pow(int n) const {
    if (n < 0) return monomial_inverse().pow(-n);
    LaurentPoly result(1L), base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return result;
}

LaurentPoly pow(const LaurentPoly& p, int n) { return p.pow(n); }

}  // namespace daha
