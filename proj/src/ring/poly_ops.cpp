#include "daha/ring/poly_ops.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace daha {

namespace {

// Shared division loop. Returns false (and fills `rem`) when f is not a multiple of g.
bool divide(const LaurentPoly& f, const LaurentPoly& g, Var var, LaurentPoly& quot, LaurentPoly* rem) {
    if (g.is_zero()) throw std::invalid_argument("exact_div by zero");
    const auto G = g.by_degree(var);
    const int dg = G.rbegin()->first;
    const LaurentPoly& lc = G.rbegin()->second;
    if (!lc.is_monomial())
        throw std::invalid_argument("exact_div: leading coefficient in " + std::string(var_name(var)) +
                                    " is not a unit monomial");
    const int span_g = dg - G.begin()->first;
    const LaurentPoly lc_inv = lc.monomial_inverse();

    auto F = f.by_degree(var);
    std::map<int, LaurentPoly> Q;
    while (!F.empty()) {
        const int df = F.rbegin()->first;
        if (df - F.begin()->first < span_g) {
            if (rem) *rem = LaurentPoly::from_degrees(var, F);
            return false;
        }
        LaurentPoly qc = F.rbegin()->second * lc_inv;
        const int shift = df - dg;
        for (const auto& [k, gk] : G) {
            auto it = F.find(k + shift);
            if (k == dg) {
                F.erase(it);  // cancels exactly because lc is a monomial
                continue;
            }
            LaurentPoly prod = qc * gk;
            if (it == F.end()) {
                F.emplace(k + shift, -prod);
            } else {
                it->second -= prod;
                if (it->second.is_zero()) F.erase(it);
            }
        }
        Q.emplace(shift, std::move(qc));
    }
    quot = LaurentPoly::from_degrees(var, Q);
    return true;
}

}  // namespace

LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g, Var var) {
    LaurentPoly q, r;
    if (!divide(f, g, var, q, &r))
        throw NotDivisible("not divisible by " + to_text(g), std::make_shared<const LaurentPoly>(r));
    return q;
}

std::optional<LaurentPoly> try_exact_div(const LaurentPoly& f, const LaurentPoly& g, Var var) {
    LaurentPoly q;
    if (!divide(f, g, var, q, nullptr)) return std::nullopt;
    return q;
}

std::optional<Var> division_var(const LaurentPoly& g) {
    static constexpr Var kOrder[] = {Var::X, Var::q, Var::t1, Var::t2, Var::t3,
                                     Var::t4, Var::U, Var::x, Var::I};
    if (g.is_zero()) return std::nullopt;
    if (g.is_constant()) return Var::q;
    for (Var v : kOrder) {
        if (!g.uses(v)) continue;
        if (g.by_degree(v).rbegin()->second.is_monomial()) return v;
    }
    return std::nullopt;
}

LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g) {
    auto v = division_var(g);
    if (!v) throw std::invalid_argument("exact_div: divisor has no unit leading coefficient: " + to_text(g));
    return exact_div(f, g, *v);
}

std::optional<LaurentPoly> try_exact_div(const LaurentPoly& f, const LaurentPoly& g) {
    auto v = division_var(g);
    if (!v) return std::nullopt;
    return try_exact_div(f, g, *v);
}

LaurentPoly poly_rem(const LaurentPoly& f, const LaurentPoly& g, Var var) {
    if (g.is_zero()) throw std::invalid_argument("poly_rem by zero");
    const auto G = g.by_degree(var);
    if (G.begin()->first < 0) throw std::invalid_argument("poly_rem: negative exponent in divisor");
    const int dg = G.rbegin()->first;
    const LaurentPoly& lc = G.rbegin()->second;
    if (!lc.is_monomial()) throw std::invalid_argument("poly_rem: non-unit leading coefficient");
    const LaurentPoly lc_inv = lc.monomial_inverse();
    auto F = f.by_degree(var);
    if (!F.empty() && F.begin()->first < 0) throw std::invalid_argument("poly_rem: negative exponent");
    while (!F.empty() && F.rbegin()->first >= dg) {
        const int df = F.rbegin()->first;
        LaurentPoly qc = F.rbegin()->second * lc_inv;
        for (const auto& [k, gk] : G) {
            auto& slot = F[k + df - dg];
            slot -= qc * gk;
            if (slot.is_zero()) F.erase(k + df - dg);
        }
    }
    return LaurentPoly::from_degrees(var, F);
}

LaurentPoly substitute_monomial(const LaurentPoly& f, Var var, const Rational& c, const Exp& m) {
    const int vi = static_cast<int>(var);
    std::map<int, Rational> cpow;
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
        const int k = t.e[vi];
        Term u = t;
        if (k != 0) {
            u.e[vi] = 0;
            for (int i = 0; i < kNumVars; ++i) u.e[i] += k * m[i];
            auto it = cpow.find(k);
            if (it == cpow.end()) {
                Rational p(1);
                Rational base = k > 0 ? c : Rational(1 / c);
                for (int j = 0; j < std::abs(k); ++j) p *= base;
                it = cpow.emplace(k, p).first;
            }
            u.c *= it->second;
        }
        out.push_back(std::move(u));
    }
    return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly substitute(const LaurentPoly& f, Var var, const LaurentPoly& value) {
    if (!f.uses(var)) return f;
    if (value.is_monomial()) return substitute_monomial(f, var, value.terms()[0].c, value.terms()[0].e);
    const auto parts = f.by_degree(var);
    if (parts.begin()->first < 0)
        throw NonInvertibleSubstitution("substituting a non-unit for " + std::string(var_name(var)) +
                                        " which occurs with negative exponent");
    LaurentPoly result, power(1L);
    int at = 0;
    for (const auto& [k, coeff] : parts) {
        while (at < k) {
            power = power * value;
            ++at;
        }
        result += coeff * power;
    }
    return result;
}

std::string to_text(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : p.terms()) {
        const bool neg = sgn(t.c) < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        Rational a = abs(t.c);
        const bool constant = t.e == Exp{};
        bool need_star = false;
        if (constant || a != 1) {
            os << a.get_str();
            need_star = true;
        }
        for (int i = 0; i < kNumVars; ++i) {
            if (t.e[i] == 0) continue;
            if (need_star) os << "*";
            os << var_name(static_cast<Var>(i));
            if (t.e[i] != 1) os << "^" << t.e[i];
            need_star = true;
        }
    }
    return os.str();
}

namespace {

class TextParser {
public:
    explicit TextParser(std::string_view s) : s_(s) {}

    LaurentPoly parse() {
        skip();
        if (peek() == '0' && s_.size() == pos_ + 1) return {};
        LaurentPoly result;
        int sign = 1;
        if (peek() == '-') {
            sign = -1;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        while (true) {
            LaurentPoly t = term();
            result += sign > 0 ? t : -t;
            skip();
            if (pos_ >= s_.size()) break;
            char c = s_[pos_++];
            if (c == '+') sign = 1;
            else if (c == '-') sign = -1;
            else fail("expected + or -");
        }
        return result;
    }

private:
    LaurentPoly term() {
        LaurentPoly t(1L);
        while (true) {
            skip();
            t = t * factor();
            skip();
            if (peek() != '*') break;
            ++pos_;
        }
        return t;
    }

    LaurentPoly factor() {
        skip();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
                ++pos_;
            return LaurentPoly(parse_rational(s_.substr(start, pos_ - start)));
        }
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        auto v = parse_var(s_.substr(start, pos_ - start));
        if (!v) fail("unknown variable");
        int e = 1;
        skip();
        if (peek() == '^') {
            ++pos_;
            skip();
            bool neg = false;
            if (peek() == '-') {
                neg = true;
                ++pos_;
            }
            std::size_t ds = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (ds == pos_) fail("expected exponent");
            e = std::stoi(std::string(s_.substr(ds, pos_ - ds)));
            if (neg) e = -e;
        }
        return LaurentPoly::var(*v, e);
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const char* msg) const {
        throw std::invalid_argument(std::string("polynomial text: ") + msg + " at offset " + std::to_string(pos_));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_text(std::string_view s) { return TextParser(s).parse(); }

nlohmann::json to_json(const LaurentPoly& p) {
    std::vector<int> used;
    for (int i = 0; i < kNumVars; ++i)
        if (p.uses(static_cast<Var>(i))) used.push_back(i);
    nlohmann::json vars = nlohmann::json::array();
    for (int i : used) vars.push_back(std::string(var_name(static_cast<Var>(i))));
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : p.terms()) {
        nlohmann::json e = nlohmann::json::array();
        for (int i : used) e.push_back(t.e[i]);
        terms.push_back({{"coeff", t.c.get_str()}, {"exp", e}});
    }
    return {{"vars", vars}, {"terms", terms}};
}

LaurentPoly poly_from_json(const nlohmann::json& j) {
    std::vector<int> idx;
    for (const auto& v : j.at("vars")) {
        auto var = parse_var(v.get<std::string>());
        if (!var) throw std::invalid_argument("unknown variable in polynomial JSON");
        idx.push_back(static_cast<int>(*var));
    }
    std::vector<Term> ts;
    for (const auto& t : j.at("terms")) {
        Term u;
        const auto& e = t.at("exp");
        if (e.size() != idx.size()) throw std::invalid_argument("exponent vector length mismatch");
        for (std::size_t k = 0; k < idx.size(); ++k) u.e[idx[k]] = e[k].get<int>();
        u.c = parse_rational(t.at("coeff").get<std::string>());
        ts.push_back(std::move(u));
    }
    return LaurentPoly::from_terms(std::move(ts));
}

Rational content(const LaurentPoly& p) {
    Integer num = 0, den = 1;
    for (const auto& t : p.terms()) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.c.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den_mpz_t());
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace daha
