#include "daha/jones/jones.hpp"

#include <sstream>

#include "daha/ring/chebyshev.hpp"
#include "daha/ring/poly_ops.hpp"

namespace daha {

namespace {

const LaurentPoly kQ = LaurentPoly::var(Var::q);

/// Entry (j, i) of M^T evaluated at X = c q^k.
RMatrix eval_transpose(const PolyMatrix& m, const Rational& c, int k) {
    const std::size_t r = m.size();
    RMatrix out(r, RVector(r));
    const Exp e = make_exp({{Var::q, k}});
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) out[j][i] = RatFuncQ(substitute_monomial(m[i][j], Var::X, c, e));
    return out;
}

RMatrix rmat_mul(const RMatrix& a, const RMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    RMatrix r(n, RVector(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

RMatrix rmat_add(const RMatrix& a, const RMatrix& b) {
    RMatrix r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] += b[i][j];
    return r;
}

RMatrix rmat_identity(std::size_t r) {
    RMatrix m(r, RVector(r));
    for (std::size_t i = 0; i < r; ++i) m[i][i] = RatFuncQ(1L);
    return m;
}

/// M_m with c(m) = M_m c(1).
RMatrix chain(const ModulePresentation& p, const PolyMatrix& Ainv, int m) {
    RMatrix M = rmat_identity(p.rank());
    // up: c(k) = (A(-q^2k)^T)^-1 c(k-1)
    for (int k = 2; k <= m; ++k) M = rmat_mul(eval_transpose(Ainv, -1, 2 * k), M);
    // down: c(k-1) = A(-q^2k)^T c(k)
    for (int k = 1; k > m; --k) M = rmat_mul(eval_transpose(p.A, -1, 2 * k), M);
    return M;
}

LaurentPoly lcm_den(const LaurentPoly& a, const LaurentPoly& b) {
    int sa = 0, sb = 0;
    const auto A = upoly::from_laurent(a, Var::q, sa);
    const auto B = upoly::from_laurent(b, Var::q, sb);
    const auto g = upoly::gcd(A, B);
    return a * upoly::to_laurent(upoly::div_exact(B, g), Var::q, sb);
}

RatFuncQ epsilon_rat(const PairingFunctional& eps, const ModuleElement& m) {
    return eps.pair(1, m) - eps.pair(-1, m);
}

}  // namespace

PairingFunctional::PairingFunctional(ModulePresentation p, RVector c_plus, RVector c_minus)
    : p_(std::move(p)), c_plus_(std::move(c_plus)), c_minus_(std::move(c_minus)) {}

RVector PairingFunctional::c(int m) const {
    if (m == 1) return c_plus_;
    if (m == -1) return c_minus_;
    return mat_vec(chain(p_, inverse_unit(p_.A), m), c_plus_);
}

RatFuncQ PairingFunctional::pair(int m, const ModuleElement& elem) const {
    const RVector cm = c(m);
    RatFuncQ acc;
    for (int i = 0; i < elem.rank(); ++i) {
        if (elem.c[i].is_zero()) continue;
        // <U^m, X^k b_i> = (-1)^k q^{2mk} c(m)_i
        LaurentPoly f;
        for (const auto& [k, coeff] : elem.c[i].by_degree(Var::X)) {
            for (int v = 1; v < kNumVars; ++v)
                if (v != static_cast<int>(Var::X) && coeff.uses(static_cast<Var>(v)))
                    throw std::invalid_argument("pair: coefficients must involve q and X only");
            f += (k % 2 ? -1 : 1) * coeff * kQ.pow(2 * m * k);
        }
        acc += RatFuncQ(f) * cm[i];
    }
    return acc;
}

LaurentPoly PairingFunctional::epsilon(const ModuleElement& elem) const {
    LaurentPoly D(1L);
    for (const auto* v : {&c_plus_, &c_minus_})
        for (const auto& x : *v) D = lcm_den(D, x.den());
    LaurentPoly total;
    for (int i = 0; i < elem.rank(); ++i) {
        if (elem.c[i].is_zero()) continue;
        const LaurentPoly np = (c_plus_[i] * RatFuncQ(D)).as_laurent();
        const LaurentPoly nm = (c_minus_[i] * RatFuncQ(D)).as_laurent();
        for (const auto& [k, coeff] : elem.c[i].by_degree(Var::X))
            total += (k % 2 ? -1 : 1) * coeff * (kQ.pow(2 * k) * np - kQ.pow(-2 * k) * nm);
    }
    auto r = try_exact_div(total, D, Var::q);
    if (!r) throw std::domain_error("pairing value is not a Laurent polynomial");
    return *r;
}

RMatrix pairing_constraint(const ModulePresentation& p) {
    return rmat_add(rmat_mul(eval_transpose(p.A, -1, 0), eval_transpose(p.A, -1, 2)), eval_transpose(p.B, -1, 2));
}

PairingFunctional solve_pairing(const ModulePresentation& p, int m_max) {
    RMatrix system = pairing_constraint(p);
    const PolyMatrix Ainv = inverse_unit(p.A);
    auto ns = nullspace(system);
    int level = 1;
    while (ns.size() > 1 && level < m_max) {
        ++level;
        // c(-m) + B(-q^2m)^T c(m) = 0, both sides expressed through c(1)
        const RMatrix extra = rmat_add(chain(p, Ainv, -level), rmat_mul(eval_transpose(p.B, -1, 2 * level), chain(p, Ainv, level)));
        system.insert(system.end(), extra.begin(), extra.end());
        ns = nullspace(system);
    }
    if (ns.empty()) throw PairingInconsistent(p.name + ": the pairing constraints have only the zero solution");
    if (ns.size() > 1) throw PairingNotUnique(p.name + ": nullity " + std::to_string(ns.size()) + " at level " + std::to_string(m_max));
    const RVector c1 = ns[0];
    const RVector cm1 = mat_vec(eval_transpose(p.B, -1, 2), c1);
    RVector c_minus(cm1.size());
    for (std::size_t i = 0; i < cm1.size(); ++i) c_minus[i] = -cm1[i];
    PairingFunctional raw(p, c1, c_minus);
    const RatFuncQ norm = epsilon_rat(raw, p.empty_link);
    if (norm.is_zero()) throw PairingInconsistent(p.name + ": the empty link pairs to zero");
    const RatFuncQ scale = norm.inverse();
    RVector cp = c1, cmn = c_minus;
    for (auto& x : cp) x *= scale;
    for (auto& x : cmn) x *= scale;
    PairingFunctional out(p, cp, cmn);
    out.extra_levels = level - 1;
    return out;
}

PairingFunctional solve_pairing(const KnotId& k) { return solve_pairing(knot_module(k).presentation); }

Convention parse_convention(const std::string& s) {
    if (s == "raw") return Convention::raw;
    if (s == "adjusted" || s == "sign-adjusted") return Convention::adjusted;
    throw std::invalid_argument("unknown convention: " + s);
}

std::string to_string(Convention c) { return c == Convention::raw ? "raw" : "adjusted"; }

std::vector<ModuleElement> chebyshev_iterates(const ModulePresentation& p, const SkewOp& L, int n) {
    std::vector<ModuleElement> it(std::max(n, 1) + 1, ModuleElement::zero(p.rank()));
    if (n < 1) return it;
    it[1] = p.empty_link;
    if (n >= 2) it[2] = apply_skew(p, L, it[1]);
    for (int j = 2; j < n; ++j) it[j + 1] = apply_skew(p, L, it[j]) - it[j - 1];
    return it;
}

std::vector<LaurentPoly> colored_jones_upto(const PairingFunctional& eps, int nmax) {
    std::vector<LaurentPoly> out(std::max(nmax, 0) + 1);
    const auto& p = eps.presentation();
    ModuleElement prev = ModuleElement::zero(p.rank()), cur = p.empty_link;
    for (int n = 1; n <= nmax; ++n) {
        if (n > 1) {
            ModuleElement next = apply_gen(p, Gen::Y, cur) + apply_gen(p, Gen::Yinv, cur) - prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        const LaurentPoly raw = eps.epsilon(cur);
        out[n] = (n % 2) ? raw : -raw;
    }
    return out;
}

LaurentPoly colored_jones(const PairingFunctional& eps, int n) {
    if (n < 0) return -colored_jones(eps, -n);
    if (n == 0) return LaurentPoly();
    return colored_jones_upto(eps, n)[n];
}

LaurentPoly colored_jones(const KnotId& k, int n) { return colored_jones(solve_pairing(k), n); }

SkewOp jones_operator(const DahaParams& params) {
    const auto d = dunkl_generators(params);
    return SkewOp::S() * d.T0 + d.T0inv * SkewOp::S();
}

LaurentPoly jones3(const PairingFunctional& eps, int n, Convention conv, const DahaParams& params) {
    if (n < 0) return -jones3(eps, -n, conv, params);
    if (n == 0) return LaurentPoly();
    const auto it = chebyshev_iterates(eps.presentation(), jones_operator(params), n);
    const LaurentPoly raw = eps.epsilon(it[n]);
    return (conv == Convention::raw || n % 2) ? raw : -raw;
}

LaurentPoly jones3(const KnotId& k, int n, Convention conv, const DahaParams& params) {
    return jones3(solve_pairing(k), n, conv, params);
}

LaurentPoly mirror(const LaurentPoly& f) {
    LaurentPoly r = f;
    for (Var v : {Var::q, Var::t1, Var::t2}) r = substitute_monomial(r, v, 1, make_exp({{v, -1}}));
    return r;
}

bool mirror_check(const KnotId& k, int n) {
    if (!k.amphichiral()) throw UnsupportedKnot("mirror_check needs an amphichiral catalog knot");
    const LaurentPoly j = jones3(k, n);
    return mirror(j) == j;
}

JonesTable jones_table(const KnotId& k, int nmax, Convention conv, bool three_variable) {
    JonesTable t{k, conv, three_variable, {}};
    const auto eps = solve_pairing(k);
    const auto classical = three_variable ? std::vector<LaurentPoly>{} : colored_jones_upto(eps, nmax);
    t.entries[0] = LaurentPoly();
    for (int n = 1; n <= nmax; ++n) {
        LaurentPoly v;
        if (three_variable) {
            v = jones3(eps, n, conv, DahaParams::three());
        } else {
            v = classical[n];
            if (conv == Convention::raw && n % 2 == 0) v = -v;
        }
        t.entries[n] = v;
        t.entries[-n] = -v;
    }
    return t;
}

std::optional<LaurentPoly> to_v_form(const LaurentPoly& f) {
    const LaurentPoly t2 = LaurentPoly::var(Var::t2);
    const LaurentPoly v = t2 - t2.pow(-1);
    LaurentPoly rest = f, out;
    while (rest.uses(Var::t2) && rest.max_degree(Var::t2) > 0) {
        const int d = rest.max_degree(Var::t2);
        const LaurentPoly top = rest.by_degree(Var::t2).at(d);
        rest -= top * v.pow(d);
        out += top * t2.pow(d);
    }
    if (rest.uses(Var::t2)) return std::nullopt;
    return out + rest;
}

std::string render_tv(const LaurentPoly& f, bool latex) {
    if (f.is_zero()) return "0";
    const auto vf = to_v_form(f);
    const LaurentPoly& g = vf ? *vf : f;
    const char* t2name = vf ? "v" : "t2";
    const auto power = [&](const std::string& name, int e) {
        if (e == 1) return name;
        if (latex) return name + "^{" + std::to_string(e) + "}";
        return name + "^" + std::to_string(e);
    };
    const auto monomial_text = [&](const Term& t) {
        std::vector<std::string> parts;
        if (t.e[static_cast<int>(Var::t1)]) parts.push_back(power("t", t.e[static_cast<int>(Var::t1)]));
        if (t.e[static_cast<int>(Var::t2)]) parts.push_back(power(t2name, t.e[static_cast<int>(Var::t2)]));
        std::string s;
        for (const auto& p : parts) s += (s.empty() ? "" : (latex ? " " : "*")) + p;
        return s;
    };
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, coeff] : g.by_degree(Var::q)) {
        // coeff is a polynomial in t and v with rational coefficients
        std::vector<std::string> terms;
        for (const auto& t : coeff.terms()) {
            const std::string mono = monomial_text(t);
            Rational c = t.c;
            std::string s = c < 0 ? "-" : "+";
            const Rational a = abs(c);
            if (mono.empty()) s += to_string(a);
            else if (a == 1) s += mono;
            else s += to_string(a) + (latex ? " " : "*") + mono;
            terms.push_back(s);
        }
        std::string body;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            const std::string& s = terms[i];
            if (i == 0) body += (s[0] == '-' ? "-" : "") + s.substr(1);
            else body += std::string(" ") + s[0] + " " + s.substr(1);
        }
        const bool wrap = terms.size() > 1;
        std::string sign = "+";
        if (!wrap && body[0] == '-') {
            sign = "-";
            body = body.substr(1);
        }
        std::string piece;
        if (k == 0) piece = wrap ? "(" + body + ")" : body;
        else {
            const std::string qp = power("q", k);
            if (!wrap && body == "1") piece = qp;
            else piece = (wrap ? "(" + body + ")" : body) + (latex ? " " : "*") + qp;
        }
        if (first) os << (sign == "-" ? "-" : "") << piece;
        else os << " " << sign << " " << piece;
        first = false;
    }
    return os.str();
}

}  // namespace daha
