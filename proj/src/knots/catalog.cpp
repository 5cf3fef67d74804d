#include "daha/knots/catalog.hpp"

#include <algorithm>
#include <charconv>

#include "daha/ring/chebyshev.hpp"
#include "daha/ring/poly_ops.hpp"

namespace daha {

namespace {

const LaurentPoly q = LaurentPoly::var(Var::q);
const LaurentPoly X = LaurentPoly::var(Var::X);
const LaurentPoly xsym = X + X.pow(-1);
const LaurentPoly delta = X - X.pow(-1);

LaurentPoly S(int n) { return n < 0 ? LaurentPoly() : substitute(chebyshev(ChebKind::S, n), Var::x, xsym); }
LaurentPoly T(int n) { return substitute(chebyshev(ChebKind::T, n), Var::x, xsym); }

LaurentPoly sgn(int k) { return LaurentPoly(k % 2 == 0 ? 1L : -1L); }

// f(q^2 X^-1)
LaurentPoly prime(const LaurentPoly& f) { return substitute_monomial(f, Var::X, 1, make_exp({{Var::q, 2}, {Var::X, -1}})); }

ModuleElement elem(std::initializer_list<LaurentPoly> coeffs) { return ModuleElement(std::vector<LaurentPoly>(coeffs)); }

int parse_int(const std::string& s) {
    int v = 0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end) throw std::invalid_argument("bad integer in knot selector: " + s);
    return v;
}

KnotModuleData unknot_data() {
    KnotModuleData d{KnotId::unknot(), {}, {}};
    auto& p = d.presentation;
    p.name = "unknot";
    p.basis = {"1"};
    p.A = {{LaurentPoly(-1L)}};
    p.B = {{LaurentPoly(-1L)}};
    p.empty_link = elem({delta});
    p.unknot_witness = elem({LaurentPoly(1L)});
    const ModuleElement de = elem({delta});
    d.symmetric_formulas = {
        {"y.delta", 'y', de, -(q.pow(2) + q.pow(-2)) * de},
        {"z.delta", 'z', de, -q.pow(-3) * xsym * de},
    };
    return d;
}

KnotModuleData torus_data(int pp) {
    KnotModuleData d{KnotId::torus(pp), {}, {}};
    auto& p = d.presentation;
    p.name = pp == 1 ? "trefoil" : "torus:" + std::to_string(pp);
    p.basis = {"u", "v"};
    const LaurentPoly corner = sgn(pp) * q.pow(2 * pp + 4) * (X.pow(-2 * pp - 3) - q.pow(-4) * X.pow(-2 * pp + 1));
    p.A = {{LaurentPoly(-1L), corner}, {LaurentPoly(), q.pow(2 * (2 * pp + 1)) * X.pow(-2 * (2 * pp + 1))}};
    p.B = {{LaurentPoly(-1L), LaurentPoly()}, {LaurentPoly(), LaurentPoly(1L)}};
    p.empty_link = elem({LaurentPoly(), LaurentPoly(1L)});
    p.unknot_witness = elem({LaurentPoly(1L), LaurentPoly()});

    const ModuleElement v = elem({LaurentPoly(), LaurentPoly(1L)});
    const ModuleElement w = elem({delta, LaurentPoly()});  // w <-> delta u
    const LaurentPoly lead = sgn(pp + 1) * q.pow(2 * pp + 2);
    d.symmetric_formulas = {
        {"y.1K", 'y', v,
         q.pow(4 * pp + 2) * T(4 * pp + 2) * v + lead * (q.pow(2) * S(2 * pp + 2) - q.pow(-2) * S(2 * pp - 2)) * w},
        {"z.1K", 'z', v,
         q.pow(4 * pp + 1) * T(4 * pp + 1) * v + lead * (q * S(2 * pp + 1) - q.pow(-3) * S(2 * pp - 3)) * w},
        {"y.w", 'y', w, -(q.pow(2) + q.pow(-2)) * w},
        {"z.w", 'z', w, -q.pow(-3) * xsym * w},
    };
    if (pp == 1) {
        // The trefoil's own display, stated with Chebyshev polynomials of lower index.
        d.symmetric_formulas.push_back({"y.1K (trefoil form)", 'y', v, (q.pow(6) * S(4) - q.pow(2)) * w + q.pow(6) * T(6) * v});
        d.symmetric_formulas.push_back({"z.1K (trefoil form)", 'z', v, q.pow(5) * S(3) * w + q.pow(5) * T(5) * v});
        d.symmetric_formulas.push_back({"z.w (trefoil form)", 'z', w, -q.pow(-3) * S(1) * w});
    }
    return d;
}

KnotModuleData figure8_data() {
    KnotModuleData d{KnotId::figure8(), {}, {}};
    auto& p = d.presentation;
    p.name = "fig8";
    p.basis = {"p'", "u", "v"};
    const LaurentPoly a = -q.pow(-2) * X.pow(4) + q.pow(-2) * X.pow(2) + q.pow(2);
    const LaurentPoly b = -q.pow(-2) * X.pow(2) + q.pow(2) * X.pow(-2);
    const LaurentPoly c = q.pow(-2) * X.pow(3) - q.pow(2) * X.pow(-1);
    const LaurentPoly zero;
    p.A = {{LaurentPoly(-1L), c, q.pow(2) * prime(c)}, {zero, a, q.pow(4) * prime(b)}, {zero, b, prime(a)}};
    p.B = {{LaurentPoly(-1L), zero, zero}, {zero, LaurentPoly(1L), zero}, {zero, zero, LaurentPoly(1L)}};
    p.empty_link = elem({zero, LaurentPoly(1L), zero});
    p.unknot_witness = elem({LaurentPoly(1L), zero, zero});

    const ModuleElement P = elem({delta, zero, zero});  // p <-> delta p'
    const ModuleElement u = elem({zero, LaurentPoly(1L), zero});
    const ModuleElement v = elem({zero, zero, LaurentPoly(1L)});
    const LaurentPoly q2 = q.pow(2), qm2 = q.pow(-2);
    d.symmetric_formulas = {
        {"y.p", 'y', P, -(q2 + qm2) * P},
        {"z.p", 'z', P, -q.pow(-3) * xsym * P},
        {"y.u", 'y', u, (q2 + qm2 * S(2)) * P + (-qm2 * T(4) + qm2 * T(2) + q2 * T(0)) * u + (q2 - qm2) * T(2) * v},
        {"z.u", 'z', u, q.pow(-3) * S(3) * P + (-q.pow(-3) * T(5) + q.pow(-3) * T(3) + q * T(1)) * u +
                            (-q.pow(-3) * T(3) + q * T(1)) * v},
        {"y.v", 'y', v, (-q.pow(6) * S(2) - q2) * P + (q2 - q.pow(6)) * T(2) * u + (-q.pow(6) * T(4) + q2 * T(2) + q2 * T(0)) * v},
        {"z.v", 'z', v, (-q.pow(5) - q) * S(1) * P + (q * T(3) - q.pow(5) * T(1)) * u + (-q.pow(5) * T(3) + 2 * q * T(1)) * v},
    };
    // The same action in the basis u, v, w with p = (x^2 - 3) u + v + w.
    const ModuleElement w = P - (xsym * xsym - 3) * u - v;
    const auto lin = [&](const LaurentPoly& fu, const LaurentPoly& fv, const LaurentPoly& fw) { return fu * u + fv * v + fw * w; };
    const std::vector<SymmetricFormula> uvw = {
        {"uvw y.u", 'y', u, lin((q2 + qm2) * S(2), q2 * S(2) + qm2, q2 + qm2 * S(2))},
        {"uvw y.v", 'y', v, lin(-q.pow(6) * S(4) + q2, -q.pow(6) * S(4) + q2 * S(2), -q.pow(6) * S(2) - q2)},
        {"uvw y.w", 'y', w, lin(qm2 - q.pow(-6) * S(4), -qm2 - q.pow(-6) * S(2), qm2 * S(2) - q.pow(-6) * S(4))},
        {"uvw z.u", 'z', u, lin(q * S(1) + q.pow(-3) * S(3), (q + q.pow(-3)) * S(1), q.pow(-3) * S(3))},
        {"uvw z.v", 'z', v, lin(-q.pow(5) * S(3), q * S(1) - q.pow(5) * S(3), (-q.pow(5) - q) * S(1))},
        {"uvw z.w", 'z', w, lin(q.pow(-3) * S(1) - q.pow(-7) * S(5), -q.pow(-7) * S(3), q.pow(-3) * S(3) - q.pow(-7) * S(5))},
    };
    d.symmetric_formulas.insert(d.symmetric_formulas.end(), uvw.begin(), uvw.end());
    return d;
}

}  // namespace

KnotId KnotId::torus(int p) {
    if (p < 1) throw std::invalid_argument("torus(p) needs p >= 1");
    return {Kind::torus, p, 0};
}

KnotId KnotId::parse(const std::string& s) {
    if (s == "unknot") return unknot();
    if (s == "trefoil") return trefoil();
    if (s == "fig8" || s == "figure8") return figure8();
    if (s.rfind("torus:", 0) == 0) return torus(parse_int(s.substr(6)));
    if (s.rfind("2bridge:", 0) == 0) {
        const auto rest = s.substr(8);
        const auto slash = rest.find('/');
        if (slash == std::string::npos) throw std::invalid_argument("2bridge selector needs p/q: " + s);
        return twobridge(parse_int(rest.substr(0, slash)), parse_int(rest.substr(slash + 1)));
    }
    throw std::invalid_argument("unknown knot selector: " + s);
}

std::string KnotId::to_string() const {
    switch (kind) {
        case Kind::unknot: return "unknot";
        case Kind::torus: return p == 1 ? "trefoil" : "torus:" + std::to_string(p);
        case Kind::figure8: return "fig8";
        case Kind::twobridge: return "2bridge:" + std::to_string(p) + "/" + std::to_string(qq);
    }
    return "?";
}

KnotModuleData knot_module(const KnotId& k) {
    switch (k.kind) {
        case KnotId::Kind::unknot: return unknot_data();
        case KnotId::Kind::torus:
            if (k.p > kTorusBound) throw UnsupportedKnot("torus(p) is instantiated for p <= " + std::to_string(kTorusBound));
            return torus_data(k.p);
        case KnotId::Kind::figure8: return figure8_data();
        case KnotId::Kind::twobridge: break;
    }
    throw UnsupportedKnot("no skein-module presentation for " + k.to_string());
}

bool KnotReport::ok() const {
    return std::all_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.pass; });
}

nlohmann::json KnotReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& l : lines) arr.push_back({{"id", l.id}, {"pass", l.pass}, {"detail", l.detail}});
    return {{"knot", knot}, {"checks", arr}};
}

KnotReport verify_symmetric_actions(const KnotId& k) {
    const auto d = knot_module(k);
    const auto& p = d.presentation;
    KnotReport rep{k.to_string(), {}};
    for (const auto& f : d.symmetric_formulas) {
        ModuleElement m = apply_gen(p, Gen::Y, f.input);
        if (f.curve == 'z') m = (q.pow(-1) * X) * m;
        const ModuleElement lhs = m + apply_gen(p, Gen::s, m);
        const bool pass = lhs == f.expected;
        rep.lines.push_back({f.label, pass,
                             pass ? to_text(p, lhs) : "computed " + to_text(p, lhs) + " expected " + to_text(p, f.expected)});
    }
    return rep;
}

KnotReport verify_unknot_witness(const KnotId& k) {
    const auto d = knot_module(k);
    const auto& p = d.presentation;
    KnotReport rep{k.to_string(), {}};
    if (!p.unknot_witness) {
        rep.lines.push_back({"witness", false, "no witness"});
        return rep;
    }
    const auto& w = *p.unknot_witness;
    const auto yw = apply_gen(p, Gen::Y, w), sw = apply_gen(p, Gen::s, w);
    rep.lines.push_back({"yhat.w = -w", yw == -w, to_text(p, yw)});
    rep.lines.push_back({"s.w = -w", sw == -w, to_text(p, sw)});
    return rep;
}

KnotReport verify_witness_closure(const KnotId& k) {
    const auto d = knot_module(k);
    const auto& p = d.presentation;
    KnotReport rep{k.to_string(), {}};
    const auto idx = p.witness_index();
    if (!idx) {
        rep.lines.push_back({"closure", false, "witness not basis aligned"});
        return rep;
    }
    const std::pair<Gen, const char*> gens[] = {{Gen::X, "X"}, {Gen::Xinv, "X^-1"}, {Gen::Y, "yhat"}, {Gen::Yinv, "yhat^-1"}, {Gen::s, "s"}};
    for (int e = -2; e <= 2; ++e) {
        const auto m = ModuleElement::basis(p.rank(), *idx, X.pow(e));
        for (const auto& [g, name] : gens) {
            const auto img = apply_gen(p, g, m);
            bool inside = true;
            for (int i = 0; i < p.rank(); ++i)
                if (i != *idx && !img.c[i].is_zero()) inside = false;
            rep.lines.push_back({std::string(name) + " on X^" + std::to_string(e) + " w", inside, to_text(p, img)});
        }
    }
    return rep;
}

}  // namespace daha
