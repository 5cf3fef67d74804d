#include "daha/skew/daha.hpp"

#include <numeric>
#include <stdexcept>

#include "daha/ring/chebyshev.hpp"

namespace daha {

namespace {

const LaurentPoly kQ = LaurentPoly::var(Var::q);
const LaurentPoly kX = LaurentPoly::var(Var::X);

LaurentPoly inv(const LaurentPoly& t) { return t.pow(-1); }

NcPoly g(const char* name) { return NcPoly::gen(name); }

}  // namespace

DahaParams DahaParams::symbolic() {
    return {LaurentPoly::var(Var::t1), LaurentPoly::var(Var::t2), LaurentPoly::var(Var::t3),
            LaurentPoly::var(Var::t4)};
}

DahaParams DahaParams::three() { return {LaurentPoly::var(Var::t1), LaurentPoly::var(Var::t2), 1L, 1L}; }

DahaParams DahaParams::ones() { return {1L, 1L, 1L, 1L}; }

LaurentPoly tbar(const LaurentPoly& t) { return t - inv(t); }

DunklGenerators dunkl_generators(const DahaParams& p) {
    const SkewOp sy = SkewOp::S() * SkewOp::P();
    const auto c0 = FracMulti::ratio(kQ.pow(2) * tbar(p.t1) * kX.pow(2) + kQ * tbar(p.t2) * kX, 1 - kQ.pow(2) * kX.pow(2));
    const auto c1 = FracMulti::ratio(tbar(p.t3) + tbar(p.t4) * kX, 1 - kX.pow(2));
    DunklGenerators d;
    d.T0 = SkewOp(p.t1) * sy - SkewOp(c0) * (SkewOp(1L) - sy);
    d.T1 = SkewOp(p.t3) * SkewOp::S() + SkewOp(c1) * (SkewOp(1L) - SkewOp::S());
    d.T0inv = d.T0 - SkewOp(tbar(p.t1));
    d.T1inv = d.T1 - SkewOp(tbar(p.t3));
    d.T0v = SkewOp(kQ) * d.T0inv * SkewOp::X();
    d.T1v = SkewOp::X(-1) * d.T1inv;
    return d;
}

SkewOp u0_operator() {
    return SkewOp(FracMulti::ratio(1L, 1 - kQ.pow(2) * kX.pow(2))) * (SkewOp(1L) - SkewOp::S() * SkewOp::P());
}

SkewOp askey_wilson(const DahaParams& p) {
    if (p.t3 != LaurentPoly(1L) || p.t4 != LaurentPoly(1L)) throw std::invalid_argument("askey_wilson needs t3 = t4 = 1");
    const auto a = [&](const LaurentPoly& x) {
        return FracMulti::ratio(inv(p.t1) * kQ * x.pow(-1) - p.t2 + inv(p.t2) - p.t1 * inv(kQ) * x,
                                kQ * x.pow(-1) - inv(kQ) * x);
    };
    return SkewOp(a(kX)) * (SkewOp::P() - SkewOp(1L)) + SkewOp(a(kX.pow(-1))) * (SkewOp::P(-1) - SkewOp(1L)) +
           SkewOp(p.t1 + inv(p.t1));
}

SkewOp askey_wilson_dunkl(const DahaParams& p) {
    const auto d = dunkl_generators(p);
    return d.T1 * d.T0 + d.T0inv * d.T1inv;
}

SkewOp t1_minus(const DahaParams& p) {
    const auto c = FracMulti::ratio(tbar(p.t3) + tbar(p.t4) * kX, 1 - kX.pow(2));
    return SkewOp(inv(p.t3)) * SkewOp::S() + SkewOp(c) * (SkewOp(1L) + SkewOp::S());
}

SkewOp fg_curve(int m, int l) {
    if (m == 0 && l == 0) throw std::invalid_argument("fg_curve: (0,0) is not a curve");
    const int d = std::gcd(m, l);
    const int a = m / d, b = l / d;
    const auto e = [](int r, int s) { return SkewOp::term(FracMulti(LaurentPoly::monomial(1, make_exp({{Var::q, -r * s}, {Var::X, r}}))), s, 0); };
    const SkewOp z = e(a, b) + e(-a, -b);
    return chebyshev_eval(ChebKind::T, d, z, SkewOp(1L));
}

SphericalConstants spherical_constants(const DahaParams& p) {
    const LaurentPoly q = kQ, qi = inv(kQ);
    const LaurentPoly b1 = tbar(p.t1), b2 = tbar(p.t2), b4 = tbar(p.t4);
    const LaurentPoly qt3 = q * p.t3 - qi * inv(p.t3);
    const LaurentPoly q2p = q.pow(2) + q.pow(-2);
    const LaurentPoly qp = q + qi;
    const LaurentPoly rhs = -q2p * b1 * b2 * qt3 * b4 + q2p * inv(p.t2).pow(2) * (p.t1.pow(2) + 1 + p.t2.pow(2)) +
                            (1 + q.pow(-2) * inv(p.t1).pow(2)) * (q.pow(4) + q.pow(2) * (q.pow(2) + p.t1.pow(2)) * (p.t4.pow(2) + inv(p.t4).pow(2))) +
                            (q.pow(2) + p.t2.pow(2)) * (q.pow(2) + inv(p.t2).pow(2)) * (q.pow(-2) * inv(p.t3).pow(2) + q.pow(2) * p.t3.pow(2)) -
                            4 * qp.pow(2) + 6 + q.pow(-4) + q.pow(-2);
    SphericalConstants c;
    c.Q0 = FracMulti::ratio(rhs, qp.pow(2));
    c.B = FracMulti::ratio(b2 * qt3 + b1 * b4, qp);
    c.D0 = FracMulti(b1 * qt3 + b2 * b4);
    c.D1 = FracMulti(b1 * b2 + qt3 * b4);
    return c;
}

Presentation cc_daha_presentation(const DahaParams& p) {
    const auto quad = [](const char* name, const LaurentPoly& t) { return (g(name) - NcPoly(t)) * (g(name) + NcPoly(inv(t))); };
    return {"cc_daha",
            {"T0", "T1", "T0v", "T1v"},
            {{"(T0-t1)(T0+1/t1)", quad("T0", p.t1)},
             {"(T0v-t2)(T0v+1/t2)", quad("T0v", p.t2)},
             {"(T1-t3)(T1+1/t3)", quad("T1", p.t3)},
             {"(T1v-t4)(T1v+1/t4)", quad("T1v", p.t4)},
             {"T1v T1 T0 T0v = q", g("T1v") * g("T1") * g("T0") * g("T0v") - NcPoly(kQ)}}};
}

std::map<std::string, SkewOp> dunkl_assignment(const DahaParams& p) {
    const auto d = dunkl_generators(p);
    return {{"T0", d.T0}, {"T1", d.T1}, {"T0v", d.T0v}, {"T1v", d.T1v}};
}

Presentation xyt_presentation(const DahaParams& p) {
    const NcPoly X = g("X"), Xi = g("Xinv"), Y = g("Y"), Yi = g("Yinv"), T = g("T"), Ti = g("Tinv");
    const NcPoly q(kQ), q2(kQ.pow(2));
    return {"xyt",
            {"X", "Xinv", "Y", "Yinv", "T", "Tinv"},
            {{"X Xinv = 1", X * Xi - NcPoly(1L)},
             {"Y Yinv = 1", Y * Yi - NcPoly(1L)},
             {"T Tinv = 1", T * Ti - NcPoly(1L)},
             {"XT = T^-1 X^-1 - tbar4", X * T - Ti * Xi + NcPoly(tbar(p.t4))},
             {"T^-1 Y = Y^-1 T + tbar1", Ti * Y - Yi * T - NcPoly(tbar(p.t1))},
             {"T^2 = 1 + tbar3 T", T * T - NcPoly(1L) - NcPoly(tbar(p.t3)) * T},
             {"TXY = q^2 T^-1 YX - q^2 tbar1 X - q tbar2 - tbar4 Y",
              T * X * Y - q2 * Ti * Y * X + q2 * NcPoly(tbar(p.t1)) * X + q * NcPoly(tbar(p.t2)) + NcPoly(tbar(p.t4)) * Y}}};
}

std::map<std::string, SkewOp> xyt_assignment(const DahaParams& p) {
    const auto d = dunkl_generators(p);
    return {{"X", SkewOp::X()},  {"Xinv", SkewOp::X(-1)},         {"Y", d.T1 * d.T0},
            {"Yinv", d.T0inv * d.T1inv}, {"T", d.T1}, {"Tinv", d.T1inv}};
}

Presentation koornwinder_presentation(const DahaParams& p) {
    const auto c = spherical_constants(p);
    const NcPoly x = g("x"), y = g("y"), z = g("z"), e = g("e");
    const NcPoly q(kQ), qi(kQ.pow(-1));
    const NcPoly q22(kQ.pow(2) - kQ.pow(-2)), q11(kQ - kQ.pow(-1));
    const NcPoly B(c.B), D0(c.D0), D1(c.D1), Q0(c.Q0);
    const NcPoly casimir = -q * x * y * z + NcPoly(kQ.pow(2)) * x * x + NcPoly(kQ.pow(-2)) * y * y +
                           NcPoly(kQ.pow(2)) * z * z - q * D1 * x - qi * D0 * y - q * B * (x * y - q11 * z);
    return {"koornwinder",
            {"x", "y", "z", "e"},
            {{"e^2 = e", e * e - e},
             {"[x,y]_q = (q^2-q^-2) z", q_commutator(x, y) - q22 * z},
             {"[y,z]_q = (q^2-q^-2) x - (q-q^-1) B y - (q-q^-1) D1", q_commutator(y, z) - q22 * x + q11 * B * y + q11 * D1 * e},
             {"[z,x]_q = (q^2-q^-2) y - (q-q^-1) B x + (q-q^-1) D0", q_commutator(z, x) - q22 * y + q11 * B * x - q11 * D0 * e},
             {"Q0 = casimir", Q0 * e - casimir}}};
}

std::map<std::string, SkewOp> koornwinder_assignment(const DahaParams& p) {
    const auto d = dunkl_generators(p);
    const SkewOp e = SkewOp(FracMulti::ratio(1L, p.t3 + inv(p.t3))) * (d.T1 + SkewOp(inv(p.t3)));
    const SkewOp x = SkewOp(kX + kX.pow(-1)) * e;
    const SkewOp y = (d.T1 * d.T0 + d.T0inv * d.T1inv) * e;
    const SkewOp z = SkewOp(FracMulti::ratio(1L, kQ.pow(2) - kQ.pow(-2))) * (SkewOp(kQ) * x * y - SkewOp(kQ.pow(-1)) * y * x);
    return {{"x", x}, {"y", y}, {"z", z}, {"e", e}};
}

SkewOp koornwinder_casimir(const DahaParams& p) {
    const auto c = spherical_constants(p);
    const auto a = koornwinder_assignment(p);
    const SkewOp &x = a.at("x"), &y = a.at("y"), &z = a.at("z");
    const SkewOp q(kQ), qi(kQ.pow(-1)), q11(kQ - kQ.pow(-1));
    return -q * x * y * z + SkewOp(kQ.pow(2)) * x * x + SkewOp(kQ.pow(-2)) * y * y + SkewOp(kQ.pow(2)) * z * z -
           q * SkewOp(c.D1) * x - qi * SkewOp(c.D0) * y - q * SkewOp(c.B) * (x * y - q11 * z);
}

std::optional<FracMulti> koornwinder_central_value(const DahaParams& p) {
    const SkewOp c = koornwinder_casimir(p);
    const SkewOp e = koornwinder_assignment(p).at("e");
    const FracMulti v = c.coeff(0, 1) / e.coeff(0, 1);
    if (v.uses(Var::X) || c != SkewOp(v) * e) return std::nullopt;
    return v;
}

Presentation torus_skein_presentation() {
    const NcPoly x = g("x"), y = g("y"), z = g("z");
    const NcPoly q22(kQ.pow(2) - kQ.pow(-2));
    return {"torus_skein",
            {"x", "y", "z"},
            {{"[x,y]_q = (q^2-q^-2) z", q_commutator(x, y) - q22 * z},
             {"[z,x]_q = (q^2-q^-2) y", q_commutator(z, x) - q22 * y},
             {"[y,z]_q = (q^2-q^-2) x", q_commutator(y, z) - q22 * x},
             {"cubic", NcPoly(kQ.pow(2)) * x * x + NcPoly(kQ.pow(-2)) * y * y + NcPoly(kQ.pow(2)) * z * z -
                           NcPoly(kQ) * x * y * z - NcPoly(2 * (kQ.pow(2) + kQ.pow(-2)))}}};
}

std::map<std::string, SkewOp> torus_skein_assignment() {
    return {{"x", fg_curve(1, 0)}, {"y", fg_curve(0, 1)}, {"z", fg_curve(1, 1)}};
}

namespace {

Presentation a1_common(const char* name, const NcPoly& quadratic, const NcPoly& xy_relation) {
    const NcPoly X = g("X"), Xi = g("Xinv"), Y = g("Y"), Yi = g("Yinv"), T = g("T"), Ti = g("Tinv");
    return {name,
            {"X", "Xinv", "Y", "Yinv", "T", "Tinv"},
            {{"X Xinv = 1", X * Xi - NcPoly(1L)},
             {"Y Yinv = 1", Y * Yi - NcPoly(1L)},
             {"T Tinv = 1", T * Ti - NcPoly(1L)},
             {"TXT = X^-1", T * X * T - Xi},
             {"TY^-1T = Y", T * Yi * T - Y},
             {"quadratic", quadratic},
             {"XY", xy_relation}}};
}

}  // namespace

Presentation cherednik_presentation(const LaurentPoly& t) {
    const NcPoly X = g("X"), Y = g("Y"), T = g("T");
    return a1_common("cherednik", (T - NcPoly(t)) * (T + NcPoly(inv(t))), X * Y - NcPoly(kQ.pow(2)) * Y * X * T * T);
}

Presentation a1_specialized_presentation(const LaurentPoly& t) {
    const NcPoly X = g("X"), Y = g("Y"), T = g("T"), Ti = g("Tinv");
    return a1_common("a1_specialized", (T - NcPoly(inv(t))) * (T + NcPoly(t)), X * Y - NcPoly(kQ.pow(2)) * Ti * Ti * Y * X);
}

std::map<std::string, SkewOp> a1_specialized_assignment(const LaurentPoly& t) {
    return xyt_assignment({1L, 1L, inv(t), 1L});
}

std::map<std::string, SkewOp> cherednik_assignment(const LaurentPoly& t) {
    const auto d = dunkl_generators({1L, 1L, t, 1L});
    return {{"X", SkewOp::X()},          {"Xinv", SkewOp::X(-1)},
            {"T", d.T1},                 {"Tinv", d.T1inv},
            {"Y", SkewOp::P() * SkewOp::S() * d.T1}, {"Yinv", d.T1inv * SkewOp::S() * SkewOp::P(-1)}};
}

std::map<std::string, SkewOp> twisted_cherednik_assignment(const LaurentPoly& t, bool t_inverse_plus) {
    const SkewOp u0 = u0_operator();
    const SkewOp T = SkewOp(t) * SkewOp::S() * SkewOp::P() + SkewOp(tbar(t)) * u0;
    const SkewOp Ti = t_inverse_plus ? T + SkewOp(tbar(t)) : T - SkewOp(tbar(t));
    return {{"X", SkewOp(kQ * kX)},
            {"Xinv", SkewOp(inv(kQ) * kX.pow(-1))},
            {"T", T},
            {"Tinv", Ti},
            {"Y", SkewOp(t) * SkewOp::P() + SkewOp(tbar(t)) * SkewOp::S() * u0},
            {"Yinv", Ti * SkewOp::S()}};
}

}  // namespace daha
