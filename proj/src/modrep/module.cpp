#include "daha/modrep/module.hpp"

#include <map>

#include "daha/ring/poly_ops.hpp"

namespace daha {

namespace {

const Exp kShiftDown = make_exp({{Var::q, -2}, {Var::X, 1}});  // X -> q^-2 X
const Exp kShiftUp = make_exp({{Var::q, 2}, {Var::X, 1}});     // X -> q^2 X
const Exp kFlip = make_exp({{Var::X, -1}});                    // X -> X^-1

LaurentPoly subst_X(const LaurentPoly& f, const Exp& m, const Rational& c = 1) {
    return substitute_monomial(f, Var::X, c, m);
}

ModuleElement subst_X(const ModuleElement& v, const Exp& m) {
    ModuleElement r = v;
    for (auto& f : r.c) f = subst_X(f, m);
    return r;
}

ModuleElement mat_apply(const PolyMatrix& a, const ModuleElement& v) {
    ModuleElement r = ModuleElement::zero(static_cast<int>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.c.size(); ++j)
            if (!a[i][j].is_zero() && !v.c[j].is_zero()) r.c[i] += a[i][j] * v.c[j];
    return r;
}

bool is_identity(const PolyMatrix& a) { return a == identity_matrix(static_cast<int>(a.size())); }

struct PolyLess {
    bool operator()(const LaurentPoly& a, const LaurentPoly& b) const { return poly_less(a, b); }
};

}  // namespace

PolyMatrix identity_matrix(int r) {
    PolyMatrix m(r, std::vector<LaurentPoly>(r));
    for (int i = 0; i < r; ++i) m[i][i] = LaurentPoly(1L);
    return m;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    PolyMatrix r(n, std::vector<LaurentPoly>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (std::size_t j = 0; j < m; ++j)
                if (!b[l][j].is_zero()) r[i][j] += a[i][l] * b[l][j];
        }
    return r;
}

PolyMatrix mat_sub(const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < r[i].size(); ++j) r[i][j] -= b[i][j];
    return r;
}

PolyMatrix mat_subst_X(const PolyMatrix& a, const Rational& c, const Exp& m) {
    PolyMatrix r = a;
    for (auto& row : r)
        for (auto& f : row) f = subst_X(f, m, c);
    return r;
}

PolyMatrix mat_subst(const PolyMatrix& a, Var v, const LaurentPoly& value) {
    PolyMatrix r = a;
    for (auto& row : r)
        for (auto& f : row) f = substitute(f, v, value);
    return r;
}

LaurentPoly determinant(const PolyMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0) return LaurentPoly(1L);
    if (n == 1) return a[0][0];
    LaurentPoly det;
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j].is_zero()) continue;
        PolyMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<LaurentPoly> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            minor.push_back(std::move(row));
        }
        LaurentPoly t = a[0][j] * determinant(minor);
        if (j % 2) det -= t;
        else det += t;
    }
    return det;
}

PolyMatrix inverse_unit(const PolyMatrix& a) {
    const std::size_t n = a.size();
    const LaurentPoly det = determinant(a);
    if (!det.is_monomial()) throw std::invalid_argument("determinant is not a unit monomial: " + to_text(det));
    const LaurentPoly det_inv = det.monomial_inverse();
    PolyMatrix inv(n, std::vector<LaurentPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            // inv[i][j] = (-1)^{i+j} det(minor_{j,i}) / det
            PolyMatrix minor;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == j) continue;
                std::vector<LaurentPoly> row;
                for (std::size_t c = 0; c < n; ++c)
                    if (c != i) row.push_back(a[r][c]);
                minor.push_back(std::move(row));
            }
            LaurentPoly cof = determinant(minor) * det_inv;
            inv[i][j] = ((i + j) % 2) ? -cof : cof;
        }
    return inv;
}

nlohmann::json matrix_to_json(const PolyMatrix& a) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : a) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& f : row) r.push_back(to_text(f));
        rows.push_back(r);
    }
    return rows;
}

ModuleElement ModuleElement::basis(int r, int i, const LaurentPoly& f) {
    ModuleElement m = zero(r);
    m.c.at(i) = f;
    return m;
}

bool ModuleElement::is_zero() const {
    for (const auto& f : c)
        if (!f.is_zero()) return false;
    return true;
}

ModuleElement ModuleElement::operator-() const {
    ModuleElement r = *this;
    for (auto& f : r.c) f = -f;
    return r;
}

ModuleElement operator+(const ModuleElement& a, const ModuleElement& b) {
    if (a.c.size() != b.c.size()) throw std::invalid_argument("module elements of different rank");
    ModuleElement r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

ModuleElement operator*(const LaurentPoly& f, const ModuleElement& m) {
    ModuleElement r = m;
    for (auto& g : r.c) g = f * g;
    return r;
}

LaurentPoly ModulePresentation::specialize(const LaurentPoly& f) const {
    return q_value ? substitute(f, Var::q, LaurentPoly(*q_value)) : f;
}

ModuleElement ModulePresentation::specialize(const ModuleElement& m) const {
    if (!q_value) return m;
    ModuleElement r = m;
    for (auto& f : r.c) f = specialize(f);
    return r;
}

std::optional<int> ModulePresentation::witness_index() const {
    if (!unknot_witness) return std::nullopt;
    std::optional<int> idx;
    for (int i = 0; i < unknot_witness->rank(); ++i) {
        const auto& f = unknot_witness->c[i];
        if (f.is_zero()) continue;
        if (idx || !f.is_monomial()) return std::nullopt;
        idx = i;
    }
    return idx;
}

nlohmann::json to_json(const ModulePresentation& p, const ModuleElement& m) {
    nlohmann::json arr = nlohmann::json::array();
    for (int i = 0; i < m.rank(); ++i) arr.push_back({{"basis", p.basis.at(i)}, {"poly", to_json(m.c[i])}});
    return arr;
}

ModuleElement element_from_json(const ModulePresentation& p, const nlohmann::json& j) {
    ModuleElement m = ModuleElement::zero(p.rank());
    for (const auto& e : j) {
        const std::string name = e.at("basis").get<std::string>();
        bool found = false;
        for (int i = 0; i < p.rank(); ++i)
            if (p.basis[i] == name) {
                m.c[i] += poly_from_json(e.at("poly"));
                found = true;
            }
        if (!found) throw std::invalid_argument("unknown basis name " + name);
    }
    return m;
}

std::string to_text(const ModulePresentation& p, const ModuleElement& m) {
    std::string out;
    for (int i = 0; i < m.rank(); ++i) {
        if (m.c[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + to_text(m.c[i]) + ")*" + p.basis.at(i);
    }
    return out.empty() ? "0" : out;
}

ModuleElement apply_gen(const ModulePresentation& p, Gen g, const ModuleElement& m) {
    switch (g) {
        case Gen::X: return X_pow(1) * m;
        case Gen::Xinv: return X_pow(-1) * m;
        case Gen::Y: return p.specialize(mat_apply(p.A, subst_X(m, kShiftDown)));
        case Gen::Yinv: return p.specialize(subst_X(mat_apply(inverse_unit(p.A), m), kShiftUp));
        case Gen::s: return p.specialize(mat_apply(p.B, subst_X(m, kFlip)));
    }
    throw std::logic_error("unreachable");
}

ModuleElement apply_word(const ModulePresentation& p, int i, int e, const ModuleElement& m) {
    ModuleElement r = e ? apply_gen(p, Gen::s, m) : m;
    if (i > 0) {
        for (int k = 0; k < i; ++k) r = apply_gen(p, Gen::Y, r);
    } else if (i < 0) {
        const PolyMatrix inv = inverse_unit(p.A);
        for (int k = 0; k < -i; ++k) r = p.specialize(subst_X(mat_apply(inv, r), kShiftUp));
    }
    return r;
}

ModuleElement apply_skew(const ModulePresentation& p, const SkewOp& op, const ModuleElement& m) {
    // lcm of the denominators as factor -> multiplicity
    std::map<LaurentPoly, int, PolyLess> lcm;
    for (const auto& [key, f] : op.terms())
        for (const auto& d : f.factors()) {
            int& mult = lcm[d.f];
            mult = std::max(mult, d.mult);
        }
    ModuleElement num = ModuleElement::zero(p.rank());
    for (const auto& [key, f] : op.terms()) {
        LaurentPoly scale = f.num();
        for (const auto& [g, mult] : lcm) {
            int own = 0;
            for (const auto& d : f.factors())
                if (d.f == g) own = d.mult;
            if (mult > own) scale *= g.pow(mult - own);
        }
        num = num + scale * apply_word(p, key.first, key.second, m);
    }
    num = p.specialize(num);
    for (const auto& [g0, mult] : lcm) {
        const LaurentPoly g = p.specialize(g0);
        if (g.is_zero()) throw PoleAtEvaluation("denominator " + to_text(g0) + " vanishes at the specialized q");
        for (int k = 0; k < mult; ++k)
            for (int i = 0; i < p.rank(); ++i) {
                if (num.c[i].is_zero()) continue;
                try {
                    num.c[i] = exact_div(num.c[i], g);
                } catch (const NotDivisible& e) {
                    throw NotDivisible("coordinate " + p.basis[i] + " of " + p.name + " not divisible by " + to_text(g),
                                       std::make_shared<LaurentPoly>(e.remainder()));
                }
            }
    }
    return num;
}

nlohmann::json ValidationReport::to_json() const {
    return {{"det_unit", det_unit},   {"involution", involution},        {"braid", braid},
            {"braid_variant", braid_variant}, {"variants_agree", variants_agree()}, {"violations", violations}};
}

ValidationReport validate_presentation(const ModulePresentation& p) {
    ValidationReport rep;
    const int r = p.rank();
    const LaurentPoly det = p.specialize(determinant(p.A));
    rep.det_unit = det.is_monomial();
    if (!rep.det_unit) rep.violations.push_back("det A is not a unit monomial: " + to_text(det));

    const PolyMatrix Binv_arg = mat_subst_X(p.B, 1, kFlip);
    const auto spec = [&](const PolyMatrix& a) { return p.q_value ? mat_subst(a, Var::q, LaurentPoly(*p.q_value)) : a; };
    rep.involution = spec(mat_mul(p.B, Binv_arg)) == identity_matrix(r);
    if (!rep.involution) rep.violations.push_back("B(X) B(X^-1) != Id");

    const PolyMatrix lhs = mat_mul(mat_mul(p.A, mat_subst_X(p.B, 1, kShiftDown)),
                                   mat_subst_X(p.A, 1, make_exp({{Var::q, 2}, {Var::X, -1}})));
    rep.braid = spec(lhs) == spec(p.B);
    if (!rep.braid) rep.violations.push_back("A(X) B(q^-2 X) A(q^2 X^-1) != B(X)");

    const PolyMatrix var = mat_mul(mat_mul(mat_mul(p.B, mat_subst_X(p.A, 1, kFlip)),
                                           mat_subst_X(p.B, 1, make_exp({{Var::q, -2}, {Var::X, -1}}))),
                                   mat_subst_X(p.A, 1, kShiftUp));
    rep.braid_variant = spec(var) == identity_matrix(r);
    if (!rep.braid_variant) rep.violations.push_back("B(X) A(X^-1) B(q^-2 X^-1) A(q^2 X) != Id");
    if (!rep.variants_agree()) rep.violations.push_back("the two orderings of the yhat/s relation disagree");
    return rep;
}

nlohmann::json Certificate::to_json() const {
    nlohmann::json j{{"ok", ok}, {"endpoints_ok", endpoints_ok}};
    if (ok) j["quotients"] = matrix_to_json(quotients);
    else {
        j["failure"] = failure;
        j["row"] = row;
        j["col"] = col;
        if (remainder) j["remainder"] = to_text(*remainder);
    }
    return j;
}

namespace {

Certificate divide_entries(const PolyMatrix& num, const LaurentPoly& divisor) {
    Certificate c;
    c.quotients = num;
    for (std::size_t i = 0; i < num.size(); ++i)
        for (std::size_t j = 0; j < num[i].size(); ++j) {
            try {
                c.quotients[i][j] = exact_div(num[i][j], divisor);
            } catch (const NotDivisible& e) {
                c.failure = "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + to_text(num[i][j]) +
                            " not divisible by " + to_text(divisor);
                c.row = static_cast<int>(i);
                c.col = static_cast<int>(j);
                c.remainder = e.remainder();
                c.quotients.clear();
                return c;
            }
        }
    c.ok = true;
    return c;
}

}  // namespace

Certificate u0_certificate(const ModulePresentation& p) {
    const LaurentPoly q = LaurentPoly::var(Var::q), X = LaurentPoly::var(Var::X);
    PolyMatrix num = mat_sub(identity_matrix(p.rank()), mat_mul(p.B, mat_subst_X(p.A, 1, kFlip)));
    if (p.q_value) num = mat_subst(num, Var::q, LaurentPoly(*p.q_value));
    Certificate c = divide_entries(num, p.specialize(1 - q * q * X * X));
    const CMatrixReport cm = c_matrix_check(p);
    c.endpoints_ok = cm.ok();
    if (c.ok && !c.endpoints_ok) {
        c.ok = false;
        c.failure = "divisible but endpoint conditions fail";
    }
    return c;
}

Certificate u1_certificate(const ModulePresentation& p) {
    const LaurentPoly X = LaurentPoly::var(Var::X);
    PolyMatrix num = mat_sub(identity_matrix(p.rank()), p.B);
    if (p.q_value) num = mat_subst(num, Var::q, LaurentPoly(*p.q_value));
    return divide_entries(num, 1 - X * X);
}

ModulePresentation quotient_presentation(const ModulePresentation& p) {
    const auto w = p.witness_index();
    if (!w) throw WitnessNotBasisAligned(p.name + ": unknot witness is absent or not a basis line");
    if (p.rank() < 2) throw std::invalid_argument(p.name + ": quotient by the witness would have rank 0");
    for (int i = 0; i < p.rank(); ++i)
        if (i != *w && (!p.A[i][*w].is_zero() || !p.B[i][*w].is_zero()))
            throw WitnessNotBasisAligned(p.name + ": witness line is not invariant under yhat and s");
    ModulePresentation r;
    r.name = p.name + "/unknot";
    r.q_value = p.q_value;
    const auto drop = [&](const PolyMatrix& a) {
        PolyMatrix m;
        for (int i = 0; i < p.rank(); ++i) {
            if (i == *w) continue;
            std::vector<LaurentPoly> row;
            for (int j = 0; j < p.rank(); ++j)
                if (j != *w) row.push_back(a[i][j]);
            m.push_back(std::move(row));
        }
        return m;
    };
    r.A = drop(p.A);
    r.B = drop(p.B);
    for (int i = 0; i < p.rank(); ++i)
        if (i != *w) r.basis.push_back(p.basis[i]);
    r.empty_link = ModuleElement::zero(r.rank());
    for (int i = 0, k = 0; i < p.rank(); ++i)
        if (i != *w) r.empty_link.c[k++] = p.empty_link.c.at(i);
    return r;
}

nlohmann::json CMatrixReport::to_json() const {
    return {{"C(q)", matrix_to_json(C_plus)},
            {"C(-q)", matrix_to_json(C_minus)},
            {"C(q)=Id", plus_identity},
            {"C(-q)=Id", minus_identity}};
}

CMatrixReport c_matrix_check(const ModulePresentation& p) {
    const auto at = [&](int sign) {
        // B(sign q^-1) A(sign q)
        PolyMatrix C = mat_mul(mat_subst_X(p.B, sign, make_exp({{Var::q, -1}})),
                               mat_subst_X(p.A, sign, make_exp({{Var::q, 1}})));
        return p.q_value ? mat_subst(C, Var::q, LaurentPoly(*p.q_value)) : C;
    };
    CMatrixReport rep;
    rep.C_plus = at(1);
    rep.C_minus = at(-1);
    rep.plus_identity = is_identity(rep.C_plus);
    rep.minus_identity = is_identity(rep.C_minus);
    return rep;
}

}  // namespace daha
