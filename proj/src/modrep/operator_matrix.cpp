#include "daha/modrep/operator_matrix.hpp"

#include <functional>
#include <map>

#include "daha/ring/poly_ops.hpp"

namespace daha {

namespace {

const LaurentPoly kQ = LaurentPoly::var(Var::q);

OperatorMatrix from_poly_matrix(const PolyMatrix& m, int shift, int refl) {
    OperatorMatrix r(static_cast<int>(m.size()));
    for (int i = 0; i < r.rank(); ++i)
        for (int j = 0; j < r.rank(); ++j)
            if (!m[i][j].is_zero()) r.at(i, j) = SkewOp::term(FracMulti(m[i][j]), shift, refl);
    return r;
}

OperatorMatrix power(const OperatorMatrix& base, int n) {
    OperatorMatrix r = OperatorMatrix::scalar(base.rank(), FracMulti(1L));
    for (int k = 0; k < n; ++k) r = r * base;
    return r;
}

}  // namespace

OperatorMatrix OperatorMatrix::scalar(int r, const FracMulti& c) {
    OperatorMatrix m(r);
    if (!c.is_zero())
        for (int i = 0; i < r; ++i) m.at(i, i) = SkewOp(c);
    return m;
}

OperatorMatrix OperatorMatrix::diagonal(const std::vector<SkewOp>& d) {
    OperatorMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.rank(); ++i) m.at(i, i) = d[i];
    return m;
}

OperatorMatrix OperatorMatrix::yhat(const ModulePresentation& p) { return from_poly_matrix(p.A, 1, 0); }

OperatorMatrix OperatorMatrix::yhat_inv(const ModulePresentation& p) {
    return from_poly_matrix(mat_subst_X(inverse_unit(p.A), 1, make_exp({{Var::q, 2}, {Var::X, 1}})), -1, 0);
}

OperatorMatrix OperatorMatrix::s(const ModulePresentation& p) { return from_poly_matrix(p.B, 0, 1); }

bool OperatorMatrix::is_zero() const {
    for (const auto& row : e_)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

OperatorMatrix OperatorMatrix::operator-() const {
    OperatorMatrix r = *this;
    for (auto& row : r.e_)
        for (auto& x : row) x = -x;
    return r;
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("operator matrices of different rank");
    OperatorMatrix r = a;
    for (int i = 0; i < r.rank(); ++i)
        for (int j = 0; j < r.rank(); ++j) r.e_[i][j] += b.e_[i][j];
    return r;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("operator matrices of different rank");
    const int r = a.rank();
    OperatorMatrix out(r);
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < r; ++k) {
            if (a.e_[i][k].is_zero()) continue;
            for (int j = 0; j < r; ++j)
                if (!b.e_[k][j].is_zero()) out.e_[i][j] += a.e_[i][k] * b.e_[k][j];
        }
    return out;
}

OperatorMatrix OperatorMatrix::substitute(Var v, const LaurentPoly& value) const {
    OperatorMatrix r = *this;
    for (auto& row : r.e_)
        for (auto& x : row) x = x.substitute(v, value);
    return r;
}

ModuleElement OperatorMatrix::apply(const ModulePresentation& p, const ModuleElement& m) const {
    ModuleElement out = ModuleElement::zero(rank());
    for (int i = 0; i < rank(); ++i) {
        FracMulti acc;
        for (int j = 0; j < rank(); ++j)
            if (!e_[i][j].is_zero() && !m.c.at(j).is_zero()) acc += e_[i][j].apply(FracMulti(m.c[j]));
        if (p.q_value) acc = acc.substitute(Var::q, LaurentPoly(*p.q_value));
        LaurentPoly num = acc.num();
        for (const auto& d : acc.factors())
            for (int k = 0; k < d.mult; ++k) {
                try {
                    num = exact_div(num, d.f);
                } catch (const NotDivisible& e) {
                    throw NotDivisible("coordinate " + p.basis.at(i) + " not divisible by " + to_text(d.f),
                                       std::make_shared<LaurentPoly>(e.remainder()));
                }
            }
        out.c[i] = num;
    }
    return out;
}

nlohmann::json OperatorMatrix::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : e_) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto& x : row) r.push_back(x.to_text());
        rows.push_back(r);
    }
    return rows;
}

OperatorMatrix embed(const ModulePresentation& p, const SkewOp& op) {
    const int r = p.rank();
    const OperatorMatrix y = OperatorMatrix::yhat(p), yi = OperatorMatrix::yhat_inv(p), s = OperatorMatrix::s(p);
    std::map<int, OperatorMatrix> powers;
    const auto yp = [&](int i) -> const OperatorMatrix& {
        auto it = powers.find(i);
        if (it == powers.end()) it = powers.emplace(i, i >= 0 ? power(y, i) : power(yi, -i)).first;
        return it->second;
    };
    OperatorMatrix out(r);
    for (const auto& [key, f] : op.terms()) {
        OperatorMatrix t = OperatorMatrix::scalar(r, f) * yp(key.first);
        if (key.second) t = t * s;
        out = out + t;
    }
    if (p.q_value) out = out.substitute(Var::q, LaurentPoly(*p.q_value));
    return out;
}

SkewOp twist_reflection(const SkewOp& op, int sign) {
    SkewOp r;
    for (const auto& [key, f] : op.terms()) r += SkewOp::term(key.second && sign < 0 ? -f : f, key.first, key.second);
    return r;
}

bool ModuleRelationReport::all_zero() const {
    for (const auto& [name, m] : residuals)
        if (!m.is_zero()) return false;
    return true;
}

std::vector<std::string> ModuleRelationReport::failing() const {
    std::vector<std::string> out;
    for (const auto& [name, m] : residuals)
        if (!m.is_zero()) out.push_back(name);
    return out;
}

nlohmann::json ModuleRelationReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [name, m] : residuals) {
        nlohmann::json j{{"relation", name}, {"zero", m.is_zero()}};
        if (!m.is_zero()) j["residual"] = m.to_json();
        arr.push_back(j);
    }
    return {{"presentation", presentation}, {"module", module}, {"relations", arr}};
}

ModuleRelationReport operator_identity_on_module(const ModulePresentation& p, const Presentation& pres,
                                                 const std::map<std::string, OperatorMatrix>& assignment) {
    pres.validate();
    const int r = p.rank();
    const std::function<OperatorMatrix(const FracMulti&)> scalar = [r](const FracMulti& c) {
        return OperatorMatrix::scalar(r, c);
    };
    ModuleRelationReport rep{pres.name, p.name, {}};
    for (const auto& rel : pres.relations) {
        OperatorMatrix res = evaluate(rel.lhs_minus_rhs, assignment, scalar);
        if (p.q_value) res = res.substitute(Var::q, LaurentPoly(*p.q_value));
        rep.residuals.emplace_back(rel.name, std::move(res));
    }
    return rep;
}

std::map<std::string, OperatorMatrix> module_dunkl_assignment(const ModulePresentation& p, const DahaParams& params) {
    std::map<std::string, OperatorMatrix> out;
    for (const auto& [name, op] : dunkl_assignment(params)) out.emplace(name, embed(p, op));
    return out;
}

std::map<std::string, OperatorMatrix> five_param_assignment(const ModulePresentation& p, const DahaParams& params) {
    const int r = p.rank();
    const auto d = dunkl_generators(params);
    const SkewOp minus = twist_reflection(t1_minus(params), -1);
    std::vector<SkewOp> t1s, t1s_inv;
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j)
            if (i != j && !p.B[i][j].is_zero()) throw std::invalid_argument("T1* needs a diagonal B");
        const LaurentPoly& b = p.B[i][i];
        if (b == LaurentPoly(1L)) {
            t1s.push_back(d.T1);
        } else if (b == LaurentPoly(-1L)) {
            t1s.push_back(minus);
        } else {
            throw std::invalid_argument("T1* needs B entries +-1");
        }
        t1s_inv.push_back(t1s.back() - SkewOp(tbar(params.t3)));
    }
    const OperatorMatrix T0 = embed(p, d.T0), T0inv = embed(p, d.T0inv);
    const OperatorMatrix X = OperatorMatrix::scalar(r, FracMulti(X_pow(1)));
    const OperatorMatrix Xinv = OperatorMatrix::scalar(r, FracMulti(X_pow(-1)));
    return {{"T0", T0},
            {"T1", OperatorMatrix::diagonal(t1s)},
            {"T0v", OperatorMatrix::scalar(r, FracMulti(kQ)) * T0inv * X},
            {"T1v", Xinv * OperatorMatrix::diagonal(t1s_inv)}};
}

}  // namespace daha
