#include "daha/rec/rec.hpp"

#include <algorithm>

#include "daha/jones/jones.hpp"
#include "daha/ring/linalg.hpp"
#include "daha/ring/poly_ops.hpp"

namespace daha {

namespace {

const LaurentPoly kOne(1L);

// X -> -q^-2n.
LaurentPoly eval_X(const LaurentPoly& f, int n) {
    return substitute_monomial(f, Var::X, -1, make_exp({{Var::q, -2 * n}}));
}

// q^m - q^-m.
LaurentPoly bracket(int m) { return q_pow(m) - q_pow(-m); }

// Every q-exponent halved; throws unless all are even.
LaurentPoly halve_q(const LaurentPoly& f) {
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        if (t.e[0] % 2) throw std::logic_error("odd q exponent in " + to_text(f));
        Term h = t;
        h.e[0] /= 2;
        out.push_back(h);
    }
    return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly divide_or_throw(const LaurentPoly& f, const LaurentPoly& g, const std::string& where) {
    if (auto h = try_exact_div(f, g, Var::q)) return *h;
    throw NotDivisible(where + ": " + to_text(f) + " not divisible by " + to_text(g),
                       std::make_shared<LaurentPoly>(poly_rem(f.shifted(make_exp({{Var::q, f.is_zero() ? 0 : -f.min_degree(Var::q)}})),
                                                              g.shifted(make_exp({{Var::q, -g.min_degree(Var::q)}})), Var::q)));
}

}  // namespace

const LaurentPoly& JSequence::at(int n) const {
    const auto it = values.find(n);
    if (it == values.end()) throw std::out_of_range(source + ": J(" + std::to_string(n) + ") outside the window");
    return it->second;
}

JSequence j_sequence(const KnotId& k, int N) {
    const auto vals = colored_jones_upto(solve_pairing(k), N);
    JSequence s{k.to_string(), {}};
    s.values[0] = LaurentPoly();
    for (int n = 1; n <= N; ++n) {
        s.values[n] = vals[n];
        s.values[-n] = -vals[n];
    }
    return s;
}

JSequence j_sequence(std::string source, const std::function<LaurentPoly(int)>& J, int N) {
    JSequence s{std::move(source), {}};
    s.values[0] = LaurentPoly();
    for (int n = 1; n <= N; ++n) {
        s.values[n] = J(n);
        s.values[-n] = -s.values[n];
    }
    return s;
}

Sequence Sequence::from(const JSequence& j) {
    Sequence s;
    for (const auto& [n, v] : j.values) s.values.emplace(n, RatFuncQ(v));
    return s;
}

const RatFuncQ& Sequence::at(int n) const {
    const auto it = values.find(n);
    if (it == values.end()) throw std::out_of_range("sequence value at " + std::to_string(n) + " outside the window");
    return it->second;
}

SeqOperator SeqOperator::coefficient(const LaurentPoly& F, const LaurentPoly& G) { return {{{F, G, 0, 0}}}; }
SeqOperator SeqOperator::X(int k) { return coefficient(X_pow(k)); }
SeqOperator SeqOperator::Y(int l) { return {{{kOne, kOne, l, 0}}}; }
SeqOperator SeqOperator::s() { return {{{kOne, kOne, 0, 1}}}; }
SeqOperator SeqOperator::U0() {
    const LaurentPoly g = 1 - q_pow(2) * X_pow(2);
    return {{{kOne, g, 0, 0}, {-kOne, g, -1, 1}}};  // s Y = Y^-1 s
}

SeqOperator operator+(const SeqOperator& a, const SeqOperator& b) {
    SeqOperator r = a;
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    return r;
}

SeqOperator operator-(const SeqOperator& a, const SeqOperator& b) {
    SeqOperator r = a;
    for (auto t : b.terms) {
        t.F = -t.F;
        r.terms.push_back(t);
    }
    return r;
}

SeqOperator operator*(const SeqOperator& a, const SeqOperator& b) {
    SeqOperator r;
    for (const auto& x : a.terms)
        for (const auto& y : b.terms) {
            // Move F_y(X)/G_y(X) left past Y^{l_x} s^{eps_x}.
            LaurentPoly F = y.F, G = y.G;
            if (x.eps) {
                F = substitute_monomial(F, Var::X, 1, make_exp({{Var::X, -1}}));
                G = substitute_monomial(G, Var::X, 1, make_exp({{Var::X, -1}}));
            }
            F = substitute_monomial(F, Var::X, 1, make_exp({{Var::q, -2 * x.l}, {Var::X, 1}}));
            G = substitute_monomial(G, Var::X, 1, make_exp({{Var::q, -2 * x.l}, {Var::X, 1}}));
            const int l = x.l + (x.eps ? -y.l : y.l);
            r.terms.push_back({x.F * F, x.G * G, l, (x.eps + y.eps) % 2});
        }
    return r;
}

Sequence sequence_action(const SeqOperator& a, const Sequence& f) {
    if (f.empty()) return {};
    const int lo = f.values.begin()->first, hi = f.values.rbegin()->first;
    const auto in = [&](int m) { return m >= lo && m <= hi; };
    // (Y^l s^eps f)(n) = (-1)^l (s^eps f)(n + l), (s f)(m) = -f(-m).
    const auto source = [&](const SeqOperator::Term& t, int n) { return t.eps ? -(n + t.l) : n + t.l; };
    Sequence out;
    for (int n = lo; n <= hi; ++n) {
        bool ok = true;
        for (const auto& t : a.terms) ok = ok && in(source(t, n));
        if (!ok) continue;
        RatFuncQ v;
        for (const auto& t : a.terms) {
            const LaurentPoly g = eval_X(t.G, n);
            if (g.is_zero())
                throw PoleAtEvaluation("coefficient denominator " + to_text(t.G) + " vanishes at n = " + std::to_string(n));
            RatFuncQ term = RatFuncQ(eval_X(t.F, n), g) * f.at(source(t, n));
            if ((t.l + t.eps) % 2) term = -term;
            v += term;
        }
        out.values.emplace(n, v);
    }
    return out;
}

Sequence sequence_action(const SeqOperator& a, const JSequence& f) { return sequence_action(a, Sequence::from(f)); }

LaurentPoly habiro_c(int n, int k) {
    LaurentPoly c = kOne;
    for (int j = 1; j <= k; ++j) c *= q_pow(4 * n) + q_pow(-4 * n) - q_pow(4 * j) - q_pow(-4 * j);
    return c;
}

LaurentPoly habiro_d(int n, int k) {
    LaurentPoly d = kOne;
    for (int j = 1; j <= k; ++j) d *= q_pow(2 * n) + q_pow(-2 * n) - q_pow(2 * j) - q_pow(-2 * j);
    return d;
}

LaurentPoly HabiroCoefficients::reconstruct(int n) const {
    if (n < 0) return -reconstruct(-n);
    LaurentPoly sum;
    for (int k = 0; k < std::min<int>(n, static_cast<int>(H.size())); ++k) sum += habiro_c(n, k) * H[k];
    return n == 0 ? LaurentPoly() : exact_div(bracket(2 * n), bracket(2), Var::q) * sum;
}

bool HabiroCoefficients::integral() const {
    for (const auto& h : H)
        for (const auto& t : h.terms())
            if (t.c.get_den() != 1) return false;
    return true;
}

nlohmann::json HabiroCoefficients::to_json() const {
    nlohmann::json h = nlohmann::json::array();
    for (const auto& p : H) h.push_back(to_text(p));
    return {{"H", h}, {"integral", integral()}, {"notes", notes}};
}

HabiroCoefficients habiro_extract(const JSequence& J, int K) {
    HabiroCoefficients out;
    for (int k = 0; k <= K; ++k) {
        const int n = k + 1;
        const std::string where = J.source + " H_" + std::to_string(k);
        LaurentPoly r = divide_or_throw(J.at(n), exact_div(bracket(2 * n), bracket(2), Var::q), where);
        for (int m = 0; m < k; ++m) r -= habiro_c(n, m) * out.H[m];
        out.H.push_back(k == 0 ? r : divide_or_throw(r, habiro_c(n, k), where));
    }
    if (!out.integral()) throw NotDivisible(J.source + ": non-integral Habiro coefficient", std::make_shared<LaurentPoly>());
    if (K >= 1 && out.H[0] == kOne && std::all_of(out.H.begin() + 1, out.H.end(), [](const auto& h) { return h.is_zero(); }))
        out.notes.push_back("H_k = 0 for all k >= 1; J(2) alone already forces H_1 = 0");
    return out;
}

std::vector<DivisibilityEntry> divisibility_check(const JSequence& J, int j, int nmin, int nmax) {
    std::vector<DivisibilityEntry> out;
    for (int n = nmin; n <= nmax; ++n) {
        const std::string where = J.source + " (n, j) = (" + std::to_string(n) + ", " + std::to_string(j) + ")";
        DivisibilityEntry e{n, j, {}, {}, {}, {}};
        e.numerator = (q_pow(2) - 1) * (J.at(n + j) + J.at(n - 1 - j));
        e.quotient = divide_or_throw(e.numerator, q_pow(4 * n - 2) - 1, where);
        e.strong = try_exact_div(e.quotient, q_pow(4 * j - 2) + 1, Var::q);
        e.strong_corrected = try_exact_div((q_pow(2) + 1) * e.quotient, q_pow(4 * j + 2) + 1, Var::q);
        out.push_back(std::move(e));
    }
    return out;
}

nlohmann::json DivisibilityEntry::to_json() const {
    const auto opt = [](const std::optional<LaurentPoly>& f) { return f ? nlohmann::json(to_text(*f)) : nlohmann::json(); };
    return {{"n", n}, {"j", j}, {"quotient", to_text(quotient)}, {"strong", opt(strong)},
            {"strong_corrected", opt(strong_corrected)}};
}

RatFuncQ p_j(const JSequence& J, int j, int n) {
    const RatFuncQ r(J.at(n + j) + J.at(n - 1 - j), q_pow(4 * n - 2) - 1);
    return (n + j) % 2 ? -r : r;
}

LaurentPoly normalized_jones(const JSequence& J, int m) {
    const LaurentPoly unknot = exact_div(bracket(2 * (m + 1)), bracket(2), Var::q);
    return halve_q(divide_or_throw(J.at(m + 1), unknot, J.source + " normalization"));
}

CongruenceResult congruence_check(const JSequence& J, int n, int k) {
    CongruenceResult r{n, k, false, {}, {}, {}};
    r.difference = normalized_jones(J, n - 1) - normalized_jones(J, k - 1);
    r.modulus = bracket(n - k) * bracket(n + k);
    if (r.modulus.is_zero()) {
        r.pass = r.difference.is_zero();
        return r;
    }
    r.quotient = try_exact_div(r.difference, r.modulus, Var::q);
    r.pass = r.quotient.has_value();
    return r;
}

bool InhomRecursion::constant() const {
    return std::all_of(P.begin(), P.end(), [&](const auto& e) { return e.second == P0; });
}

nlohmann::json InhomRecursion::to_json() const {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : a.terms)
        terms.push_back({{"coefficient", to_text(t.F)}, {"denominator", to_text(t.G)}, {"l", t.l}, {"eps", t.eps}});
    return {{"k_max", k_max}, {"l_max", l_max}, {"terms", terms}, {"P0", P0.to_text()}, {"constant", constant()}};
}

namespace {

// Unknown ordering: (l, eps, k) with k innermost.
struct Support {
    int k_max, l_max;
    int size() const { return (2 * k_max + 1) * (l_max + 1) * 2; }
    int index(int k, int l, int eps) const { return ((l * 2 + eps) * (2 * k_max + 1)) + (k + k_max); }
};

// Elimination at a fixed rational q. Returns pivot columns and the rows that
// produced them, or nullopt when the specialized system is inconsistent.
struct Pivots {
    std::vector<std::size_t> cols, rows;
};

std::optional<Pivots> numeric_pivots(const std::vector<std::vector<Rational>>& m, const std::vector<Rational>& b) {
    const std::size_t n = m.empty() ? 0 : m[0].size();
    std::vector<std::vector<Rational>> a = m;
    std::vector<std::size_t> origin(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i].push_back(b[i]);
        origin[i] = i;
    }
    Pivots p;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < a.size(); ++col) {
        std::size_t r = rank;
        while (r < a.size() && a[r][col] == 0) ++r;
        if (r == a.size()) continue;
        std::swap(a[r], a[rank]);
        std::swap(origin[r], origin[rank]);
        for (std::size_t i = rank + 1; i < a.size(); ++i) {
            if (a[i][col] == 0) continue;
            const Rational f = a[i][col] / a[rank][col];
            for (std::size_t j = col; j <= n; ++j) a[i][j] -= f * a[rank][j];
        }
        p.cols.push_back(col);
        p.rows.push_back(origin[rank]);
        ++rank;
    }
    for (std::size_t i = rank; i < a.size(); ++i)
        if (a[i][n] != 0) return std::nullopt;
    return p;
}

Rational eval_q(const LaurentPoly& f, const Rational& q0) {
    return substitute(f, Var::q, LaurentPoly(q0)).constant_term();
}

std::optional<SeqOperator> solve_support(const ModulePresentation& p, const Support& sup) {
    const int r = p.rank();
    const ModuleElement& w = *p.unknot_witness;
    // Row key: (coordinate, X-degree).
    std::map<std::pair<int, int>, std::map<int, LaurentPoly>> rows;
    std::map<std::pair<int, int>, LaurentPoly> rhs;
    for (int l = 0; l <= sup.l_max; ++l)
        for (int eps = 0; eps <= 1; ++eps) {
            const ModuleElement v = apply_word(p, l, eps, p.empty_link);
            for (int i = 0; i < r; ++i)
                for (const auto& [d, c] : v.c[i].by_degree(Var::X))
                    for (int k = -sup.k_max; k <= sup.k_max; ++k) rows[{i, d + k}][sup.index(k, l, eps)] += c;
        }
    for (int i = 0; i < r; ++i)
        for (const auto& [d, c] : w.c[i].by_degree(Var::X)) {
            rows[{i, d}];
            rhs[{i, d}] = c;
        }
    std::vector<std::map<int, LaurentPoly>> m;
    std::vector<LaurentPoly> b;
    for (const auto& [key, coeffs] : rows) {
        m.push_back(coeffs);
        const auto it = rhs.find(key);
        b.push_back(it == rhs.end() ? LaurentPoly() : it->second);
    }

    // Exact elimination over Q(q) is slow, so the pivot structure is read off at
    // q = 7/11 first. A rank drop at that point could only hide a solution for
    // this support (the search then moves on); any returned operator is exact.
    const Rational q0(7, 11);
    std::vector<std::vector<Rational>> mn(m.size(), std::vector<Rational>(sup.size()));
    std::vector<Rational> bn(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (const auto& [j, c] : m[i]) mn[i][j] = eval_q(c, q0);
        bn[i] = eval_q(b[i], q0);
    }
    const auto piv = numeric_pivots(mn, bn);
    if (!piv) return std::nullopt;

    RMatrix sq;
    RVector sb;
    for (auto i : piv->rows) {
        RVector row;
        for (auto j : piv->cols) {
            const auto it = m[i].find(static_cast<int>(j));
            row.push_back(it == m[i].end() ? RatFuncQ() : RatFuncQ(it->second));
        }
        sq.push_back(std::move(row));
        sb.push_back(RatFuncQ(b[i]));
    }
    const auto xs = solve(sq, sb);
    if (!xs) return std::nullopt;
    RVector x(sup.size());
    for (std::size_t t = 0; t < piv->cols.size(); ++t) x[piv->cols[t]] = (*xs)[t];
    for (std::size_t i = 0; i < m.size(); ++i) {
        RatFuncQ lhs;
        for (const auto& [j, c] : m[i])
            if (!x[j].is_zero()) lhs += RatFuncQ(c) * x[j];
        if (lhs != RatFuncQ(b[i])) return std::nullopt;
    }

    SeqOperator a;
    for (int l = 0; l <= sup.l_max; ++l)
        for (int eps = 0; eps <= 1; ++eps)
            for (int k = -sup.k_max; k <= sup.k_max; ++k) {
                const RatFuncQ& c = x[sup.index(k, l, eps)];
                if (!c.is_zero()) a.terms.push_back({c.num() * X_pow(k), c.den(), l, eps});
            }
    return a;
}

}  // namespace

InhomRecursion find_inhomogeneous_recursion(const KnotId& knot, int k_max, int l_max, int n_check) {
    const auto data = knot_module(knot);
    const auto& p = data.presentation;
    if (!p.unknot_witness) throw NoSolutionInBounds(knot.to_string() + " has no unknot witness");
    const JSequence J = j_sequence(knot, std::max(kSequenceWindow, n_check + l_max + 1));
    for (int l = 0; l <= l_max; ++l)
        for (int k = 0; k <= k_max; ++k) {
            auto a = solve_support(p, {k, l});
            if (!a) continue;
            InhomRecursion rec{k, l, std::move(*a), {}, {}};
            const Sequence P = sequence_action(rec.a, J);
            rec.P0 = P.at(0);
            for (int n = 0; n <= n_check; ++n) rec.P.emplace(n, P.at(n));
            return rec;
        }
    throw NoSolutionInBounds(knot.to_string() + ": no operator with |k| <= " + std::to_string(k_max) +
                             ", l <= " + std::to_string(l_max));
}

}  // namespace daha
