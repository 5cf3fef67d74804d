// Acceptance criteria 1-11. One PASS/FAIL line each; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "daha/bh/bh.hpp"
#include "daha/jones/appendix.hpp"
#include "daha/jones/jones.hpp"
#include "daha/modrep/operator_matrix.hpp"
#include "daha/rec/rec.hpp"
#include "daha/ring/poly_ops.hpp"
#include "daha/skew/ncpoly.hpp"

using namespace daha;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream why;

    void expect(bool ok, const std::string& what) {
        if (ok) return;
        if (pass) why << what;
        else if (why.tellp() < 400) why << "; " << what;
        pass = false;
    }
};

constexpr int q_ = static_cast<int>(Var::q);
constexpr int t1_ = static_cast<int>(Var::t1);
constexpr int t2_ = static_cast<int>(Var::t2);

// [n] = (q^2n - q^-2n)/(q^2 - q^-2) as a sum of monomials.
LaurentPoly qint(int n) {
    LaurentPoly s;
    for (int i = 0; i < n; ++i) s += q_pow(2 * (n - 1) - 4 * i);
    return s;
}

LaurentPoly flip(const LaurentPoly& f) {
    std::vector<Term> ts;
    for (auto t : f.terms()) {
        t.e[q_] = -t.e[q_];
        t.e[t1_] = -t.e[t1_];
        t.e[t2_] = -t.e[t2_];
        ts.push_back(t);
    }
    return LaurentPoly::from_terms(std::move(ts));
}

LaurentPoly halve_q(const LaurentPoly& f, bool& ok) {
    std::vector<Term> ts;
    for (auto t : f.terms()) {
        if (t.e[q_] % 2) ok = false;
        t.e[q_] /= 2;
        ts.push_back(t);
    }
    return LaurentPoly::from_terms(std::move(ts));
}

bool integral(const LaurentPoly& f) {
    for (const auto& t : f.terms())
        if (t.c.get_den() != 1) return false;
    return true;
}

std::vector<KnotId> catalog() {
    std::vector<KnotId> ks{KnotId::unknot(), KnotId::figure8()};
    for (int p = 1; p <= kTorusBound; ++p) ks.push_back(KnotId::torus(p));
    return ks;
}

std::string nm(const KnotId& k, int n) { return k.to_string() + " n=" + std::to_string(n); }

void golden(Outcome& o) {
    for (const auto& g : appendix_polynomials()) {
        const std::string have = render_tv(jones3(KnotId::parse(g.knot), g.n, Convention::raw), false);
        const std::string want = render_tv(expand_v(parse_tv(g.latex)), false);
        o.expect(have == want, g.knot + " J" + std::to_string(g.n) + " differs from the table");
    }
}

void unknot(Outcome& o) {
    const auto eps = solve_pairing(KnotId::unknot());
    const LaurentPoly a = LaurentPoly::var(Var::t1, -1) * q_pow(2);
    for (int n = 1; n <= 20; ++n) {
        // (a^n - a^-n)/(a - a^-1) = sum_i a^{n-1-2i}
        LaurentPoly want;
        for (int i = 0; i < n; ++i) want += a.pow(n - 1 - 2 * i);
        o.expect(jones3(eps, n, Convention::adjusted, DahaParams::three()) == want, "n=" + std::to_string(n));
    }
}

void specialization(Outcome& o) {
    for (const auto& k : catalog()) {
        const auto eps = solve_pairing(k);
        for (int n = 1; n <= 8; ++n) {
            const LaurentPoly c = colored_jones(eps, n);
            o.expect(jones3(eps, n, Convention::adjusted, DahaParams::ones()) == c, nm(k, n));
            if (n <= 3) {
                const LaurentPoly full = jones3(eps, n, Convention::adjusted, DahaParams::three());
                const LaurentPoly at1 = substitute(substitute(full, Var::t1, LaurentPoly(1L)), Var::t2, LaurentPoly(1L));
                o.expect(at1 == c, nm(k, n) + " (specialized after)");
            }
        }
    }
    for (const auto& e : appendix_expansions()) {
        const KnotId k = KnotId::parse(e.knot);
        const LaurentPoly zeroth = parse_tv(e.coefficients.at(0));
        // Raw J_n carries (-1)^{n-1} relative to the sign-adjusted value.
        o.expect(colored_jones(k, e.n) == (e.n % 2 ? 1 : -1) * zeroth, e.knot + " expansion n=" + std::to_string(e.n));
    }
}

void habiro(Outcome& o) {
    for (const auto& k : {KnotId::unknot(), KnotId::figure8()}) {
        const auto J = j_sequence(k);
        HabiroCoefficients h;
        try {
            h = habiro_extract(J, 8);
        } catch (const std::exception& e) {
            o.expect(false, k.to_string() + ": " + e.what());
            continue;
        }
        for (int i = 0; i <= 8; ++i) {
            const LaurentPoly want = k == KnotId::figure8() || i == 0 ? LaurentPoly(1L) : LaurentPoly();
            o.expect(h.H.at(i) == want, k.to_string() + " H_" + std::to_string(i));
            o.expect(integral(h.H[i]), k.to_string() + " H_" + std::to_string(i) + " not integral");
        }
        // Reconstruction with the products written out here.
        for (int n = 1; n <= 9; ++n) {
            LaurentPoly sum, c(1L);
            for (int i = 0; i <= 8; ++i) {
                if (i > 0) c *= q_pow(4 * n) + q_pow(-4 * n) - q_pow(4 * i) - q_pow(-4 * i);
                sum += c * h.H[i];
            }
            o.expect(qint(n) * sum == J.at(n), k.to_string() + " round trip n=" + std::to_string(n));
        }
    }
}

void divisibility(Outcome& o) {
    int base_fail = 0, strong_fail = 0, total = 0;
    for (const auto& k : {KnotId::unknot(), KnotId::trefoil(), KnotId::torus(2), KnotId::figure8()}) {
        const auto J = j_sequence(k);
        for (int j = 0; j <= 3; ++j)
            for (int n = 2; n <= 12; ++n) {
                ++total;
                const LaurentPoly num = (q_pow(2) - 1) * (J.at(n + j) + J.at(n - 1 - j));
                const auto quot = try_exact_div(num, q_pow(4 * n - 2) - 1, Var::q);
                if (!quot) {
                    ++base_fail;
                    continue;
                }
                if (!try_exact_div(*quot, q_pow(4 * j - 2) + 1, Var::q)) ++strong_fail;
            }
    }
    o.expect(base_fail == 0, std::to_string(base_fail) + "/" + std::to_string(total) + " (q^2-1)P_j(n) not Laurent");
    o.expect(strong_fail == 0,
             std::to_string(strong_fail) + "/" + std::to_string(total) + " quotients not divisible by q^(4j-2)+1");
}

void congruence(Outcome& o) {
    for (const auto& k : {KnotId::trefoil(), KnotId::figure8()}) {
        const auto J = j_sequence(k);
        std::vector<LaurentPoly> bar(9);
        for (int m = 1; m <= 8; ++m) {
            bool even = true;
            bar[m] = halve_q(exact_div(J.at(m), qint(m), Var::q), even);
            o.expect(even, k.to_string() + " odd q exponent at " + std::to_string(m));
        }
        for (int n = 2; n <= 8; ++n)
            for (int kk = 1; kk < n; ++kk) {
                const LaurentPoly mod = (q_pow(n - kk) - q_pow(kk - n)) * (q_pow(n + kk) - q_pow(-n - kk));
                o.expect(try_exact_div(bar[n] - bar[kk], mod, Var::q).has_value(),
                         k.to_string() + " n=" + std::to_string(n) + " k=" + std::to_string(kk));
            }
    }
}

void daha_relations(Outcome& o) {
    const auto sym = DahaParams::symbolic();
    const auto three = DahaParams::three();
    const auto a = check_relations(cc_daha_presentation(sym), dunkl_assignment(sym));
    o.expect(a.all_zero(), "(a) Dunkl");
    const auto b = check_relations(koornwinder_presentation(sym), koornwinder_assignment(sym));
    for (const auto& f : b.failing()) o.expect(false, "(b) " + f);
    std::vector<KnotId> ks{KnotId::unknot(), KnotId::figure8()};
    for (int p = 1; p <= 6; ++p) ks.push_back(KnotId::torus(p));
    for (const auto& k : ks) {
        const auto p = knot_module(k).presentation;
        const auto c = operator_identity_on_module(p, cc_daha_presentation(three), module_dunkl_assignment(p, three));
        o.expect(c.all_zero(), "(c) " + k.to_string());
    }
    const auto tre = knot_module(KnotId::trefoil()).presentation;
    o.expect(operator_identity_on_module(tre, cc_daha_presentation(sym), five_param_assignment(tre, sym)).all_zero(), "(d) trefoil");
    ks.erase(ks.begin());
    for (const auto& k : ks) {
        const auto p = quotient_presentation(knot_module(k).presentation);
        o.expect(operator_identity_on_module(p, cc_daha_presentation(sym), five_param_assignment(p, sym)).all_zero(),
                 "(d) quotient " + k.to_string());
    }
}

void certificates(Outcome& o) {
    for (const auto& k : catalog()) {
        const auto p = knot_module(k).presentation;
        const auto u0 = u0_certificate(p);
        o.expect(u0.ok && u0.endpoints_ok, k.to_string() + " u0");
        o.expect(c_matrix_check(p).ok(), k.to_string() + " C(q)");
        if (p.rank() > 1) o.expect(u1_certificate(quotient_presentation(p)).ok, k.to_string() + " u1");
    }
    const auto un = knot_module(KnotId::unknot()).presentation;
    bool threw = false;
    try {
        apply_skew(un, dunkl_generators(DahaParams::symbolic()).T1, ModuleElement::basis(1, 0));
    } catch (const NotDivisible&) {
        threw = true;
    }
    o.expect(threw, "T1 on the unknot did not raise NotDivisible");
}

void mirror_invariance(Outcome& o) {
    const auto eps = solve_pairing(KnotId::figure8());
    for (int n = 1; n <= 4; ++n) {
        const LaurentPoly f = jones3(eps, n, Convention::adjusted, DahaParams::three());
        o.expect(flip(f) == f, "n=" + std::to_string(n));
    }
}

void two_bridge_checks(Outcome& o) {
    const auto a = generator_image('a', 1), b = generator_image('b', 1);
    for (const auto& [p, qq] : two_bridge_parameters(9)) {
        const auto tb = two_bridge(p, qq);
        const std::string id = tb.name();
        const auto W = word_image(tb.w);
        o.expect(W * W.conj() == BHQuaternion::scalar(LaurentPoly(1L)), id + " ww*");
        const auto comm = a * W - W * b;
        o.expect(comm.D.is_zero() && comm.F.is_zero() && comm.G.is_zero(), id + " aw-wb");
        const auto qd = compute_Q(tb);
        const auto by_deg = qd.Q.by_degree(Var::I);
        o.expect(tb.d == (p - 1) / 2 && by_deg.rbegin()->first == tb.d, id + " deg Q");
        o.expect(by_deg.rbegin()->second == LaurentPoly(tb.d % 2 ? -1L : 1L), id + " leading coefficient");
        o.expect(integral(qd.Q), id + " Q integral");
        for (const auto& l : verify_bh_identities(tb).lines)
            if (l.id == "YQ=Q") o.expect(l.pass, id + " YQ=Q");
        o.expect(alexander_via_fstar(tb).agree(), id + " Alexander");
        o.expect(validate_presentation(q_minus1_module(tb)).ok(), id + " module");
        for (const auto& l : verify_q_minus1_module(tb).lines)
            if (l.id == "U.preserves.M") o.expect(l.pass, id + " U preserves M");
    }
    const auto f8 = two_bridge(5, 3);
    o.expect(f8.e == std::vector<int>{1, -1, -1, 1}, "(5,3) exponents");
    o.expect(to_string(f8.w) == "ba^-1b^-1a", "(5,3) word");
    o.expect(alexander_via_fstar(f8).formula == 3 - X_pow(2) - X_pow(-2), "(5,3) Alexander value");
}

void recursion(Outcome& o) {
    for (const auto& [k, lmax] : {std::pair{KnotId::trefoil(), 3}, std::pair{KnotId::figure8(), 4}}) {
        InhomRecursion rec;
        try {
            rec = find_inhomogeneous_recursion(k, 8, lmax);
        } catch (const NoSolutionInBounds& e) {
            o.expect(false, k.to_string() + ": " + e.what());
            continue;
        }
        o.expect(!rec.a.terms.empty(), k.to_string() + " empty operator");
        const auto J = j_sequence(k);
        // (X f)(n) = -q^-2n f(n), (Y f)(n) = -f(n+1), (s f)(n) = -f(-n), evaluated directly.
        for (int n = 0; n <= 10; ++n) {
            RatFuncQ v;
            for (const auto& t : rec.a.terms) {
                const int m = n + t.l;
                const LaurentPoly f = t.eps ? -J.at(-m) : J.at(m);
                const RatFuncQ c(substitute(t.F, Var::X, -q_pow(-2 * n)), substitute(t.G, Var::X, -q_pow(-2 * n)));
                v += ((t.l + t.eps) % 2 ? -c : c) * RatFuncQ(f);
            }
            o.expect(v == rec.P0, k.to_string() + " P(" + std::to_string(n) + ") differs");
        }
    }
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"golden polynomials", golden},
        {"unknot closed form", unknot},
        {"specialization", specialization},
        {"Habiro coefficients", habiro},
        {"divisibility", divisibility},
        {"congruence", congruence},
        {"DAHA relations", daha_relations},
        {"certificates", certificates},
        {"mirror", mirror_invariance},
        {"two-bridge", two_bridge_checks},
        {"inhomogeneous recursion", recursion},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.expect(false, std::string("exception: ") + e.what());
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        all = all && o.pass;
        std::printf("%s criterion %zu (%s) [%.1fs]%s%s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), s,
                    o.pass ? "" : ": ", o.why.str().c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
