#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "daha/bh/bh.hpp"
#include "daha/cli/report.hpp"
#include "daha/jones/jones.hpp"
#include "daha/rec/rec.hpp"
#include "daha/ring/poly_ops.hpp"

using namespace daha;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

const char* kCriteriaHelp = R"(Criteria coverage (verify --suite <name>):
  golden          1  raw J_n(q,t1,t2) against the reference tables
  unknot          2  unknot closed form, n <= 20
  specialization  3  t1 = t2 = 1 gives colored Jones, n <= 8
  habiro          4  cyclotomic coefficients (--kmax)
  divisibility    5  P_j divisibility (--jmax --nmin --nmax)
  congruence      6  Jbar_{n-1} = Jbar_{k-1} mod [n-k][n+k]
  daha            7  DAHA relations (--knot restricts to one module)
  certificates    8  u0, C(q) = Id, u1, T1 negative test
  mirror          9  figure eight mirror invariance
  bh             10  two-bridge identities, Q, Alexander, q = -1 module
  recursion      11  inhomogeneous recursions (--kmax --lmax)
  all                every suite above
)";

int emit(const std::string& text, const std::string& out) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream f(out);
    if (!f) {
        std::cerr << "dahactl: cannot write " << out << "\n";
        return kExitUsage;
    }
    f << text;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Colored Jones polynomials from DAHA skein modules, and their checks"};
    app.footer(kCriteriaHelp);
    app.require_subcommand(1);

    // jones
    auto* jones = app.add_subcommand("jones", "colored Jones polynomial J_n of a catalog knot");
    std::string knot_name;
    int n = 2;
    bool classical = false;
    std::string convention = "adjusted", jformat = "text";
    jones->add_option("--knot", knot_name, "unknot, trefoil, torus:p, fig8")->required();
    jones->add_option("--n", n, "color")->required()->check(CLI::Range(1, 64));
    jones->add_flag("--classical", classical, "one-variable polynomial in q");
    jones->add_option("--convention", convention)->check(CLI::IsMember({"raw", "adjusted"}));
    jones->add_option("--format", jformat)->check(CLI::IsMember({"json", "text", "latex"}));

    // verify
    auto* verify = app.add_subcommand("verify", "run verification suites");
    std::string suite = "all", vformat = "json", out, filter;
    std::vector<std::string> knot_names;
    SuiteOptions opt;
    bool deterministic = false;
    verify->add_option("--suite", suite, "suite name or 'all'");
    verify->add_option("--knot", knot_names, "restrict to these knots (repeatable)");
    verify->add_option("--jmax", opt.jmax)->check(CLI::Range(0, 16));
    verify->add_option("--nmin", opt.nmin)->check(CLI::Range(1, 64));
    verify->add_option("--nmax", opt.nmax)->check(CLI::Range(1, 64));
    verify->add_option("--kmax", opt.kmax)->check(CLI::Range(0, 32));
    verify->add_option("--lmax", opt.lmax)->check(CLI::Range(-1, 16));
    verify->add_option("--filter", filter, "substring of suite names (with --suite all)");
    verify->add_flag("--deterministic", deterministic, "report duration_ms as 0");
    verify->add_option("--format", vformat)->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--out", out, "output file");

    // bh
    auto* bh = app.add_subcommand("bh", "two-bridge knot data");
    int bp = 5, bq = 3;
    std::string what = "Q";
    bh->add_option("--p", bp)->required();
    bh->add_option("--q", bq)->required();
    bh->add_option("--emit", what)->check(CLI::IsMember({"Q", "alexander", "module", "verify"}));

    // habiro
    auto* habiro = app.add_subcommand("habiro", "cyclotomic coefficients H_0..H_K");
    std::string hknot;
    int hk = 8;
    habiro->add_option("--knot", hknot)->required();
    habiro->add_option("--kmax", hk)->check(CLI::Range(0, 14));

    app.add_subcommand("catalog", "list knots and suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (jones->parsed()) {
            const KnotId k = KnotId::parse(knot_name);
            const Convention conv = parse_convention(convention);
            LaurentPoly f;
            if (classical) {
                f = colored_jones(k, n);
                if (conv == Convention::raw && n % 2 == 0) f = -f;
            } else {
                f = jones3(k, n, conv);
            }
            if (jformat == "json") {
                json j{{"knot", k.to_string()}, {"n", n}, {"convention", to_string(conv)}, {"classical", classical},
                       {"polynomial", to_text(f)}};
                if (!classical) j["tv"] = render_tv(f, false);
                std::cout << j.dump(2) << "\n";
            } else if (jformat == "latex") {
                std::cout << (classical ? to_text(f) : render_tv(f, true)) << "\n";
            } else {
                std::cout << (classical ? to_text(f) : render_tv(f, false)) << "\n";
            }
            return kExitOk;
        }

        if (verify->parsed()) {
            for (const auto& s : knot_names) opt.knots.push_back(KnotId::parse(s));
            if (opt.nmin > opt.nmax) throw CLI::ValidationError("--nmin", "must not exceed --nmax");
            opt.filter = filter;
            Report r;
            if (suite == "all") {
                r = golden_suite(opt);
            } else {
                r = run_suite(suite, opt);
            }
            if (deterministic) r.duration_ms = 0;
            const std::string text = vformat == "json" ? r.to_json().dump(2) + "\n" : r.to_text();
            const int rc = emit(text, out);
            if (rc != kExitOk) return rc;
            return r.ok() ? kExitOk : kExitCheckFailed;
        }

        if (bh->parsed()) {
            const auto tb = two_bridge(bp, bq);
            if (what == "Q") {
                const auto qd = compute_Q(tb);
                std::cout << json{{"knot", tb.name()}, {"d", tb.d}, {"w", to_string(tb.w)}, {"Q", to_text(qd.Q)}}.dump(2) << "\n";
            } else if (what == "alexander") {
                const auto a = alexander_via_fstar(tb);
                std::cout << json{{"knot", tb.name()}, {"fstar", to_text(a.fstar)}, {"formula", to_text(a.formula)}, {"agree", a.agree()}}
                                 .dump(2)
                          << "\n";
                return a.agree() ? kExitOk : kExitCheckFailed;
            } else if (what == "module") {
                const auto m = q_minus1_module(tb);
                std::cout << json{{"name", m.name}, {"basis", m.basis}, {"A", matrix_to_json(m.A)}, {"B", matrix_to_json(m.B)}}.dump(2)
                          << "\n";
            } else {
                auto rep = verify_bh_identities(tb);
                const auto mod = verify_q_minus1_module(tb);
                rep.lines.insert(rep.lines.end(), mod.lines.begin(), mod.lines.end());
                std::cout << rep.to_json().dump(2) << "\n";
                return rep.ok() ? kExitOk : kExitCheckFailed;
            }
            return kExitOk;
        }

        if (habiro->parsed()) {
            const auto J = j_sequence(KnotId::parse(hknot), std::max(kSequenceWindow, hk + 2));
            std::cout << habiro_extract(J, hk).to_json().dump(2) << "\n";
            return kExitOk;
        }

        json cat{{"knots", json::array()}, {"suites", json::array()}};
        cat["knots"].push_back("unknot");
        for (int p = 1; p <= kTorusBound; ++p) cat["knots"].push_back(KnotId::torus(p).to_string());
        cat["knots"].push_back("fig8");
        for (const auto& [p, q] : two_bridge_parameters(kBHBound)) cat["two_bridge"].push_back(KnotId::twobridge(p, q).to_string());
        for (const auto& s : suite_list()) cat["suites"].push_back({{"name", s.name}, {"description", s.description}});
        std::cout << cat.dump(2) << "\n";
        return kExitOk;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "dahactl: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        // Unknown knots, suites, conventions and invalid two-bridge parameters.
        std::cerr << "dahactl: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "dahactl: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
