#include "doctest.h"

#include "daha/knots/catalog.hpp"
#include "daha/ring/poly_ops.hpp"

using namespace daha;

namespace {

const LaurentPoly q = LaurentPoly::var(Var::q);
const LaurentPoly X = LaurentPoly::var(Var::X);

void check_report(const KnotReport& rep) {
    for (const auto& l : rep.lines) CHECK_MESSAGE(l.pass, rep.knot << " " << l.id << ": " << l.detail);
}

}  // namespace

TEST_CASE("knot selectors") {
    CHECK(KnotId::parse("trefoil") == KnotId::torus(1));
    CHECK(KnotId::parse("torus:3") == KnotId::torus(3));
    CHECK(KnotId::parse("fig8") == KnotId::figure8());
    CHECK(KnotId::parse("2bridge:5/3") == KnotId::twobridge(5, 3));
    CHECK(KnotId::torus(2).to_string() == "torus:2");
    CHECK(KnotId::torus(1).to_string() == "trefoil");
    CHECK_THROWS(KnotId::parse("torus:x"));
    CHECK_THROWS(KnotId::parse("torus:0"));
    CHECK_THROWS(KnotId::parse("granny"));
    CHECK_THROWS_AS(knot_module(KnotId::twobridge(5, 3)), UnsupportedKnot);
    CHECK_THROWS_AS(knot_module(KnotId::torus(kTorusBound + 1)), UnsupportedKnot);
}

TEST_CASE("catalog matrices") {
    const auto tre = knot_module(KnotId::trefoil()).presentation;
    CHECK(tre.A[0][1] == q.pow(2) * X.pow(-1) - q.pow(6) * X.pow(-5));
    CHECK(tre.A[1][1] == q.pow(6) * X.pow(-6));
    const auto fig = knot_module(KnotId::figure8()).presentation;
    CHECK(fig.B == PolyMatrix{{LaurentPoly(-1L), 0L, 0L}, {0L, 1L, 0L}, {0L, 0L, 1L}});
    // Explicit yhat on v from the figure-eight display.
    CHECK(fig.A[0][2] == q.pow(6) * X.pow(-3) - q.pow(2) * X);
    CHECK(fig.A[1][2] == q.pow(2) * X.pow(2) - q.pow(6) * X.pow(-2));
    CHECK(fig.A[2][2] == -q.pow(6) * X.pow(-4) + q.pow(2) * X.pow(-2) + q.pow(2));
    const auto un = knot_module(KnotId::unknot()).presentation;
    CHECK(un.rank() == 1);
    CHECK(un.A[0][0] == LaurentPoly(-1L));
    CHECK(un.empty_link.c[0] == X - X.pow(-1));
}

TEST_CASE("figure-eight identities behind the module structure") {
    const auto prime = [](const LaurentPoly& f) {
        return substitute_monomial(f, Var::X, 1, make_exp({{Var::q, 2}, {Var::X, -1}}));
    };
    const LaurentPoly a = -q.pow(-2) * X.pow(4) + q.pow(-2) * X.pow(2) + q.pow(2);
    const LaurentPoly b = -q.pow(-2) * X.pow(2) + q.pow(2) * X.pow(-2);
    const LaurentPoly c = q.pow(-2) * X.pow(3) - q.pow(2) * X.pow(-1);
    CHECK(prime(b) == -b);
    CHECK(prime(c) == -q.pow(2) * X.pow(-2) * c);
    CHECK(a * prime(a) - q.pow(4) * b * prime(b) == LaurentPoly(1L));
    CHECK(prime(a) * c + q.pow(2) * prime(b) * prime(c) + prime(c) == LaurentPoly());
}

TEST_CASE("trefoil equals torus(1)") {
    const auto a = knot_module(KnotId::parse("trefoil")).presentation;
    const auto b = knot_module(KnotId::torus(1)).presentation;
    CHECK(a.A == b.A);
    CHECK(a.B == b.B);
    CHECK(a.basis == b.basis);
    CHECK(a.empty_link == b.empty_link);
    CHECK(*a.unknot_witness == *b.unknot_witness);
}

TEST_CASE("torus corner at p = 1 matches the trefoil") {
    const LaurentPoly general = -q.pow(6) * (X.pow(-5) - q.pow(-4) * X.pow(-1));
    CHECK(general == q.pow(2) * X.pow(-1) - q.pow(6) * X.pow(-5));
}

TEST_CASE("catalog presentations are valid and certified") {
    std::vector<KnotId> ks{KnotId::unknot(), KnotId::figure8()};
    for (int p = 1; p <= kTorusBound; ++p) ks.push_back(KnotId::torus(p));
    for (const auto& k : ks) {
        const auto p = knot_module(k).presentation;
        CHECK_MESSAGE(validate_presentation(p).ok(), k.to_string());
        CHECK_MESSAGE(u0_certificate(p).ok, k.to_string());
        CHECK_MESSAGE(c_matrix_check(p).ok(), k.to_string());
    }
}

TEST_CASE("symmetric action formulas") {
    check_report(verify_symmetric_actions(KnotId::unknot()));
    for (int p = 1; p <= 4; ++p) check_report(verify_symmetric_actions(KnotId::torus(p)));
    check_report(verify_symmetric_actions(KnotId::figure8()));
}

TEST_CASE("unknot witnesses") {
    check_report(verify_unknot_witness(KnotId::unknot()));
    for (int p = 1; p <= 6; ++p) check_report(verify_unknot_witness(KnotId::torus(p)));
    check_report(verify_unknot_witness(KnotId::figure8()));
    check_report(verify_witness_closure(KnotId::figure8()));
    check_report(verify_witness_closure(KnotId::torus(3)));
}

TEST_CASE("torus modules are upper triangular") {
    for (int p = 1; p <= kTorusBound; ++p) {
        const auto pr = knot_module(KnotId::torus(p)).presentation;
        CHECK(pr.A[1][0].is_zero());
        CHECK(pr.B[1][0].is_zero());
    }
}

TEST_CASE("a wrong formula is reported") {
    auto d = knot_module(KnotId::trefoil());
    d.symmetric_formulas[0].expected = d.symmetric_formulas[0].input;
    const auto& f = d.symmetric_formulas[0];
    auto m = apply_gen(d.presentation, Gen::Y, f.input);
    CHECK(m + apply_gen(d.presentation, Gen::s, m) != f.expected);
}
