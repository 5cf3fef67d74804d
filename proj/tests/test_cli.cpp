#include <doctest.h>

#include <set>

#include "daha/cli/report.hpp"
#include "daha/ring/poly_ops.hpp"

using namespace daha;

namespace {

std::set<std::string> prefixes(const Report& r) {
    std::set<std::string> out;
    for (const auto& c : r.checks) out.insert(c.id.substr(0, c.id.find('.')));
    return out;
}

}  // namespace

TEST_CASE("report json shape") {
    Report r{"demo", {}, 1.5};
    r.add("a", true);
    r.add("b", false, {{"why", "x"}});
    const auto j = r.to_json();
    CHECK(j["suite"] == "demo");
    CHECK(j["checks"].size() == 2);
    CHECK(j["checks"][1]["status"] == "fail");
    CHECK(j["checks"][1]["payload"]["why"] == "x");
    CHECK_FALSE(r.ok());
    CHECK(r.to_text() == "PASS a\nFAIL b\n");

    Report all{"all", {}, 0};
    all.append(r);
    CHECK(all.checks[0].id == "demo.a");
}

TEST_CASE("suites are deterministic") {
    for (const char* name : {"mirror", "bh", "certificates"}) {
        auto a = run_suite(name), b = run_suite(name);
        a.duration_ms = b.duration_ms = 0;
        CHECK(a.to_json().dump() == b.to_json().dump());
    }
}

TEST_CASE("suite selection") {
    CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
    CHECK(suite_list().size() == 11);

    SuiteOptions opt;
    opt.filter = "mirror";
    const auto r = golden_suite(opt);
    CHECK(prefixes(r) == std::set<std::string>{"mirror"});
    CHECK(r.ok());

    SuiteOptions one;
    one.knots = {KnotId::figure8()};
    const auto d = run_suite("daha", one);
    REQUIRE(d.checks.size() == 1);
    CHECK(d.checks[0].id == "c.fig8");
    CHECK(d.ok());
}

TEST_CASE("a corrupted module is located") {
    auto good = knot_module(KnotId::trefoil()).presentation;
    CHECK(certificate_report({good}).ok());

    auto bad = good;
    bad.A[1][0] += X_pow(1);
    const auto r = certificate_report({bad});
    CHECK_FALSE(r.ok());
    bool located = false;
    for (const auto& c : r.checks) {
        if (c.status != Status::fail || !c.payload.contains("row")) continue;
        CHECK(c.payload["row"].get<int>() >= 0);
        CHECK(c.payload["col"].get<int>() >= 0);
        located = true;
    }
    CHECK(located);
}
