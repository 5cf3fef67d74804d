/**
 * @file report.hpp
 * @brief Machine-readable check reports and the verification suites behind
 * `dahactl verify`.
 */
#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "daha/knots/catalog.hpp"
#include "daha/modrep/module.hpp"

namespace daha {

enum class Status { pass, fail, skipped };
std::string to_string(Status s);

struct Check {
    std::string id;
    Status status = Status::pass;
    nlohmann::json payload;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;
    double duration_ms = 0;

    void add(std::string id, bool pass, nlohmann::json payload = nlohmann::json::object());
    void append(const Report& other);
    bool ok() const;
    /// {suite, checks: [{id, status, payload}], duration_ms}.
    nlohmann::json to_json() const;
    /// One "PASS id" / "FAIL id" line per check.
    std::string to_text() const;
};

struct SuiteOptions {
    std::vector<KnotId> knots;  // empty: the suite's default knots
    int jmax = 3;
    int nmin = 2;
    int nmax = 12;
    int kmax = 8;   // Habiro K, recursion |k| bound
    int lmax = -1;  // recursion Y-degree bound (-1: per-knot default)
    /// Substring filter on suite names (golden_suite only).
    std::string filter;
};

/// Suites in the order golden_suite runs them, with a one-line description.
struct SuiteInfo {
    std::string name;
    std::string description;
};
const std::vector<SuiteInfo>& suite_list();

/// Runs one suite; throws std::invalid_argument for an unknown name.
Report run_suite(const std::string& name, const SuiteOptions& opt = {});
/// Every suite whose name contains opt.filter, concatenated into suite "all".
/// Check ids carry the suite name as a prefix.
Report golden_suite(const SuiteOptions& opt = {});

/// u0 and C(q) = Id for each module, u1 for each quotient.
Report certificate_report(const std::vector<ModulePresentation>& modules);

}  // namespace daha
