#include "daha/cli/report.hpp"

#include <sstream>

namespace daha {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "?";
}

void Report::add(std::string id, bool pass, nlohmann::json payload) {
    checks.push_back({std::move(id), pass ? Status::pass : Status::fail, std::move(payload)});
}

void Report::append(const Report& other) {
    for (const auto& c : other.checks) checks.push_back({other.suite + "." + c.id, c.status, c.payload});
}

bool Report::ok() const {
    for (const auto& c : checks)
        if (c.status == Status::fail) return false;
    return true;
}

nlohmann::json Report::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) arr.push_back({{"id", c.id}, {"status", to_string(c.status)}, {"payload", c.payload}});
    return {{"suite", suite}, {"checks", arr}, {"duration_ms", duration_ms}};
}

std::string Report::to_text() const {
    std::ostringstream os;
    for (const auto& c : checks) os << (c.status == Status::pass ? "PASS " : c.status == Status::fail ? "FAIL " : "SKIP ") << c.id << "\n";
    return os.str();
}

}  // namespace daha
