#include "daha/skew/ncpoly.hpp"

#include <algorithm>
#include <set>

namespace daha {

NcPoly::NcPoly(long c) : NcPoly(FracMulti(c)) {}

NcPoly::NcPoly(const LaurentPoly& c) : NcPoly(FracMulti(c)) {}

NcPoly::NcPoly(const FracMulti& c) {
    if (!c.is_zero()) terms_.emplace(Word{}, c);
}

NcPoly NcPoly::gen(const std::string& name) {
    NcPoly r;
    r.terms_.emplace(Word{name}, FracMulti(1L));
    return r;
}

std::vector<std::string> NcPoly::generators() const {
    std::set<std::string> s;
    for (const auto& [w, c] : terms_) s.insert(w.begin(), w.end());
    return {s.begin(), s.end()};
}

NcPoly NcPoly::operator-() const {
    NcPoly r = *this;
    for (auto& [w, c] : r.terms_) c = -c;
    return r;
}

NcPoly operator+(const NcPoly& a, const NcPoly& b) {
    NcPoly r = a;
    for (const auto& [w, c] : b.terms_) {
        auto it = r.terms_.find(w);
        if (it == r.terms_.end()) {
            r.terms_.emplace(w, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

NcPoly operator*(const NcPoly& a, const NcPoly& b) {
    NcPoly r;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            NcPoly t;
            NcPoly::Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            t.terms_.emplace(std::move(w), ca * cb);
            r = r + t;
        }
    return r;
}

NcPoly q_commutator(const NcPoly& a, const NcPoly& b) {
    const LaurentPoly q = LaurentPoly::var(Var::q);
    return NcPoly(q) * a * b - NcPoly(q.pow(-1)) * b * a;
}

void Presentation::validate() const {
    for (const auto& r : relations)
        for (const auto& g : r.lhs_minus_rhs.generators())
            if (std::find(generators.begin(), generators.end(), g) == generators.end())
                throw std::invalid_argument("relation " + r.name + " uses undeclared generator " + g);
}

bool RelationReport::all_zero() const {
    return std::all_of(residuals.begin(), residuals.end(), [](const Residual& r) { return r.residual.is_zero(); });
}

std::vector<std::string> RelationReport::failing() const {
    std::vector<std::string> out;
    for (const auto& r : residuals)
        if (!r.residual.is_zero()) out.push_back(r.relation);
    return out;
}

nlohmann::json RelationReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : residuals)
        arr.push_back({{"relation", r.relation}, {"residual_terms", r.residual.terms().size()},
                       {"residual", r.residual.to_text()}});
    return {{"presentation", presentation}, {"relations", arr}};
}

RelationReport check_relations(const Presentation& pres, const std::map<std::string, SkewOp>& assignment) {
    pres.validate();
    for (const auto& g : pres.generators)
        if (!assignment.count(g)) throw std::invalid_argument("generator " + g + " not assigned");
    const std::function<SkewOp(const FracMulti&)> scalar = [](const FracMulti& f) { return SkewOp(f); };
    RelationReport rep{pres.name, {}};
    for (const auto& r : pres.relations) rep.residuals.push_back({r.name, evaluate(r.lhs_minus_rhs, assignment, scalar)});
    return rep;
}

}  // namespace daha
