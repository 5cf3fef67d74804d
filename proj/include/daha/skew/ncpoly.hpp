/**
 * @file ncpoly.hpp
 * @brief Formal noncommutative polynomials in named generators, algebra
 * presentations, and residual checks against an assignment.
 */
#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "daha/ring/frac.hpp"
#include "daha/skew/skew_op.hpp"

namespace daha {

class NcPoly {
public:
    using Word = std::vector<std::string>;

    NcPoly() = default;
    NcPoly(long c);  // NOLINT(google-explicit-constructor)
    NcPoly(const FracMulti& c);  // NOLINT(google-explicit-constructor)
    NcPoly(const LaurentPoly& c);  // NOLINT(google-explicit-constructor)
    static NcPoly gen(const std::string& name);

    const std::map<Word, FracMulti>& terms() const { return terms_; }
    std::vector<std::string> generators() const;

    NcPoly operator-() const;
    friend NcPoly operator+(const NcPoly& a, const NcPoly& b);
    friend NcPoly operator-(const NcPoly& a, const NcPoly& b) { return a + (-b); }
    friend NcPoly operator*(const NcPoly& a, const NcPoly& b);

private:
    std::map<Word, FracMulti> terms_;
};

/// q-commutator [a,b]_q = q a b - q^-1 b a.
NcPoly q_commutator(const NcPoly& a, const NcPoly& b);

struct Relation {
    std::string name;
    NcPoly lhs_minus_rhs;
};

struct Presentation {
    std::string name;
    std::vector<std::string> generators;
    std::vector<Relation> relations;

    /// Throws std::invalid_argument if a relation mentions an undeclared generator.
    void validate() const;
};

/// Evaluates a formal word over any algebra with +, *, a scalar embedding and a unit.
template <class Alg>
Alg evaluate(const NcPoly& p, const std::map<std::string, Alg>& assignment,
             const std::function<Alg(const FracMulti&)>& scalar) {
    Alg acc = scalar(FracMulti());
    for (const auto& [word, c] : p.terms()) {
        Alg prod = scalar(c);
        for (const auto& g : word) {
            auto it = assignment.find(g);
            if (it == assignment.end()) throw std::invalid_argument("unassigned generator " + g);
            prod = prod * it->second;
        }
        acc = acc + prod;
    }
    return acc;
}

struct Residual {
    std::string relation;
    SkewOp residual;
};

struct RelationReport {
    std::string presentation;
    std::vector<Residual> residuals;  // one per relation, in order
    bool all_zero() const;
    std::vector<std::string> failing() const;
    nlohmann::json to_json() const;
};

RelationReport check_relations(const Presentation& pres, const std::map<std::string, SkewOp>& assignment);

}  // namespace daha
