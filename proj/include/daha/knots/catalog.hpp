/**
 * @file catalog.hpp
 * @brief Nonsymmetric skein modules of the unknot, the (2,2p+1) torus knots and
 * the figure eight, with their symmetric-level action formulas.
 */
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "daha/modrep/module.hpp"

namespace daha {

class UnsupportedKnot : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct KnotId {
    enum class Kind { unknot, torus, figure8, twobridge };
    Kind kind = Kind::unknot;
    int p = 0;   // torus(p) or twobridge p
    int qq = 0;  // twobridge only

    static KnotId unknot() { return {Kind::unknot, 0, 0}; }
    static KnotId torus(int p);
    static KnotId trefoil() { return torus(1); }
    static KnotId figure8() { return {Kind::figure8, 0, 0}; }
    static KnotId twobridge(int p, int qq) { return {Kind::twobridge, p, qq}; }

    /// "unknot", "trefoil", "torus:p", "fig8" (or "figure8"), "2bridge:p/q".
    static KnotId parse(const std::string& s);
    std::string to_string() const;
    bool amphichiral() const { return kind == Kind::unknot || kind == Kind::figure8; }
    friend bool operator==(const KnotId& a, const KnotId& b) = default;
};

/// (1+s) yhat b (curve y) or (1+s) q^-1 X yhat b (curve z) should equal `expected`.
struct SymmetricFormula {
    std::string label;
    char curve = 'y';
    ModuleElement input;
    ModuleElement expected;
};

struct KnotModuleData {
    KnotId knot;
    ModulePresentation presentation;
    std::vector<SymmetricFormula> symmetric_formulas;
};

/// Torus knots are instantiated up to this p.
inline constexpr int kTorusBound = 8;

KnotModuleData knot_module(const KnotId& k);

struct CheckLine {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct KnotReport {
    std::string knot;
    std::vector<CheckLine> lines;
    bool ok() const;
    nlohmann::json to_json() const;
};

KnotReport verify_symmetric_actions(const KnotId& k);
/// yhat w = -w and s w = -w for the unknot witness.
KnotReport verify_unknot_witness(const KnotId& k);
/// The witness line is closed under X^+-1, yhat^+-1 and s in one step.
KnotReport verify_witness_closure(const KnotId& k);

}  // namespace daha
