/**
 * @file operator_matrix.hpp
 * @brief Square matrices over the localized crossed product, acting on the
 * coefficient vectors of a presented module (P and S act coordinatewise).
 */
#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "daha/modrep/module.hpp"
#include "daha/skew/daha.hpp"
#include "daha/skew/ncpoly.hpp"

namespace daha {

class OperatorMatrix {
public:
    OperatorMatrix() = default;
    explicit OperatorMatrix(int r) : e_(r, std::vector<SkewOp>(r)) {}

    static OperatorMatrix scalar(int r, const FracMulti& c);
    static OperatorMatrix diagonal(const std::vector<SkewOp>& d);
    /// yhat = A(X) P, its inverse A^-1(q^2 X) P^-1, and s = B(X) S.
    static OperatorMatrix yhat(const ModulePresentation& p);
    static OperatorMatrix yhat_inv(const ModulePresentation& p);
    static OperatorMatrix s(const ModulePresentation& p);

    int rank() const { return static_cast<int>(e_.size()); }
    const SkewOp& at(int i, int j) const { return e_.at(i).at(j); }
    SkewOp& at(int i, int j) { return e_.at(i).at(j); }
    bool is_zero() const;

    OperatorMatrix operator-() const;
    friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) { return a + (-b); }
    friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
    friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) { return (a - b).is_zero(); }

    OperatorMatrix substitute(Var v, const LaurentPoly& value) const;
    /// Applies the matrix to a coefficient vector; every coordinate must come out
    /// polynomial (exact division, NotDivisible otherwise).
    ModuleElement apply(const ModulePresentation& p, const ModuleElement& m) const;
    nlohmann::json to_json() const;

private:
    std::vector<std::vector<SkewOp>> e_;
};

/// The homomorphism D_q -> matrices: f(X) -> f Id, P^i -> yhat^i, S -> s.
OperatorMatrix embed(const ModulePresentation& p, const SkewOp& op);

/// Reflection twist on a sign line: every S is replaced by sign * S.
SkewOp twist_reflection(const SkewOp& op, int sign);

struct ModuleRelationReport {
    std::string presentation, module;
    std::vector<std::pair<std::string, OperatorMatrix>> residuals;
    bool all_zero() const;
    std::vector<std::string> failing() const;
    nlohmann::json to_json() const;
};

/// Evaluates each relation of `pres` as an operator matrix.
ModuleRelationReport operator_identity_on_module(const ModulePresentation& p, const Presentation& pres,
                                                 const std::map<std::string, OperatorMatrix>& assignment);

/// Dunkl operators transported to the module.
std::map<std::string, OperatorMatrix> module_dunkl_assignment(const ModulePresentation& p, const DahaParams& params);

/// T0 from the Dunkl embedding and T1* = diag(T1 or T1^-) chosen per basis line by the
/// sign of the (constant, diagonal) B; T0v = q T0^-1 X, T1v = X^-1 (T1*)^-1.
std::map<std::string, OperatorMatrix> five_param_assignment(const ModulePresentation& p, const DahaParams& params);

}  // namespace daha
