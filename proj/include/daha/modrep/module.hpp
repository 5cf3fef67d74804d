/**
 * @file module.hpp
 * @brief Free modules C[X^+-1] (x) V with an A_q x| Z_2 action given by a matrix
 * pair: yhat = A(X) P and s = B(X) S, where P and S act coefficientwise.
 */
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "daha/ring/laurent.hpp"
#include "daha/skew/skew_op.hpp"

namespace daha {

/// Row-major; column j of a presentation matrix is the image of basis vector j.
using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

PolyMatrix identity_matrix(int r);
PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix mat_sub(const PolyMatrix& a, const PolyMatrix& b);
/// X -> c * m in every entry (m may mention X).
PolyMatrix mat_subst_X(const PolyMatrix& a, const Rational& c, const Exp& m);
PolyMatrix mat_subst(const PolyMatrix& a, Var v, const LaurentPoly& value);
LaurentPoly determinant(const PolyMatrix& a);
/// Inverse over the Laurent ring; requires a unit-monomial determinant.
PolyMatrix inverse_unit(const PolyMatrix& a);
nlohmann::json matrix_to_json(const PolyMatrix& a);

struct ModuleElement {
    std::vector<LaurentPoly> c;

    ModuleElement() = default;
    explicit ModuleElement(std::vector<LaurentPoly> coeffs) : c(std::move(coeffs)) {}
    static ModuleElement zero(int r) { return ModuleElement(std::vector<LaurentPoly>(r)); }
    static ModuleElement basis(int r, int i, const LaurentPoly& f = LaurentPoly(1L));

    int rank() const { return static_cast<int>(c.size()); }
    bool is_zero() const;
    ModuleElement operator-() const;
    friend ModuleElement operator+(const ModuleElement& a, const ModuleElement& b);
    friend ModuleElement operator-(const ModuleElement& a, const ModuleElement& b) { return a + (-b); }
    friend ModuleElement operator*(const LaurentPoly& f, const ModuleElement& m);
    friend bool operator==(const ModuleElement& a, const ModuleElement& b) { return a.c == b.c; }
    friend bool operator!=(const ModuleElement& a, const ModuleElement& b) { return !(a == b); }
};

class WitnessNotBasisAligned : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ModulePresentation {
    std::string name;
    std::vector<std::string> basis;
    PolyMatrix A, B;
    /// When set, q is specialized to this value after every operation.
    std::optional<Rational> q_value;
    ModuleElement empty_link;
    std::optional<ModuleElement> unknot_witness;

    int rank() const { return static_cast<int>(basis.size()); }
    /// Applies the q specialization, if any.
    LaurentPoly specialize(const LaurentPoly& f) const;
    ModuleElement specialize(const ModuleElement& m) const;
    /// Basis index i when the witness is f * b_i for a unit monomial f.
    std::optional<int> witness_index() const;
};

nlohmann::json to_json(const ModulePresentation& p, const ModuleElement& m);
ModuleElement element_from_json(const ModulePresentation& p, const nlohmann::json& j);
std::string to_text(const ModulePresentation& p, const ModuleElement& m);

enum class Gen { X, Xinv, Y, Yinv, s };

ModuleElement apply_gen(const ModulePresentation& p, Gen g, const ModuleElement& m);
/// yhat^i s^e m through the genuine action.
ModuleElement apply_word(const ModulePresentation& p, int i, int e, const ModuleElement& m);

/// Applies op, clearing every denominator factor by exact division of the
/// coefficient vector. Throws NotDivisible naming the coordinate and factor.
ModuleElement apply_skew(const ModulePresentation& p, const SkewOp& op, const ModuleElement& m);

struct ValidationReport {
    bool det_unit = false;
    bool involution = false;   // B(X) B(X^-1) = Id
    bool braid = false;        // A(X) B(q^-2 X) A(q^2 X^-1) = B(X)
    bool braid_variant = false;  // B(X) A(X^-1) B(q^-2 X^-1) A(q^2 X) = Id
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    bool variants_agree() const { return braid == braid_variant; }
    nlohmann::json to_json() const;
};
ValidationReport validate_presentation(const ModulePresentation& p);

struct Certificate {
    bool ok = false;
    PolyMatrix quotients;  // numerator / divisor, entrywise
    std::string failure;
    int row = -1, col = -1;
    std::optional<LaurentPoly> remainder;
    bool endpoints_ok = true;  // u0 only: B(+-q^-1) A(+-q) = Id
    nlohmann::json to_json() const;
};
/// 1 - B(X) A(X^-1) divided entrywise by 1 - q^2 X^2, plus the endpoint conditions.
Certificate u0_certificate(const ModulePresentation& p);
/// 1 - B(X) divided entrywise by 1 - X^2.
Certificate u1_certificate(const ModulePresentation& p);

/// Deletes the witness row and column; the witness must span an invariant basis line.
ModulePresentation quotient_presentation(const ModulePresentation& p);

struct CMatrixReport {
    PolyMatrix C_plus, C_minus;  // B(q^-1) A(q), B(-q^-1) A(-q)
    bool plus_identity = false, minus_identity = false;
    bool ok() const { return plus_identity && minus_identity; }
    nlohmann::json to_json() const;
};
CMatrixReport c_matrix_check(const ModulePresentation& p);

}  // namespace daha
