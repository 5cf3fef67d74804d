/**
 * @file jones.hpp
 * @brief The pairing with the solid torus, colored Jones polynomials and the
 * 3-variable polynomials J_n(q, t1, t2).
 */
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "daha/knots/catalog.hpp"
#include "daha/ring/linalg.hpp"
#include "daha/skew/daha.hpp"

namespace daha {

class PairingNotUnique : public std::runtime_error {
    using std::runtime_error::runtime_error;
};
class PairingInconsistent : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// <U^m, b_i> for the right module V = C[U^+-1] (U.X = -U(q^2 U), U.Y = U^-1 U, U.s = -U(U^-1)).
class PairingFunctional {
public:
    PairingFunctional(ModulePresentation p, RVector c_plus, RVector c_minus);

    const ModulePresentation& presentation() const { return p_; }
    const RVector& c_plus() const { return c_plus_; }
    const RVector& c_minus() const { return c_minus_; }
    /// Number of extra constraint levels used beyond m = 1.
    int extra_levels = 0;

    /// c(m) obtained from c(1) through c(m-1) = A(-q^2m)^T c(m).
    RVector c(int m) const;
    /// <U^m, elem> for an element with coefficients in q and X only.
    RatFuncQ pair(int m, const ModuleElement& elem) const;
    /// <U - U^-1, elem>; coefficients may involve t1..t4. The result must be a
    /// Laurent polynomial (std::domain_error otherwise).
    LaurentPoly epsilon(const ModuleElement& elem) const;

private:
    ModulePresentation p_;
    RVector c_plus_, c_minus_;
};

/// Default bound on the constraint levels used to force nullity one.
inline constexpr int kPairingMaxLevel = 6;

PairingFunctional solve_pairing(const ModulePresentation& p, int m_max = kPairingMaxLevel);
PairingFunctional solve_pairing(const KnotId& k);
/// The constraint matrix [A(-1)^T A(-q^2)^T + B(-q^2)^T] for c(1).
RMatrix pairing_constraint(const ModulePresentation& p);

enum class Convention { raw, adjusted };
Convention parse_convention(const std::string& s);
std::string to_string(Convention c);

/// Classical colored Jones polynomial, sign-adjusted (J_1 = 1, unknot J_n = [n]).
LaurentPoly colored_jones(const KnotId& k, int n);
LaurentPoly colored_jones(const PairingFunctional& eps, int n);
/// Entries 0..nmax of the sign-adjusted sequence (entry 0 is zero).
std::vector<LaurentPoly> colored_jones_upto(const PairingFunctional& eps, int nmax);

/// Askey-Wilson operator s T0 + (T0 - tbar1) s built from the Dunkl generators.
SkewOp jones_operator(const DahaParams& params);

/// epsilon(S_{n-1}(L) empty) with L = jones_operator(params); adjusted multiplies by (-1)^{n-1}.
LaurentPoly jones3(const KnotId& k, int n, Convention conv = Convention::adjusted,
                   const DahaParams& params = DahaParams::three());
LaurentPoly jones3(const PairingFunctional& eps, int n, Convention conv, const DahaParams& params);

/// The Chebyshev iterates p_1 = empty, p_2 = L p_1, ... up to p_n (index 0 unused).
std::vector<ModuleElement> chebyshev_iterates(const ModulePresentation& p, const SkewOp& L, int n);

/// q -> q^-1, t1 -> t1^-1, t2 -> t2^-1.
LaurentPoly mirror(const LaurentPoly& f);
/// Whether jones3(k, n) is mirror invariant; only for amphichiral catalog knots.
bool mirror_check(const KnotId& k, int n);

struct JonesTable {
    KnotId knot;
    Convention convention = Convention::adjusted;
    bool three_variable = false;
    std::map<int, LaurentPoly> entries;  // n in [-nmax, nmax]
};
JonesTable jones_table(const KnotId& k, int nmax, Convention conv, bool three_variable);

/// Rewrites f in t = t1 and v = t2 - t2^-1 (nullopt if f is not a polynomial in v).
/// The returned polynomial uses the variable t2 as the symbol v.
std::optional<LaurentPoly> to_v_form(const LaurentPoly& f);
/// Text or LaTeX in the t, v notation; falls back to t2 when no v form exists.
std::string render_tv(const LaurentPoly& f, bool latex);

}  // namespace daha
