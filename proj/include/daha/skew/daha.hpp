/**
 * @file daha.hpp
 * @brief Operators of the C^vee C_1 double affine Hecke algebra inside the
 * localized crossed product, and the presentations they are checked against.
 */
#pragma once

#include <map>
#include <optional>
#include <string>

#include "daha/skew/ncpoly.hpp"
#include "daha/skew/skew_op.hpp"

namespace daha {

/// Values for t1..t4: symbols, constants or any Laurent monomials.
struct DahaParams {
    LaurentPoly t1, t2, t3, t4;

    static DahaParams symbolic();
    /// t3 = t4 = 1, t1 and t2 symbolic.
    static DahaParams three();
    static DahaParams ones();
};

/// t - t^-1.
LaurentPoly tbar(const LaurentPoly& t);

struct DunklGenerators {
    SkewOp T0, T1, T0v, T1v;
    SkewOp T0inv, T1inv;  // T0 - tbar1, T1 - tbar3
};

DunklGenerators dunkl_generators(const DahaParams& p);

/// U0 = (1 - q^2 X^2)^-1 (1 - S P).
SkewOp u0_operator();

/// Closed form A(X)(P - 1) + A(X^-1)(P^-1 - 1) + t1 + t1^-1; needs t3 = t4 = 1.
SkewOp askey_wilson(const DahaParams& p);
/// s T0 + T0^-1 s, the same operator built from the Dunkl generators (t3 = t4 = 1).
SkewOp askey_wilson_dunkl(const DahaParams& p);

/// t3^-1 S + (tbar3 + tbar4 X)/(1 - X^2) (1 + S).
SkewOp t1_minus(const DahaParams& p);

/// Image of the (m,l) torus curve: T_d applied to e_{a,b} + e_{-a,-b}, with e_{r,s} = q^{-rs} X^r P^s.
SkewOp fg_curve(int m, int l);

struct SphericalConstants {
    FracMulti Q0, B, D0, D1;
};
SphericalConstants spherical_constants(const DahaParams& p);

/// The five defining relations on T0, T1, T0v, T1v.
Presentation cc_daha_presentation(const DahaParams& p);
std::map<std::string, SkewOp> dunkl_assignment(const DahaParams& p);

/// Relations in X, Y = T1 T0, T = T1 and their inverses.
Presentation xyt_presentation(const DahaParams& p);
std::map<std::string, SkewOp> xyt_assignment(const DahaParams& p);

/// Spherical presentation on x, y, z and the idempotent e (which acts as the unit).
Presentation koornwinder_presentation(const DahaParams& p);
std::map<std::string, SkewOp> koornwinder_assignment(const DahaParams& p);
/// The central value -q x y z + ... as an operator (should be Q0 e).
SkewOp koornwinder_casimir(const DahaParams& p);
/// c with koornwinder_casimir(p) = c e, read off the S-coefficient; nullopt if the
/// operator is not a scalar multiple of e.
std::optional<FracMulti> koornwinder_central_value(const DahaParams& p);

/// Undeformed torus relations on x, y, z: three q-commutators and the cubic
/// q^2 x^2 + q^-2 y^2 + q^2 z^2 - q x y z = 2(q^2 + q^-2).
Presentation torus_skein_presentation();
/// x -> X + X^-1, y -> P + P^-1, z -> the (1,1) curve.
std::map<std::string, SkewOp> torus_skein_assignment();

/// Cherednik's A1 relations: T X T = X^-1, T Y^-1 T = Y, (T - t)(T + t^-1) = 0, X Y = q^2 Y X T^2.
Presentation cherednik_presentation(const LaurentPoly& t);
/// The specialized C^vee C_1 form: T X T = X^-1, T Y^-1 T = Y, (T - t^-1)(T + t) = 0, X Y = q^2 T^-2 Y X.
Presentation a1_specialized_presentation(const LaurentPoly& t);
/// X -> X, Y -> T1 T0, T -> T1 with parameters (1,1,t^-1,1).
std::map<std::string, SkewOp> a1_specialized_assignment(const LaurentPoly& t);
/// Untwisted embedding X -> X, T -> T1, Y -> P S T1 with parameters (1,1,t,1).
std::map<std::string, SkewOp> cherednik_assignment(const LaurentPoly& t);
/// Twisted embedding X -> qX, T -> t S P + tbar U0, Y -> t P + tbar S U0.
/// `t_inverse_plus` selects T^-1 = T + tbar (true) or T - tbar (false).
std::map<std::string, SkewOp> twisted_cherednik_assignment(const LaurentPoly& t, bool t_inverse_plus = false);

}  // namespace daha
