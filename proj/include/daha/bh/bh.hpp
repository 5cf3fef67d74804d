/**
 * @file bh.hpp
 * @brief Brumfiel-Hilden algebras of 2-bridge knots: the generalized quaternion
 * algebra over Q[x, I], the polynomial Q, and the q = -1 module built from it.
 *
 * J is always eliminated through J = 4(x^2 - 1) - I, so every component lives
 * in the polynomial ring Q[x, I] (variables Var::x and Var::I).
 */
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "daha/knots/catalog.hpp"
#include "daha/modrep/module.hpp"

namespace daha {

class InvalidParameters : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
class StructureViolation : public std::runtime_error {
    using std::runtime_error::runtime_error;
};
class ReductionFailure : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Largest p handled by the q = -1 module and the suites.
inline constexpr int kBHBound = 9;

/// 4(x^2 - 1) - I.
LaurentPoly bh_J();

/// Element of Q[x, I] with the reduction it is taken modulo.
struct BHPlus {
    enum class Context { none, mod_Q, mod_IQ };
    LaurentPoly f;
    Context ctx = Context::none;

    /// Remainder in I; Q must have a unit leading I-coefficient.
    static BHPlus reduce(const LaurentPoly& f, Context ctx, const LaurentPoly& Q);
};

/// D + E i + F j + G k with i^2 = I, j^2 = J, ij = -ji = k.
struct BHQuaternion {
    LaurentPoly D, E, F, G;

    static BHQuaternion scalar(const LaurentPoly& c) { return {c, {}, {}, {}}; }
    BHQuaternion conj() const { return {D, -E, -F, -G}; }
    /// (i, j, k) -> (-i, -j, k), induced by a -> a^-1, b -> b^-1.
    BHQuaternion beta() const { return {D, -E, -F, G}; }
    bool is_zero() const { return D.is_zero() && E.is_zero() && F.is_zero() && G.is_zero(); }

    friend BHQuaternion operator+(const BHQuaternion& a, const BHQuaternion& b);
    friend BHQuaternion operator-(const BHQuaternion& a, const BHQuaternion& b);
    friend BHQuaternion operator*(const BHQuaternion& a, const BHQuaternion& b);
    friend BHQuaternion operator*(const LaurentPoly& c, const BHQuaternion& a);
    friend bool operator==(const BHQuaternion& a, const BHQuaternion& b) = default;

    /// Scalar and j parts modulo IQ, i and k parts modulo Q.
    BHQuaternion reduced(const LaurentPoly& Q) const;
    nlohmann::json to_json() const;
};

/// alpha + beta delta with delta = i + j, delta^2 = 4(x^2 - 1).
struct BHPlusX {
    LaurentPoly alpha, beta;

    static BHPlusX X(int k);
    friend BHPlusX operator*(const BHPlusX& a, const BHPlusX& b);
    friend BHPlusX operator+(const BHPlusX& a, const BHPlusX& b) { return {a.alpha + b.alpha, a.beta + b.beta}; }
    BHQuaternion to_quaternion() const { return {alpha, beta, beta, {}}; }
    /// x -> (X + X^-1)/2, delta -> X - X^-1.
    LaurentPoly in_X() const;
};

struct Letter {
    char gen = 'a';  // 'a' or 'b'
    int exp = 1;     // +-1
    friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

std::string to_string(const Word& w);
/// "ba^-1b^-1a" style; whitespace is ignored.
Word parse_word(const std::string& s);
Word reversed(const Word& w);
/// The anti-involution of the free group swapping a and b.
Word bar(const Word& w);
Word free_reduce(const Word& w);

/// a^+-1 -> x +- (i+j)/2, b^+-1 -> x -+ (i-j)/2.
BHQuaternion generator_image(char gen, int exp);
BHQuaternion word_image(const Word& w);

struct TwoBridge {
    int p = 3, qq = 1, d = 1;
    std::vector<int> e;  // e_1 .. e_{p-1}
    int s = 0;           // 4 (e_1 + ... + e_d)
    Word v, w, w_tilde;
    /// w w~ a^-s, freely reduced.
    Word longitude;

    std::string name() const { return "2bridge:" + std::to_string(p) + "/" + std::to_string(qq); }
};

TwoBridge two_bridge(int p, int qq);
/// All admissible (p, qq) with p <= pmax (odd coprime, |qq| < p).
std::vector<std::pair<int, int>> two_bridge_parameters(int pmax);

struct QData {
    LaurentPoly L, M, N;
    LaurentPoly Q;  // leading I-coefficient (-1)^d
    int sign = 1;   // Q = sign (L - J N)
    int unit = 1;   // a w - w b = unit Q i
};

/// Throws StructureViolation when w is not of the form L + Mj + Nk or a w - w b
/// is not a multiple of i.
QData compute_Q(const TwoBridge& tb);

/// Y = w w~ a^-s as a quaternion (unreduced).
BHQuaternion longitude_image(const TwoBridge& tb);
/// Writes a reduced quaternion as alpha + beta delta; throws ReductionFailure.
BHPlusX as_plus_x(const BHQuaternion& qt, const LaurentPoly& Q);
/// A(X) with A(X) (X - X^-1) = X^s - 1.
LaurentPoly a_series(int s);

KnotReport verify_bh_identities(const TwoBridge& tb);

struct AlexanderRoutes {
    LaurentPoly fstar;    // Q at x = (X + X^-1)/2, I = 0
    LaurentPoly formula;  // X^{-s/2} sum_m (-1)^m X^{2(e_1 + ... + e_m)}
    bool agree() const { return fstar == formula; }
};
AlexanderRoutes alexander_via_fstar(const TwoBridge& tb);

/// Basis {1, I, ..., I^{d-1}, Q delta^-1} at q = -1 with yhat = -Y and s the
/// involution X -> X^-1 (sign on Q delta^-1).
ModulePresentation q_minus1_module(const TwoBridge& tb);
/// Coordinates of alpha(X, I) + beta(X) Q delta^-1 in the basis above.
std::vector<LaurentPoly> q_minus1_coordinates(const TwoBridge& tb, const LaurentPoly& Q_X, const LaurentPoly& alpha,
                                              const LaurentPoly& beta);
/// delta^-1 (1 + sY) and the T0 operators map the basis into the module.
KnotReport verify_q_minus1_module(const TwoBridge& tb);

}  // namespace daha
