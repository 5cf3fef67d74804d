/**
 * @file rec.hpp
 * @brief Sequences n -> J(n): the A_q x| Z_2 action on them, Habiro's cyclotomic
 * coefficients, the P_j divisibility and congruence checks, and a bounded search
 * for inhomogeneous recursions.
 *
 * Sequences follow the sign-adjusted convention J(1) = 1, J(-n) = -J(n).
 */
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "daha/knots/catalog.hpp"
#include "daha/ring/frac.hpp"
#include "daha/ring/ratfunc.hpp"

namespace daha {

class NoSolutionInBounds : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Default half-width of a sequence window.
inline constexpr int kSequenceWindow = 16;

struct JSequence {
    std::string source;
    std::map<int, LaurentPoly> values;  // n in [-N, N]

    int lo() const { return values.begin()->first; }
    int hi() const { return values.rbegin()->first; }
    /// Throws std::out_of_range outside the window.
    const LaurentPoly& at(int n) const;
};

/// Colored Jones values of a catalog knot for |n| <= N.
JSequence j_sequence(const KnotId& k, int N = kSequenceWindow);
/// Odd extension of J(1..N) given by a closed form.
JSequence j_sequence(std::string source, const std::function<LaurentPoly(int)>& J, int N = kSequenceWindow);

/// A sequence of rational functions in q, the codomain of the D_q action.
struct Sequence {
    std::map<int, RatFuncQ> values;

    static Sequence from(const JSequence& j);
    const RatFuncQ& at(int n) const;
    bool empty() const { return values.empty(); }
};

/// sum F(X)/G(X) Y^l s^eps with F, G in q and X.
struct SeqOperator {
    struct Term {
        LaurentPoly F{1L};
        LaurentPoly G{1L};
        int l = 0;
        int eps = 0;
    };
    std::vector<Term> terms;

    static SeqOperator coefficient(const LaurentPoly& F, const LaurentPoly& G = LaurentPoly(1L));
    static SeqOperator X(int k);
    static SeqOperator Y(int l = 1);
    static SeqOperator s();
    /// (1 - q^2 X^2)^-1 (1 - sY).
    static SeqOperator U0();

    friend SeqOperator operator+(const SeqOperator& a, const SeqOperator& b);
    friend SeqOperator operator-(const SeqOperator& a, const SeqOperator& b);
    /// Product in D_q: Y F(X) = F(q^-2 X) Y, s F(X) = F(X^-1) s, sY = Y^-1 s.
    friend SeqOperator operator*(const SeqOperator& a, const SeqOperator& b);
};

/// (X f)(n) = -q^-2n f(n), (Y f)(n) = -f(n+1), (s f)(n) = -f(-n). The result
/// lives on every n whose inputs are in the window. Throws PoleAtEvaluation.
Sequence sequence_action(const SeqOperator& a, const Sequence& f);
Sequence sequence_action(const SeqOperator& a, const JSequence& f);

/// prod_{j=1}^k (q^4n + q^-4n - q^4j - q^-4j).
LaurentPoly habiro_c(int n, int k);
/// prod_{j=1}^k (q^2n + q^-2n - q^2j - q^-2j), in the variable q of the halved convention.
LaurentPoly habiro_d(int n, int k);

struct HabiroCoefficients {
    std::vector<LaurentPoly> H;  // H_0 .. H_K
    std::vector<std::string> notes;
    /// sum_k (q^2n - q^-2n)/(q^2 - q^-2) c_{n,k} H_k.
    LaurentPoly reconstruct(int n) const;
    bool integral() const;
    nlohmann::json to_json() const;
};

/// Triangular solve for H_0..H_K from J(1..K+1); throws NotDivisible.
HabiroCoefficients habiro_extract(const JSequence& J, int K);

struct DivisibilityEntry {
    int n = 0, j = 0;
    LaurentPoly numerator;  // (q^2 - 1)(J(n+j) + J(n-1-j))
    LaurentPoly quotient;   // numerator / (q^{4n-2} - 1)
    /// quotient / (q^{4j-2} + 1), when Laurent.
    std::optional<LaurentPoly> strong;
    /// (q^2 + 1) quotient / (q^{4j+2} + 1), when Laurent.
    std::optional<LaurentPoly> strong_corrected;
    nlohmann::json to_json() const;
};
/// One entry per n in [nmin, nmax]. Throws NotDivisible naming (n, j) when the
/// first quotient is not Laurent; the strengthened quotients are only recorded.
std::vector<DivisibilityEntry> divisibility_check(const JSequence& J, int j, int nmin, int nmax);

/// P_j(n) = (-1)^{n+j} (J(n+j) + J(n-1-j)) / (q^{4n-2} - 1).
RatFuncQ p_j(const JSequence& J, int j, int n);

/// J(m+1)/J_unknot(m+1) rewritten in the variable q^2 -> q.
LaurentPoly normalized_jones(const JSequence& J, int m);

struct CongruenceResult {
    int n = 0, k = 0;
    bool pass = false;
    LaurentPoly difference, modulus;
    std::optional<LaurentPoly> quotient;
};
/// Jbar_{n-1} - Jbar_{k-1} modulo [n-k][n+k] with [m] = q^m - q^-m (halved convention).
CongruenceResult congruence_check(const JSequence& J, int n, int k);

struct InhomRecursion {
    int k_max = 0, l_max = 0;
    SeqOperator a;
    RatFuncQ P0;
    std::map<int, RatFuncQ> P;  // the verification window
    bool constant() const;
    nlohmann::json to_json() const;
};

/// Solves a . empty = witness with a = sum a_{k,l,eps} X^k Y^l s^eps over Q(q),
/// |k| <= k_max, 0 <= l <= l_max, trying smaller bounds first. Verifies P on
/// 0 <= n <= n_check. Throws NoSolutionInBounds.
InhomRecursion find_inhomogeneous_recursion(const KnotId& k, int k_max, int l_max, int n_check = 10);

}  // namespace daha
