// Random generators and small independent oracles shared by the test binaries.
#pragma once

#include <map>
#include <random>
#include <vector>

#include "daha/ring/laurent.hpp"

namespace testgen {

using daha::Exp;
using daha::LaurentPoly;
using daha::Rational;
using daha::Var;

inline std::mt19937_64& rng() {
    static std::mt19937_64 g(0x5eed1234abcdULL);
    return g;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Random polynomial in the given variables with small exponents and coefficients.
inline LaurentPoly random_poly(const std::vector<Var>& vars, int max_terms = 5, int emax = 3) {
    std::vector<daha::Term> ts;
    const int n = uniform(0, max_terms);
    for (int k = 0; k < n; ++k) {
        daha::Term t;
        for (Var v : vars) t.e[static_cast<int>(v)] = uniform(-emax, emax);
        int num = uniform(-9, 9);
        int den = uniform(1, 4);
        t.c = Rational(num, den);
        t.c.canonicalize();
        ts.push_back(t);
    }
    return LaurentPoly::from_terms(std::move(ts));
}

/// Independent product oracle: accumulate in an ordered map.
inline LaurentPoly map_product(const LaurentPoly& a, const LaurentPoly& b) {
    std::map<Exp, Rational> acc;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms()) acc[daha::exp_add(x.e, y.e)] += x.c * y.c;
    std::vector<daha::Term> ts;
    for (auto& [e, c] : acc)
        if (c != 0) ts.push_back({e, c});
    return LaurentPoly::from_sorted_terms(std::move(ts));
}

}  // namespace testgen
