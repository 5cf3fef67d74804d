#pragma once

#include <stdexcept>

#include "daha/ring/laurent.hpp"

namespace daha {

enum class ChebKind { S, T };

/// S_n or T_n as a polynomial in the variable x. S_{-1} = 0; T needs n >= 0.
LaurentPoly chebyshev(ChebKind kind, int n);

/// Evaluates S_n or T_n at an element of any ring with +, -, * and a unit.
/// a_{n+1} = z a_n - a_{n-1}; S starts from (S_{-1}, S_0) = (0, 1), T from (T_0, T_1) = (2, z).
template <class R>
R chebyshev_eval(ChebKind kind, int n, const R& z, const R& one) {
    if (kind == ChebKind::S) {
        if (n < -1) throw std::invalid_argument("S_n needs n >= -1");
        if (n == -1) return one - one;
        R prev = one - one, cur = one;
        for (int k = 0; k < n; ++k) {
            R next = z * cur - prev;
            prev = std::move(cur);
            cur = std::move(next);
        }
        return cur;
    }
    if (n < 0) throw std::invalid_argument("T_n needs n >= 0");
    R prev = one + one;
    if (n == 0) return prev;
    R cur = z;
    for (int k = 1; k < n; ++k) {
        R next = z * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

}  // namespace daha
