/**
 * @file appendix.hpp
 * @brief Reference 3-variable polynomials (raw convention, t = t1, v = t2 - t2^-1)
 * and their (t-1)-expansions at v = 0, as typeset LaTeX, plus a parser for the
 * t, v notation used by render_tv.
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "daha/ring/laurent.hpp"

namespace daha {

struct AppendixTable {
    std::string knot;
    int n = 0;
    std::string latex;
};
const std::vector<AppendixTable>& appendix_polynomials();

struct AppendixExpansion {
    std::string knot;
    int n = 0;
    std::vector<std::string> coefficients;  // (t-1)^0, (t-1)^1, ...
};
const std::vector<AppendixExpansion>& appendix_expansions();

/// Parses text or LaTeX in q, t, v (also t1, t2). A leading "J_n =" is skipped,
/// as are \Big, line breaks and thin spaces. The result keeps v in the t2 slot.
LaurentPoly parse_tv(std::string_view src);
/// v -> t2 - t2^-1.
LaurentPoly expand_v(const LaurentPoly& f);

}  // namespace daha
