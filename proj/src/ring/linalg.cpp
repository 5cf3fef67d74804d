#include "daha/ring/linalg.hpp"

namespace daha {

namespace {

// Reduced row echelon form over the first `ncols` columns; returns pivot columns.
std::vector<std::size_t> rref(RMatrix& a, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < a.size(); ++col) {
        std::size_t r = rank;
        while (r < a.size() && a[r][col].is_zero()) ++r;
        if (r == a.size()) continue;
        std::swap(a[r], a[rank]);
        auto& prow = a[rank];
        const RatFuncQ inv = prow[col].inverse();
        for (auto& e : prow)
            if (!e.is_zero()) e = e * inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == rank || a[i][col].is_zero()) continue;
            const RatFuncQ f = a[i][col];
            for (std::size_t j = 0; j < prow.size(); ++j)
                if (!prow[j].is_zero()) a[i][j] = a[i][j] - f * prow[j];
        }
        pivots.push_back(col);
        ++rank;
    }
    return pivots;
}

}  // namespace

std::vector<RVector> nullspace(const RMatrix& m) {
    if (m.empty()) return {};
    const std::size_t n = m[0].size();
    RMatrix a = m;
    const auto pivots = rref(a, n);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<RVector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        RVector v(n, RatFuncQ(0L));
        v[f] = RatFuncQ(1L);
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
        RatFuncQ lead;
        for (const auto& e : v)
            if (!e.is_zero()) {
                lead = e;
                break;
            }
        const RatFuncQ inv = lead.inverse();
        for (auto& e : v) e = e * inv;
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<RVector> solve(const RMatrix& m, const RVector& rhs) {
    const std::size_t n = m.empty() ? 0 : m[0].size();
    RMatrix a = m;
    for (std::size_t i = 0; i < a.size(); ++i) a[i].push_back(rhs[i]);
    const auto pivots = rref(a, n);
    for (std::size_t i = pivots.size(); i < a.size(); ++i)
        if (!a[i][n].is_zero()) return std::nullopt;
    RVector x(n, RatFuncQ(0L));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][n];
    return x;
}

RVector mat_vec(const RMatrix& m, const RVector& v) {
    RVector out;
    out.reserve(m.size());
    for (const auto& row : m) {
        RatFuncQ acc;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!row[j].is_zero() && !v[j].is_zero()) acc += row[j] * v[j];
        out.push_back(acc);
    }
    return out;
}

}  // namespace daha
