#include "daha/ring/kernels.hpp"

#include <algorithm>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace daha::kernels {

namespace {

struct Product {
    Exp e;
    std::uint32_t i, j;
};

std::vector<Term> mul_range(const std::vector<Term>& a, std::size_t lo, std::size_t hi,
                            const std::vector<Term>& b) {
    std::vector<Product> prods;
    prods.reserve((hi - lo) * b.size());
    for (std::size_t i = lo; i < hi; ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            prods.push_back({exp_add(a[i].e, b[j].e), static_cast<std::uint32_t>(i),
                             static_cast<std::uint32_t>(j)});
    std::sort(prods.begin(), prods.end(), [](const Product& x, const Product& y) { return x.e < y.e; });

    std::vector<Term> out;
    Rational acc, tmp;
    std::size_t k = 0;
    while (k < prods.size()) {
        const Exp& e = prods[k].e;
        mpq_mul(acc.get_mpq_t(), a[prods[k].i].c.get_mpq_t(), b[prods[k].j].c.get_mpq_t());
        std::size_t m = k + 1;
        for (; m < prods.size() && prods[m].e == e; ++m) {
            mpq_mul(tmp.get_mpq_t(), a[prods[m].i].c.get_mpq_t(), b[prods[m].j].c.get_mpq_t());
            acc += tmp;
        }
        if (sgn(acc) != 0) out.push_back({e, acc});
        k = m;
    }
    return out;
}

std::vector<Term> merge_sum(const std::vector<Term>& a, const std::vector<Term>& b) {
    return (LaurentPoly::from_sorted_terms(a) + LaurentPoly::from_sorted_terms(b)).terms();
}

}  // namespace

LaurentPoly mul_serial(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return LaurentPoly::from_sorted_terms(mul_range(a.terms(), 0, a.size(), b.terms()));
}

LaurentPoly mul_parallel(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
#ifdef _OPENMP
    const int threads = std::max(1, std::min<int>(omp_get_max_threads(), static_cast<int>(a.size())));
#else
    const int threads = 1;
#endif
    std::vector<std::vector<Term>> parts(threads);
    const auto& at = a.terms();
    const std::size_t n = at.size();
#pragma omp parallel for schedule(static) num_threads(threads)
    for (int t = 0; t < threads; ++t) {
        const std::size_t lo = n * t / threads, hi = n * (t + 1) / threads;
        parts[t] = mul_range(at, lo, hi, b.terms());
    }
    // Pairwise tree merge; each level merges independent pairs in parallel.
    for (std::size_t width = 1; width < parts.size(); width *= 2) {
        const auto pairs = static_cast<long>((parts.size() + 2 * width - 1) / (2 * width));
#pragma omp parallel for schedule(static)
        for (long p = 0; p < pairs; ++p) {
            const std::size_t l = static_cast<std::size_t>(p) * 2 * width, r = l + width;
            if (r < parts.size()) {
                parts[l] = merge_sum(parts[l], parts[r]);
                parts[r].clear();
            }
        }
    }
    return LaurentPoly::from_sorted_terms(std::move(parts[0]));
}

}  // namespace daha::kernels
