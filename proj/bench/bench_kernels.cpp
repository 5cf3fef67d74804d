#include <benchmark/benchmark.h>

#include <random>

#include "daha/ring/kernels.hpp"

using namespace daha;

namespace {

LaurentPoly dense(int n, unsigned seed) {
    std::mt19937 g(seed);
    std::vector<Term> ts;
    for (int a = -n; a <= n; ++a)
        for (int b = -n; b <= n; ++b) {
            Term t;
            t.e[static_cast<int>(Var::q)] = a;
            t.e[static_cast<int>(Var::X)] = b;
            t.c = Rational(static_cast<long>(g() % 19) - 9, 1 + static_cast<long>(g() % 3));
            t.c.canonicalize();
            ts.push_back(t);
        }
    return LaurentPoly::from_terms(std::move(ts));
}

void BM_MulSerial(benchmark::State& st) {
    const auto a = dense(st.range(0), 1), b = dense(st.range(0), 2);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::mul_serial(a, b));
}

void BM_MulParallel(benchmark::State& st) {
    const auto a = dense(st.range(0), 1), b = dense(st.range(0), 2);
    for (auto _ : st) benchmark::DoNotOptimize(kernels::mul_parallel(a, b));
}

}  // namespace

BENCHMARK(BM_MulSerial)->Arg(4)->Arg(8)->Arg(12);
BENCHMARK(BM_MulParallel)->Arg(4)->Arg(8)->Arg(12);

BENCHMARK_MAIN();
