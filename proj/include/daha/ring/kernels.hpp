#pragma once

#include <cstddef>

#include "daha/ring/laurent.hpp"

namespace daha::kernels {

/// Reference product: forms all pairwise exponent sums, sorts, accumulates runs.
LaurentPoly mul_serial(const LaurentPoly& a, const LaurentPoly& b);

/// OpenMP product: each thread multiplies a slice of `a` by `b` with the serial
/// kernel, then the partial results are merged pairwise.
LaurentPoly mul_parallel(const LaurentPoly& a, const LaurentPoly& b);

/// Term-count product above which operator* dispatches to mul_parallel
/// (only when more than one OpenMP thread is available).
inline constexpr std::size_t kParallelWorkThreshold = 1u << 16;

}  // namespace daha::kernels
