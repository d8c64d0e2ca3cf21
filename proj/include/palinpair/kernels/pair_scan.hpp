#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "palinpair/pairs.hpp"

namespace palinpair::kernels {

// Inner loop of the brute-force search: for fixed a, scan b in [b_lo, b_hi)
// and report every b where
//   x = b + a (sum) or b - a (diff),  y = a * b,
//   x % 10 != 0  and  reverse_digits(x) == y.
// That condition is exactly "digits of y are the reversal of digits of x":
// a nonzero last digit of x makes the reversal full length, and the value
// match then forces equal digit counts.
//
// The u32 kernels require  b_hi-1 + a <= 999'999'999  and
// a*(b_hi-1) <= UINT32_MAX; the u64 kernel requires
// b_hi-1 + a <= 999'999'999'999'999'999 and a*(b_hi-1) <= UINT64_MAX.
// Inside those domains reversal and product arithmetic cannot wrap.

void scan_pairs_u32_scalar(uint32_t a, PairKind kind, uint32_t b_lo, uint32_t b_hi,
                           std::vector<uint64_t>& hits);
void scan_pairs_u64_scalar(uint64_t a, PairKind kind, uint64_t b_lo, uint64_t b_hi,
                           std::vector<uint64_t>& hits);

#if defined(PALINPAIR_HAVE_AVX2)
// Eight 32-bit lanes per step; bit-identical results to the scalar kernel.
void scan_pairs_u32_avx2(uint32_t a, PairKind kind, uint32_t b_lo, uint32_t b_hi,
                         std::vector<uint64_t>& hits);
#endif

enum class Impl { scalar, avx2 };

// The implementation the dispatcher currently selects.
Impl active_impl();
bool avx2_supported();
// Testing hook: pin the dispatcher to one implementation (avx2 silently
// falls back to scalar when unsupported). nullopt restores auto-detection.
void force_impl(std::optional<Impl> impl);

// Largest b usable by the 32-bit lanes / the 64-bit scalar path for this a.
uint64_t u32_domain_limit(uint64_t a);
uint64_t u64_domain_limit(uint64_t a);

// Dispatching entry point. [b_lo, b_hi) must lie within the u64 domain for
// a (throws std::domain_error otherwise); internally routes the u32-safe
// prefix to the widest available kernel. For diff scans the caller must
// pass b_lo > a.
void scan_pairs(uint64_t a, PairKind kind, uint64_t b_lo, uint64_t b_hi,
                std::vector<uint64_t>& hits);

}  // namespace palinpair::kernels
