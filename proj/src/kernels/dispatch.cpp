#include "palinpair/kernels/pair_scan.hpp"

#include <algorithm>
#include <stdexcept>

namespace palinpair::kernels {

namespace {

std::optional<Impl> g_forced;

bool detect_avx2() {
#if defined(PALINPAIR_HAVE_AVX2)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

void run_u32(uint32_t a, PairKind kind, uint32_t b_lo, uint32_t b_hi,
             std::vector<uint64_t>& hits) {
#if defined(PALINPAIR_HAVE_AVX2)
    if (active_impl() == Impl::avx2) {
        scan_pairs_u32_avx2(a, kind, b_lo, b_hi, hits);
        return;
    }
#endif
    scan_pairs_u32_scalar(a, kind, b_lo, b_hi, hits);
}

}  // namespace

bool avx2_supported() {
    static const bool supported = detect_avx2();
    return supported;
}

void force_impl(std::optional<Impl> impl) { g_forced = impl; }

Impl active_impl() {
    if (g_forced) {
        if (*g_forced == Impl::avx2 && !avx2_supported()) return Impl::scalar;
        return *g_forced;
    }
    return avx2_supported() ? Impl::avx2 : Impl::scalar;
}

uint64_t u32_domain_limit(uint64_t a) {
    constexpr uint64_t kMaxX = 999'999'999;  // 9 digits: reversal stays in u32
    if (a == 0 || a >= kMaxX) return 0;
    return std::min(kMaxX - a, static_cast<uint64_t>(UINT32_MAX) / a);
}

uint64_t u64_domain_limit(uint64_t a) {
    constexpr uint64_t kMaxX = 999'999'999'999'999'999ull;  // 18 digits
    if (a == 0 || a >= kMaxX) return 0;
    return std::min(kMaxX - a, UINT64_MAX / a);
}

void scan_pairs(uint64_t a, PairKind kind, uint64_t b_lo, uint64_t b_hi,
                std::vector<uint64_t>& hits) {
    if (a == 0) throw std::domain_error("scan_pairs: a must be positive");
    if (b_hi <= b_lo) return;
    if (b_hi - 1 > u64_domain_limit(a))
        throw std::domain_error("scan_pairs: range exceeds the u64 fast domain");
    if (kind == PairKind::diff && b_lo <= a)
        throw std::domain_error("scan_pairs: diff scan requires b_lo > a");

    uint64_t split = std::min(b_hi, u32_domain_limit(a) + 1);
    if (split > b_lo) {
        run_u32(static_cast<uint32_t>(a), kind, static_cast<uint32_t>(b_lo),
                static_cast<uint32_t>(split), hits);
    }
    uint64_t tail_lo = std::max(b_lo, split);
    if (b_hi > tail_lo) scan_pairs_u64_scalar(a, kind, tail_lo, b_hi, hits);
}

}  // namespace palinpair::kernels
