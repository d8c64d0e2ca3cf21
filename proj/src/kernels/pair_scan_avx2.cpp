#include "palinpair/kernels/pair_scan.hpp"

#if defined(PALINPAIR_HAVE_AVX2)

#include <immintrin.h>

namespace palinpair::kernels {

namespace {

// High 32 bits of the 8 lane-wise 32x32 products.
inline __m256i mulhi_epu32(__m256i v, __m256i m) {
    __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(v, m), 32);
    __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(v, 32), _mm256_srli_epi64(m, 32));
    odd = _mm256_and_si256(odd, _mm256_set1_epi64x(static_cast<long long>(0xFFFFFFFF00000000ull)));
    return _mm256_blend_epi32(even, odd, 0b10101010);
}

// floor(v / 10) for any uint32 lane: multiply by ceil(2^35/10), shift 35.
inline __m256i div10_epu32(__m256i v) {
    const __m256i magic = _mm256_set1_epi32(static_cast<int>(0xCCCCCCCDu));
    return _mm256_srli_epi32(mulhi_epu32(v, magic), 3);
}

}  // namespace

void scan_pairs_u32_avx2(uint32_t a, PairKind kind, uint32_t b_lo, uint32_t b_hi,
                         std::vector<uint64_t>& hits) {
    const __m256i va = _mm256_set1_epi32(static_cast<int>(a));
    const __m256i ten = _mm256_set1_epi32(10);
    const __m256i zero = _mm256_setzero_si256();
    const __m256i ramp = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);

    uint32_t b = b_lo;
    for (; b_hi - b >= 8; b += 8) {
        __m256i vb = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(b)), ramp);
        __m256i x = kind == PairKind::sum ? _mm256_add_epi32(vb, va)
                                          : _mm256_sub_epi32(vb, va);
        __m256i y = _mm256_mullo_epi32(va, vb);

        // Reverse the (at most 9) digits of x lane-wise; lanes whose value
        // is exhausted stop appending.
        __m256i rev = zero;
        __m256i cur = x;
        __m256i low_digit_zero = zero;
        for (int step = 0; step < 9; ++step) {
            __m256i q = div10_epu32(cur);
            __m256i d = _mm256_sub_epi32(cur, _mm256_mullo_epi32(q, ten));
            if (step == 0) low_digit_zero = _mm256_cmpeq_epi32(d, zero);
            __m256i done = _mm256_cmpeq_epi32(cur, zero);
            __m256i grown = _mm256_add_epi32(_mm256_mullo_epi32(rev, ten), d);
            rev = _mm256_blendv_epi8(grown, rev, done);
            cur = q;
        }

        __m256i hit = _mm256_andnot_si256(low_digit_zero, _mm256_cmpeq_epi32(rev, y));
        int mask = _mm256_movemask_ps(_mm256_castsi256_ps(hit));
        while (mask != 0) {
            int lane = __builtin_ctz(static_cast<unsigned>(mask));
            hits.push_back(static_cast<uint64_t>(b) + static_cast<uint64_t>(lane));
            mask &= mask - 1;
        }
    }
    if (b < b_hi) scan_pairs_u32_scalar(a, kind, b, b_hi, hits);
}

}  // namespace palinpair::kernels

#endif  // PALINPAIR_HAVE_AVX2
