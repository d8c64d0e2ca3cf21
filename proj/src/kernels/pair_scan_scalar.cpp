#include "palinpair/kernels/pair_scan.hpp"

namespace palinpair::kernels {

void scan_pairs_u32_scalar(uint32_t a, PairKind kind, uint32_t b_lo, uint32_t b_hi,
                           std::vector<uint64_t>& hits) {
    for (uint32_t b = b_lo; b < b_hi; ++b) {
        uint32_t x = kind == PairKind::sum ? b + a : b - a;
        if (x % 10 == 0) continue;
        uint32_t y = a * b;
        uint32_t rev = 0;
        for (uint32_t cur = x; cur != 0; cur /= 10) rev = rev * 10 + cur % 10;
        if (rev == y) hits.push_back(b);
    }
}

void scan_pairs_u64_scalar(uint64_t a, PairKind kind, uint64_t b_lo, uint64_t b_hi,
                           std::vector<uint64_t>& hits) {
    for (uint64_t b = b_lo; b < b_hi; ++b) {
        uint64_t x = kind == PairKind::sum ? b + a : b - a;
        if (x % 10 == 0) continue;
        uint64_t y = a * b;
        uint64_t rev = 0;
        for (uint64_t cur = x; cur != 0; cur /= 10) rev = rev * 10 + cur % 10;
        if (rev == y) hits.push_back(b);
    }
}

}  // namespace palinpair::kernels
