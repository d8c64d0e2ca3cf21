#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "palinpair/natural.hpp"
#include "palinpair/pairs.hpp"

namespace palinpair {

struct SearchConfig {
    PairKind kind = PairKind::sum;
    Natural b_max;  // inclusive; values below 1 are treated as 1
    // Hard cap on a. When unset and trust_proven_bounds is true, a <= 19
    // (sum) / a <= 9 (diff); when unset and not trusting, a ranges over all
    // of 1..b.
    std::optional<uint64_t> a_max;
    bool trust_proven_bounds = true;
    // Number of disjoint b-range chunks; results are identical for any
    // value. Chunks run on up to `partitions` threads.
    unsigned partitions = 1;
    // Called with the cumulative candidate count roughly once per million
    // candidates, from worker threads (serialized). Purely diagnostic.
    std::function<void(uint64_t)> progress;
};

// Exhaustive scan: every pair with a <= b <= b_max (a within the configured
// range, a < b for diff) where pair_holds, sorted by (b, a). Every returned
// pair is re-verified through the bignum predicate before being reported.
std::vector<SolutionPair> brute_search(const SearchConfig& config);

// Hits for one fixed a with b in [b_lo, b_hi], both inclusive. Routes
// through the SIMD/scalar kernels inside their fast domain and falls back
// to the bignum predicate beyond it. For diff the range below a+1 is
// skipped (those b cannot hold).
std::vector<Natural> scan_b_range(uint64_t a, PairKind kind, const Natural& b_lo,
                                  const Natural& b_hi);

struct CheckReport {
    std::vector<SolutionPair> missing;  // family members brute force did not find
    std::vector<SolutionPair> extra;    // brute-force hits outside the families

    bool ok() const { return missing.empty() && extra.empty(); }
};

// Compares brute force against the closed-form solution set up to b_max.
CheckReport cross_check(PairKind kind, const Natural& b_max, unsigned partitions = 1);

}  // namespace palinpair
