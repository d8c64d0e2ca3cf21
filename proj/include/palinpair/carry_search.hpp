#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "palinpair/natural.hpp"
#include "palinpair/pairs.hpp"

namespace palinpair {

// Largest a the search accepts. Emptiness is expected well before this; the
// ceiling exists so tests can confirm the a-bounds empirically instead of
// having them baked in.
inline constexpr uint32_t kCarrySearchMaxA = 1000;

// Widths at or below this use the direct residual scan; the two-ended carry
// walk takes over beyond it, where the a^2 tail no longer brushes against
// the meeting point of the two digit pointers.
inline constexpr std::size_t kDirectScanThreshold = 6;

// Every N with exactly n digits, nonzero last digit, satisfying
//   a*N - a^2 = rev(N)   (sum;  b = N - a)
//   a*N + a^2 = rev(N)   (diff; b = N + a)
// equivalently residual(a, digits_of(N), kind) == 0 with c_1 >= 1.
// Sorted ascending. Complete and sound for any 1 <= a <= kCarrySearchMaxA.
std::vector<Natural> enumerate_exact_digits(uint32_t a, PairKind kind, std::size_t n);

// Direct scan over all n-digit values via an int64 evaluation of the
// residual coefficient sum. Only for n <= 9; serves as the independent
// route the carry walk is checked against.
std::vector<Natural> enumerate_exact_digits_scan(uint32_t a, PairKind kind, std::size_t n);

// The two-ended carry walk itself, usable at every width.
std::vector<Natural> enumerate_exact_digits_carry(uint32_t a, PairKind kind, std::size_t n);

struct Discrepancy {
    std::size_t n = 0;
    std::vector<Natural> expected;  // family prediction
    std::vector<Natural> found;     // search result
};

struct SearchReport {
    uint32_t a = 0;
    PairKind kind = PairKind::sum;
    std::map<std::size_t, std::vector<Natural>> per_n;  // nonempty widths only
    std::vector<Discrepancy> discrepancies;
};

// Family members with this a, mapped to N = b + a (sum) or N = b - a (diff)
// and grouped by digit count.
std::map<std::size_t, std::vector<Natural>> family_prediction(uint32_t a, PairKind kind,
                                                              std::size_t n_max);

// Runs the search for every width up to n_max and compares against the
// family prediction.
SearchReport run_search_report(uint32_t a, PairKind kind, std::size_t n_max);

// One report per a in 1..a_max. The classification holds on the searched
// rectangle iff every report has an empty discrepancy list.
std::vector<SearchReport> verify_theorem(PairKind kind, uint32_t a_max, std::size_t n_max);

}  // namespace palinpair
