#include "palinpair/carry_search.hpp"

#include <algorithm>
#include <stdexcept>

#include "palinpair/digits.hpp"
#include "palinpair/families.hpp"

namespace palinpair {

namespace {

void check_arguments(uint32_t a, std::size_t n) {
    if (a < 1 || a > kCarrySearchMaxA)
        throw std::domain_error("enumerate_exact_digits: a out of range");
    if (n < 1) throw std::domain_error("enumerate_exact_digits: n must be >= 1");
}

int64_t floor_div10(int64_t v) {
    return v >= 0 ? v / 10 : -((-v + 9) / 10);
}

// The constant folded into the low end of the digit process:
// a*N + t = rev(N) with t = -a^2 (sum) or +a^2 (diff).
int64_t low_constant(uint32_t a, PairKind kind) {
    int64_t a2 = static_cast<int64_t>(a) * a;
    return kind == PairKind::sum ? -a2 : a2;
}

struct CarryInterval {
    int64_t lo = 0;
    int64_t hi = 0;

    bool contains(int64_t v) const { return lo <= v && v <= hi; }
};

// intervals[i] encloses every carry that can enter digit position i+1
// (0-based index i = position i+1 ... index 0 is position 1, seeded with t).
std::vector<CarryInterval> carry_intervals(uint32_t a, int64_t t, std::size_t n) {
    std::vector<CarryInterval> out(n + 1);
    out[0] = {t, t};
    for (std::size_t i = 1; i <= n; ++i) {
        out[i].lo = floor_div10(out[i - 1].lo);
        out[i].hi = floor_div10(9ll * a + out[i - 1].hi);
    }
    return out;
}

// Two-ended walk over digit pairs (c_h, c_{n+1-h}), outside in.
//
// Low side: computing a*N + t digit by digit, the digit emitted at position
// h must equal c_{n+1-h}; the running carry is exact. High side: the digit
// emitted at position n+1-h must equal c_h and the carry leaving that
// position is pinned by the previous depth, which determines the carry
// required to ENTER the position exactly; a branch survives only while that
// requirement stays inside the reachable carry interval. The walk meets in
// the middle, where the low carry must equal the required high carry.
class CarryWalk {
public:
    CarryWalk(uint32_t a, PairKind kind, std::size_t n)
        : a_(a), n_(n), t_(low_constant(a, kind)),
          intervals_(carry_intervals(a, t_, n)), digits_(n, 0) {}

    std::vector<Natural> run() {
        descend(1, t_, 0);
        std::sort(results_.begin(), results_.end());
        return std::move(results_);
    }

private:
    uint32_t a_;
    std::size_t n_;
    int64_t t_;
    std::vector<CarryInterval> intervals_;
    DigitString digits_;  // c_1 .. c_n, filled from both ends
    std::vector<Natural> results_;

    // carry entering low position h; required carry entering high
    // position n+2-h (i.e. leaving position n+1-h).
    void descend(std::size_t h, int64_t low_carry, int64_t required_out) {
        std::size_t high_pos = n_ + 1 - h;  // the pair partner of position h
        if (h > high_pos) {
            // Even width, pointers crossed: the carry the low process sends
            // into position h must be exactly what the high side requires.
            if (low_carry == required_out) emit();
            return;
        }
        if (h == high_pos) {
            resolve_middle(h, low_carry, required_out);
            return;
        }

        int low_min = (h == 1) ? 1 : 0;   // c_1 >= 1: rev(N) keeps n digits
        int high_min = (h == 1) ? 1 : 0;  // c_n >= 1: N has n digits
        for (int c_low = low_min; c_low <= 9; ++c_low) {
            int64_t v = static_cast<int64_t>(a_) * c_low + low_carry;
            int64_t d = v - 10 * floor_div10(v);
            if (d < high_min) continue;
            int64_t next_low = floor_div10(v);
            if (!intervals_[h].contains(next_low))
                throw std::logic_error("carry walk: low carry left its interval");
            // digit at the mirrored high position is forced to d
            int64_t required_in = 10 * required_out + c_low -
                                  static_cast<int64_t>(a_) * d;
            if (!intervals_[high_pos - 1].contains(required_in)) continue;
            digits_[h - 1] = static_cast<Digit>(c_low);
            digits_[high_pos - 1] = static_cast<Digit>(d);
            descend(h + 1, next_low, required_in);
        }
    }

    void resolve_middle(std::size_t m, int64_t low_carry, int64_t required_out) {
        // a*c + low_carry = 10*required_out + c, i.e. c*(a-1) = 10*r - k.
        int64_t target = 10 * required_out - low_carry;
        int lo = (n_ == 1) ? 1 : 0;
        if (a_ == 1) {
            if (target != 0) return;
            for (int c = lo; c <= 9; ++c) {
                digits_[m - 1] = static_cast<Digit>(c);
                emit();
            }
            return;
        }
        int64_t denom = static_cast<int64_t>(a_) - 1;
        if (target % denom != 0) return;
        int64_t c = target / denom;
        if (c < lo || c > 9) return;
        digits_[m - 1] = static_cast<Digit>(c);
        emit();
    }

    void emit() { results_.push_back(value_of(digits_)); }
};

}  // namespace

std::vector<Natural> enumerate_exact_digits_scan(uint32_t a, PairKind kind, std::size_t n) {
    check_arguments(a, n);
    if (n > 9)
        throw std::domain_error("enumerate_exact_digits_scan: width too large for int64 scan");

    // coeff[j-1] = a*10^(j-1) - 10^(n-j); |coeff| <= 10^11, and the full sum
    // stays far below the int64 range for n <= 9, a <= 1000.
    std::vector<int64_t> coeff(n);
    int64_t pow = 1;
    std::vector<int64_t> pows(n);
    for (std::size_t i = 0; i < n; ++i) {
        pows[i] = pow;
        pow *= 10;
    }
    for (std::size_t j = 1; j <= n; ++j)
        coeff[j - 1] = static_cast<int64_t>(a) * pows[j - 1] - pows[n - j];
    int64_t target = kind == PairKind::sum ? static_cast<int64_t>(a) * a
                                           : -static_cast<int64_t>(a) * a;

    std::vector<Natural> out;
    uint64_t lo = n == 1 ? 1 : static_cast<uint64_t>(pows[n - 1]);
    uint64_t hi = static_cast<uint64_t>(pow);
    for (uint64_t value = lo; value < hi; ++value) {
        if (value % 10 == 0) continue;
        int64_t sum = 0;
        uint64_t rest = value;
        for (std::size_t j = 0; j < n; ++j) {
            sum += coeff[j] * static_cast<int64_t>(rest % 10);
            rest /= 10;
        }
        if (sum == target) out.emplace_back(value);
    }
    return out;
}

std::vector<Natural> enumerate_exact_digits_carry(uint32_t a, PairKind kind, std::size_t n) {
    check_arguments(a, n);
    return CarryWalk(a, kind, n).run();
}

std::vector<Natural> enumerate_exact_digits(uint32_t a, PairKind kind, std::size_t n) {
    check_arguments(a, n);
    if (n <= kDirectScanThreshold) return enumerate_exact_digits_scan(a, kind, n);
    return enumerate_exact_digits_carry(a, kind, n);
}

std::map<std::size_t, std::vector<Natural>> family_prediction(uint32_t a, PairKind kind,
                                                              std::size_t n_max) {
    std::map<std::size_t, std::vector<Natural>> out;
    Natural na(a);
    // Members with N of width <= n_max all have b below 10^(n_max+1).
    for (const SolutionPair& p : enumerate_theorem_solutions(kind, Natural::pow10(n_max + 1))) {
        if (p.a != na) continue;
        Natural n_value = kind == PairKind::sum ? p.a + p.b : p.b - p.a;
        std::size_t width = n_value.digit_count();
        if (width <= n_max) out[width].push_back(std::move(n_value));
    }
    for (auto& [width, list] : out) std::sort(list.begin(), list.end());
    return out;
}

SearchReport run_search_report(uint32_t a, PairKind kind, std::size_t n_max) {
    SearchReport report;
    report.a = a;
    report.kind = kind;
    auto predicted = family_prediction(a, kind, n_max);
    static const std::vector<Natural> kNone;
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::vector<Natural> found = enumerate_exact_digits(a, kind, n);
        auto it = predicted.find(n);
        const std::vector<Natural>& expected = it == predicted.end() ? kNone : it->second;
        if (found != expected)
            report.discrepancies.push_back({n, expected, found});
        if (!found.empty()) report.per_n.emplace(n, std::move(found));
    }
    return report;
}

std::vector<SearchReport> verify_theorem(PairKind kind, uint32_t a_max, std::size_t n_max) {
    if (a_max < 1) throw std::domain_error("verify_theorem: a_max must be >= 1");
    std::vector<SearchReport> out;
    out.reserve(a_max);
    for (uint32_t a = 1; a <= a_max; ++a)
        out.push_back(run_search_report(a, kind, n_max));
    return out;
}

}  // namespace palinpair
