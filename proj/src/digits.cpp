#include "palinpair/digits.hpp"

#include <algorithm>
#include <stdexcept>

namespace palinpair {

bool is_valid_digit_string(std::span<const Digit> digits) {
    if (digits.empty()) return false;
    if (digits.back() == 0) return false;
    return std::all_of(digits.begin(), digits.end(), [](Digit d) { return d <= 9; });
}

DigitString digits_of(const Natural& x) {
    if (x.is_zero()) throw std::domain_error("digits_of: zero has no digit string here");
    DigitString out;
    auto limbs = x.limbs();
    out.reserve(limbs.size() * Natural::kBaseDigits);
    for (uint32_t limb : limbs) {
        for (int i = 0; i < Natural::kBaseDigits; ++i) {
            out.push_back(static_cast<Digit>(limb % 10));
            limb /= 10;
        }
    }
    while (out.back() == 0) out.pop_back();
    return out;
}

namespace {

// Packs digits (least significant first) into base-10^9 limbs. Leading zero
// digits are harmless; Natural trims the resulting empty top limbs.
Natural accumulate_digits_lsf(std::span<const Digit> digits) {
    std::vector<uint32_t> limbs;
    limbs.reserve(digits.size() / Natural::kBaseDigits + 1);
    for (std::size_t start = 0; start < digits.size(); start += Natural::kBaseDigits) {
        std::size_t stop = std::min(digits.size(), start + Natural::kBaseDigits);
        uint32_t limb = 0;
        for (std::size_t i = stop; i-- > start;) limb = limb * 10 + digits[i];
        limbs.push_back(limb);
    }
    return Natural::from_limbs(std::move(limbs));
}

}  // namespace

Natural value_of(std::span<const Digit> digits) {
    if (!is_valid_digit_string(digits))
        throw std::invalid_argument("value_of: invalid digit string");
    return accumulate_digits_lsf(digits);
}

Natural reversed_value(std::span<const Digit> digits) {
    std::vector<Digit> rev(digits.rbegin(), digits.rend());
    return accumulate_digits_lsf(rev);
}

bool is_reverse_pair(const Natural& x, const Natural& y) {
    if (x.is_zero() || y.is_zero())
        throw std::domain_error("is_reverse_pair: arguments must be positive");
    DigitString dx = digits_of(x);
    DigitString dy = digits_of(y);
    if (dx.size() != dy.size()) return false;
    std::size_t n = dx.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (dy[i] != dx[n - 1 - i]) return false;
    }
    return true;
}

}  // namespace palinpair
