#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace palinpair {

// Arbitrary-precision nonnegative integer.
//
// Limbs are base-10^9 chunks stored least significant first; the top limb is
// nonzero (zero is the empty limb vector). The decimal limb base makes digit
// extraction a per-limb affair instead of a chain of long divisions.
class Natural {
public:
    static constexpr uint32_t kBase = 1'000'000'000u;
    static constexpr int kBaseDigits = 9;

    Natural() = default;
    Natural(uint64_t value);

    // Decimal digits only, no sign, no separators. Leading zeros are
    // accepted and normalized away. Throws std::invalid_argument otherwise.
    static Natural from_string(std::string_view text);
    static Natural pow10(std::size_t exponent);

    bool is_zero() const { return limbs_.empty(); }
    bool fits_uint64() const;
    uint64_t to_uint64() const;  // throws std::overflow_error if too large
    std::size_t digit_count() const;  // decimal digits; 0 for zero
    std::string to_string() const;

    // -1 / 0 / +1
    int compare(const Natural& rhs) const;
    bool operator==(const Natural& rhs) const { return limbs_ == rhs.limbs_; }
    std::strong_ordering operator<=>(const Natural& rhs) const;

    Natural& operator+=(const Natural& rhs);
    Natural& operator-=(const Natural& rhs);  // throws std::domain_error on underflow
    Natural& operator*=(const Natural& rhs) { *this = *this * rhs; return *this; }
    Natural& operator++();

    friend Natural operator+(Natural lhs, const Natural& rhs) { lhs += rhs; return lhs; }
    friend Natural operator-(Natural lhs, const Natural& rhs) { lhs -= rhs; return lhs; }
    friend Natural operator*(const Natural& lhs, const Natural& rhs);

    struct DivMod;
    // Exact Euclidean division; throws std::domain_error on zero divisor.
    static DivMod divmod(const Natural& num, const Natural& den);
    friend Natural operator/(const Natural& lhs, const Natural& rhs);
    friend Natural operator%(const Natural& lhs, const Natural& rhs);

    static Natural gcd(Natural x, Natural y);

    // Least-significant-first base-10^9 limbs (empty for zero).
    std::span<const uint32_t> limbs() const { return limbs_; }
    // Builds from base-10^9 limbs, least significant first; trailing zero
    // limbs are trimmed. Each limb must be < 10^9.
    static Natural from_limbs(std::vector<uint32_t> limbs);

private:
    std::vector<uint32_t> limbs_;

    void trim();
    Natural& mul_small(uint32_t factor);
    uint32_t divmod_small(uint32_t divisor);  // in place; returns remainder
};

struct Natural::DivMod {
    Natural quotient;
    Natural remainder;
};

inline Natural operator/(const Natural& lhs, const Natural& rhs) {
    return Natural::divmod(lhs, rhs).quotient;
}
inline Natural operator%(const Natural& lhs, const Natural& rhs) {
    return Natural::divmod(lhs, rhs).remainder;
}

// Arbitrary-precision signed integer (sign and magnitude). Zero is never
// negative.
class SignedInt {
public:
    SignedInt() = default;
    SignedInt(int64_t value);
    SignedInt(Natural magnitude) : mag_(std::move(magnitude)) {}
    SignedInt(Natural magnitude, bool negative)
        : mag_(std::move(magnitude)), negative_(negative && !mag_.is_zero()) {}

    static SignedInt from_string(std::string_view text);  // optional leading '-'

    bool is_zero() const { return mag_.is_zero(); }
    bool is_negative() const { return negative_; }
    const Natural& magnitude() const { return mag_; }
    SignedInt abs() const { return SignedInt(mag_); }
    SignedInt negated() const { return SignedInt(mag_, !negative_); }

    bool fits_int64() const;
    int64_t to_int64() const;  // throws std::overflow_error if out of range
    std::string to_string() const;

    int compare(const SignedInt& rhs) const;
    bool operator==(const SignedInt& rhs) const {
        return negative_ == rhs.negative_ && mag_ == rhs.mag_;
    }
    std::strong_ordering operator<=>(const SignedInt& rhs) const;

    SignedInt& operator+=(const SignedInt& rhs);
    SignedInt& operator-=(const SignedInt& rhs) { return *this += rhs.negated(); }
    friend SignedInt operator+(SignedInt lhs, const SignedInt& rhs) { lhs += rhs; return lhs; }
    friend SignedInt operator-(SignedInt lhs, const SignedInt& rhs) { lhs -= rhs; return lhs; }
    friend SignedInt operator*(const SignedInt& lhs, const SignedInt& rhs);

    struct DivMod;
    static DivMod divmod(const SignedInt& num, const SignedInt& den);
    friend SignedInt operator/(const SignedInt& lhs, const SignedInt& rhs);
    friend SignedInt operator%(const SignedInt& lhs, const SignedInt& rhs);
    static SignedInt floor_div(const SignedInt& num, const SignedInt& den);
    static SignedInt ceil_div(const SignedInt& num, const SignedInt& den);
    // True iff den divides num exactly (den nonzero).
    static bool divides(const SignedInt& den, const SignedInt& num);

    static SignedInt gcd(const SignedInt& x, const SignedInt& y);  // nonnegative

private:
    Natural mag_;
    bool negative_ = false;

    void normalize() {
        if (mag_.is_zero()) negative_ = false;
    }
};

struct SignedInt::DivMod {
    SignedInt quotient;   // truncated toward zero
    SignedInt remainder;  // same sign as the numerator
};

inline SignedInt operator/(const SignedInt& lhs, const SignedInt& rhs) {
    return SignedInt::divmod(lhs, rhs).quotient;
}
inline SignedInt operator%(const SignedInt& lhs, const SignedInt& rhs) {
    return SignedInt::divmod(lhs, rhs).remainder;
}

}  // namespace palinpair
