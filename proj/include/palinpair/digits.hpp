#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "palinpair/natural.hpp"

namespace palinpair {

using Digit = uint8_t;

// Base-10 digit sequence, least significant digit first. A valid digit
// string is nonempty, every element is in 0..9, and the most significant
// digit (back of the vector) is nonzero.
using DigitString = std::vector<Digit>;

bool is_valid_digit_string(std::span<const Digit> digits);

// Base-10 expansion of a positive integer. Throws std::domain_error for zero
// (there is no canonical leading digit to give it).
DigitString digits_of(const Natural& x);

// Inverse of digits_of. Throws std::invalid_argument on an invalid string.
Natural value_of(std::span<const Digit> digits);

// Value of the digit sequence read the other way around, i.e. with the most
// significant digit of `digits` in the ones place. Leading zeros of the
// reversed reading are fine; the result simply loses length.
Natural reversed_value(std::span<const Digit> digits);

// True iff the digit string of y is the element-wise reversal of the digit
// string of x. Forces equal digit counts, so x ending in 0 can never pair.
// Symmetric in (x, y). Both arguments must be >= 1.
bool is_reverse_pair(const Natural& x, const Natural& y);

}  // namespace palinpair
