#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "palinpair/digits.hpp"
#include "palinpair/natural.hpp"

namespace palinpair {

// Which of the two problems a pair belongs to: b+a paired with a*b, or b-a
// paired with a*b.
enum class PairKind { sum, diff };

const char* to_string(PairKind kind);
std::optional<PairKind> parse_pair_kind(std::string_view text);

struct SolutionPair {
    Natural a;
    Natural b;
    PairKind kind = PairKind::sum;

    bool operator==(const SolutionPair& rhs) const {
        return kind == rhs.kind && a == rhs.a && b == rhs.b;
    }
};

// Orders by (b, a); used everywhere deterministic output is required.
bool pair_less(const SolutionPair& lhs, const SolutionPair& rhs);

// sum:  digits of a*b are the reverse of the digits of a+b.
// diff: b > a and digits of a*b are the reverse of the digits of b-a.
// A nonpositive difference yields false, not an error. Throws
// std::domain_error if a or b is zero.
bool pair_holds(const Natural& a, const Natural& b, PairKind kind);

// Exact value of
//   sum_{j=1..n} (a*10^(j-1) - 10^(n-j)) * c_j  -  s * a^2
// with s = +1 for sum and s = -1 for diff, where c is a digit string of
// length n (least significant first). Zero together with c_1 >= 1
// characterizes solutions with N = value_of(c) and b = N -+ a.
SignedInt residual(const Natural& a, std::span<const Digit> c, PairKind kind);

}  // namespace palinpair
