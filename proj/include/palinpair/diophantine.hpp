#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "palinpair/digits.hpp"
#include "palinpair/natural.hpp"
#include "palinpair/pairs.hpp"

namespace palinpair {

struct ExtendedGcd {
    SignedInt g;  // positive
    SignedInt s;
    SignedInt t;  // s*p + t*q == g
};

// Throws std::domain_error when p == q == 0.
ExtendedGcd extended_gcd(const SignedInt& p, const SignedInt& q);

struct VarBounds {
    int64_t lo = 0;
    int64_t hi = 0;

    bool operator==(const VarBounds&) const = default;
};

// sum_i coeffs[i] * x_i = rhs with lo_i <= x_i <= hi_i.
struct LinearEquation {
    std::vector<SignedInt> coeffs;
    SignedInt rhs;
    std::vector<VarBounds> bounds;
};

using Assignment = std::vector<int64_t>;

// All in-bounds solutions of a two-variable equation, sorted
// lexicographically. Derived from the extended Euclidean general solution
// x = x0 + (beta/g)t, y = y0 - (alpha/g)t, with the parameter window clipped
// to the bounds box. Throws std::domain_error unless k == 2 with at least one
// nonzero coefficient.
std::vector<Assignment> solve_two_var(const LinearEquation& eq);

// Complete list of in-bounds solutions for any k >= 1, by depth-first
// enumeration with interval pruning on the reachable suffix sums. Sorted
// lexicographically.
std::vector<Assignment> solve_bounded(const LinearEquation& eq);

// A bounded-digit equation derived from the defining residual for fixed a,
// kind, and digit count: variables are the free digit positions (ascending),
// coefficient of position j is a*10^(j-1) - 10^(n-j), and the right side
// folds in s*a^2 and the fixed digits. Coefficients and right side are
// divided by their common gcd; when the gcd of the coefficients alone does
// not divide the right side the instance is flagged unsatisfiable.
struct DerivedEquation {
    LinearEquation eq;
    std::vector<std::size_t> positions;  // digit position j of each variable
    bool unsatisfiable_by_gcd = false;
};

// fixed maps digit positions (1 = least significant .. n = most significant)
// to digit values. Throws std::domain_error on invalid positions/digits or
// when no position is left free.
DerivedEquation derive_block_equation(const Natural& a, PairKind kind, std::size_t n,
                                      const std::map<std::size_t, int>& fixed);

// Renders "299*c3 + 20*c2 - 97*c1 = -9" style text, most significant
// position first.
std::string equation_to_string(const LinearEquation& eq,
                               const std::vector<std::size_t>& positions);

}  // namespace palinpair
