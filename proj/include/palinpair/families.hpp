#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "palinpair/pairs.hpp"

namespace palinpair {

// Identifies one member of the complete solution set:
//   sum2:      (2, 5*10^k - 3)                       index = k >= 0
//   sporadic:  (3, 24) at index 0, (9, 9) at index 1
//   diff_a:    (3, "147" + m blocks of "5247")       index = m >= 0
//   diff_b:    (3, "161247" + m blocks of "5247" + "387")  index = m >= 0
struct FamilyId {
    enum class Tag { sum2, sporadic, diff_a, diff_b };
    Tag tag = Tag::sum2;
    uint64_t index = 0;

    bool operator==(const FamilyId&) const = default;
};

const char* family_tag_name(FamilyId::Tag tag);
PairKind family_kind(FamilyId::Tag tag);

SolutionPair sum_family(uint64_t k);
std::vector<SolutionPair> sum_sporadics();
SolutionPair diff_family_a(uint64_t m);
SolutionPair diff_family_b(uint64_t m);
SolutionPair generate(FamilyId id);

// Every family member with b <= b_max, sorted ascending by (b, a), no
// duplicates.
std::vector<SolutionPair> enumerate_theorem_solutions(PairKind kind, const Natural& b_max);

// Inverse of the generators: the unique FamilyId producing (a, b, kind), if
// any. The candidate index is reconstructed from the digit length, so this
// stays cheap for thousand-digit inputs.
std::optional<FamilyId> classify(const Natural& a, const Natural& b, PairKind kind);

}  // namespace palinpair
