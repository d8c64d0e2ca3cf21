#include "palinpair/families.hpp"

#include <algorithm>
#include <stdexcept>

namespace palinpair {

namespace {

const Natural kThree(3);

// "5247" repeated m times at block offsets shift, shift+4, ..., i.e.
// 5247 * sum_{i=0..m-1} 10^(4i+shift).
Natural repeated_5247(uint64_t m, uint64_t shift) {
    Natural acc;
    for (uint64_t i = 0; i < m; ++i)
        acc += Natural(5247) * Natural::pow10(4 * i + shift);
    return acc;
}

}  // namespace

const char* family_tag_name(FamilyId::Tag tag) {
    switch (tag) {
        case FamilyId::Tag::sum2: return "sum2";
        case FamilyId::Tag::sporadic: return "sporadic";
        case FamilyId::Tag::diff_a: return "diffA";
        case FamilyId::Tag::diff_b: return "diffB";
    }
    return "?";
}

PairKind family_kind(FamilyId::Tag tag) {
    return (tag == FamilyId::Tag::sum2 || tag == FamilyId::Tag::sporadic)
               ? PairKind::sum
               : PairKind::diff;
}

SolutionPair sum_family(uint64_t k) {
    Natural b = Natural(5) * Natural::pow10(k) - Natural(3);
    return {Natural(2), std::move(b), PairKind::sum};
}

std::vector<SolutionPair> sum_sporadics() {
    return {{Natural(3), Natural(24), PairKind::sum},
            {Natural(9), Natural(9), PairKind::sum}};
}

SolutionPair diff_family_a(uint64_t m) {
    if (m == 0) return {kThree, Natural(147), PairKind::diff};
    Natural b = Natural(147) * Natural::pow10(4 * m) + repeated_5247(m, 0);
    return {kThree, std::move(b), PairKind::diff};
}

SolutionPair diff_family_b(uint64_t m) {
    if (m == 0) return {kThree, Natural(161247387), PairKind::diff};
    Natural b = Natural(161247) * Natural::pow10(4 * m + 3) + repeated_5247(m, 3) +
                Natural(387);
    return {kThree, std::move(b), PairKind::diff};
}

SolutionPair generate(FamilyId id) {
    switch (id.tag) {
        case FamilyId::Tag::sum2:
            return sum_family(id.index);
        case FamilyId::Tag::sporadic: {
            auto sporadics = sum_sporadics();
            if (id.index >= sporadics.size())
                throw std::domain_error("generate: sporadic index out of range");
            return sporadics[id.index];
        }
        case FamilyId::Tag::diff_a:
            return diff_family_a(id.index);
        case FamilyId::Tag::diff_b:
            return diff_family_b(id.index);
    }
    throw std::domain_error("generate: bad family tag");
}

std::vector<SolutionPair> enumerate_theorem_solutions(PairKind kind, const Natural& b_max) {
    std::vector<SolutionPair> out;
    if (kind == PairKind::sum) {
        for (uint64_t k = 0;; ++k) {
            SolutionPair p = sum_family(k);
            if (p.b > b_max) break;
            out.push_back(std::move(p));
        }
        for (SolutionPair& p : sum_sporadics()) {
            if (p.b <= b_max) out.push_back(std::move(p));
        }
    } else {
        for (uint64_t m = 0;; ++m) {
            SolutionPair p = diff_family_a(m);
            if (p.b > b_max) break;
            out.push_back(std::move(p));
        }
        for (uint64_t m = 0;; ++m) {
            SolutionPair p = diff_family_b(m);
            if (p.b > b_max) break;
            out.push_back(std::move(p));
        }
    }
    std::sort(out.begin(), out.end(), pair_less);
    return out;
}

std::optional<FamilyId> classify(const Natural& a, const Natural& b, PairKind kind) {
    if (a.is_zero() || b.is_zero()) return std::nullopt;
    if (kind == PairKind::sum) {
        if (a == Natural(3) && b == Natural(24))
            return FamilyId{FamilyId::Tag::sporadic, 0};
        if (a == Natural(9) && b == Natural(9))
            return FamilyId{FamilyId::Tag::sporadic, 1};
        if (a == Natural(2)) {
            // b = 5*10^k - 3 iff b+3 renders as '5' followed by k zeros.
            std::string s = (b + Natural(3)).to_string();
            if (s.front() == '5' &&
                std::all_of(s.begin() + 1, s.end(), [](char c) { return c == '0'; }))
                return FamilyId{FamilyId::Tag::sum2, s.size() - 1};
        }
        return std::nullopt;
    }
    if (a != kThree) return std::nullopt;
    std::size_t len = b.digit_count();
    if (len >= 3 && (len - 3) % 4 == 0) {
        uint64_t m = (len - 3) / 4;
        if (b == diff_family_a(m).b) return FamilyId{FamilyId::Tag::diff_a, m};
    }
    if (len >= 9 && (len - 9) % 4 == 0) {
        uint64_t m = (len - 9) / 4;
        if (b == diff_family_b(m).b) return FamilyId{FamilyId::Tag::diff_b, m};
    }
    return std::nullopt;
}

}  // namespace palinpair
