// Acceptance suite: runs every classification/verification criterion at its
// stated tolerance (all exact) and prints one PASS/FAIL line per criterion.
// Exit status is the number of failed criteria.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "palinpair/carry_search.hpp"
#include "palinpair/diophantine.hpp"
#include "palinpair/families.hpp"
#include "palinpair/oracle.hpp"

using namespace palinpair;

namespace {

std::string g_cli;
int g_failures = 0;

void report(int number, const char* title, bool pass, double seconds,
            const std::string& detail = "") {
    std::printf("%s  criterion %d: %s  (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", number,
                title, seconds, detail.empty() ? "" : "  -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

void run(int number, const char* title, const std::function<bool(std::string&)>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                         .count();
    report(number, title, pass, seconds, detail);
}

int cli_exit_code(const std::string& args) {
    std::string cmd = g_cli + " " + args + " >/dev/null 2>/dev/null";
    int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<std::pair<uint64_t, uint64_t>> as_u64(const std::vector<SolutionPair>& pairs) {
    std::vector<std::pair<uint64_t, uint64_t>> out;
    for (const auto& p : pairs) out.emplace_back(p.a.to_uint64(), p.b.to_uint64());
    return out;
}

// ---- criterion 1: sum classification up to 1e6 ---------------------------

bool criterion1(std::string& detail) {
    if (cli_exit_code("classify-check --kind sum --max-b 1000000") != 0) {
        detail = "classify-check exited nonzero";
        return false;
    }
    SearchConfig config;
    config.kind = PairKind::sum;
    config.b_max = Natural(1000000);
    auto found = as_u64(brute_search(config));
    std::set<std::pair<uint64_t, uint64_t>> expected{
        {2, 2}, {3, 24}, {2, 47}, {9, 9}, {2, 497}, {2, 4997}, {2, 49997}, {2, 499997}};
    if (std::set(found.begin(), found.end()) != expected) {
        detail = "brute-force set differs";
        return false;
    }
    return true;
}

// ---- criterion 2: diff classification up to 1e7 ---------------------------

bool criterion2(std::string& detail) {
    if (cli_exit_code("classify-check --kind diff --max-b 10000000") != 0) {
        detail = "classify-check exited nonzero";
        return false;
    }
    if (cli_exit_code("classify-check --kind diff --max-b 10000000 --jobs 8") != 0) {
        detail = "classify-check with --jobs 8 exited nonzero";
        return false;
    }
    SearchConfig config;
    config.kind = PairKind::diff;
    config.b_max = Natural(10000000);
    auto found = as_u64(brute_search(config));
    std::set<std::pair<uint64_t, uint64_t>> expected{{3, 147}, {3, 1475247}};
    if (std::set(found.begin(), found.end()) != expected) {
        detail = "brute-force set differs";
        return false;
    }
    return true;
}

// ---- criteria 3 and 4: carry-search vs families ---------------------------

std::string describe_discrepancies(const std::vector<SearchReport>& reports) {
    std::string out;
    for (const SearchReport& r : reports) {
        for (const Discrepancy& d : r.discrepancies) {
            out += "a=" + std::to_string(r.a) + " n=" + std::to_string(d.n) + " found {";
            for (const Natural& v : d.found) out += " " + v.to_string();
            out += " } vs families {";
            for (const Natural& v : d.expected) out += " " + v.to_string();
            out += " };";
        }
    }
    return out;
}

bool criterion3(std::string& detail) {
    auto reports = verify_theorem(PairKind::sum, 19, 25);
    for (const SearchReport& r : reports) {
        if (!r.discrepancies.empty()) {
            detail = describe_discrepancies(reports);
            return false;
        }
        if (r.a == 2) {
            if (r.per_n.size() != 25) {
                detail = "a=2 must hit every width";
                return false;
            }
            for (const auto& [n, values] : r.per_n) {
                Natural expected = Natural(5) * Natural::pow10(n - 1) - Natural(1);
                if (values != std::vector<Natural>{expected}) {
                    detail = "a=2 width " + std::to_string(n) + " differs";
                    return false;
                }
            }
        } else if (r.a == 3 || r.a == 9) {
            if (r.per_n.size() != 1 || r.per_n.count(2) == 0) {
                detail = "a=" + std::to_string(r.a) + " must hit width 2 only";
                return false;
            }
        } else if (!r.per_n.empty()) {
            detail = "unexpected nonempty cell at a=" + std::to_string(r.a);
            return false;
        }
    }
    return true;
}

bool criterion4(std::string& detail) {
    auto reports = verify_theorem(PairKind::diff, 9, 30);
    bool clean = true;
    for (const SearchReport& r : reports)
        if (!r.discrepancies.empty()) clean = false;
    if (!clean) {
        detail = "search exceeds the closed-form families: " + describe_discrepancies(reports);
        return false;
    }
    return true;
}

// ---- criterion 5: family soundness to ~800 digits --------------------------

bool criterion5(std::string& detail) {
    for (uint64_t index = 0; index <= 200; ++index) {
        SolutionPair s = sum_family(index);
        SolutionPair da = diff_family_a(index);
        SolutionPair db = diff_family_b(index);
        if (!pair_holds(s.a, s.b, PairKind::sum) || !pair_holds(da.a, da.b, PairKind::diff) ||
            !pair_holds(db.a, db.b, PairKind::diff)) {
            detail = "family member failed at index " + std::to_string(index);
            return false;
        }
    }
    return true;
}

// ---- criterion 6: the Diophantine golden set -------------------------------

bool criterion6(std::string& detail) {
    struct Instance {
        const char* name;
        std::vector<int64_t> coeffs;
        int64_t rhs;
        std::vector<VarBounds> bounds;
        std::vector<Assignment> expected;
    };
    std::vector<VarBounds> ends2{{1, 9}, {1, 9}};
    auto box = [](std::size_t k) { return std::vector<VarBounds>(k, VarBounds{0, 9}); };
    std::vector<Instance> instances = {
        {"29c2-7c1=9", {29, -7}, 9, ends2, {{2, 7}}},
        {"89c2-c1=81", {89, -1}, 81, ends2, {{1, 8}}},
        {"69c2-3c1=49", {69, -3}, 49, ends2, {}},
        {"299c3+20c2-97c1=-9", {299, 20, -97}, -9, {{1, 9}, {0, 9}, {1, 9}}, {{1, 4, 4}}},
        {"29x-7y=100", {29, -7}, 100, box(2), {}},
        // Printed as rhs 100 in the source analysis; the exact block
        // derivation gives 1000 (the derive path below pins that), and the
        // emptiness claim belongs to the derived instance.
        {"299x+20y-97z=1000", {299, 20, -97}, 1000, box(3), {}},
        {"2999w+290x-70y-997z=10000", {2999, 290, -70, -997}, 10000, box(4), {}},
        {"29x-7y=98", {29, -7}, 98, box(2), {}},
        {"299x+20y-97z=998", {299, 20, -97}, 998, box(3), {}},
        {"2999w+290x-70y-997z=9998", {2999, 290, -70, -997}, 9998, box(4), {}},
        {"29999v+2990w+200x-970y-9997z=100000",
         {29999, 2990, 200, -970, -9997}, 100000, box(5), {{5, 2, 4, 7, 5}}},
        {"29999v+2990w+200x-970y-9997z=99998",
         {29999, 2990, 200, -970, -9997}, 99998, box(5), {{4, 7, 5, 2, 4}}},
    };
    for (const Instance& inst : instances) {
        LinearEquation eq;
        for (int64_t c : inst.coeffs) eq.coeffs.emplace_back(c);
        eq.rhs = SignedInt(inst.rhs);
        eq.bounds = inst.bounds;
        std::vector<Assignment> got = solve_bounded(eq);
        if (got != inst.expected) {
            detail = std::string("instance ") + inst.name + " differs";
            return false;
        }
        if (eq.coeffs.size() == 2 && solve_two_var(eq) != got) {
            detail = std::string("two-var route disagrees on ") + inst.name;
            return false;
        }
    }
    // The nine-digit block derivation produces the corrected instance.
    auto derived = derive_block_equation(Natural(3), PairKind::diff, 9,
                                         {{9, 1}, {8, 4}, {7, 7}, {3, 2}, {2, 4}, {1, 4}});
    if (equation_to_string(derived.eq, derived.positions) != "299*c6 + 20*c5 - 97*c4 = 1000" ||
        !solve_bounded(derived.eq).empty()) {
        detail = "nine-digit block derivation differs";
        return false;
    }
    return true;
}

// ---- criterion 7: residual <=> predicate equivalence ----------------------

bool criterion7(std::string& detail) {
    for (uint64_t a = 1; a <= 19; ++a) {
        Natural na(a);
        for (uint64_t b = 1; b <= 100000; ++b) {
            Natural nb(b);
            DigitString c = digits_of(na + nb);
            bool zero = residual(na, c, PairKind::sum).is_zero() && c[0] >= 1;
            if (zero != pair_holds(na, nb, PairKind::sum)) {
                detail = "sum mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b);
                return false;
            }
        }
    }
    for (uint64_t a = 1; a <= 9; ++a) {
        Natural na(a);
        for (uint64_t b = a + 1; b <= 100000; ++b) {
            Natural nb(b);
            DigitString c = digits_of(nb - na);
            bool zero = residual(na, c, PairKind::diff).is_zero() && c[0] >= 1;
            if (zero != pair_holds(na, nb, PairKind::diff)) {
                detail = "diff mismatch at a=" + std::to_string(a) + " b=" + std::to_string(b);
                return false;
            }
        }
    }
    return true;
}

// ---- criterion 8: oracle vs carry-search cross-validation ------------------

bool criterion8(std::string& detail) {
    for (uint32_t a = 1; a <= 19; ++a) {
        for (PairKind kind : {PairKind::sum, PairKind::diff}) {
            for (std::size_t n = 1; n <= 7; ++n) {
                auto scan = enumerate_exact_digits_scan(a, kind, n);
                if (enumerate_exact_digits(a, kind, n) != scan ||
                    enumerate_exact_digits_carry(a, kind, n) != scan) {
                    detail = "mismatch at a=" + std::to_string(a) + " kind=" +
                             to_string(kind) + " n=" + std::to_string(n);
                    return false;
                }
            }
        }
    }
    return true;
}

// ---- criterion 9: boundary windows where the leading digit bumps -----------

bool criterion9(std::string& detail) {
    for (uint64_t a : {2, 3, 4, 5, 7, 9}) {
        Natural na(a);
        for (std::size_t n = 2; n <= 7; ++n) {
            for (uint64_t lead = 1; lead <= 8; ++lead) {
                // b in [10^(n-1)*(lead+1) - a, 10^(n-1)*(lead+1) - 1]
                Natural top = Natural::pow10(n - 1) * Natural(lead + 1);
                for (uint64_t offset = 1; offset <= a; ++offset) {
                    Natural b = top - Natural(offset);
                    if (pair_holds(na, b, PairKind::sum)) {
                        detail = "unexpected solution at a=" + std::to_string(a) +
                                 " b=" + b.to_string();
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: acceptance <path-to-cli-binary>\n");
        return 127;
    }
    g_cli = argv[1];

    run(1, "sum classification, brute force to 1e6", criterion1);
    run(2, "diff classification, brute force to 1e7", criterion2);
    run(3, "carry-search vs families, sum, a<=19, n<=25", criterion3);
    run(4, "carry-search vs families, diff, a<=9, n<=30", criterion4);
    run(5, "family soundness to index 200 (~800 digits)", criterion5);
    run(6, "Diophantine golden set", criterion6);
    run(7, "residual <=> predicate equivalence to 1e5", criterion7);
    run(8, "carry-search equals direct scan, n<=7", criterion8);
    run(9, "leading-digit boundary windows stay empty", criterion9);

    if (g_failures == 0)
        std::printf("all criteria passed\n");
    else
        std::printf("%d criterion(s) failed\n", g_failures);
    return g_failures;
}
