#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "palinpair/bfile.hpp"
#include "palinpair/carry_search.hpp"
#include "palinpair/diophantine.hpp"
#include "palinpair/families.hpp"
#include "palinpair/oracle.hpp"
#include "palinpair/records.hpp"

using namespace palinpair;

namespace {

// Exit codes: 0 success/holds, 2 verified-false, 3 mismatch, 1 usage/IO.
constexpr int kExitHolds = 0;
constexpr int kExitFalse = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitUsage = 1;

Natural parse_positive(const std::string& text, const char* what) {
    Natural value = Natural::from_string(text);
    if (value.is_zero())
        throw std::invalid_argument(std::string(what) + " must be a positive integer");
    return value;
}

PairKind parse_kind(const std::string& text) {
    auto kind = parse_pair_kind(text);
    if (!kind) throw std::invalid_argument("kind must be 'sum' or 'diff'");
    return *kind;
}

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string token;
    for (char c : text) {
        if (c == ',') {
            out.push_back(token);
            token.clear();
        } else {
            token += c;
        }
    }
    out.push_back(token);
    return out;
}

int64_t parse_i64(const std::string& text, const char* what) {
    std::size_t used = 0;
    int64_t value = 0;
    try {
        value = std::stoll(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size())
        throw std::invalid_argument(std::string(what) + ": bad integer '" + text + "'");
    return value;
}

void emit_records(const std::vector<SolutionPair>& pairs, const std::string& format) {
    if (format == "csv") std::cout << csv_header() << "\n";
    for (const SolutionPair& pair : pairs) {
        SolutionRecord record = make_record(pair);
        if (format == "csv")
            std::cout << record_csv_row(record) << "\n";
        else
            std::cout << record_json(record).dump() << "\n";
    }
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string a, b, kind;
};

int run_verify(const VerifyArgs& args) {
    Natural a = parse_positive(args.a, "a");
    Natural b = parse_positive(args.b, "b");
    PairKind kind = parse_kind(args.kind);
    bool holds = pair_holds(a, b, kind);

    nlohmann::json j;
    j["a"] = a.to_string();
    j["b"] = b.to_string();
    j["kind"] = to_string(kind);
    j["holds"] = holds;
    SignedInt x = kind == PairKind::sum ? SignedInt(a + b) : SignedInt(b) - SignedInt(a);
    j["x"] = x.to_string();
    j["y"] = (a * b).to_string();
    std::cout << j.dump() << "\n";
    return holds ? kExitHolds : kExitFalse;
}

// ---------------------------------------------------------------- search

struct SearchArgs {
    std::string kind;
    std::string max_b;
    std::string max_a;
    bool no_a_bound = false;
    unsigned jobs = 1;
    std::string format = "jsonl";
};

int run_search(const SearchArgs& args) {
    SearchConfig config;
    config.kind = parse_kind(args.kind);
    config.b_max = parse_positive(args.max_b, "--max-b");
    if (!args.max_a.empty())
        config.a_max = parse_positive(args.max_a, "--max-a").to_uint64();
    config.trust_proven_bounds = !args.no_a_bound;
    config.partitions = std::max(1u, args.jobs);
    config.progress = [](uint64_t total) {
        std::cerr << "progress: " << total << " candidates\n";
    };

    auto start = std::chrono::steady_clock::now();
    std::vector<SolutionPair> found = brute_search(config);
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    emit_records(found, args.format);
    std::cerr << "found " << found.size() << " solutions in " << elapsed << " ms\n";
    return 0;
}

// ---------------------------------------------------------------- generate

struct GenerateArgs {
    std::string kind;
    std::string family;
    int64_t max_index = -1;
    std::string max_b;
};

int run_generate(const GenerateArgs& args) {
    PairKind kind = parse_kind(args.kind);
    const std::string& family = args.family;
    bool sum_side = family == "sum2" || family == "sporadic";
    bool diff_side = family == "diffA" || family == "diffB";
    if (!sum_side && !diff_side && family != "all")
        throw std::invalid_argument("--family must be sum2, sporadic, diffA, diffB, or all");
    if ((sum_side && kind != PairKind::sum) || (diff_side && kind != PairKind::diff))
        throw std::invalid_argument("family '" + family + "' does not belong to kind '" +
                                    args.kind + "'");

    bool has_index = args.max_index >= 0;
    bool has_b = !args.max_b.empty();
    if (has_index && has_b)
        throw std::invalid_argument("pass only one of --max-index and --max-b");
    if (!has_index && !has_b && family != "sporadic")
        throw std::invalid_argument("pass --max-index or --max-b");

    std::vector<SolutionPair> members;
    auto want = [&](FamilyId::Tag tag) {
        if (family == "all") return family_kind(tag) == kind;
        return std::string(family_tag_name(tag)) == family;
    };
    if (has_b) {
        Natural b_cap = parse_positive(args.max_b, "--max-b");
        for (SolutionPair& p : enumerate_theorem_solutions(kind, b_cap)) {
            auto id = classify(p.a, p.b, kind);
            if (id && want(id->tag)) members.push_back(std::move(p));
        }
    } else {
        uint64_t cap = has_index ? static_cast<uint64_t>(args.max_index) : 1;
        for (FamilyId::Tag tag : {FamilyId::Tag::sum2, FamilyId::Tag::sporadic,
                                  FamilyId::Tag::diff_a, FamilyId::Tag::diff_b}) {
            if (!want(tag)) continue;
            uint64_t top = tag == FamilyId::Tag::sporadic ? std::min<uint64_t>(cap, 1) : cap;
            for (uint64_t index = 0; index <= top; ++index)
                members.push_back(generate(FamilyId{tag, index}));
        }
    }

    for (const SolutionPair& p : members) {
        if (!pair_holds(p.a, p.b, p.kind))
            throw std::logic_error("generated member failed verification");
    }
    emit_records(members, "jsonl");
    std::cerr << "generated " << members.size() << " members\n";
    return 0;
}

// ---------------------------------------------------------------- carry-search

struct CarrySearchArgs {
    uint32_t a = 0;
    std::string kind;
    std::size_t digits = 0;
    std::size_t max_digits = 0;
};

int run_carry_search(const CarrySearchArgs& args) {
    PairKind kind = parse_kind(args.kind);
    std::size_t lo = args.digits;
    std::size_t hi = args.max_digits == 0 ? lo : args.max_digits;
    if (hi < lo) throw std::invalid_argument("--max-digits must be >= --digits");

    auto column = [&](std::size_t n) {
        nlohmann::json arr = nlohmann::json::array();
        for (const Natural& value : enumerate_exact_digits(args.a, kind, n))
            arr.push_back(value.to_string());
        return arr;
    };
    if (hi == lo) {
        std::cout << column(lo).dump() << "\n";
        return 0;
    }
    nlohmann::json out = nlohmann::json::array();
    for (std::size_t n = lo; n <= hi; ++n) {
        nlohmann::json cell;
        cell["n"] = n;
        cell["solutions"] = column(n);
        out.push_back(std::move(cell));
    }
    std::cout << out.dump() << "\n";
    return 0;
}

// ---------------------------------------------------------------- dioph

struct DiophArgs {
    std::string coeffs;
    std::string rhs;
    std::string lo;
    std::string hi;
};

int run_dioph(const DiophArgs& args) {
    LinearEquation eq;
    for (const std::string& token : split_commas(args.coeffs))
        eq.coeffs.push_back(SignedInt::from_string(token));
    eq.rhs = SignedInt::from_string(args.rhs);
    std::size_t k = eq.coeffs.size();
    eq.bounds.assign(k, VarBounds{0, 9});
    if (!args.lo.empty()) {
        auto tokens = split_commas(args.lo);
        if (tokens.size() != k) throw std::invalid_argument("--lo needs one value per coefficient");
        for (std::size_t i = 0; i < k; ++i) eq.bounds[i].lo = parse_i64(tokens[i], "--lo");
    }
    if (!args.hi.empty()) {
        auto tokens = split_commas(args.hi);
        if (tokens.size() != k) throw std::invalid_argument("--hi needs one value per coefficient");
        for (std::size_t i = 0; i < k; ++i) eq.bounds[i].hi = parse_i64(tokens[i], "--hi");
    }
    for (const VarBounds& b : eq.bounds) {
        if (b.lo > b.hi) throw std::invalid_argument("bounds must satisfy lo <= hi");
    }

    std::vector<Assignment> solutions = k == 2 ? solve_two_var(eq) : solve_bounded(eq);
    nlohmann::json out = nlohmann::json::array();
    for (const Assignment& s : solutions) out.push_back(s);
    std::cout << out.dump() << "\n";
    return 0;
}

// ---------------------------------------------------------------- derive-eq

struct DeriveArgs {
    std::string a;
    std::string kind;
    std::size_t digits = 0;
    std::string fix;
};

int run_derive_eq(const DeriveArgs& args) {
    Natural a = parse_positive(args.a, "--a");
    PairKind kind = parse_kind(args.kind);
    std::map<std::size_t, int> fixed;
    if (!args.fix.empty()) {
        for (const std::string& token : split_commas(args.fix)) {
            std::size_t eq_pos = token.find('=');
            if (eq_pos == std::string::npos)
                throw std::invalid_argument("--fix expects j=digit entries");
            std::size_t position = static_cast<std::size_t>(
                parse_i64(token.substr(0, eq_pos), "--fix position"));
            int digit = static_cast<int>(parse_i64(token.substr(eq_pos + 1), "--fix digit"));
            if (!fixed.emplace(position, digit).second)
                throw std::invalid_argument("--fix repeats position " + std::to_string(position));
        }
    }

    DerivedEquation derived = derive_block_equation(a, kind, args.digits, fixed);
    nlohmann::json j;
    j["equation"] = equation_to_string(derived.eq, derived.positions);
    j["positions"] = derived.positions;
    nlohmann::json coeffs = nlohmann::json::array();
    for (const SignedInt& c : derived.eq.coeffs) coeffs.push_back(c.to_string());
    j["coeffs"] = coeffs;
    j["rhs"] = derived.eq.rhs.to_string();
    nlohmann::json bounds = nlohmann::json::array();
    for (const VarBounds& b : derived.eq.bounds) bounds.push_back({b.lo, b.hi});
    j["bounds"] = bounds;
    j["unsatisfiable_by_gcd"] = derived.unsatisfiable_by_gcd;
    nlohmann::json solutions = nlohmann::json::array();
    for (const Assignment& s : solve_bounded(derived.eq)) solutions.push_back(s);
    j["solutions"] = solutions;
    std::cout << j.dump() << "\n";
    return 0;
}

// ---------------------------------------------------------------- classify-check

struct ClassifyCheckArgs {
    std::string kind;
    std::string max_b;
    unsigned jobs = 1;
};

int run_classify_check(const ClassifyCheckArgs& args) {
    PairKind kind = parse_kind(args.kind);
    Natural b_max = parse_positive(args.max_b, "--max-b");
    CheckReport report = cross_check(kind, b_max, std::max(1u, args.jobs));

    nlohmann::json j;
    j["kind"] = to_string(kind);
    j["max_b"] = b_max.to_string();
    j["ok"] = report.ok();
    nlohmann::json missing = nlohmann::json::array();
    for (const SolutionPair& p : report.missing) missing.push_back(record_json(make_record(p)));
    nlohmann::json extra = nlohmann::json::array();
    for (const SolutionPair& p : report.extra) extra.push_back(record_json(make_record(p)));
    j["missing"] = missing;
    j["extra"] = extra;
    std::cout << j.dump() << "\n";
    if (!report.ok()) {
        std::cerr << "mismatch: " << report.missing.size() << " missing, "
                  << report.extra.size() << " extra\n";
        return kExitMismatch;
    }
    return 0;
}

// ---------------------------------------------------------------- bfile-check

struct BFileArgs {
    std::string file;
    std::string kind;
    std::string column = "b";
};

int run_bfile_check(const BFileArgs& args) {
    PairKind kind = parse_kind(args.kind);
    auto column = parse_sequence_column(args.column);
    if (!column)
        throw std::invalid_argument("--column must be b, sum, diff, or product");
    std::ifstream in(args.file);
    if (!in) {
        std::cerr << "error: cannot open '" << args.file << "'\n";
        return kExitUsage;
    }
    std::vector<BFileEntry> entries;
    try {
        entries = parse_bfile(in);
    } catch (const BFileError& e) {
        std::cerr << "error: " << args.file << ": " << e.what() << "\n";
        return kExitUsage;
    }
    if (entries.empty())
        std::cerr << "warning: no data lines in '" << args.file << "'\n";

    BFileCheckResult result = check_bfile(entries, kind, *column);
    nlohmann::json j;
    j["file"] = args.file;
    j["kind"] = to_string(kind);
    j["column"] = to_string(*column);
    j["terms_compared"] = result.terms_compared;
    j["match"] = result.ok();
    if (result.mismatch) {
        nlohmann::json m;
        m["position"] = result.mismatch->position;
        m["file_index"] = result.mismatch->file_index;
        m["expected"] = result.mismatch->expected.to_string();
        m["found"] = result.mismatch->found.to_string();
        j["mismatch"] = m;
    }
    std::cout << j.dump() << "\n";
    return result.ok() ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toolkit for integer pairs whose b+a or b-a is the digit reversal of a*b"};
    app.require_subcommand(1);

    VerifyArgs verify_args;
    CLI::App* verify = app.add_subcommand("verify", "Check one (a, b) pair");
    verify->add_option("a", verify_args.a, "first integer")->required();
    verify->add_option("b", verify_args.b, "second integer")->required();
    verify->add_option("--kind", verify_args.kind, "sum or diff")->required();

    SearchArgs search_args;
    CLI::App* search = app.add_subcommand("search", "Brute-force scan up to --max-b");
    search->add_option("--kind", search_args.kind)->required();
    search->add_option("--max-b", search_args.max_b)->required();
    search->add_option("--max-a", search_args.max_a);
    search->add_flag("--no-a-bound", search_args.no_a_bound,
                     "scan every a <= b instead of the proven a bounds");
    search->add_option("--jobs", search_args.jobs);
    search->add_option("--format", search_args.format)
        ->check(CLI::IsMember({"jsonl", "csv"}));

    GenerateArgs generate_args;
    CLI::App* generate = app.add_subcommand("generate", "Emit closed-form family members");
    generate->add_option("--kind", generate_args.kind)->required();
    generate->add_option("--family", generate_args.family)->required();
    generate->add_option("--max-index", generate_args.max_index);
    generate->add_option("--max-b", generate_args.max_b);

    CarrySearchArgs carry_args;
    CLI::App* carry = app.add_subcommand(
        "carry-search", "Enumerate every n-digit palindromic value for fixed a");
    carry->add_option("--a", carry_args.a)->required();
    carry->add_option("--kind", carry_args.kind)->required();
    carry->add_option("--digits", carry_args.digits)->required();
    carry->add_option("--max-digits", carry_args.max_digits);

    DiophArgs dioph_args;
    CLI::App* dioph = app.add_subcommand("dioph", "Solve a bounded linear equation");
    dioph->add_option("--coeffs", dioph_args.coeffs)->required();
    dioph->add_option("--rhs", dioph_args.rhs)->required();
    dioph->add_option("--lo", dioph_args.lo);
    dioph->add_option("--hi", dioph_args.hi);

    DeriveArgs derive_args;
    CLI::App* derive = app.add_subcommand(
        "derive-eq", "Derive the digit-block equation for fixed a, kind, width");
    derive->add_option("--a", derive_args.a)->required();
    derive->add_option("--kind", derive_args.kind)->required();
    derive->add_option("--digits", derive_args.digits)->required();
    derive->add_option("--fix", derive_args.fix, "fixed digits as j=d,j=d,...");

    ClassifyCheckArgs check_args;
    CLI::App* check = app.add_subcommand(
        "classify-check", "Compare brute force against the closed-form set");
    check->add_option("--kind", check_args.kind)->required();
    check->add_option("--max-b", check_args.max_b)->required();
    check->add_option("--jobs", check_args.jobs);

    BFileArgs bfile_args;
    CLI::App* bfile = app.add_subcommand("bfile-check", "Compare an OEIS b-file");
    bfile->add_option("--file", bfile_args.file)->required();
    bfile->add_option("--kind", bfile_args.kind)->required();
    bfile->add_option("--column", bfile_args.column);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*verify) return run_verify(verify_args);
        if (*search) return run_search(search_args);
        if (*generate) return run_generate(generate_args);
        if (*carry) return run_carry_search(carry_args);
        if (*dioph) return run_dioph(dioph_args);
        if (*derive) return run_derive_eq(derive_args);
        if (*check) return run_classify_check(check_args);
        if (*bfile) return run_bfile_check(bfile_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
