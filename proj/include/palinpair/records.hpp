#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "palinpair/families.hpp"
#include "palinpair/pairs.hpp"

namespace palinpair {

// One solution as it appears on the CLI result streams.
struct SolutionRecord {
    SolutionPair pair;
    Natural x;  // b + a (sum) or b - a (diff)
    Natural y;  // a * b
    std::size_t n_digits = 0;
    std::optional<FamilyId> family;
};

// Derives x, y, digit count and the family classification.
SolutionRecord make_record(const SolutionPair& pair);

// {"a": "...", "b": "...", "kind": "sum", "n_digits": 2, "x": "...",
//  "y": "...", "family": "sum2"|null, "index": 1|null}
// Big integers always serialize as decimal strings.
nlohmann::json record_json(const SolutionRecord& record);

std::string csv_header();
std::string record_csv_row(const SolutionRecord& record);
// RFC 4180: quotes a field when it holds a comma, quote, or newline.
std::string csv_escape(const std::string& field);

}  // namespace palinpair
