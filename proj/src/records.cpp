#include "palinpair/records.hpp"

namespace palinpair {

SolutionRecord make_record(const SolutionPair& pair) {
    SolutionRecord record;
    record.pair = pair;
    record.x = pair.kind == PairKind::sum ? pair.a + pair.b : pair.b - pair.a;
    record.y = pair.a * pair.b;
    record.n_digits = record.x.digit_count();
    record.family = classify(pair.a, pair.b, pair.kind);
    return record;
}

nlohmann::json record_json(const SolutionRecord& record) {
    nlohmann::json j;
    j["a"] = record.pair.a.to_string();
    j["b"] = record.pair.b.to_string();
    j["kind"] = to_string(record.pair.kind);
    j["n_digits"] = record.n_digits;
    j["x"] = record.x.to_string();
    j["y"] = record.y.to_string();
    if (record.family) {
        j["family"] = family_tag_name(record.family->tag);
        if (record.family->tag == FamilyId::Tag::sporadic)
            j["index"] = nullptr;
        else
            j["index"] = record.family->index;
    } else {
        j["family"] = nullptr;
        j["index"] = nullptr;
    }
    return j;
}

std::string csv_header() { return "a,b,kind,n_digits,x,y,family,index"; }

std::string csv_escape(const std::string& field) {
    bool needs_quotes = field.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string record_csv_row(const SolutionRecord& record) {
    std::string family;
    std::string index;
    if (record.family) {
        family = family_tag_name(record.family->tag);
        if (record.family->tag != FamilyId::Tag::sporadic)
            index = std::to_string(record.family->index);
    }
    std::string row;
    row += csv_escape(record.pair.a.to_string());
    row += ',';
    row += csv_escape(record.pair.b.to_string());
    row += ',';
    row += to_string(record.pair.kind);
    row += ',';
    row += std::to_string(record.n_digits);
    row += ',';
    row += csv_escape(record.x.to_string());
    row += ',';
    row += csv_escape(record.y.to_string());
    row += ',';
    row += csv_escape(family);
    row += ',';
    row += csv_escape(index);
    return row;
}

}  // namespace palinpair
