#include "palinpair/bfile.hpp"

#include <istream>
#include <sstream>
#include <string>

#include "palinpair/families.hpp"

namespace palinpair {

BFileError::BFileError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

std::vector<BFileEntry> parse_bfile(std::istream& in) {
    std::vector<BFileEntry> out;
    std::string line;
    std::size_t line_no = 0;
    bool have_prev = false;
    long long prev_index = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;       // blank
        if (line[first] == '#') continue;               // comment
        std::istringstream fields(line);
        std::string index_token, value_token, excess;
        fields >> index_token >> value_token;
        if (value_token.empty()) throw BFileError(line_no, "expected \"index value\"");
        if (fields >> excess) throw BFileError(line_no, "trailing tokens after value");

        BFileEntry entry;
        try {
            std::size_t used = 0;
            entry.index = std::stoll(index_token, &used);
            if (used != index_token.size()) throw std::invalid_argument("index");
        } catch (const std::exception&) {
            throw BFileError(line_no, "bad index '" + index_token + "'");
        }
        try {
            entry.value = Natural::from_string(value_token);
        } catch (const std::exception&) {
            throw BFileError(line_no, "bad value '" + value_token + "'");
        }
        if (have_prev && entry.index <= prev_index)
            throw BFileError(line_no, "indices must be strictly increasing");
        prev_index = entry.index;
        have_prev = true;
        out.push_back(std::move(entry));
    }
    return out;
}

const char* to_string(SequenceColumn column) {
    switch (column) {
        case SequenceColumn::b: return "b";
        case SequenceColumn::sum: return "sum";
        case SequenceColumn::diff: return "diff";
        case SequenceColumn::product: return "product";
    }
    return "?";
}

std::optional<SequenceColumn> parse_sequence_column(std::string_view text) {
    if (text == "b") return SequenceColumn::b;
    if (text == "sum") return SequenceColumn::sum;
    if (text == "diff") return SequenceColumn::diff;
    if (text == "product") return SequenceColumn::product;
    return std::nullopt;
}

TheoremSequence::TheoremSequence(PairKind kind) : kind_(kind) {
    if (kind == PairKind::sum) {
        streams_.push_back({sum_family(0), 1, false});
        // sporadics ascend by b as (9,9) then (3,24)
        streams_.push_back({sum_sporadics()[1], 1, false});
    } else {
        streams_.push_back({diff_family_a(0), 1, false});
        streams_.push_back({diff_family_b(0), 1, false});
    }
}

void TheoremSequence::advance(Stream& stream, std::size_t stream_idx) {
    if (kind_ == PairKind::sum) {
        if (stream_idx == 0) {
            stream.current = sum_family(stream.next_index++);
            return;
        }
        // sporadics ascending by b: (9,9) then (3,24)
        if (stream.next_index == 1) {
            stream.current = sum_sporadics()[0];
            stream.next_index = 2;
        } else {
            stream.exhausted = true;
        }
        return;
    }
    stream.current = stream_idx == 0 ? diff_family_a(stream.next_index)
                                     : diff_family_b(stream.next_index);
    ++stream.next_index;
}

SolutionPair TheoremSequence::next() {
    std::size_t best = streams_.size();
    for (std::size_t i = 0; i < streams_.size(); ++i) {
        if (streams_[i].exhausted) continue;
        if (best == streams_.size() || pair_less(streams_[i].current, streams_[best].current))
            best = i;
    }
    // The families are infinite; at least one stream is always live.
    SolutionPair out = streams_[best].current;
    advance(streams_[best], best);
    return out;
}

namespace {

Natural column_value(const SolutionPair& pair, SequenceColumn column) {
    switch (column) {
        case SequenceColumn::b: return pair.b;
        case SequenceColumn::sum: return pair.a + pair.b;
        case SequenceColumn::diff: return pair.b - pair.a;
        case SequenceColumn::product: return pair.a * pair.b;
    }
    return Natural();
}

}  // namespace

BFileCheckResult check_bfile(const std::vector<BFileEntry>& entries, PairKind kind,
                             SequenceColumn column) {
    BFileCheckResult result;
    TheoremSequence sequence(kind);
    for (const BFileEntry& entry : entries) {
        Natural expected = column_value(sequence.next(), column);
        ++result.terms_compared;
        if (entry.value != expected) {
            result.mismatch = BFileMismatch{result.terms_compared - 1, entry.index,
                                            std::move(expected), entry.value};
            break;
        }
    }
    return result;
}

}  // namespace palinpair
