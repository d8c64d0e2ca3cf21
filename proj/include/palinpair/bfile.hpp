#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "palinpair/natural.hpp"
#include "palinpair/pairs.hpp"

namespace palinpair {

// One data line of an OEIS-style b-file: "index value".
struct BFileEntry {
    long long index = 0;
    Natural value;
};

class BFileError : public std::runtime_error {
public:
    BFileError(std::size_t line, const std::string& message);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Parses "index value" lines. '#'-prefixed lines and blank lines are
// skipped; indices must be strictly increasing; values must be nonnegative
// decimal integers. Throws BFileError naming the offending line.
std::vector<BFileEntry> parse_bfile(std::istream& in);

// Which derived sequence of the solution set a file is compared against.
enum class SequenceColumn { b, sum, diff, product };

const char* to_string(SequenceColumn column);
std::optional<SequenceColumn> parse_sequence_column(std::string_view text);

// Yields the closed-form solution set ascending by b, one member per call.
class TheoremSequence {
public:
    explicit TheoremSequence(PairKind kind);
    SolutionPair next();

private:
    struct Stream {
        SolutionPair current;
        uint64_t next_index = 0;
        bool exhausted = false;
    };
    PairKind kind_;
    std::vector<Stream> streams_;

    void advance(Stream& stream, std::size_t stream_idx);
};

struct BFileMismatch {
    std::size_t position = 0;  // 0-based term position within the file
    long long file_index = 0;  // the index column of the offending line
    Natural expected;
    Natural found;
};

struct BFileCheckResult {
    std::size_t terms_compared = 0;
    std::optional<BFileMismatch> mismatch;

    bool ok() const { return !mismatch.has_value(); }
};

// Compares file values positionally against the selected derived sequence.
BFileCheckResult check_bfile(const std::vector<BFileEntry>& entries, PairKind kind,
                             SequenceColumn column);

}  // namespace palinpair
