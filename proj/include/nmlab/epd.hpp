#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nmlab/position.hpp"
#include "nmlab/types.hpp"

namespace nmlab {

// Unreadable or unwritable file; distinct from malformed content.
struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One EPD record: four FEN fields plus semicolon-separated opcodes.
// Recognized opcodes: bm, am (SAN move sets), id (quoted string), dm (direct
// mate in N full moves), hmvc, fmvn (clocks). Everything else is kept
// verbatim and re-emitted by to_epd().
struct EpdRecord {
    Position pos;
    std::vector<Move> best_moves;   // bm
    std::vector<Move> avoid_moves;  // am
    std::string id;
    std::optional<int> direct_mate;  // dm
    std::vector<std::pair<std::string, std::string>> other_ops;

    std::string to_epd() const;
};

// Throws ParseError (FEN trouble) or std::runtime_error naming the record id
// for opcode-level problems (illegal or ambiguous bm/am, bm/am overlap).
EpdRecord parse_epd(const std::string& line, int lineno = 0);

struct EpdFile {
    std::vector<EpdRecord> records;
    std::vector<std::string> errors;  // one message per rejected line
};

// Reads records one per line; '#' starts a comment, blank lines are skipped.
// Parse failures land in `errors`; throws std::runtime_error if the file
// cannot be opened.
EpdFile load_epd_file(const std::string& path);

}  // namespace nmlab
