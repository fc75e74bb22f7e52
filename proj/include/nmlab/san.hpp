#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "nmlab/position.hpp"
#include "nmlab/types.hpp"

namespace nmlab {

struct SanError : std::runtime_error {
    enum class Kind { NoMatch, Ambiguous, Malformed };
    Kind kind;
    SanError(Kind k, const std::string& message) : std::runtime_error(message), kind(k) {}
};

// Standard algebraic notation with minimal disambiguation and +/# suffix.
std::string to_san(const Position& p, const Move& m);

// Resolves SAN against the legal moves of `p`. Tolerates !?+# annotations and
// over-specified disambiguation; throws SanError for unknown or ambiguous input.
Move parse_san(const Position& p, std::string_view san);

}  // namespace nmlab
