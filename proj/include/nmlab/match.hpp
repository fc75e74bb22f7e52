#pragma once

#include <string>
#include <vector>

#include "nmlab/policy.hpp"
#include "nmlab/position.hpp"
#include "nmlab/search.hpp"

namespace nmlab {

enum class Termination {
    Checkmate,
    Stalemate,
    ThreefoldRepetition,
    FiftyMoveRule,
    InsufficientMaterial,
    MaxLength,
};

const char* termination_name(Termination t);

struct GameRecord {
    int opening_index = 0;
    std::string white_policy;
    std::string black_policy;
    std::vector<std::string> san_moves;
    Termination termination = Termination::Checkmate;
    double white_score = 0.0;  // 1, 0.5 or 0
};

struct MatchResult {
    std::vector<GameRecord> games;
    double score_a = 0.0;  // points for policy A out of games.size()
    double score_b = 0.0;
};

// Fixed-depth deterministic match. Each opening is played twice with colors
// swapped; `games` must be even and positive. A search failure aborts the
// match with an exception naming the game index.
MatchResult play_match(const PruningPolicy& policy_a, const PruningPolicy& policy_b,
                       const std::vector<Position>& openings, int depth, int games,
                       const SearchConfig& base_config = {});

}  // namespace nmlab
