#pragma once

#include <array>
#include <string>

#include "nmlab/position.hpp"
#include "nmlab/types.hpp"

namespace nmlab {

// Material values and piece-square tables, white's perspective (index by
// square, a1 = 0). Black uses the rank-mirrored square.
struct EvalParams {
    std::array<Score, 7> material{};              // indexed by PieceType
    std::array<std::array<Score, 64>, 7> psq{};   // indexed by PieceType, square

    static const EvalParams& defaults();
    // Plain-text table file; same grids as data/pst.txt (rank 8 first).
    static EvalParams load(const std::string& path);
};

// Static evaluation in centipawns from the side to move's perspective.
// Pure function of the position; never returns a mate-band score.
Score evaluate(const Position& p, const EvalParams& params);

// Moves searched by quiescence: captures (including en passant) and
// promotions to a queen; quiet underpromotions are not tactical.
bool is_tactical(const Move& m);

}  // namespace nmlab
