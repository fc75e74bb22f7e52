#pragma once

#include <cstdint>

#include "nmlab/position.hpp"
#include "nmlab/types.hpp"

namespace nmlab {

enum class GenMode {
    Legal,     // every legal move
    Tactical,  // captures (incl. en passant) and non-capturing queen promotions
};

// Fills `out` with legal moves in a fixed, position-determined order
// (by from-square, then per-piece direction table, then to-square).
void generate_moves(const Position& p, MoveList& out, GenMode mode = GenMode::Legal);

// Leaf count of the legal move tree.
std::uint64_t perft(Position& p, int depth);

}  // namespace nmlab
