#pragma once

// Independent brute-force oracles for cross-checking the engine. Move
// generation here is deliberately naive (pseudo-legal scan plus
// make/test/unmake legality) and shares no code with the production
// generator's pin logic.

#include <cstdint>
#include <vector>

#include "nmlab/position.hpp"
#include "nmlab/search.hpp"
#include "nmlab/types.hpp"

namespace oracle {

// All legal moves by exhaustive pseudo-legal generation + king-safety test.
std::vector<nmlab::Move> legal_moves(nmlab::Position& p);

// Attack test built on its own offset walk.
bool square_attacked(const nmlab::Position& p, nmlab::Square s, nmlab::Color by);

std::uint64_t perft(nmlab::Position& p, int depth);

// Full-width negamax with the same terminal rules as the engine (path
// repetition and fifty-move draws, leaf check extension, quiescence leaves)
// but no pruning, no windows, no tables. `searcher` supplies the quiescence
// evaluation; pass one configured with the same eval parameters.
nmlab::Score minimax(nmlab::Position& p, int depth, nmlab::Searcher& searcher);

// True if the side to move can force mate in at most n of its own moves.
bool can_force_mate(nmlab::Position& p, int n);

// Root moves that force mate in at most n moves.
std::vector<nmlab::Move> mating_moves(nmlab::Position& p, int n);

// Deterministic random-playout corpus: plays `plies` random legal moves from
// the start position (restarting on terminal positions), recording each
// visited position.
std::vector<nmlab::Position> playout_corpus(int positions, std::uint64_t seed);

}  // namespace oracle
