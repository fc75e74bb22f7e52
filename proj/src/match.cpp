#include "nmlab/match.hpp"

#include <algorithm>
#include <stdexcept>

#include "nmlab/movegen.hpp"
#include "nmlab/san.hpp"

namespace nmlab {

namespace {

constexpr int MAX_GAME_PLIES = 600;

bool insufficient_material(const Position& p) {
    int minors = 0;
    for (Square s = 0; s < 64; ++s) {
        switch (type_of(p.piece_on(s))) {
            case PieceType::None:
            case PieceType::King:
                break;
            case PieceType::Knight:
            case PieceType::Bishop:
                if (++minors > 1) return false;
                break;
            default:
                return false;  // pawn, rook or queen: mate material remains
        }
    }
    return true;
}

bool threefold(const std::vector<Hash>& hashes) {
    int count = 0;
    Hash current = hashes.back();
    for (Hash h : hashes)
        if (h == current && ++count >= 3) return true;
    return false;
}

}  // namespace

const char* termination_name(Termination t) {
    switch (t) {
        case Termination::Checkmate: return "checkmate";
        case Termination::Stalemate: return "stalemate";
        case Termination::ThreefoldRepetition: return "threefold-repetition";
        case Termination::FiftyMoveRule: return "fifty-move-rule";
        case Termination::InsufficientMaterial: return "insufficient-material";
        case Termination::MaxLength: return "max-length";
    }
    return "?";
}

MatchResult play_match(const PruningPolicy& policy_a, const PruningPolicy& policy_b,
                       const std::vector<Position>& openings, int depth, int games,
                       const SearchConfig& base_config) {
    if (games <= 0) throw std::invalid_argument("play_match: game count must be positive");
    if (games % 2 != 0) throw std::invalid_argument("play_match: game count must be even");
    if (openings.empty()) throw std::invalid_argument("play_match: no openings");
    if (depth < 1) throw std::invalid_argument("play_match: depth must be >= 1");

    MatchResult result;
    for (int g = 0; g < games; ++g) {
        const bool a_is_white = g % 2 == 0;
        GameRecord game;
        game.opening_index = (g / 2) % static_cast<int>(openings.size());
        game.white_policy = (a_is_white ? policy_a : policy_b).label();
        game.black_policy = (a_is_white ? policy_b : policy_a).label();

        try {
            Position pos = openings[static_cast<std::size_t>(game.opening_index)];
            std::vector<Hash> hashes{pos.hash()};

            for (;;) {
                MoveList legal;
                generate_moves(pos, legal);
                if (legal.empty()) {
                    if (pos.in_check()) {
                        game.termination = Termination::Checkmate;
                        game.white_score = pos.side_to_move() == Color::White ? 0.0 : 1.0;
                    } else {
                        game.termination = Termination::Stalemate;
                        game.white_score = 0.5;
                    }
                    break;
                }
                if (pos.halfmove_clock() >= 100) {
                    game.termination = Termination::FiftyMoveRule;
                    game.white_score = 0.5;
                    break;
                }
                if (threefold(hashes)) {
                    game.termination = Termination::ThreefoldRepetition;
                    game.white_score = 0.5;
                    break;
                }
                if (insufficient_material(pos)) {
                    game.termination = Termination::InsufficientMaterial;
                    game.white_score = 0.5;
                    break;
                }
                if (static_cast<int>(game.san_moves.size()) >= MAX_GAME_PLIES) {
                    game.termination = Termination::MaxLength;
                    game.white_score = 0.5;
                    break;
                }

                const bool white_to_move = pos.side_to_move() == Color::White;
                SearchConfig cfg = base_config;
                cfg.policy = (white_to_move == a_is_white) ? policy_a : policy_b;
                Searcher searcher(cfg);
                // History without the current position: the search root sits
                // on top of it for repetition detection.
                SearchResult res = searcher.search_root(
                    pos, SearchLimits{depth, 0, 0},
                    std::span<const Hash>(hashes.data(), hashes.size() - 1));

                game.san_moves.push_back(to_san(pos, res.best));
                pos.make_move(res.best);
                hashes.push_back(pos.hash());
            }
        } catch (const std::exception& e) {
            throw std::runtime_error("match aborted in game " + std::to_string(g + 1) + ": " +
                                     e.what());
        }

        result.score_a += a_is_white ? game.white_score : 1.0 - game.white_score;
        result.score_b += a_is_white ? 1.0 - game.white_score : game.white_score;
        result.games.push_back(std::move(game));
    }
    return result;
}

}  // namespace nmlab
