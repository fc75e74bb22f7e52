#include "oracle.hpp"

#include <random>

using namespace nmlab;

namespace oracle {

namespace {

// Independent board geometry: file/rank deltas instead of mailbox offsets.
struct Delta {
    int df, dr;
};

constexpr Delta KNIGHT[] = {{1, 2}, {2, 1}, {2, -1}, {1, -2}, {-1, -2}, {-2, -1}, {-2, 1}, {-1, 2}};
constexpr Delta DIAG[] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
constexpr Delta ORTH[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
constexpr Delta ALL8[] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};

Square shift(Square s, int df, int dr) {
    int f = file_of(s) + df, r = rank_of(s) + dr;
    if (f < 0 || f > 7 || r < 0 || r > 7) return NO_SQUARE;
    return make_square(f, r);
}

void pseudo_moves(const Position& p, std::vector<Move>& out) {
    const Color us = p.side_to_move();
    const Color them = opposite(us);
    const int fwd = us == Color::White ? 1 : -1;

    auto push = [&](Square from, Square to, Piece piece, Piece captured, PieceType promo,
                    std::uint8_t flags) {
        out.push_back({static_cast<std::int8_t>(from), static_cast<std::int8_t>(to), piece,
                       captured, promo, flags});
    };

    for (Square from = 0; from < 64; ++from) {
        Piece piece = p.piece_on(from);
        if (piece == NoPiece || color_of(piece) != us) continue;
        switch (type_of(piece)) {
            case PieceType::Pawn: {
                Square one = shift(from, 0, fwd);
                bool promo_rank = rank_of(from) == (us == Color::White ? 6 : 1);
                if (one != NO_SQUARE && p.piece_on(one) == NoPiece) {
                    if (promo_rank) {
                        for (PieceType t : {PieceType::Queen, PieceType::Rook, PieceType::Bishop,
                                            PieceType::Knight})
                            push(from, one, piece, NoPiece, t, 0);
                    } else {
                        push(from, one, piece, NoPiece, PieceType::None, 0);
                        if (rank_of(from) == (us == Color::White ? 1 : 6)) {
                            Square two = shift(from, 0, 2 * fwd);
                            if (p.piece_on(two) == NoPiece)
                                push(from, two, piece, NoPiece, PieceType::None,
                                     Move::FlagDoublePush);
                        }
                    }
                }
                for (int df : {-1, 1}) {
                    Square to = shift(from, df, fwd);
                    if (to == NO_SQUARE) continue;
                    Piece target = p.piece_on(to);
                    if (target != NoPiece && color_of(target) == them) {
                        if (promo_rank) {
                            for (PieceType t : {PieceType::Queen, PieceType::Rook,
                                                PieceType::Bishop, PieceType::Knight})
                                push(from, to, piece, target, t, 0);
                        } else {
                            push(from, to, piece, target, PieceType::None, 0);
                        }
                    } else if (to == p.en_passant_square()) {
                        push(from, to, piece, make_piece(them, PieceType::Pawn), PieceType::None,
                             Move::FlagEnPassant);
                    }
                }
                break;
            }
            case PieceType::Knight:
                for (const Delta& d : KNIGHT) {
                    Square to = shift(from, d.df, d.dr);
                    if (to == NO_SQUARE) continue;
                    Piece target = p.piece_on(to);
                    if (target == NoPiece || color_of(target) == them)
                        push(from, to, piece, target, PieceType::None, 0);
                }
                break;
            case PieceType::King:
                for (const Delta& d : ALL8) {
                    Square to = shift(from, d.df, d.dr);
                    if (to == NO_SQUARE) continue;
                    Piece target = p.piece_on(to);
                    if (target == NoPiece || color_of(target) == them)
                        push(from, to, piece, target, PieceType::None, 0);
                }
                break;
            default: {
                const Delta* dirs;
                int n;
                if (type_of(piece) == PieceType::Bishop) {
                    dirs = DIAG;
                    n = 4;
                } else if (type_of(piece) == PieceType::Rook) {
                    dirs = ORTH;
                    n = 4;
                } else {
                    dirs = ALL8;
                    n = 8;
                }
                for (int i = 0; i < n; ++i) {
                    for (Square to = shift(from, dirs[i].df, dirs[i].dr); to != NO_SQUARE;
                         to = shift(to, dirs[i].df, dirs[i].dr)) {
                        Piece target = p.piece_on(to);
                        if (target == NoPiece) {
                            push(from, to, piece, NoPiece, PieceType::None, 0);
                            continue;
                        }
                        if (color_of(target) == them)
                            push(from, to, piece, target, PieceType::None, 0);
                        break;
                    }
                }
                break;
            }
        }
    }

    // Castling.
    if (!square_attacked(p, p.king_square(us), them)) {
        int base = us == Color::White ? 0 : 56;
        Piece kp = make_piece(us, PieceType::King);
        Piece rp = make_piece(us, PieceType::Rook);
        if ((p.castling_rights() & (us == Color::White ? CASTLE_WK : CASTLE_BK)) &&
            p.piece_on(base + 4) == kp && p.piece_on(base + 7) == rp &&
            p.piece_on(base + 5) == NoPiece && p.piece_on(base + 6) == NoPiece &&
            !square_attacked(p, base + 5, them) && !square_attacked(p, base + 6, them))
            push(base + 4, base + 6, kp, NoPiece, PieceType::None, Move::FlagCastle);
        if ((p.castling_rights() & (us == Color::White ? CASTLE_WQ : CASTLE_BQ)) &&
            p.piece_on(base + 4) == kp && p.piece_on(base + 0) == rp &&
            p.piece_on(base + 1) == NoPiece && p.piece_on(base + 2) == NoPiece &&
            p.piece_on(base + 3) == NoPiece && !square_attacked(p, base + 2, them) &&
            !square_attacked(p, base + 3, them))
            push(base + 4, base + 2, kp, NoPiece, PieceType::None, Move::FlagCastle);
    }
}

}  // namespace

bool square_attacked(const Position& p, Square s, Color by) {
    // Pawns.
    int fwd = by == Color::White ? 1 : -1;
    for (int df : {-1, 1}) {
        Square from = shift(s, df, -fwd);
        if (from != NO_SQUARE && p.piece_on(from) == make_piece(by, PieceType::Pawn)) return true;
    }
    for (const Delta& d : KNIGHT) {
        Square from = shift(s, d.df, d.dr);
        if (from != NO_SQUARE && p.piece_on(from) == make_piece(by, PieceType::Knight)) return true;
    }
    for (const Delta& d : ALL8) {
        Square from = shift(s, d.df, d.dr);
        if (from != NO_SQUARE && p.piece_on(from) == make_piece(by, PieceType::King)) return true;
    }
    for (const Delta& d : ALL8) {
        bool diagonal = d.df != 0 && d.dr != 0;
        for (Square from = shift(s, d.df, d.dr); from != NO_SQUARE;
             from = shift(from, d.df, d.dr)) {
            Piece pc = p.piece_on(from);
            if (pc == NoPiece) continue;
            if (color_of(pc) == by) {
                PieceType t = type_of(pc);
                if (t == PieceType::Queen || t == (diagonal ? PieceType::Bishop : PieceType::Rook))
                    return true;
            }
            break;
        }
    }
    return false;
}

std::vector<Move> legal_moves(Position& p) {
    std::vector<Move> pseudo;
    pseudo_moves(p, pseudo);
    std::vector<Move> legal;
    const Color us = p.side_to_move();
    for (const Move& m : pseudo) {
        UndoInfo u = p.make_move(m);
        if (!square_attacked(p, p.king_square(us), opposite(us))) legal.push_back(m);
        p.unmake_move(m, u);
    }
    return legal;
}

std::uint64_t perft(Position& p, int depth) {
    if (depth <= 0) return 1;
    std::uint64_t total = 0;
    for (const Move& m : legal_moves(p)) {
        UndoInfo u = p.make_move(m);
        total += perft(p, depth - 1);
        p.unmake_move(m, u);
    }
    return total;
}

namespace {

Score minimax_inner(Position& p, int depth, int ply, std::vector<Hash>& path,
                    Searcher& searcher) {
    if (ply > 0) {
        if (p.halfmove_clock() >= 100) return 0;
        int clock = p.halfmove_clock();
        for (int back = 4; back <= clock && back <= ply; back += 2)
            if (path[static_cast<std::size_t>(ply - back)] == p.hash()) return 0;
    }

    bool in_chk = square_attacked(p, p.king_square(p.side_to_move()), opposite(p.side_to_move()));
    if (depth <= 0) {
        if (!in_chk || ply >= MAX_PLY) return searcher.quiescence_value(p);
        depth = 1;
    }
    if (ply >= MAX_PLY) return evaluate(p, EvalParams::defaults());

    std::vector<Move> moves = legal_moves(p);
    if (moves.empty()) return in_chk ? mated_in(ply) : 0;

    path[static_cast<std::size_t>(ply)] = p.hash();
    Score best = -SCORE_INF;
    for (const Move& m : moves) {
        UndoInfo u = p.make_move(m);
        Score v = -minimax_inner(p, depth - 1, ply + 1, path, searcher);
        p.unmake_move(m, u);
        if (v > best) best = v;
    }
    return best;
}

}  // namespace

Score minimax(Position& p, int depth, Searcher& searcher) {
    std::vector<Hash> path(MAX_PLY + 1, 0);
    return minimax_inner(p, depth, 0, path, searcher);
}

namespace {

bool all_replies_mated(Position& p, int n);

}  // namespace

bool can_force_mate(Position& p, int n) {
    if (n <= 0) return false;
    const Color us = p.side_to_move();
    for (const Move& m : legal_moves(p)) {
        UndoInfo u = p.make_move(m);
        bool mates = all_replies_mated(p, n - 1);
        p.unmake_move(m, u);
        (void)us;
        if (mates) return true;
    }
    return false;
}

namespace {

// Defender to move; true if every reply still gets mated within n attacker moves.
bool all_replies_mated(Position& p, int n) {
    std::vector<Move> replies = legal_moves(p);
    if (replies.empty())
        return square_attacked(p, p.king_square(p.side_to_move()), opposite(p.side_to_move()));
    if (n <= 0) return false;
    for (const Move& r : replies) {
        UndoInfo u = p.make_move(r);
        bool mated = can_force_mate(p, n);
        p.unmake_move(r, u);
        if (!mated) return false;
    }
    return true;
}

}  // namespace

std::vector<Move> mating_moves(Position& p, int n) {
    std::vector<Move> out;
    for (const Move& m : legal_moves(p)) {
        UndoInfo u = p.make_move(m);
        if (all_replies_mated(p, n - 1)) out.push_back(m);
        p.unmake_move(m, u);
    }
    return out;
}

std::vector<Position> playout_corpus(int positions, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Position> out;
    Position p = Position::startpos();
    while (static_cast<int>(out.size()) < positions) {
        std::vector<Move> moves = legal_moves(p);
        if (moves.empty() || p.halfmove_clock() >= 100 || p.game_ply() > 220) {
            p = Position::startpos();
            continue;
        }
        std::uniform_int_distribution<std::size_t> pick(0, moves.size() - 1);
        p.make_move(moves[pick(rng)]);
        out.push_back(p);
    }
    return out;
}

}  // namespace oracle
