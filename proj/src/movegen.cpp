#include "nmlab/movegen.hpp"

#include "mailbox.hpp"

namespace nmlab {

namespace {

using namespace mailbox;

// Mailbox step from `from` toward `to` if the squares share a line, else 0.
int ray_step(Square from, Square to) {
    int fd = file_of(to) - file_of(from);
    int rd = rank_of(to) - rank_of(from);
    if (fd == 0 && rd == 0) return 0;
    if (fd == 0) return rd > 0 ? 10 : -10;
    if (rd == 0) return fd > 0 ? 1 : -1;
    if (fd == rd) return fd > 0 ? 11 : -11;
    if (fd == -rd) return fd > 0 ? -9 : 9;
    return 0;
}

struct Generator {
    const Position& pos;
    MoveList& out;
    GenMode mode;
    Color us, them;
    Square king;
    bool checked;

    Generator(const Position& p, MoveList& o, GenMode m)
        : pos(p), out(o), mode(m), us(p.side_to_move()), them(opposite(us)),
          king(p.king_square(us)), checked(p.in_check()) {}

    void push_if_legal(Move m) {
        if (is_legal(m)) out.push(m);
    }

    // Legality for pseudo-legal moves. In check and for en passant we fall
    // back to make/test/unmake; otherwise king moves check the target square
    // with the king's origin transparent, and other moves only need a pin test.
    bool is_legal(const Move& m) {
        if (checked || m.is_en_passant()) {
            Position& p = const_cast<Position&>(pos);
            UndoInfo u = p.make_move(m);
            bool ok = !p.is_attacked(p.king_square(us), them);
            p.unmake_move(m, u);
            return ok;
        }
        if (m.from == king) {
            if (m.is_castle()) return true;  // transit squares vetted at generation
            return !pos.is_attacked(m.to, them, m.from);
        }
        int step = ray_step(king, m.from);
        if (step == 0) return true;
        // Anything between king and the moving piece breaks a potential pin.
        for (int s120 = TO120[static_cast<std::size_t>(king)] + step;
             TO64[static_cast<std::size_t>(s120)] != m.from; s120 += step)
            if (pos.piece_on(TO64[static_cast<std::size_t>(s120)]) != NoPiece) return true;
        // First piece beyond the mover: a matching enemy slider pins it.
        Square pinner = NO_SQUARE;
        for (int s120 = TO120[static_cast<std::size_t>(m.from)] + step;; s120 += step) {
            Square s = TO64[static_cast<std::size_t>(s120)];
            if (s < 0) return true;
            Piece p = pos.piece_on(s);
            if (p == NoPiece) continue;
            if (color_of(p) == us) return true;
            PieceType t = type_of(p);
            bool slides = t == PieceType::Queen ||
                          (is_diagonal_dir(step) ? t == PieceType::Bishop : t == PieceType::Rook);
            if (!slides) return true;
            pinner = s;
            break;
        }
        // Pinned: the move must stay on the king-pinner ray.
        if (ray_step(king, m.to) != step) return false;
        for (int s120 = TO120[static_cast<std::size_t>(king)] + step;; s120 += step) {
            Square s = TO64[static_cast<std::size_t>(s120)];
            if (s == m.to) return true;
            if (s == pinner) return false;
        }
    }

    bool tactical_only() const { return mode == GenMode::Tactical; }

    void pawn_moves(Square from) {
        const int fwd = us == Color::White ? 10 : -10;
        const int promo_rank = us == Color::White ? 7 : 0;
        const int start_rank = us == Color::White ? 1 : 6;
        const Piece pawn = pos.piece_on(from);
        const int from120 = TO120[static_cast<std::size_t>(from)];

        Square one = TO64[static_cast<std::size_t>(from120 + fwd)];
        if (one >= 0 && pos.piece_on(one) == NoPiece) {
            if (rank_of(one) == promo_rank) {
                push_promotions(from, one, NoPiece);
            } else if (!tactical_only()) {
                push_if_legal({static_cast<std::int8_t>(from), static_cast<std::int8_t>(one),
                               pawn, NoPiece, PieceType::None, 0});
                if (rank_of(from) == start_rank) {
                    Square two = TO64[static_cast<std::size_t>(from120 + 2 * fwd)];
                    if (pos.piece_on(two) == NoPiece)
                        push_if_legal({static_cast<std::int8_t>(from), static_cast<std::int8_t>(two),
                                       pawn, NoPiece, PieceType::None, Move::FlagDoublePush});
                }
            }
        }
        for (int d : {fwd - 1, fwd + 1}) {
            Square to = TO64[static_cast<std::size_t>(from120 + d)];
            if (to < 0) continue;
            Piece target = pos.piece_on(to);
            if (target != NoPiece && color_of(target) == them) {
                if (rank_of(to) == promo_rank)
                    push_promotions(from, to, target);
                else
                    push_if_legal({static_cast<std::int8_t>(from), static_cast<std::int8_t>(to),
                                   pawn, target, PieceType::None, 0});
            } else if (to == pos.en_passant_square()) {
                push_if_legal({static_cast<std::int8_t>(from), static_cast<std::int8_t>(to), pawn,
                               make_piece(them, PieceType::Pawn), PieceType::None,
                               Move::FlagEnPassant});
            }
        }
    }

    void push_promotions(Square from, Square to, Piece captured) {
        const Piece pawn = pos.piece_on(from);
        for (PieceType t : {PieceType::Queen, PieceType::Rook, PieceType::Bishop, PieceType::Knight}) {
            // Tactical mode keeps all capture promotions but only queen underpromotion-free pushes.
            if (tactical_only() && captured == NoPiece && t != PieceType::Queen) continue;
            push_if_legal({static_cast<std::int8_t>(from), static_cast<std::int8_t>(to), pawn,
                           captured, t, 0});
        }
    }

    template <std::size_t N>
    void leaper_moves(Square from, const std::array<int, N>& dirs) {
        const Piece piece = pos.piece_on(from);
        const int from120 = TO120[static_cast<std::size_t>(from)];
        for (int d : dirs) {
            Square to = TO64[static_cast<std::size_t>(from120 + d)];
            if (to < 0) continue;
            Piece target = pos.piece_on(to);
            if (target == NoPiece) {
                if (!tactical_only())
                    push_if_legal({static_cast<std::int8_t>(from), static_cast<std::int8_t>(to),
                                   piece, NoPiece, PieceType::None, 0});
            } else if (color_of(target) == them) {
                push_if_legal({static_cast<std::int8_t>(from), static_cast<std::int8_t>(to), piece,
                               target, PieceType::None, 0});
            }
        }
    }

    template <std::size_t N>
    void slider_moves(Square from, const std::array<int, N>& dirs) {
        const Piece piece = pos.piece_on(from);
        const int from120 = TO120[static_cast<std::size_t>(from)];
        for (int d : dirs) {
            for (int s120 = from120 + d;; s120 += d) {
                Square to = TO64[static_cast<std::size_t>(s120)];
                if (to < 0) break;
                Piece target = pos.piece_on(to);
                if (target == NoPiece) {
                    if (!tactical_only())
                        push_if_legal({static_cast<std::int8_t>(from), static_cast<std::int8_t>(to),
                                       piece, NoPiece, PieceType::None, 0});
                    continue;
                }
                if (color_of(target) == them)
                    push_if_legal({static_cast<std::int8_t>(from), static_cast<std::int8_t>(to),
                                   piece, target, PieceType::None, 0});
                break;
            }
        }
    }

    void castle_moves() {
        if (tactical_only() || checked) return;
        const std::uint8_t rights = pos.castling_rights();
        const int base = us == Color::White ? 0 : 56;
        const Piece kp = make_piece(us, PieceType::King);
        if ((rights & (us == Color::White ? CASTLE_WK : CASTLE_BK)) &&
            pos.piece_on(base + 5) == NoPiece && pos.piece_on(base + 6) == NoPiece &&
            pos.piece_on(base + 4) == kp &&
            pos.piece_on(base + 7) == make_piece(us, PieceType::Rook) &&
            !pos.is_attacked(base + 5, them) && !pos.is_attacked(base + 6, them)) {
            out.push({static_cast<std::int8_t>(base + 4), static_cast<std::int8_t>(base + 6), kp,
                      NoPiece, PieceType::None, Move::FlagCastle});
        }
        if ((rights & (us == Color::White ? CASTLE_WQ : CASTLE_BQ)) &&
            pos.piece_on(base + 1) == NoPiece && pos.piece_on(base + 2) == NoPiece &&
            pos.piece_on(base + 3) == NoPiece && pos.piece_on(base + 4) == kp &&
            pos.piece_on(base + 0) == make_piece(us, PieceType::Rook) &&
            !pos.is_attacked(base + 2, them) && !pos.is_attacked(base + 3, them)) {
            out.push({static_cast<std::int8_t>(base + 4), static_cast<std::int8_t>(base + 2), kp,
                      NoPiece, PieceType::None, Move::FlagCastle});
        }
    }

    void run() {
        for (Square from = 0; from < 64; ++from) {
            Piece p = pos.piece_on(from);
            if (p == NoPiece || color_of(p) != us) continue;
            switch (type_of(p)) {
                case PieceType::Pawn: pawn_moves(from); break;
                case PieceType::Knight: leaper_moves(from, KNIGHT_DIRS); break;
                case PieceType::Bishop: slider_moves(from, BISHOP_DIRS); break;
                case PieceType::Rook: slider_moves(from, ROOK_DIRS); break;
                case PieceType::Queen: slider_moves(from, KING_DIRS); break;
                case PieceType::King: leaper_moves(from, KING_DIRS); break;
                default: break;
            }
        }
        castle_moves();
    }
};

}  // namespace

void generate_moves(const Position& p, MoveList& out, GenMode mode) {
    out.count = 0;
    Generator{p, out, mode}.run();
}

std::uint64_t perft(Position& p, int depth) {
    if (depth <= 0) return 1;
    MoveList moves;
    generate_moves(p, moves);
    if (depth == 1) return static_cast<std::uint64_t>(moves.size());
    std::uint64_t total = 0;
    for (const Move& m : moves) {
        UndoInfo u = p.make_move(m);
        total += perft(p, depth - 1);
        p.unmake_move(m, u);
    }
    return total;
}

}  // namespace nmlab
