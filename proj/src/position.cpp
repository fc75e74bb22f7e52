#include "nmlab/position.hpp"

#include <cassert>
#include <cctype>
#include <sstream>
#include <vector>

#include "mailbox.hpp"
#include "nmlab/zobrist.hpp"

namespace nmlab {

namespace {

using mailbox::is_diagonal_dir;
using mailbox::KING_DIRS;
using mailbox::KNIGHT_DIRS;

constexpr auto& MAILBOX = mailbox::TO64;
constexpr auto& MAILBOX64 = mailbox::TO120;

constexpr const char* PIECE_CHARS = ".PNBRQKpnbrqk";

// Castling rights cleared when a move touches these squares.
constexpr std::array<std::uint8_t, 64> RIGHTS_MASK = [] {
    std::array<std::uint8_t, 64> m{};
    for (auto& v : m) v = 0xF;
    m[0] = 0xF & ~CASTLE_WQ;   // a1
    m[4] = 0xF & ~(CASTLE_WK | CASTLE_WQ);
    m[7] = 0xF & ~CASTLE_WK;   // h1
    m[56] = 0xF & ~CASTLE_BQ;  // a8
    m[60] = 0xF & ~(CASTLE_BK | CASTLE_BQ);
    m[63] = 0xF & ~CASTLE_BK;  // h8
    return m;
}();

}  // namespace

char piece_char(Piece p) { return PIECE_CHARS[p]; }

Piece piece_from_char(char c) {
    for (int i = 1; i <= 12; ++i)
        if (PIECE_CHARS[i] == c) return static_cast<Piece>(i);
    return NoPiece;
}

std::string square_name(Square s) {
    if (s == NO_SQUARE) return "-";
    return {static_cast<char>('a' + file_of(s)), static_cast<char>('1' + rank_of(s))};
}

Square square_from_name(std::string_view name) {
    if (name.size() != 2 || name[0] < 'a' || name[0] > 'h' || name[1] < '1' || name[1] > '8')
        return NO_SQUARE;
    return make_square(name[0] - 'a', name[1] - '1');
}

std::string move_uci(const Move& m) {
    if (m.is_null()) return "0000";
    std::string s = square_name(m.from) + square_name(m.to);
    if (m.promotion != PieceType::None)
        s += static_cast<char>(std::tolower(piece_char(make_piece(Color::White, m.promotion))));
    return s;
}

Position::Position() = default;

void Position::put_piece(Square s, Piece p) {
    board_[static_cast<std::size_t>(s)] = p;
    hash_ ^= zobrist::piece_key(p, s);
    if (type_of(p) == PieceType::King) king_[static_cast<std::size_t>(color_of(p))] = s;
}

void Position::remove_piece(Square s) {
    Piece p = board_[static_cast<std::size_t>(s)];
    hash_ ^= zobrist::piece_key(p, s);
    board_[static_cast<std::size_t>(s)] = NoPiece;
}

int Position::piece_count() const {
    int n = 0;
    for (Piece p : board_)
        if (p != NoPiece) ++n;
    return n;
}

bool Position::only_king_and_pawns(Color side) const {
    for (Piece p : board_) {
        if (p == NoPiece || color_of(p) != side) continue;
        PieceType t = type_of(p);
        if (t != PieceType::King && t != PieceType::Pawn) return false;
    }
    return true;
}

bool Position::is_attacked(Square s, Color by, Square ignored) const {
    const int s120 = MAILBOX64[static_cast<std::size_t>(s)];

    // Pawns: a white pawn on s-9/s-11 (mailbox) attacks s, and vice versa.
    if (by == Color::White) {
        for (int d : {-9, -11}) {
            int t = MAILBOX[static_cast<std::size_t>(s120 + d)];
            if (t >= 0 && t != ignored && board_[static_cast<std::size_t>(t)] == WPawn) return true;
        }
    } else {
        for (int d : {9, 11}) {
            int t = MAILBOX[static_cast<std::size_t>(s120 + d)];
            if (t >= 0 && t != ignored && board_[static_cast<std::size_t>(t)] == BPawn) return true;
        }
    }

    const Piece knight = make_piece(by, PieceType::Knight);
    for (int d : KNIGHT_DIRS) {
        int t = MAILBOX[static_cast<std::size_t>(s120 + d)];
        if (t >= 0 && t != ignored && board_[static_cast<std::size_t>(t)] == knight) return true;
    }

    const Piece king = make_piece(by, PieceType::King);
    for (int d : KING_DIRS) {
        int t = MAILBOX[static_cast<std::size_t>(s120 + d)];
        if (t >= 0 && t != ignored && board_[static_cast<std::size_t>(t)] == king) return true;
    }

    const Piece queen = make_piece(by, PieceType::Queen);
    const Piece rook = make_piece(by, PieceType::Rook);
    const Piece bishop = make_piece(by, PieceType::Bishop);
    for (int d : KING_DIRS) {
        for (int t120 = s120 + d;; t120 += d) {
            int t = MAILBOX[static_cast<std::size_t>(t120)];
            if (t < 0) break;
            Piece p = board_[static_cast<std::size_t>(t)];
            if (p == NoPiece || t == ignored) continue;
            if (p == queen || p == (is_diagonal_dir(d) ? bishop : rook)) return true;
            break;
        }
    }
    return false;
}

bool Position::in_check() const {
    return is_attacked(king_[static_cast<std::size_t>(stm_)], opposite(stm_));
}

UndoInfo Position::make_move(const Move& m) {
    assert(!m.is_null());
    UndoInfo u{castling_, ep_, halfmove_, hash_, m.captured, null_count_};

    if (ep_ != NO_SQUARE) {
        hash_ ^= zobrist::ep_key(file_of(ep_));
        ep_ = NO_SQUARE;
    }

    if (m.is_en_passant()) {
        Square cap_sq = m.to + (stm_ == Color::White ? -8 : 8);
        remove_piece(cap_sq);
    } else if (m.captured != NoPiece) {
        remove_piece(m.to);
    }

    remove_piece(m.from);
    put_piece(m.to, m.promotion == PieceType::None ? m.piece : make_piece(stm_, m.promotion));

    if (m.is_castle()) {
        // Move the rook: king-side f-file, queen-side d-file.
        Square rook_from = m.to > m.from ? m.to + 1 : m.to - 2;
        Square rook_to = m.to > m.from ? m.to - 1 : m.to + 1;
        Piece rook = board_[static_cast<std::size_t>(rook_from)];
        remove_piece(rook_from);
        put_piece(rook_to, rook);
    }

    if (m.is_double_push()) {
        ep_ = m.from + (stm_ == Color::White ? 8 : -8);
        hash_ ^= zobrist::ep_key(file_of(ep_));
    }

    std::uint8_t new_rights =
        castling_ & RIGHTS_MASK[static_cast<std::size_t>(m.from)] & RIGHTS_MASK[static_cast<std::size_t>(m.to)];
    if (new_rights != castling_) {
        hash_ ^= zobrist::castling_key(castling_) ^ zobrist::castling_key(new_rights);
        castling_ = new_rights;
    }

    if (type_of(m.piece) == PieceType::Pawn || m.captured != NoPiece)
        halfmove_ = 0;
    else
        ++halfmove_;

    stm_ = opposite(stm_);
    hash_ ^= zobrist::side_key();
    ++ply_;
    null_count_ = 0;
    return u;
}

void Position::unmake_move(const Move& m, const UndoInfo& u) {
    stm_ = opposite(stm_);
    --ply_;

    if (m.is_castle()) {
        Square rook_from = m.to > m.from ? m.to + 1 : m.to - 2;
        Square rook_to = m.to > m.from ? m.to - 1 : m.to + 1;
        Piece rook = board_[static_cast<std::size_t>(rook_to)];
        remove_piece(rook_to);
        put_piece(rook_from, rook);
    }

    remove_piece(m.to);
    put_piece(m.from, m.piece);

    if (m.is_en_passant()) {
        Square cap_sq = m.to + (stm_ == Color::White ? -8 : 8);
        put_piece(cap_sq, m.captured);
    } else if (m.captured != NoPiece) {
        put_piece(m.to, m.captured);
    }

    castling_ = u.castling;
    ep_ = u.en_passant;
    halfmove_ = u.halfmove_clock;
    hash_ = u.hash;
    null_count_ = u.null_count;
}

UndoInfo Position::make_null_move() {
    assert(!in_check());
    assert(null_count_ == 0);
    UndoInfo u{castling_, ep_, halfmove_, hash_, NoPiece, null_count_};
    if (ep_ != NO_SQUARE) {
        hash_ ^= zobrist::ep_key(file_of(ep_));
        ep_ = NO_SQUARE;
    }
    stm_ = opposite(stm_);
    hash_ ^= zobrist::side_key();
    ++ply_;
    null_count_ = 1;
    return u;
}

void Position::unmake_null_move(const UndoInfo& u) {
    stm_ = opposite(stm_);
    --ply_;
    castling_ = u.castling;
    ep_ = u.en_passant;
    halfmove_ = u.halfmove_clock;
    hash_ = u.hash;
    null_count_ = u.null_count;
}

Hash Position::compute_hash() const {
    Hash h = 0;
    for (Square s = 0; s < 64; ++s) {
        Piece p = board_[static_cast<std::size_t>(s)];
        if (p != NoPiece) h ^= zobrist::piece_key(p, s);
    }
    if (stm_ == Color::Black) h ^= zobrist::side_key();
    h ^= zobrist::castling_key(castling_);
    if (ep_ != NO_SQUARE) h ^= zobrist::ep_key(file_of(ep_));
    return h;
}

bool Position::operator==(const Position& o) const {
    return board_ == o.board_ && stm_ == o.stm_ && castling_ == o.castling_ && ep_ == o.ep_ &&
           halfmove_ == o.halfmove_ && ply_ == o.ply_ && hash_ == o.hash_ &&
           null_count_ == o.null_count_;
}

void Position::validate() const {
    int kings[2] = {0, 0};
    for (Square s = 0; s < 64; ++s) {
        Piece p = board_[static_cast<std::size_t>(s)];
        if (p == NoPiece) continue;
        PieceType t = type_of(p);
        if (t == PieceType::King) ++kings[static_cast<int>(color_of(p))];
        if (t == PieceType::Pawn && (rank_of(s) == 0 || rank_of(s) == 7))
            throw ParseError("placement", "pawn on rank " + std::to_string(rank_of(s) + 1));
    }
    if (kings[0] != 1)
        throw ParseError("placement", kings[0] == 0 ? "missing white king" : "multiple white kings");
    if (kings[1] != 1)
        throw ParseError("placement", kings[1] == 0 ? "missing black king" : "multiple black kings");
    if (ep_ != NO_SQUARE) {
        int r = rank_of(ep_);
        if (r != 2 && r != 5) throw ParseError("en-passant", "square not on rank 3 or 6");
        if (piece_on(ep_) != NoPiece) throw ParseError("en-passant", "square not empty");
    }
    // The side that just moved may not have left its king in check.
    Color not_to_move = opposite(stm_);
    if (is_attacked(king_[static_cast<std::size_t>(not_to_move)], stm_))
        throw ParseError("position", "side not to move is in check");
}

Position Position::startpos() {
    return from_fen("rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 1");
}

Position Position::from_fen(std::string_view fen) {
    std::istringstream in{std::string(fen)};
    std::vector<std::string> fields;
    std::string tok;
    while (in >> tok) fields.push_back(tok);
    if (fields.size() < 4 || fields.size() > 6)
        throw ParseError("fields", "expected 4 to 6 fields, got " + std::to_string(fields.size()));

    Position p;

    int rank = 7, file = 0;
    for (char c : fields[0]) {
        if (c == '/') {
            if (file != 8) throw ParseError("placement", "rank does not span 8 files");
            --rank;
            file = 0;
            if (rank < 0) throw ParseError("placement", "too many ranks");
            continue;
        }
        if (c >= '1' && c <= '8') {
            file += c - '0';
            if (file > 8) throw ParseError("placement", "rank exceeds 8 files");
            continue;
        }
        Piece pc = piece_from_char(c);
        if (pc == NoPiece) throw ParseError("placement", std::string("bad character '") + c + "'");
        if (file > 7) throw ParseError("placement", "rank exceeds 8 files");
        p.board_[static_cast<std::size_t>(make_square(file, rank))] = pc;
        if (type_of(pc) == PieceType::King)
            p.king_[static_cast<std::size_t>(color_of(pc))] = make_square(file, rank);
        ++file;
    }
    if (rank != 0 || file != 8) throw ParseError("placement", "expected 8 ranks of 8 files");

    if (fields[1] == "w")
        p.stm_ = Color::White;
    else if (fields[1] == "b")
        p.stm_ = Color::Black;
    else
        throw ParseError("side", "expected 'w' or 'b'");

    if (fields[2] != "-") {
        for (char c : fields[2]) {
            switch (c) {
                case 'K': p.castling_ |= CASTLE_WK; break;
                case 'Q': p.castling_ |= CASTLE_WQ; break;
                case 'k': p.castling_ |= CASTLE_BK; break;
                case 'q': p.castling_ |= CASTLE_BQ; break;
                default: throw ParseError("castling", std::string("bad character '") + c + "'");
            }
        }
    }

    if (fields[3] != "-") {
        p.ep_ = square_from_name(fields[3]);
        if (p.ep_ == NO_SQUARE) throw ParseError("en-passant", "bad square '" + fields[3] + "'");
    }

    try {
        if (fields.size() >= 5) p.halfmove_ = std::stoi(fields[4]);
        if (fields.size() >= 6) {
            int fullmove = std::stoi(fields[5]);
            if (fullmove < 1) throw ParseError("fullmove", "must be >= 1");
            p.ply_ = (fullmove - 1) * 2 + (p.stm_ == Color::Black ? 1 : 0);
        } else {
            p.ply_ = p.stm_ == Color::Black ? 1 : 0;
        }
    } catch (const std::invalid_argument&) {
        throw ParseError("clocks", "non-numeric clock field");
    } catch (const std::out_of_range&) {
        throw ParseError("clocks", "clock field out of range");
    }
    if (p.halfmove_ < 0) throw ParseError("halfmove", "must be >= 0");

    p.validate();
    p.hash_ = p.compute_hash();
    return p;
}

std::string Position::to_fen() const {
    std::string out;
    for (int r = 7; r >= 0; --r) {
        int empty = 0;
        for (int f = 0; f < 8; ++f) {
            Piece p = board_[static_cast<std::size_t>(make_square(f, r))];
            if (p == NoPiece) {
                ++empty;
            } else {
                if (empty) out += static_cast<char>('0' + empty);
                empty = 0;
                out += piece_char(p);
            }
        }
        if (empty) out += static_cast<char>('0' + empty);
        if (r) out += '/';
    }
    out += stm_ == Color::White ? " w " : " b ";
    if (!castling_) {
        out += '-';
    } else {
        if (castling_ & CASTLE_WK) out += 'K';
        if (castling_ & CASTLE_WQ) out += 'Q';
        if (castling_ & CASTLE_BK) out += 'k';
        if (castling_ & CASTLE_BQ) out += 'q';
    }
    out += ' ';
    out += square_name(ep_);
    out += ' ' + std::to_string(halfmove_) + ' ' + std::to_string(ply_ / 2 + 1);
    return out;
}

Position mirrored(const Position& p) {
    Position m;
    for (Square s = 0; s < 64; ++s) {
        Piece pc = p.board_[static_cast<std::size_t>(s)];
        if (pc == NoPiece) continue;
        Piece flipped = make_piece(opposite(color_of(pc)), type_of(pc));
        Square ms = mirror_rank(s);
        m.board_[static_cast<std::size_t>(ms)] = flipped;
        if (type_of(flipped) == PieceType::King)
            m.king_[static_cast<std::size_t>(color_of(flipped))] = ms;
    }
    m.stm_ = opposite(p.stm_);
    m.castling_ = static_cast<std::uint8_t>(((p.castling_ & 0x3) << 2) | ((p.castling_ >> 2) & 0x3));
    m.ep_ = p.ep_ == NO_SQUARE ? NO_SQUARE : mirror_rank(p.ep_);
    m.halfmove_ = p.halfmove_;
    m.ply_ = p.ply_;
    m.null_count_ = p.null_count_;
    m.hash_ = m.compute_hash();
    return m;
}

}  // namespace nmlab
