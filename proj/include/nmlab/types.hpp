#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace nmlab {

enum class Color : std::uint8_t { White = 0, Black = 1 };

constexpr Color opposite(Color c) {
    return c == Color::White ? Color::Black : Color::White;
}

enum class PieceType : std::uint8_t { None = 0, Pawn, Knight, Bishop, Rook, Queen, King };

// Piece encodes kind and color in one byte; 0 is the empty square.
enum Piece : std::uint8_t {
    NoPiece = 0,
    WPawn, WKnight, WBishop, WRook, WQueen, WKing,
    BPawn, BKnight, BBishop, BRook, BQueen, BKing,
};

constexpr PieceType type_of(Piece p) {
    if (p == NoPiece) return PieceType::None;
    return static_cast<PieceType>(p <= WKing ? p : p - 6);
}

constexpr Color color_of(Piece p) {
    return p <= WKing ? Color::White : Color::Black;
}

constexpr Piece make_piece(Color c, PieceType t) {
    return static_cast<Piece>(static_cast<int>(t) + (c == Color::White ? 0 : 6));
}

char piece_char(Piece p);
Piece piece_from_char(char c);  // NoPiece if not a piece letter

// Squares are 0..63 with a1 = 0, h1 = 7, a8 = 56, h8 = 63.
using Square = int;
constexpr Square NO_SQUARE = -1;

constexpr int file_of(Square s) { return s & 7; }
constexpr int rank_of(Square s) { return s >> 3; }
constexpr Square make_square(int file, int rank) { return rank * 8 + file; }
constexpr Square mirror_rank(Square s) { return s ^ 56; }

std::string square_name(Square s);
Square square_from_name(std::string_view name);  // NO_SQUARE if malformed

using Hash = std::uint64_t;
using Score = int;

constexpr int MAX_PLY = 128;
constexpr Score MATE = 32000;
constexpr Score MATE_THRESHOLD = 30000;  // above this a score encodes a mate distance
constexpr Score SCORE_INF = MATE + 1;

static_assert(MATE_THRESHOLD < MATE - MAX_PLY);

constexpr Score mate_in(int ply) { return MATE - ply; }
constexpr Score mated_in(int ply) { return -MATE + ply; }
constexpr bool is_mate_score(Score s) { return s > MATE_THRESHOLD || s < -MATE_THRESHOLD; }

// Castling rights bit flags.
constexpr std::uint8_t CASTLE_WK = 1;
constexpr std::uint8_t CASTLE_WQ = 2;
constexpr std::uint8_t CASTLE_BK = 4;
constexpr std::uint8_t CASTLE_BQ = 8;

struct Move {
    std::int8_t from = -1;
    std::int8_t to = -1;
    Piece piece = NoPiece;
    Piece captured = NoPiece;
    PieceType promotion = PieceType::None;
    std::uint8_t flags = 0;

    enum Flag : std::uint8_t {
        FlagCastle = 1,
        FlagEnPassant = 2,
        FlagDoublePush = 4,
        FlagNull = 8,
    };

    constexpr bool is_none() const { return from < 0 && !(flags & FlagNull); }
    constexpr bool is_null() const { return flags & FlagNull; }
    constexpr bool is_castle() const { return flags & FlagCastle; }
    constexpr bool is_en_passant() const { return flags & FlagEnPassant; }
    constexpr bool is_double_push() const { return flags & FlagDoublePush; }
    constexpr bool is_capture() const { return captured != NoPiece; }
    constexpr bool is_quiet() const { return captured == NoPiece && promotion == PieceType::None; }

    constexpr bool operator==(const Move& o) const {
        return from == o.from && to == o.to && piece == o.piece &&
               captured == o.captured && promotion == o.promotion && flags == o.flags;
    }
};

// Long algebraic form, e.g. "e2e4", "e7e8q"; null move prints as "0000".
std::string move_uci(const Move& m);

struct MoveList {
    std::array<Move, 256> items;
    int count = 0;

    void push(const Move& m) { items[static_cast<std::size_t>(count++)] = m; }
    int size() const { return count; }
    bool empty() const { return count == 0; }
    Move& operator[](int i) { return items[static_cast<std::size_t>(i)]; }
    const Move& operator[](int i) const { return items[static_cast<std::size_t>(i)]; }
    Move* begin() { return items.data(); }
    Move* end() { return items.data() + count; }
    const Move* begin() const { return items.data(); }
    const Move* end() const { return items.data() + count; }
};

}  // namespace nmlab
