#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "nmlab/types.hpp"

namespace nmlab {

// Thrown by FEN/EPD parsing; names the offending field.
struct ParseError : std::runtime_error {
    std::string field;
    ParseError(std::string field_, const std::string& message)
        : std::runtime_error(field_ + ": " + message), field(std::move(field_)) {}
};

struct UndoInfo {
    std::uint8_t castling = 0;
    Square en_passant = NO_SQUARE;
    int halfmove_clock = 0;
    Hash hash = 0;
    Piece captured = NoPiece;
    int null_count = 0;
};

class Position {
public:
    Position();

    static Position startpos();
    // Accepts 4- to 6-field FEN; clocks default to 0 / 1 when absent.
    static Position from_fen(std::string_view fen);
    std::string to_fen() const;

    Piece piece_on(Square s) const { return board_[static_cast<std::size_t>(s)]; }
    Color side_to_move() const { return stm_; }
    std::uint8_t castling_rights() const { return castling_; }
    Square en_passant_square() const { return ep_; }
    int halfmove_clock() const { return halfmove_; }
    int game_ply() const { return ply_; }
    Hash hash() const { return hash_; }
    int null_count() const { return null_count_; }
    Square king_square(Color c) const { return king_[static_cast<std::size_t>(c)]; }
    int piece_count() const;

    UndoInfo make_move(const Move& m);
    void unmake_move(const Move& m, const UndoInfo& u);

    // Pre: side to move not in check and null_count() == 0.
    UndoInfo make_null_move();
    void unmake_null_move(const UndoInfo& u);

    bool in_check() const;
    // True if `s` is attacked by `by`; `ignored` is treated as empty (used
    // for king-move legality along the escape ray).
    bool is_attacked(Square s, Color by, Square ignored = NO_SQUARE) const;
    bool only_king_and_pawns(Color side) const;

    Hash compute_hash() const;  // from scratch; equals hash() for a valid Position

    bool operator==(const Position& o) const;

private:
    friend Position mirrored(const Position&);

    void put_piece(Square s, Piece p);
    void remove_piece(Square s);
    void validate() const;  // throws ParseError on invariant violations

    std::array<Piece, 64> board_{};
    Color stm_ = Color::White;
    std::uint8_t castling_ = 0;
    Square ep_ = NO_SQUARE;
    int halfmove_ = 0;
    int ply_ = 0;
    Hash hash_ = 0;
    int null_count_ = 0;
    std::array<Square, 2> king_{NO_SQUARE, NO_SQUARE};
};

// Vertical mirror with colors, side to move, castling rights and en-passant
// square swapped accordingly. Used by evaluation symmetry checks.
Position mirrored(const Position& p);

}  // namespace nmlab
