#include "nmlab/san.hpp"

#include <cctype>

#include "nmlab/movegen.hpp"

namespace nmlab {

namespace {

char piece_letter(PieceType t) {
    switch (t) {
        case PieceType::Knight: return 'N';
        case PieceType::Bishop: return 'B';
        case PieceType::Rook: return 'R';
        case PieceType::Queen: return 'Q';
        case PieceType::King: return 'K';
        default: return '\0';
    }
}

PieceType piece_from_letter(char c) {
    switch (c) {
        case 'N': return PieceType::Knight;
        case 'B': return PieceType::Bishop;
        case 'R': return PieceType::Rook;
        case 'Q': return PieceType::Queen;
        case 'K': return PieceType::King;
        default: return PieceType::None;
    }
}

// Check / mate suffix requires a peek at the position after the move.
std::string check_suffix(const Position& p, const Move& m) {
    Position& mut = const_cast<Position&>(p);
    UndoInfo u = mut.make_move(m);
    std::string suffix;
    if (mut.in_check()) {
        MoveList replies;
        generate_moves(mut, replies);
        suffix = replies.empty() ? "#" : "+";
    }
    mut.unmake_move(m, u);
    return suffix;
}

}  // namespace

std::string to_san(const Position& p, const Move& m) {
    if (m.is_castle()) return (m.to > m.from ? "O-O" : "O-O-O") + check_suffix(p, m);

    const PieceType t = type_of(m.piece);
    std::string out;
    if (t == PieceType::Pawn) {
        if (m.is_capture()) {
            out += static_cast<char>('a' + file_of(m.from));
            out += 'x';
        }
        out += square_name(m.to);
        if (m.promotion != PieceType::None) {
            out += '=';
            out += piece_letter(m.promotion);
        }
        return out + check_suffix(p, m);
    }

    out += piece_letter(t);

    // Disambiguate among same-type pieces that can legally reach the target.
    MoveList legal;
    generate_moves(p, legal);
    bool need_file = false, need_rank = false, clash = false;
    for (const Move& o : legal) {
        if (o == m || o.to != m.to || type_of(o.piece) != t || o.from == m.from) continue;
        clash = true;
        if (file_of(o.from) == file_of(m.from)) need_rank = true;
        if (rank_of(o.from) == rank_of(m.from)) need_file = true;
    }
    if (clash && !need_file && !need_rank) need_file = true;
    if (need_file) out += static_cast<char>('a' + file_of(m.from));
    if (need_rank) out += static_cast<char>('1' + rank_of(m.from));

    if (m.is_capture()) out += 'x';
    out += square_name(m.to);
    return out + check_suffix(p, m);
}

Move parse_san(const Position& p, std::string_view san) {
    // Strip annotations: check/mate marks, !? marks, "e.p." suffix.
    std::string s;
    for (char c : san) {
        if (c == '+' || c == '#' || c == '!' || c == '?') continue;
        s += c;
    }
    if (s.size() > 4 && s.compare(s.size() - 4, 4, "e.p.") == 0) s.erase(s.size() - 4);
    while (!s.empty() && s.back() == ' ') s.pop_back();
    if (s.empty()) throw SanError(SanError::Kind::Malformed, "empty SAN token");

    MoveList legal;
    generate_moves(p, legal);

    if (s == "O-O" || s == "0-0" || s == "O-O-O" || s == "0-0-0") {
        bool king_side = s == "O-O" || s == "0-0";
        for (const Move& m : legal)
            if (m.is_castle() && (m.to > m.from) == king_side) return m;
        throw SanError(SanError::Kind::NoMatch, "castling move '" + std::string(san) + "' is not legal");
    }

    PieceType piece = PieceType::Pawn;
    std::size_t i = 0;
    if (i < s.size() && piece_from_letter(s[i]) != PieceType::None) piece = piece_from_letter(s[i++]);

    // Optional promotion tail: "=Q" or bare "Q".
    PieceType promo = PieceType::None;
    if (s.size() >= 2) {
        char last = s.back();
        PieceType pt = piece_from_letter(last);
        if (piece == PieceType::Pawn && pt != PieceType::None && pt != PieceType::King) {
            promo = pt;
            s.pop_back();
            if (!s.empty() && s.back() == '=') s.pop_back();
        }
    }

    if (s.size() < i + 2) throw SanError(SanError::Kind::Malformed, "bad SAN token '" + std::string(san) + "'");
    Square to = square_from_name(std::string_view(s).substr(s.size() - 2));
    if (to == NO_SQUARE)
        throw SanError(SanError::Kind::Malformed, "bad target square in '" + std::string(san) + "'");

    int from_file = -1, from_rank = -1;
    bool capture_mark = false;
    for (std::size_t j = i; j + 2 < s.size(); ++j) {
        char c = s[j];
        if (c == 'x') capture_mark = true;
        else if (c >= 'a' && c <= 'h') from_file = c - 'a';
        else if (c >= '1' && c <= '8') from_rank = c - '1';
        else throw SanError(SanError::Kind::Malformed, "bad SAN token '" + std::string(san) + "'");
    }

    Move found{};
    int matches = 0;
    for (const Move& m : legal) {
        if (m.is_castle() || type_of(m.piece) != piece || m.to != to) continue;
        if (m.promotion != promo) continue;
        if (from_file >= 0 && file_of(m.from) != from_file) continue;
        if (from_rank >= 0 && rank_of(m.from) != from_rank) continue;
        if (capture_mark && !m.is_capture()) continue;
        found = m;
        ++matches;
    }
    if (matches == 1) return found;
    if (matches == 0)
        throw SanError(SanError::Kind::NoMatch, "no legal move matches '" + std::string(san) + "'");
    throw SanError(SanError::Kind::Ambiguous,
                   "'" + std::string(san) + "' is ambiguous; disambiguation required");
}

}  // namespace nmlab
