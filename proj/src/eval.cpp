#include "nmlab/eval.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace nmlab {

namespace {

// Grids below read like a diagram: first row is rank 8, files a..h.
using Grid = std::array<int, 64>;

constexpr Grid PAWN_GRID = {
      0,   0,   0,   0,   0,   0,   0,   0,
     50,  50,  50,  50,  50,  50,  50,  50,
     10,  10,  20,  30,  30,  20,  10,  10,
      5,   5,  10,  25,  25,  10,   5,   5,
      0,   0,   0,  20,  20,   0,   0,   0,
      5,  -5, -10,   0,   0, -10,  -5,   5,
      5,  10,  10, -20, -20,  10,  10,   5,
      0,   0,   0,   0,   0,   0,   0,   0,
};

constexpr Grid KNIGHT_GRID = {
    -50, -40, -30, -30, -30, -30, -40, -50,
    -40, -20,   0,   0,   0,   0, -20, -40,
    -30,   0,  10,  15,  15,  10,   0, -30,
    -30,   5,  15,  20,  20,  15,   5, -30,
    -30,   0,  15,  20,  20,  15,   0, -30,
    -30,   5,  10,  15,  15,  10,   5, -30,
    -40, -20,   0,   5,   5,   0, -20, -40,
    -50, -40, -30, -30, -30, -30, -40, -50,
};

constexpr Grid BISHOP_GRID = {
    -20, -10, -10, -10, -10, -10, -10, -20,
    -10,   0,   0,   0,   0,   0,   0, -10,
    -10,   0,   5,  10,  10,   5,   0, -10,
    -10,   5,   5,  10,  10,   5,   5, -10,
    -10,   0,  10,  10,  10,  10,   0, -10,
    -10,  10,  10,  10,  10,  10,  10, -10,
    -10,   5,   0,   0,   0,   0,   5, -10,
    -20, -10, -10, -10, -10, -10, -10, -20,
};

constexpr Grid ROOK_GRID = {
      0,   0,   0,   0,   0,   0,   0,   0,
      5,  10,  10,  10,  10,  10,  10,   5,
     -5,   0,   0,   0,   0,   0,   0,  -5,
     -5,   0,   0,   0,   0,   0,   0,  -5,
     -5,   0,   0,   0,   0,   0,   0,  -5,
     -5,   0,   0,   0,   0,   0,   0,  -5,
     -5,   0,   0,   0,   0,   0,   0,  -5,
      0,   0,   0,   5,   5,   0,   0,   0,
};

constexpr Grid QUEEN_GRID = {
    -20, -10, -10,  -5,  -5, -10, -10, -20,
    -10,   0,   0,   0,   0,   0,   0, -10,
    -10,   0,   5,   5,   5,   5,   0, -10,
     -5,   0,   5,   5,   5,   5,   0,  -5,
      0,   0,   5,   5,   5,   5,   0,  -5,
    -10,   5,   5,   5,   5,   5,   0, -10,
    -10,   0,   5,   0,   0,   0,   0, -10,
    -20, -10, -10,  -5,  -5, -10, -10, -20,
};

constexpr Grid KING_GRID = {
    -30, -40, -40, -50, -50, -40, -40, -30,
    -30, -40, -40, -50, -50, -40, -40, -30,
    -30, -40, -40, -50, -50, -40, -40, -30,
    -30, -40, -40, -50, -50, -40, -40, -30,
    -20, -30, -30, -40, -40, -30, -30, -20,
    -10, -20, -20, -20, -20, -20, -20, -10,
     20,  20,   0,   0,   0,   0,  20,  20,
     20,  30,  10,   0,   0,  10,  30,  20,
};

// Diagram row r (0 = rank 8), column c -> square index.
void grid_to_psq(const Grid& g, std::array<Score, 64>& psq) {
    for (int r = 0; r < 8; ++r)
        for (int c = 0; c < 8; ++c)
            psq[static_cast<std::size_t>(make_square(c, 7 - r))] = g[static_cast<std::size_t>(r * 8 + c)];
}

EvalParams make_defaults() {
    EvalParams p;
    p.material = {0, 100, 320, 330, 500, 900, 0};
    grid_to_psq(PAWN_GRID, p.psq[static_cast<std::size_t>(PieceType::Pawn)]);
    grid_to_psq(KNIGHT_GRID, p.psq[static_cast<std::size_t>(PieceType::Knight)]);
    grid_to_psq(BISHOP_GRID, p.psq[static_cast<std::size_t>(PieceType::Bishop)]);
    grid_to_psq(ROOK_GRID, p.psq[static_cast<std::size_t>(PieceType::Rook)]);
    grid_to_psq(QUEEN_GRID, p.psq[static_cast<std::size_t>(PieceType::Queen)]);
    grid_to_psq(KING_GRID, p.psq[static_cast<std::size_t>(PieceType::King)]);
    return p;
}

int piece_type_index(char c) {
    switch (c) {
        case 'P': return static_cast<int>(PieceType::Pawn);
        case 'N': return static_cast<int>(PieceType::Knight);
        case 'B': return static_cast<int>(PieceType::Bishop);
        case 'R': return static_cast<int>(PieceType::Rook);
        case 'Q': return static_cast<int>(PieceType::Queen);
        case 'K': return static_cast<int>(PieceType::King);
        default: return -1;
    }
}

}  // namespace

const EvalParams& EvalParams::defaults() {
    static const EvalParams p = make_defaults();
    return p;
}

EvalParams EvalParams::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open piece-square table file: " + path);

    EvalParams p;
    std::array<bool, 7> have_psq{};
    std::array<bool, 7> have_material{};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        if (kw == "material") {
            std::string pc;
            int v;
            if (!(ls >> pc >> v) || pc.size() != 1 || piece_type_index(pc[0]) < 0)
                throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad material line");
            p.material[static_cast<std::size_t>(piece_type_index(pc[0]))] = v;
            have_material[static_cast<std::size_t>(piece_type_index(pc[0]))] = true;
        } else if (kw == "psq") {
            std::string pc;
            if (!(ls >> pc) || pc.size() != 1 || piece_type_index(pc[0]) < 0)
                throw std::runtime_error(path + ":" + std::to_string(lineno) + ": bad psq header");
            Grid g{};
            for (int i = 0; i < 64;) {
                std::string row;
                if (!std::getline(in, row))
                    throw std::runtime_error(path + ": truncated psq grid for " + pc);
                ++lineno;
                auto h2 = row.find('#');
                if (h2 != std::string::npos) row.erase(h2);
                std::istringstream rs(row);
                int v;
                while (i < 64 && rs >> v) g[static_cast<std::size_t>(i++)] = v;
            }
            grid_to_psq(g, p.psq[static_cast<std::size_t>(piece_type_index(pc[0]))]);
            have_psq[static_cast<std::size_t>(piece_type_index(pc[0]))] = true;
        } else {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown keyword '" + kw + "'");
        }
    }
    for (int t = 1; t <= 6; ++t) {
        if (!have_psq[static_cast<std::size_t>(t)])
            throw std::runtime_error(path + ": missing psq grid for piece type " + std::to_string(t));
        if (t <= 5 && !have_material[static_cast<std::size_t>(t)])
            throw std::runtime_error(path + ": missing material value for piece type " + std::to_string(t));
    }
    return p;
}

Score evaluate(const Position& p, const EvalParams& params) {
    Score white = 0;
    for (Square s = 0; s < 64; ++s) {
        Piece pc = p.piece_on(s);
        if (pc == NoPiece) continue;
        auto t = static_cast<std::size_t>(type_of(pc));
        Score v = params.material[t];
        v += params.psq[t][static_cast<std::size_t>(color_of(pc) == Color::White ? s : mirror_rank(s))];
        white += color_of(pc) == Color::White ? v : -v;
    }
    return p.side_to_move() == Color::White ? white : -white;
}

bool is_tactical(const Move& m) {
    return m.is_capture() || m.promotion == PieceType::Queen;
}

}  // namespace nmlab
