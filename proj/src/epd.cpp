#include "nmlab/epd.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "nmlab/san.hpp"

namespace nmlab {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

}  // namespace

EpdRecord parse_epd(const std::string& line, int lineno) {
    std::istringstream in(line);
    std::string placement, side, castling, ep;
    if (!(in >> placement >> side >> castling >> ep))
        throw ParseError("fields", "EPD line needs 4 position fields");

    std::string rest;
    std::getline(in, rest);

    EpdRecord rec;
    rec.id = "L" + std::to_string(lineno);

    // First pass over opcodes to pick up clocks and the id.
    std::vector<std::pair<std::string, std::string>> ops;
    std::istringstream ops_in(rest);
    std::string section;
    while (std::getline(ops_in, section, ';')) {
        section = trim(section);
        if (section.empty()) continue;
        auto sp = section.find_first_of(" \t");
        std::string opcode = sp == std::string::npos ? section : section.substr(0, sp);
        std::string operand = sp == std::string::npos ? "" : trim(section.substr(sp + 1));
        ops.emplace_back(opcode, operand);
    }

    std::string hmvc = "0", fmvn = "1";
    for (auto& [op, arg] : ops) {
        if (op == "hmvc") hmvc = arg;
        if (op == "fmvn") fmvn = arg;
        if (op == "id") {
            std::string v = arg;
            if (v.size() >= 2 && v.front() == '"' && v.back() == '"') v = v.substr(1, v.size() - 2);
            rec.id = v;
        }
    }

    rec.pos = Position::from_fen(placement + " " + side + " " + castling + " " + ep + " " + hmvc +
                                 " " + fmvn);

    auto parse_moves = [&](const std::string& arg, const char* op) {
        std::vector<Move> moves;
        for (const std::string& san : split_ws(arg)) {
            try {
                moves.push_back(parse_san(rec.pos, san));
            } catch (const SanError& e) {
                throw std::runtime_error("record " + rec.id + ": " + op + " '" + san +
                                         "': " + e.what());
            }
        }
        return moves;
    };

    for (auto& [op, arg] : ops) {
        if (op == "bm") {
            rec.best_moves = parse_moves(arg, "bm");
        } else if (op == "am") {
            rec.avoid_moves = parse_moves(arg, "am");
        } else if (op == "dm") {
            try {
                rec.direct_mate = std::stoi(arg);
            } catch (...) {
                throw std::runtime_error("record " + rec.id + ": dm operand '" + arg +
                                         "' is not a number");
            }
        } else if (op == "hmvc" || op == "fmvn" || op == "id") {
            // consumed above; keep id/clock info out of other_ops
        } else {
            rec.other_ops.emplace_back(op, arg);
        }
    }

    for (const Move& b : rec.best_moves)
        if (std::find(rec.avoid_moves.begin(), rec.avoid_moves.end(), b) != rec.avoid_moves.end())
            throw std::runtime_error("record " + rec.id + ": bm and am sets overlap");

    return rec;
}

std::string EpdRecord::to_epd() const {
    std::string fen = pos.to_fen();
    // Drop the clock fields; they travel as opcodes in EPD.
    auto sp = fen.rfind(' ');
    sp = fen.rfind(' ', sp - 1);
    std::string out = fen.substr(0, sp);

    auto add_moves = [&](const char* op, const std::vector<Move>& moves) {
        if (moves.empty()) return;
        out += ' ';
        out += op;
        for (const Move& m : moves) out += ' ' + to_san(pos, m);
        out += ';';
    };
    add_moves("bm", best_moves);
    add_moves("am", avoid_moves);
    if (direct_mate) out += " dm " + std::to_string(*direct_mate) + ';';
    out += " id \"" + id + "\";";
    for (auto& [op, arg] : other_ops) {
        out += ' ' + op;
        if (!arg.empty()) out += ' ' + arg;
        out += ';';
    }
    if (pos.halfmove_clock() != 0) out += " hmvc " + std::to_string(pos.halfmove_clock()) + ';';
    if (pos.game_ply() / 2 + 1 != 1) out += " fmvn " + std::to_string(pos.game_ply() / 2 + 1) + ';';
    return out;
}

EpdFile load_epd_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open suite file: " + path);
    EpdFile out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (trim(line).empty()) continue;
        try {
            out.records.push_back(parse_epd(line, lineno));
        } catch (const std::exception& e) {
            out.errors.push_back(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace nmlab
