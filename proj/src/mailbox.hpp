#pragma once

#include <array>

// 10x12 mailbox tables shared by move generation and attack detection.

namespace nmlab::mailbox {

constexpr std::array<int, 120> TO64 = [] {
    std::array<int, 120> m{};
    for (auto& v : m) v = -1;
    for (int r = 0; r < 8; ++r)
        for (int f = 0; f < 8; ++f) m[static_cast<std::size_t>(21 + r * 10 + f)] = r * 8 + f;
    return m;
}();

constexpr std::array<int, 64> TO120 = [] {
    std::array<int, 64> m{};
    for (int r = 0; r < 8; ++r)
        for (int f = 0; f < 8; ++f) m[static_cast<std::size_t>(r * 8 + f)] = 21 + r * 10 + f;
    return m;
}();

constexpr std::array<int, 8> KNIGHT_DIRS = {-21, -19, -12, -8, 8, 12, 19, 21};
constexpr std::array<int, 4> BISHOP_DIRS = {-11, -9, 9, 11};
constexpr std::array<int, 4> ROOK_DIRS = {-10, -1, 1, 10};
constexpr std::array<int, 8> KING_DIRS = {-11, -10, -9, -1, 1, 9, 10, 11};

constexpr bool is_diagonal_dir(int d) { return d == -11 || d == -9 || d == 9 || d == 11; }

}  // namespace nmlab::mailbox
