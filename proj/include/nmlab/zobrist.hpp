#pragma once

#include <array>
#include <cstdint>

#include "nmlab/types.hpp"

namespace nmlab::zobrist {

// All hash keys derive from this seed via splitmix64, so node counts and
// transposition behavior are reproducible across builds and runs.
constexpr std::uint64_t SEED = 0x8BADF00D5EED2026ULL;

constexpr std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace detail {

struct Keys {
    std::array<std::array<std::uint64_t, 64>, 12> piece{};
    std::uint64_t side = 0;
    std::array<std::uint64_t, 16> castling{};
    std::array<std::uint64_t, 8> ep_file{};
};

constexpr Keys make_keys() {
    Keys k{};
    std::uint64_t state = SEED;
    for (auto& per_piece : k.piece)
        for (auto& v : per_piece) v = splitmix64(state);
    k.side = splitmix64(state);
    for (auto& v : k.castling) v = splitmix64(state);
    for (auto& v : k.ep_file) v = splitmix64(state);
    return k;
}

inline constexpr Keys KEYS = make_keys();

}  // namespace detail

inline constexpr std::uint64_t piece_key(Piece p, Square s) {
    return detail::KEYS.piece[static_cast<std::size_t>(p - 1)][static_cast<std::size_t>(s)];
}
inline constexpr std::uint64_t side_key() { return detail::KEYS.side; }
inline constexpr std::uint64_t castling_key(std::uint8_t rights) {
    return detail::KEYS.castling[rights];
}
inline constexpr std::uint64_t ep_key(int file) {
    return detail::KEYS.ep_file[static_cast<std::size_t>(file)];
}

}  // namespace nmlab::zobrist
