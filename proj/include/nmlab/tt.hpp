#pragma once

#include <cstdint>
#include <vector>

#include "nmlab/types.hpp"

namespace nmlab {

enum class Bound : std::uint8_t { Exact, Lower, Upper };

struct TTEntry {
    Hash key = 0;
    std::int16_t value = 0;      // mate scores stored relative to the node
    std::uint16_t move = 0;      // from | to << 6 | promotion << 12; 0 = none
    std::int8_t draft = 0;
    Bound bound = Bound::Exact;
    std::uint8_t generation = 0;  // 0 marks an empty slot
};

static_assert(sizeof(TTEntry) == 16);

constexpr std::uint16_t pack_tt_move(const Move& m) {
    if (m.is_none()) return 0;
    return static_cast<std::uint16_t>(m.from | (m.to << 6) |
                                      (static_cast<int>(m.promotion) << 12));
}

// Two-slot buckets: slot 0 is depth-preferred with generation aging,
// slot 1 always replaces.
class TranspositionTable {
public:
    explicit TranspositionTable(std::size_t bytes = 0) { resize(bytes); }

    void resize(std::size_t bytes);
    void clear();
    void new_generation() { if (++generation_ == 0) generation_ = 1; }

    bool enabled() const { return bucket_count_ != 0; }
    std::size_t bucket_count() const { return bucket_count_; }

    bool probe(Hash key, TTEntry& out) const;
    void store(Hash key, int draft, Score value, Bound bound, const Move& move);

private:
    std::vector<TTEntry> slots_;
    std::size_t bucket_count_ = 0;
    std::uint8_t generation_ = 1;
};

// Mate scores are stored relative to the probing node so that a cached mate
// line keeps the right distance regardless of where it is reused.
constexpr Score score_to_tt(Score s, int ply) {
    if (s > MATE_THRESHOLD) return s + ply;
    if (s < -MATE_THRESHOLD) return s - ply;
    return s;
}

constexpr Score score_from_tt(Score s, int ply) {
    if (s > MATE_THRESHOLD) return s - ply;
    if (s < -MATE_THRESHOLD) return s + ply;
    return s;
}

}  // namespace nmlab
