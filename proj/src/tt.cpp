#include "nmlab/tt.hpp"

#include <algorithm>
#include <bit>

namespace nmlab {

void TranspositionTable::resize(std::size_t bytes) {
    std::size_t buckets = bytes / (2 * sizeof(TTEntry));
    if (buckets == 0) {
        slots_.clear();
        bucket_count_ = 0;
        return;
    }
    bucket_count_ = std::bit_floor(buckets);
    slots_.assign(bucket_count_ * 2, TTEntry{});
    generation_ = 1;
}

void TranspositionTable::clear() {
    std::fill(slots_.begin(), slots_.end(), TTEntry{});
    generation_ = 1;
}

bool TranspositionTable::probe(Hash key, TTEntry& out) const {
    if (!enabled()) return false;
    const std::size_t b = (key & (bucket_count_ - 1)) * 2;
    for (std::size_t i = b; i < b + 2; ++i) {
        if (slots_[i].generation != 0 && slots_[i].key == key) {
            out = slots_[i];
            return true;
        }
    }
    return false;
}

void TranspositionTable::store(Hash key, int draft, Score value, Bound bound, const Move& move) {
    if (!enabled()) return;
    const std::size_t b = (key & (bucket_count_ - 1)) * 2;
    TTEntry entry{key,
                  static_cast<std::int16_t>(value),
                  pack_tt_move(move),
                  static_cast<std::int8_t>(std::clamp(draft, 0, 127)),
                  bound,
                  generation_};

    TTEntry& primary = slots_[b];
    if (primary.generation == 0 || primary.key == key || primary.generation != generation_ ||
        entry.draft >= primary.draft) {
        if (primary.generation != 0 && primary.key != key) slots_[b + 1] = primary;
        primary = entry;
    } else {
        slots_[b + 1] = entry;
    }
}

}  // namespace nmlab
