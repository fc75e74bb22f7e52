#pragma once

#include <chrono>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nmlab/eval.hpp"
#include "nmlab/movegen.hpp"
#include "nmlab/policy.hpp"
#include "nmlab/position.hpp"
#include "nmlab/tt.hpp"
#include "nmlab/types.hpp"

namespace nmlab {

struct SearchLimits {
    int max_depth = 0;            // plies; 0 = unlimited
    std::uint64_t max_nodes = 0;  // 0 = unlimited
    int max_time_ms = 0;          // 0 = unlimited (time limits are not deterministic)
};

struct SearchConfig {
    PruningPolicy policy = PruningPolicy::verified(3);
    std::size_t tt_bytes = 16ull << 20;
    bool use_killers = false;
    bool check_extension = true;
};

struct IterationStat {
    int depth = 0;
    std::uint64_t nodes = 0;  // nodes consumed by this iteration
    Score value = 0;
    Move best{};

    bool operator==(const IterationStat&) const = default;
};

struct SearchStats {
    std::uint64_t full_nodes = 0;
    std::uint64_t quiescence_nodes = 0;
    std::uint64_t null_attempts = 0;
    std::uint64_t null_fail_highs = 0;
    std::uint64_t verified_researches = 0;  // zugzwang detections
    std::uint64_t tt_probes = 0;
    std::uint64_t tt_hits = 0;
    std::uint64_t entries = 0;  // independent count of node entries, cross-checks total()
    std::vector<IterationStat> iterations;

    std::uint64_t total() const { return full_nodes + quiescence_nodes; }

    bool operator==(const SearchStats&) const = default;
};

struct SearchResult {
    Move best{};
    Score value = 0;
    std::vector<Move> pv;
    SearchStats stats;
    bool zugzwang_research = false;  // any verified re-search occurred
    bool completed = true;           // false when a limit cut the last iteration short

    bool operator==(const SearchResult&) const = default;
};

// Root position has no legal moves; carries which terminal state it is.
struct NoMovesError : std::runtime_error {
    bool checkmate;
    explicit NoMovesError(bool checkmate_)
        : std::runtime_error(checkmate_ ? "no legal moves: checkmate" : "no legal moves: stalemate"),
          checkmate(checkmate_) {}
};

struct HistoryTable {
    static constexpr int MAX = (1 << 20) - 1;
    std::vector<std::int32_t> table = std::vector<std::int32_t>(2 * 64 * 64, 0);

    std::int32_t& at(Color c, Square from, Square to) {
        return table[(static_cast<std::size_t>(c) << 12) | (static_cast<std::size_t>(from) << 6) |
                     static_cast<std::size_t>(to)];
    }
    void bonus(Color c, Square from, Square to, int depth) {
        auto& v = at(c, from, to);
        v = std::min<std::int32_t>(MAX, v + depth * depth);
    }
    void clear() { std::fill(table.begin(), table.end(), 0); }
};

// One searcher owns one position, transposition table, history and killer
// state; it is strictly single-threaded. Independent instances can run
// concurrently.
class Searcher {
public:
    explicit Searcher(SearchConfig cfg = {}, const EvalParams* params = nullptr);

    // Iterative deepening from depth 1 to the depth limit. The first
    // iteration always completes so there is always a move to return; a node
    // or time limit expiring mid-iteration discards that iteration. Throws
    // NoMovesError on terminal positions and std::invalid_argument when no
    // limit is set or the depth limit is out of range.
    // `history` supplies hashes of earlier game positions for repetition
    // detection along the search path.
    SearchResult search_root(const Position& root, const SearchLimits& limits,
                             std::span<const Hash> history = {});

    const SearchConfig& config() const { return cfg_; }

    // Test hook: quiescence value of a position under this searcher's config.
    Score quiescence_value(const Position& p, Score alpha = -SCORE_INF, Score beta = SCORE_INF,
                           int ply = 0);

private:
    Score search(Score alpha, Score beta, int depth, int ply, bool verify, bool is_pv);
    Score quiesce(Score alpha, Score beta, int ply);

    void order_moves(MoveList& moves, const Move& tt_move, const Move& prev_best, int ply);
    Move decode_tt_move(const MoveList& legal, std::uint16_t packed) const;
    bool repetition_on_path(int ply) const;
    void check_stop();
    void pv_reset(int ply) { if (ply < MAX_PLY) pv_len_[static_cast<std::size_t>(ply)] = 0; }
    void pv_update(int ply, const Move& m);

    SearchConfig cfg_;
    const EvalParams* params_;
    Position pos_;
    TranspositionTable tt_;
    HistoryTable history_;
    std::array<std::array<Move, 2>, MAX_PLY> killers_{};
    SearchStats stats_;

    std::array<Hash, MAX_PLY + 1> path_{};
    std::vector<Hash> prefix_;

    std::array<std::array<Move, MAX_PLY>, MAX_PLY> pv_{};
    std::array<int, MAX_PLY> pv_len_{};

    std::uint64_t node_budget_ = 0;
    std::chrono::steady_clock::time_point deadline_{};
    bool has_deadline_ = false;
    bool allow_stop_ = false;
    bool stopped_ = false;
};

}  // namespace nmlab
