#include "nmlab/search.hpp"

#include <algorithm>
#include <cassert>

namespace nmlab {

namespace {

constexpr int SCORE_PREV_BEST = 1 << 30;
constexpr int SCORE_TT_MOVE = 1 << 29;
constexpr int SCORE_CAPTURE_BASE = 1 << 26;
constexpr int SCORE_QUIET_PROMO = 1 << 25;
constexpr int SCORE_KILLER_1 = 1 << 24;
constexpr int SCORE_KILLER_2 = SCORE_KILLER_1 - 1;

int capture_score(const Move& m, const EvalParams& params) {
    // MVV/LVA: most valuable victim first, cheapest attacker as tie-break.
    int victim = params.material[static_cast<std::size_t>(type_of(m.captured))];
    int attacker = params.material[static_cast<std::size_t>(type_of(m.piece))];
    int promo = m.promotion == PieceType::None
                    ? 0
                    : params.material[static_cast<std::size_t>(m.promotion)];
    return SCORE_CAPTURE_BASE + victim * 32 + promo * 16 + (1000 - attacker);
}

}  // namespace

Searcher::Searcher(SearchConfig cfg, const EvalParams* params)
    : cfg_(cfg), params_(params ? params : &EvalParams::defaults()), tt_(cfg.tt_bytes) {
    if (cfg_.policy.reduction < 1) throw std::invalid_argument("policy reduction must be >= 1");
}

void Searcher::check_stop() {
    if (!allow_stop_ || stopped_) return;
    if (node_budget_ && stats_.total() >= node_budget_) {
        stopped_ = true;
        return;
    }
    if (has_deadline_ && (stats_.total() & 1023) == 0 &&
        std::chrono::steady_clock::now() >= deadline_) {
        stopped_ = true;
    }
}

bool Searcher::repetition_on_path(int ply) const {
    const Hash current = pos_.hash();
    const int clock = pos_.halfmove_clock();
    // Twofold along the path: same hash at the same side to move, within the
    // span of reversible moves. Earlier game positions count via the prefix.
    for (int back = 4; back <= clock; back += 2) {
        int i = ply - back;
        Hash h;
        if (i >= 0) {
            h = path_[static_cast<std::size_t>(i)];
        } else {
            int j = static_cast<int>(prefix_.size()) + i;
            if (j < 0) break;
            h = prefix_[static_cast<std::size_t>(j)];
        }
        if (h == current) return true;
    }
    return false;
}

void Searcher::pv_update(int ply, const Move& m) {
    if (ply + 1 >= MAX_PLY) return;
    auto p = static_cast<std::size_t>(ply);
    pv_[p][0] = m;
    int child_len = pv_len_[p + 1];
    for (int i = 0; i < child_len && i + 1 < MAX_PLY; ++i) pv_[p][static_cast<std::size_t>(i + 1)] = pv_[p + 1][static_cast<std::size_t>(i)];
    pv_len_[p] = std::min(child_len + 1, MAX_PLY - 1);
}

Move Searcher::decode_tt_move(const MoveList& legal, std::uint16_t packed) const {
    if (packed == 0) return {};
    int from = packed & 63;
    int to = (packed >> 6) & 63;
    auto promo = static_cast<PieceType>((packed >> 12) & 7);
    for (const Move& m : legal)
        if (m.from == from && m.to == to && m.promotion == promo) return m;
    return {};
}

void Searcher::order_moves(MoveList& moves, const Move& tt_move, const Move& prev_best, int ply) {
    std::array<int, 256> scores;
    const Color us = pos_.side_to_move();
    for (int i = 0; i < moves.size(); ++i) {
        const Move& m = moves[i];
        int s;
        if (!prev_best.is_none() && m == prev_best) {
            s = SCORE_PREV_BEST;
        } else if (!tt_move.is_none() && m == tt_move) {
            s = SCORE_TT_MOVE;
        } else if (m.is_capture()) {
            s = capture_score(m, *params_);
        } else if (m.promotion != PieceType::None) {
            s = SCORE_QUIET_PROMO + params_->material[static_cast<std::size_t>(m.promotion)];
        } else if (cfg_.use_killers && ply < MAX_PLY && m == killers_[static_cast<std::size_t>(ply)][0]) {
            s = SCORE_KILLER_1;
        } else if (cfg_.use_killers && ply < MAX_PLY && m == killers_[static_cast<std::size_t>(ply)][1]) {
            s = SCORE_KILLER_2;
        } else {
            s = history_.at(us, m.from, m.to);
        }
        scores[static_cast<std::size_t>(i)] = s;
    }
    // Insertion sort, stable: equal scores keep generation order.
    for (int i = 1; i < moves.size(); ++i) {
        Move m = moves[i];
        int s = scores[static_cast<std::size_t>(i)];
        int j = i - 1;
        while (j >= 0 && scores[static_cast<std::size_t>(j)] < s) {
            moves[j + 1] = moves[j];
            scores[static_cast<std::size_t>(j + 1)] = scores[static_cast<std::size_t>(j)];
            --j;
        }
        moves[j + 1] = m;
        scores[static_cast<std::size_t>(j + 1)] = s;
    }
}

Score Searcher::quiesce(Score alpha, Score beta, int ply) {
    ++stats_.quiescence_nodes;
    ++stats_.entries;
    check_stop();
    if (stopped_) return 0;
    pv_reset(ply);

    const Score stand_pat = evaluate(pos_, *params_);
    if (ply >= MAX_PLY) return stand_pat;

    Score best = stand_pat;  // fail-soft floor: doing nothing is a candidate
    if (best >= beta) return best;
    if (best > alpha) alpha = best;

    MoveList moves;
    generate_moves(pos_, moves, GenMode::Tactical);
    order_moves(moves, {}, {}, ply);

    for (const Move& m : moves) {
        UndoInfo u = pos_.make_move(m);
        Score v = -quiesce(-beta, -alpha, ply + 1);
        pos_.unmake_move(m, u);
        if (stopped_) return 0;
        if (v > best) best = v;
        if (best > alpha) alpha = best;
        if (alpha >= beta) break;
    }
    return best;
}

Score Searcher::search(Score alpha, Score beta, int depth, int ply, bool verify, bool is_pv) {
    const bool in_chk = pos_.in_check();

    if (depth <= 0) {
        if (!in_chk || !cfg_.check_extension || ply >= MAX_PLY)
            return quiesce(alpha, beta, ply);
        depth = 1;  // one-ply check extension at the leaf boundary
    }

    ++stats_.full_nodes;
    ++stats_.entries;
    check_stop();
    if (stopped_) return 0;
    pv_reset(ply);

    path_[static_cast<std::size_t>(ply)] = pos_.hash();
    if (pos_.halfmove_clock() >= 100 || repetition_on_path(ply)) return 0;
    if (ply >= MAX_PLY) return evaluate(pos_, *params_);

    const Score alpha_orig = alpha;
    const PolicyKind kind = cfg_.policy.kind;

    Move tt_move{};
    std::uint16_t tt_packed = 0;
    if (tt_.enabled()) {
        ++stats_.tt_probes;
        TTEntry entry;
        if (tt_.probe(pos_.hash(), entry)) {
            ++stats_.tt_hits;
            tt_packed = entry.move;
            if (!is_pv && entry.draft >= depth) {
                Score v = score_from_tt(entry.value, ply);
                if (entry.bound == Bound::Exact ||
                    (entry.bound == Bound::Lower && v >= beta) ||
                    (entry.bound == Bound::Upper && v <= alpha))
                    return v;
            }
        }
    }

    // Null-move search with a minimal window around beta. On fail-high the
    // policy decides between an immediate cutoff, a depth reduction, or (for
    // the verified scheme) a reduction plus a fail-high mark for zugzwang
    // detection after the move loop. The null result itself is never stored.
    bool fail_high = false;
    if (kind != PolicyKind::NoNull && !in_chk && null_move_allowed(pos_, depth, verify)) {
        ++stats_.null_attempts;
        const int r = cfg_.policy.reduction;
        UndoInfo u = pos_.make_null_move();
        Score v = -search(-beta, -beta + 1, depth - r - 1, ply + 1, verify, false);
        pos_.unmake_null_move(u);
        if (stopped_) return 0;
        if (v >= beta) {
            ++stats_.null_fail_highs;
            switch (kind) {
                case PolicyKind::Standard:
                    return v;
                case PolicyKind::Verified:
                    if (!verify) return v;  // subtree of a verified node: plain cutoff
                    --depth;
                    verify = false;
                    fail_high = true;
                    break;
                case PolicyKind::VarNoCutoffReduce2:
                    depth -= 2;
                    break;
                case PolicyKind::VarReduceOneEverywhere:
                    --depth;
                    break;
                case PolicyKind::VarReduceOneThenTwo:
                    if (verify) {
                        --depth;
                        verify = false;
                    } else {
                        depth -= 2;
                    }
                    break;
                default:
                    break;
            }
        }
    }

    MoveList moves;
    generate_moves(pos_, moves);
    if (moves.empty()) return in_chk ? mated_in(ply) : 0;
    tt_move = decode_tt_move(moves, tt_packed);

    for (;;) {
        order_moves(moves, tt_move, {}, ply);
        Score best = -SCORE_INF;
        Move best_move{};
        bool first = true;

        for (int i = 0; i < moves.size(); ++i) {
            const Move& m = moves[i];
            UndoInfo u = pos_.make_move(m);
            Score v;
            if (first) {
                v = -search(-beta, -alpha, depth - 1, ply + 1, verify, is_pv);
            } else {
                v = -search(-alpha - 1, -alpha, depth - 1, ply + 1, verify, false);
                if (v > alpha && v < beta && !stopped_)
                    v = -search(-beta, -alpha, depth - 1, ply + 1, verify, is_pv);
            }
            pos_.unmake_move(m, u);
            if (stopped_) return 0;
            first = false;

            if (v > best) {
                best = v;
                best_move = m;
            }
            if (best > alpha) {
                alpha = best;
                if (is_pv) pv_update(ply, m);
            }
            if (alpha >= beta) {
                if (m.is_quiet()) {
                    history_.bonus(pos_.side_to_move(), m.from, m.to, std::max(depth, 1));
                    if (cfg_.use_killers && ply < MAX_PLY &&
                        !(m == killers_[static_cast<std::size_t>(ply)][0])) {
                        killers_[static_cast<std::size_t>(ply)][1] = killers_[static_cast<std::size_t>(ply)][0];
                        killers_[static_cast<std::size_t>(ply)][0] = m;
                    }
                }
                break;
            }
        }

        // The null move claimed a cutoff but the verified move loop stayed
        // below beta: zugzwang. Restore the depth and search this node again.
        if (kind == PolicyKind::Verified && fail_high && best < beta) {
            ++depth;
            fail_high = false;
            verify = true;
            ++stats_.verified_researches;
            alpha = alpha_orig;
            pv_reset(ply);
            continue;
        }

        if (tt_.enabled()) {
            Bound bound = best >= beta ? Bound::Lower
                          : best > alpha_orig ? Bound::Exact
                                              : Bound::Upper;
            tt_.store(pos_.hash(), std::max(depth, 0), score_to_tt(best, ply), bound,
                      bound == Bound::Upper ? Move{} : best_move);
        }
        return best;
    }
}

Score Searcher::quiescence_value(const Position& p, Score alpha, Score beta, int ply) {
    pos_ = p;
    allow_stop_ = false;
    stopped_ = false;
    return quiesce(alpha, beta, ply);
}

SearchResult Searcher::search_root(const Position& root, const SearchLimits& limits,
                                   std::span<const Hash> history) {
    if (limits.max_depth <= 0 && limits.max_nodes == 0 && limits.max_time_ms <= 0)
        throw std::invalid_argument("search limits: at least one of depth, nodes, time required");
    if (limits.max_depth < 0 || limits.max_depth > MAX_PLY)
        throw std::invalid_argument("search limits: depth must be in [1, " +
                                    std::to_string(MAX_PLY) + "]");

    pos_ = root;
    stats_ = SearchStats{};
    history_.clear();
    killers_ = {};
    tt_.new_generation();
    prefix_.assign(history.begin(), history.end());

    node_budget_ = limits.max_nodes;
    has_deadline_ = limits.max_time_ms > 0;
    if (has_deadline_)
        deadline_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(limits.max_time_ms);
    stopped_ = false;

    MoveList root_moves;
    generate_moves(pos_, root_moves);
    if (root_moves.empty()) throw NoMovesError(pos_.in_check());

    const int max_depth = limits.max_depth > 0 ? limits.max_depth : MAX_PLY - 1;
    const bool root_verify = cfg_.policy.uses_verify_flag();

    SearchResult result;
    bool have_result = false;

    for (int d = 1; d <= max_depth; ++d) {
        allow_stop_ = have_result;  // the first iteration always completes
        const std::uint64_t nodes_before = stats_.total();
        ++stats_.full_nodes;
        ++stats_.entries;
        path_[0] = pos_.hash();

        order_moves(root_moves, {}, result.best, 0);

        Score alpha = -SCORE_INF;
        const Score beta = SCORE_INF;
        Score best = -SCORE_INF;
        Move best_move{};
        std::vector<Move> pv;
        bool first = true;

        for (int i = 0; i < root_moves.size() && !stopped_; ++i) {
            const Move& m = root_moves[i];
            UndoInfo u = pos_.make_move(m);
            Score v;
            if (first) {
                v = -search(-beta, -alpha, d - 1, 1, root_verify, true);
            } else {
                v = -search(-alpha - 1, -alpha, d - 1, 1, root_verify, false);
                if (v > alpha && !stopped_)
                    v = -search(-beta, -alpha, d - 1, 1, root_verify, true);
            }
            pos_.unmake_move(m, u);
            if (stopped_) break;
            first = false;

            if (v > best) {
                best = v;
                best_move = m;
            }
            if (best > alpha) {
                alpha = best;
                pv.clear();
                pv.push_back(m);
                for (int k = 0; k < pv_len_[1]; ++k) pv.push_back(pv_[1][static_cast<std::size_t>(k)]);
            }
        }

        if (stopped_) break;  // discard the interrupted iteration

        result.best = best_move;
        result.value = best;
        result.pv = std::move(pv);
        stats_.iterations.push_back({d, stats_.total() - nodes_before, best, best_move});
        have_result = true;
    }

    result.stats = stats_;
    result.zugzwang_research = stats_.verified_researches > 0;
    result.completed = !stopped_;
    assert(stats_.entries == stats_.total());
    return result;
}

}  // namespace nmlab
