#include "nmlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "nmlab/san.hpp"
#include "nmlab/zobrist.hpp"

namespace nmlab {

std::int64_t percent_delta_hundredths(std::int64_t other, std::int64_t baseline) {
    if (baseline <= 0) throw std::invalid_argument("percent_delta: baseline must be positive");
    __int128 num = static_cast<__int128>(other - baseline) * 10000;
    return static_cast<std::int64_t>(num / baseline);  // truncates toward zero
}

std::string percent_delta(std::int64_t other, std::int64_t baseline) {
    std::int64_t h = percent_delta_hundredths(other, baseline);
    char sign = h < 0 ? '-' : '+';
    if (h < 0) h = -h;
    char buf[48];
    std::snprintf(buf, sizeof buf, "%c%lld.%02lld%%", sign,
                  static_cast<long long>(h / 100), static_cast<long long>(h % 100));
    return buf;
}

FilterResult filter_suite(const std::vector<EpdRecord>& records) {
    FilterResult out;
    for (const EpdRecord& r : records) {
        if (r.pos.only_king_and_pawns(Color::White) || r.pos.only_king_and_pawns(Color::Black))
            ++out.dropped;
        else
            out.kept.push_back(r);
    }
    return out;
}

namespace {

PositionRow run_one(const EpdRecord& rec, const PruningPolicy& policy, const RunOptions& opts) {
    SearchConfig cfg;
    cfg.policy = policy;
    cfg.tt_bytes = opts.tt_bytes;
    cfg.use_killers = opts.use_killers;
    cfg.check_extension = opts.check_extension;

    Searcher searcher(cfg);
    SearchResult res = searcher.search_root(rec.pos, SearchLimits{opts.depth, 0, 0});

    PositionRow row;
    row.id = rec.id;
    row.policy = policy.label();
    row.depth = opts.depth;
    row.nodes = res.stats.total();
    row.qnodes = res.stats.quiescence_nodes;
    row.value = res.value;
    row.best_move = to_san(rec.pos, res.best);
    row.zugzwang_researches = res.stats.verified_researches;
    row.completed = res.completed;

    const bool scorable = !rec.best_moves.empty() || !rec.avoid_moves.empty();
    if (!opts.count_only && scorable) {
        bool ok = res.completed;
        if (!rec.best_moves.empty())
            ok = ok && std::find(rec.best_moves.begin(), rec.best_moves.end(), res.best) !=
                           rec.best_moves.end();
        ok = ok && std::find(rec.avoid_moves.begin(), rec.avoid_moves.end(), res.best) ==
                       rec.avoid_moves.end();
        row.solved = ok;
    }
    return row;
}

}  // namespace

SuiteSlice run_suite(const std::vector<EpdRecord>& records, const PruningPolicy& policy,
                     const RunOptions& opts) {
    if (records.empty()) throw std::invalid_argument("run_suite: empty record list");

    SuiteSlice slice;
    slice.policy = policy;
    slice.depth = opts.depth;
    slice.rows.resize(records.size());

    const int jobs = std::max(1, opts.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < records.size(); ++i)
            slice.rows[i] = run_one(records[i], policy, opts);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= records.size()) return;
                slice.rows[i] = run_one(records[i], policy, opts);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (const PositionRow& row : slice.rows) {
        slice.total_nodes += row.nodes;
        if (row.solved.has_value()) {
            ++slice.scored;
            if (*row.solved) ++slice.solved;
        }
    }
    return slice;
}

const SuiteSlice& SuiteReport::slice(const PruningPolicy& policy, int depth) const {
    for (const SuiteSlice& s : slices)
        if (s.policy == policy && s.depth == depth) return s;
    throw std::out_of_range("no slice for " + policy.label() + " at depth " + std::to_string(depth));
}

SuiteReport compare_policies(const std::vector<EpdRecord>& records,
                             const std::vector<PruningPolicy>& policies,
                             const PruningPolicy& baseline, const std::vector<int>& depths,
                             const RunOptions& opts, const std::string& suite_name) {
    if (policies.size() < 2)
        throw std::invalid_argument("compare_policies: need at least two policies");
    if (std::find(policies.begin(), policies.end(), baseline) == policies.end())
        throw std::invalid_argument("compare_policies: baseline must be among the policies");
    if (depths.empty()) throw std::invalid_argument("compare_policies: need at least one depth");

    SuiteReport report;
    report.suite_name = suite_name;
    report.position_count = static_cast<int>(records.size());
    report.policies = policies;
    report.baseline = baseline;
    report.depths = depths;
    report.options = opts;

    for (const PruningPolicy& p : policies) {
        for (int d : depths) {
            RunOptions o = opts;
            o.depth = d;
            report.slices.push_back(run_suite(records, p, o));
        }
    }
    return report;
}

namespace {

std::string with_thousands(std::uint64_t v) {
    std::string raw = std::to_string(v);
    std::string out;
    int c = 0;
    for (auto it = raw.rbegin(); it != raw.rend(); ++it) {
        if (c && c % 3 == 0) out += ',';
        out += *it;
        ++c;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

void pad_to(std::string& s, std::size_t width) {
    while (s.size() < width) s.insert(s.begin(), ' ');
}

}  // namespace

std::string render_text(const SuiteReport& r) {
    std::string out;
    out += "suite: " + (r.suite_name.empty() ? std::string("(records)") : r.suite_name) + "\n";
    out += "positions: " + std::to_string(r.position_count) +
           "  filtered-out: " + std::to_string(r.dropped) + "\n";
    char cfg[160];
    std::snprintf(cfg, sizeof cfg,
                  "config: tt-bytes=%zu killers=%s check-ext=%s%s\n", r.options.tt_bytes,
                  r.options.use_killers ? "on" : "off", r.options.check_extension ? "on" : "off",
                  r.options.count_only ? " count-only" : "");
    out += cfg;
    char seed[64];
    std::snprintf(seed, sizeof seed, "zobrist-seed: 0x%016llX\n",
                  static_cast<unsigned long long>(zobrist::SEED));
    out += seed;
    out += "baseline: " + r.baseline.label() + "\n\n";

    // Cells: "<nodes> (<delta>)", baseline column shows "-" for the delta.
    std::vector<std::vector<std::string>> cells;  // [depth][policy]
    for (int d : r.depths) {
        std::vector<std::string> row;
        std::uint64_t base = r.slice(r.baseline, d).total_nodes;
        for (const PruningPolicy& p : r.policies) {
            const SuiteSlice& s = r.slice(p, d);
            std::string cell = with_thousands(s.total_nodes);
            if (p == r.baseline)
                cell += " -";
            else if (base > 0)
                cell += " (" + percent_delta(static_cast<std::int64_t>(s.total_nodes),
                                             static_cast<std::int64_t>(base)) + ")";
            row.push_back(cell);
        }
        cells.push_back(row);
    }

    std::vector<std::size_t> width(r.policies.size());
    for (std::size_t c = 0; c < r.policies.size(); ++c) {
        width[c] = r.policies[c].label().size();
        for (auto& row : cells) width[c] = std::max(width[c], row[c].size());
    }

    out += "total nodes\n";
    std::string header = "depth";
    for (std::size_t c = 0; c < r.policies.size(); ++c) {
        std::string lbl = r.policies[c].label();
        pad_to(lbl, width[c]);
        header += " | " + lbl;
    }
    out += header + "\n";
    for (std::size_t di = 0; di < r.depths.size(); ++di) {
        std::string line = std::to_string(r.depths[di]);
        pad_to(line, 5);
        for (std::size_t c = 0; c < r.policies.size(); ++c) {
            std::string cell = cells[di][c];
            pad_to(cell, width[c]);
            line += " | " + cell;
        }
        out += line + "\n";
    }

    if (!r.options.count_only) {
        bool any_scored = false;
        for (const SuiteSlice& s : r.slices) any_scored |= s.scored > 0;
        if (any_scored) {
            out += "\nsolved positions\n";
            std::string h2 = "depth";
            for (const PruningPolicy& p : r.policies) h2 += " | " + p.label();
            out += h2 + "\n";
            for (int d : r.depths) {
                std::string line = std::to_string(d);
                pad_to(line, 5);
                for (const PruningPolicy& p : r.policies) {
                    const SuiteSlice& s = r.slice(p, d);
                    std::string cell = std::to_string(s.solved) + "/" + std::to_string(s.scored);
                    pad_to(cell, p.label().size());
                    line += " | " + cell;
                }
                out += line + "\n";
            }
        }
    }
    return out;
}

std::string render_csv(const SuiteReport& r) {
    std::string out = "id,policy,depth,nodes,qnodes,value,best_move,solved,zugzwang_researches\n";
    for (const SuiteSlice& s : r.slices) {
        for (const PositionRow& row : s.rows) {
            out += row.id + ',' + row.policy + ',' + std::to_string(row.depth) + ',' +
                   std::to_string(row.nodes) + ',' + std::to_string(row.qnodes) + ',' +
                   std::to_string(row.value) + ',' + row.best_move + ',' +
                   (row.solved.has_value() ? (*row.solved ? "1" : "0") : "-") + ',' +
                   std::to_string(row.zugzwang_researches) + '\n';
        }
    }
    return out;
}

}  // namespace nmlab
