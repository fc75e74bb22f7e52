#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nmlab/epd.hpp"
#include "nmlab/policy.hpp"
#include "nmlab/search.hpp"

namespace nmlab {

// Signed percentage of `other` relative to `baseline`, truncated (not
// rounded) to two decimals with an explicit sign, e.g. "+34.19%", "-40.58%".
// Throws std::invalid_argument when baseline is not positive.
std::string percent_delta(std::int64_t other_nodes, std::int64_t baseline_nodes);
std::int64_t percent_delta_hundredths(std::int64_t other_nodes, std::int64_t baseline_nodes);

// Drops records where either side has nothing beyond king and pawns.
struct FilterResult {
    std::vector<EpdRecord> kept;
    int dropped = 0;
};
FilterResult filter_suite(const std::vector<EpdRecord>& records);

struct RunOptions {
    int depth = 7;
    std::size_t tt_bytes = 16ull << 20;
    bool use_killers = false;
    bool check_extension = true;
    int jobs = 1;
    bool count_only = false;  // skip solved scoring (node-count studies)
};

struct PositionRow {
    std::string id;
    std::string policy;
    int depth = 0;
    std::uint64_t nodes = 0;   // full + quiescence
    std::uint64_t qnodes = 0;  // quiescence share
    Score value = 0;
    std::string best_move;               // SAN
    std::optional<bool> solved;          // empty when not scored
    std::uint64_t zugzwang_researches = 0;
    bool completed = true;
};

struct SuiteSlice {
    PruningPolicy policy;
    int depth = 0;
    std::vector<PositionRow> rows;
    std::uint64_t total_nodes = 0;
    int solved = 0;
    int scored = 0;
};

// Runs every record at one depth, a fresh searcher (transposition table,
// history) per record. Rows come back in input order regardless of jobs.
// Throws std::invalid_argument on an empty record list.
SuiteSlice run_suite(const std::vector<EpdRecord>& records, const PruningPolicy& policy,
                     const RunOptions& opts);

struct SuiteReport {
    std::string suite_name;
    int position_count = 0;
    int dropped = 0;
    std::vector<PruningPolicy> policies;
    PruningPolicy baseline;
    std::vector<int> depths;
    std::vector<SuiteSlice> slices;  // policy-major, depth-minor
    RunOptions options;

    const SuiteSlice& slice(const PruningPolicy& policy, int depth) const;
};

// Runs the cross product of policies x depths. Requires at least two
// policies with the baseline among them.
SuiteReport compare_policies(const std::vector<EpdRecord>& records,
                             const std::vector<PruningPolicy>& policies,
                             const PruningPolicy& baseline, const std::vector<int>& depths,
                             const RunOptions& opts, const std::string& suite_name = "");

// Deterministic renderings; equal inputs yield byte-identical text.
std::string render_text(const SuiteReport& report);
std::string render_csv(const SuiteReport& report);

}  // namespace nmlab
