// nmlab - a deterministic chess engine with pluggable null-move pruning
// policies and a test-suite harness for comparing them.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nmlab/eval.hpp"
#include "nmlab/harness.hpp"
#include "nmlab/match.hpp"
#include "nmlab/movegen.hpp"
#include "nmlab/san.hpp"
#include "nmlab/search.hpp"
#include "nmlab/zobrist.hpp"

namespace {

constexpr int EXIT_INPUT_ERROR = 2;
constexpr int EXIT_EMPTY_WORK = 3;
constexpr int EXIT_INTERNAL = 4;

struct CommonOpts {
    std::string policy = "verified";
    int reduction = 3;
    int depth = 6;
    std::uint64_t nodes = 0;
    std::size_t tt_bytes = 16ull << 20;
    bool killers = false;
    bool check_ext = true;
    std::string pst_path;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--policy", o.policy,
                    "pruning policy: nonull|std|verified|var-nocut2|var-reduce1|var-reduce12 "
                    "(compact tokens like std2, vrfd3 also work)")
        ->capture_default_str();
    cmd->add_option("--R", o.reduction, "null-move depth reduction in plies")->capture_default_str();
    cmd->add_option("--nodes", o.nodes, "node limit (0 = none)")->capture_default_str();
    cmd->add_option("--tt-bytes", o.tt_bytes, "transposition table size in bytes (0 disables)")
        ->capture_default_str();
    cmd->add_flag("--killers,!--no-killers", o.killers, "killer-move ordering (default off)");
    cmd->add_flag("--check-ext,!--no-check-ext", o.check_ext,
                  "one-ply check extension at the leaf boundary (default on)");
    cmd->add_option("--pst", o.pst_path, "piece-square table file (default: built-in tables)");
}

nmlab::SearchConfig make_config(const CommonOpts& o) {
    nmlab::SearchConfig cfg;
    cfg.policy = nmlab::PruningPolicy::parse(o.policy, o.reduction);
    cfg.tt_bytes = o.tt_bytes;
    cfg.use_killers = o.killers;
    cfg.check_extension = o.check_ext;
    return cfg;
}

const nmlab::EvalParams* load_params(const CommonOpts& o, nmlab::EvalParams& storage) {
    if (o.pst_path.empty()) return &nmlab::EvalParams::defaults();
    storage = nmlab::EvalParams::load(o.pst_path);
    return &storage;
}

std::string format_value(nmlab::Score v) {
    if (v > nmlab::MATE_THRESHOLD)
        return "mate in " + std::to_string((nmlab::MATE - v + 1) / 2) + " (" + std::to_string(v) + ")";
    if (v < -nmlab::MATE_THRESHOLD)
        return "mated in " + std::to_string((nmlab::MATE + v + 1) / 2) + " (" + std::to_string(v) + ")";
    return std::to_string(v) + " cp";
}

std::vector<nmlab::PruningPolicy> parse_policy_list(const std::string& csv) {
    std::vector<nmlab::PruningPolicy> out;
    std::string tok;
    std::istringstream in(csv);
    while (std::getline(in, tok, ',')) {
        if (!tok.empty()) out.push_back(nmlab::PruningPolicy::parse(tok));
    }
    return out;
}

std::vector<int> parse_depth_list(const std::string& csv) {
    std::vector<int> out;
    std::string tok;
    std::istringstream in(csv);
    while (std::getline(in, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stoi(tok));
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

int cmd_solve(const std::string& fen, const CommonOpts& o) {
    nmlab::EvalParams storage;
    const nmlab::EvalParams* params = load_params(o, storage);
    nmlab::Position pos = nmlab::Position::from_fen(fen);
    nmlab::Searcher searcher(make_config(o), params);

    nmlab::SearchResult res;
    try {
        res = searcher.search_root(pos, {o.depth, o.nodes, 0});
    } catch (const nmlab::NoMovesError& e) {
        std::cout << e.what() << "\n";
        return EXIT_EMPTY_WORK;
    }

    std::cout << "position: " << pos.to_fen() << "\n";
    std::cout << "policy: " << make_config(o).policy.label() << "  depth: " << o.depth << "\n";
    std::printf("zobrist-seed: 0x%016llX\n", static_cast<unsigned long long>(nmlab::zobrist::SEED));
    std::cout << "best move: " << nmlab::to_san(pos, res.best) << "\n";
    std::cout << "value: " << format_value(res.value) << "\n";
    std::cout << "pv:";
    nmlab::Position walker = pos;
    for (const nmlab::Move& m : res.pv) {
        std::cout << ' ' << nmlab::to_san(walker, m);
        walker.make_move(m);
    }
    std::cout << "\n";
    const auto& st = res.stats;
    std::cout << "nodes: " << st.total() << " (full " << st.full_nodes << ", quiescence "
              << st.quiescence_nodes << ")\n";
    std::cout << "null attempts: " << st.null_attempts << "  fail-highs: " << st.null_fail_highs
              << "  zugzwang re-searches: " << st.verified_researches << "\n";
    std::cout << "tt probes: " << st.tt_probes << "  hits: " << st.tt_hits << "\n";
    std::cout << "iterations:\n";
    for (const auto& it : st.iterations)
        std::cout << "  depth " << it.depth << ": nodes " << it.nodes << ", value "
                  << format_value(it.value) << "\n";
    if (!res.completed) std::cout << "note: last iteration cut off by limits\n";
    return 0;
}

int cmd_perft(const std::string& fen, int depth) {
    nmlab::Position pos = nmlab::Position::from_fen(fen);
    if (depth < 0) throw std::invalid_argument("perft depth must be >= 0");
    if (depth == 0) {
        std::cout << "total 1\n";
        return 0;
    }
    nmlab::MoveList moves;
    nmlab::generate_moves(pos, moves);
    std::uint64_t total = 0;
    for (const nmlab::Move& m : moves) {
        nmlab::UndoInfo u = pos.make_move(m);
        std::uint64_t n = nmlab::perft(pos, depth - 1);
        pos.unmake_move(m, u);
        std::cout << nmlab::move_uci(m) << ' ' << n << "\n";
        total += n;
    }
    std::cout << "total " << total << "\n";
    return 0;
}

struct SuiteOpts {
    std::string suite;
    std::string out_prefix = "report";
    std::string format = "both";
    int jobs = 1;
    bool no_filter = false;
    bool count_only = false;
};

void add_suite(CLI::App* cmd, SuiteOpts& s, const std::string& default_suite) {
    s.suite = default_suite;
    cmd->add_option("--suite", s.suite, "EPD suite file")->capture_default_str();
    cmd->add_option("--out", s.out_prefix, "output file prefix")->capture_default_str();
    cmd->add_option("--format", s.format, "report format: text|csv|both")->capture_default_str();
    cmd->add_option("--jobs", s.jobs, "parallel workers over suite positions")->capture_default_str();
    cmd->add_flag("--no-filter", s.no_filter,
                  "keep positions where a side has only king and pawns");
    cmd->add_flag("--count-only", s.count_only, "skip solved scoring, report node counts only");
}

std::vector<nmlab::EpdRecord> load_suite(const SuiteOpts& s, int* dropped) {
    nmlab::EpdFile file = nmlab::load_epd_file(s.suite);
    for (const std::string& err : file.errors) std::cerr << err << "\n";
    std::vector<nmlab::EpdRecord> records = std::move(file.records);
    *dropped = 0;
    if (!s.no_filter) {
        nmlab::FilterResult f = nmlab::filter_suite(records);
        records = std::move(f.kept);
        *dropped = f.dropped;
    }
    return records;
}

int emit_report(const nmlab::SuiteReport& report, const SuiteOpts& s) {
    std::string text = nmlab::render_text(report);
    std::string csv = nmlab::render_csv(report);
    if (s.format == "text" || s.format == "both") {
        write_file(s.out_prefix + ".txt", text);
        std::cout << text;
    }
    if (s.format == "csv" || s.format == "both") write_file(s.out_prefix + ".csv", csv);
    if (s.format != "text" && s.format != "csv" && s.format != "both")
        throw std::invalid_argument("unknown format '" + s.format + "'");
    return 0;
}

nmlab::RunOptions make_run_options(const CommonOpts& o, const SuiteOpts& s, int depth) {
    nmlab::RunOptions r;
    r.depth = depth;
    r.tt_bytes = o.tt_bytes;
    r.use_killers = o.killers;
    r.check_extension = o.check_ext;
    r.jobs = s.jobs;
    r.count_only = s.count_only;
    return r;
}

int cmd_bench(const CommonOpts& o, const SuiteOpts& s) {
    int dropped = 0;
    std::vector<nmlab::EpdRecord> records = load_suite(s, &dropped);
    if (records.empty()) {
        std::cerr << "no positions to run (suite empty after filtering)\n";
        return EXIT_EMPTY_WORK;
    }
    nmlab::PruningPolicy policy = nmlab::PruningPolicy::parse(o.policy, o.reduction);

    nmlab::SuiteReport report;
    report.suite_name = s.suite;
    report.position_count = static_cast<int>(records.size());
    report.dropped = dropped;
    report.policies = {policy};
    report.baseline = policy;
    report.depths = {o.depth};
    report.options = make_run_options(o, s, o.depth);
    report.slices.push_back(nmlab::run_suite(records, policy, report.options));
    return emit_report(report, s);
}

int cmd_compare(const CommonOpts& o, const SuiteOpts& s, const std::string& policies_csv,
                const std::string& baseline_tok, const std::string& depths_csv) {
    int dropped = 0;
    std::vector<nmlab::EpdRecord> records = load_suite(s, &dropped);
    if (records.empty()) {
        std::cerr << "no positions to run (suite empty after filtering)\n";
        return EXIT_EMPTY_WORK;
    }
    std::vector<nmlab::PruningPolicy> policies = parse_policy_list(policies_csv);
    nmlab::PruningPolicy baseline = nmlab::PruningPolicy::parse(baseline_tok);
    std::vector<int> depths = parse_depth_list(depths_csv);

    nmlab::SuiteReport report = nmlab::compare_policies(records, policies, baseline, depths,
                                                        make_run_options(o, s, 0), s.suite);
    report.dropped = dropped;
    return emit_report(report, s);
}

int cmd_match(const CommonOpts& o, const std::string& a_tok, const std::string& b_tok,
              const std::string& openings_path, int games, int jobs) {
    (void)jobs;
    nmlab::EpdFile file = nmlab::load_epd_file(openings_path);
    for (const std::string& err : file.errors) std::cerr << err << "\n";
    std::vector<nmlab::Position> openings;
    for (const nmlab::EpdRecord& r : file.records) openings.push_back(r.pos);
    if (openings.empty()) {
        std::cerr << "no usable openings\n";
        return EXIT_EMPTY_WORK;
    }

    nmlab::PruningPolicy a = nmlab::PruningPolicy::parse(a_tok);
    nmlab::PruningPolicy b = nmlab::PruningPolicy::parse(b_tok);
    nmlab::SearchConfig cfg = make_config(o);
    nmlab::MatchResult res = nmlab::play_match(a, b, openings, o.depth, games, cfg);

    std::cout << "match: " << a.label() << " vs " << b.label() << ", depth " << o.depth << ", "
              << games << " games\n";
    for (std::size_t i = 0; i < res.games.size(); ++i) {
        const nmlab::GameRecord& g = res.games[i];
        std::cout << "game " << i + 1 << ": " << g.white_policy << " vs " << g.black_policy
                  << " -> " << (g.white_score == 1.0 ? "1-0" : g.white_score == 0.0 ? "0-1" : "1/2-1/2")
                  << " (" << nmlab::termination_name(g.termination) << ", "
                  << g.san_moves.size() << " plies)\n";
    }
    char buf[80];
    std::snprintf(buf, sizeof buf, "score: %s %.1f : %.1f %s\n", a.label().c_str(), res.score_a,
                  res.score_b, b.label().c_str());
    std::cout << buf;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"nmlab: chess search with pluggable null-move pruning policies"};
    app.require_subcommand(1);
    app.set_config("--config", "", "read defaults from an INI file (flags win over file values)");

    CommonOpts common;

    std::string fen;
    auto* solve = app.add_subcommand("solve", "search a single position");
    solve->add_option("fen", fen, "position in FEN")->required();
    solve->add_option("--depth", common.depth, "search depth in plies")->capture_default_str();
    add_common(solve, common);

    int perft_depth = 0;
    auto* perft = app.add_subcommand("perft", "legal move tree leaf counts, per root move");
    perft->add_option("fen", fen, "position in FEN")->required();
    perft->add_option("depth", perft_depth, "depth in plies")->required();

    SuiteOpts suite_opts;
    auto* bench = app.add_subcommand("bench", "run one policy over a suite");
    bench->add_option("--depth", common.depth, "search depth in plies")->capture_default_str();
    add_common(bench, common);
    add_suite(bench, suite_opts, "data/tactical.epd");

    std::string policies_csv = "std2,std3,vrfd3";
    std::string baseline_tok = "vrfd3";
    std::string depths_csv = "7,8";
    auto* compare = app.add_subcommand("compare", "run several policies over a suite");
    compare->add_option("--policies", policies_csv, "comma-separated policy tokens")
        ->capture_default_str();
    compare->add_option("--baseline", baseline_tok, "baseline policy for percent deltas")
        ->capture_default_str();
    compare->add_option("--depths", depths_csv, "comma-separated depths")->capture_default_str();
    add_common(compare, common);
    add_suite(compare, suite_opts, "data/tactical.epd");

    std::string policy_a = "vrfd3", policy_b = "std2", openings_path = "data/openings.epd";
    int games = 20, jobs = 1;
    auto* match = app.add_subcommand("match", "fixed-depth self-play match");
    match->add_option("--a", policy_a, "policy for side A")->capture_default_str();
    match->add_option("--b", policy_b, "policy for side B")->capture_default_str();
    match->add_option("--openings", openings_path, "EPD/FEN opening file")->capture_default_str();
    match->add_option("--games", games, "game count (even)")->capture_default_str();
    match->add_option("--depth", common.depth, "search depth in plies")->capture_default_str();
    match->add_option("--jobs", jobs, "unused; games run sequentially")->capture_default_str();
    add_common(match, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return EXIT_INPUT_ERROR;
    }

    try {
        if (*solve) return cmd_solve(fen, common);
        if (*perft) return cmd_perft(fen, perft_depth);
        if (*bench) return cmd_bench(common, suite_opts);
        if (*compare) return cmd_compare(common, suite_opts, policies_csv, baseline_tok, depths_csv);
        if (*match) return cmd_match(common, policy_a, policy_b, openings_path, games, jobs);
    } catch (const nmlab::ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return EXIT_INPUT_ERROR;
    } catch (const nmlab::FileError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return EXIT_INPUT_ERROR;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return EXIT_INPUT_ERROR;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return EXIT_INTERNAL;
    }
    return EXIT_INTERNAL;
}
