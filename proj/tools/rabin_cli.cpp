// rabin_cli - solve, verify, generate, cross-check and benchmark Rabin games.
//
// Exit codes: 0 win/success, 1 lose/rejected, 2 usage/parse/IO error,
// 3 internal invariant breach.

#include <rabin/rabin.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

namespace fs = std::filesystem;
using namespace rabin;

namespace {

enum Exit { kOk = 0, kLose = 1, kUsage = 2, kInternal = 3 };

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path)
{
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw io_error("cannot write " + path);
}

RabinGame load_game(const std::string& path)
{
    RabinGame g = parse_game(read_input(path));
    if (auto problems = validate(g); !problems.empty()) throw parse_error(0, problems.front());
    return g;
}

std::string csv_name(std::string s)
{
    for (char& c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '.' && c != '-') c = '_';
    return s;
}

// ---------------------------------------------------------------------------

struct SolveOpts {
    std::string input;
    std::optional<std::size_t> ell;
    bool streett = false;
    std::string dump_measure_path, dump_strategy_path;
};

int cmd_solve(const SolveOpts& o)
{
    RabinGame g = load_game(o.input);
    std::vector<VertexId> region;
    if (o.streett) {
        region = solve_streett_region(g, o.ell);
    } else {
        SolveResult r = solve(g, o.ell);
        if (!verify_measure(g, r.measure).ok) throw internal_error("solver output is not a measure");
        if (!o.dump_measure_path.empty()) write_output(o.dump_measure_path, dump_measure(r.measure));
        if (!o.dump_strategy_path.empty()) write_output(o.dump_strategy_path, dump_strategy(r.strategy));
        region = std::move(r.region);
    }
    std::cout << render_region(region) << "\n";
    if (g.start && !std::binary_search(region.begin(), region.end(), *g.start)) return kLose;
    return kOk;
}

int cmd_verify(const std::string& game_path, const std::string& measure_path)
{
    RabinGame g = load_game(game_path);
    BitMeasure mu = parse_measure(read_input(measure_path), g.size(), g.colours);
    Verdict v = verify_measure(g, mu);
    if (v.ok) {
        std::cout << "ok\n";
        return kOk;
    }
    std::cout << "inconsistent: " << render_region(v.inconsistent) << "\n";
    return kLose;
}

struct GenerateOpts {
    GeneratorParams params;
    std::optional<std::uint64_t> seed;
    std::string parity, output;
};

int cmd_generate(GenerateOpts o)
{
    RabinGame g;
    if (!o.parity.empty()) {
        g = parse_pgsolver(read_input(o.parity)).to_rabin();
    } else {
        if (!o.seed) throw CLI::RequiredError("--seed");
        o.params.seed = *o.seed;
        g = random_game(o.params);
    }
    if (auto problems = validate(g); !problems.empty()) throw internal_error("generated game invalid: " + problems.front());
    write_output(o.output, serialize_game(g));
    return kOk;
}

struct OracleOpts {
    std::string input, witness;
    bool check = false;
    std::uint64_t budget = kDefaultStrategyBudget;
};

int cmd_oracle(const OracleOpts& o)
{
    RabinGame g = load_game(o.input);
    if (!o.witness.empty()) {
        Strategy sigma = parse_strategy(read_input(o.witness), g);
        RabinCheck c = all_paths_rabin(restrict_to_strategy(g, sigma));
        if (c.holds()) {
            std::cout << "no violation\n";
            return kOk;
        }
        std::cout << "witness scc: " << render_region(c.witness->scc) << "\n";
        std::cout << "stem: " << render_region(c.witness->stem) << "\n";
        return kLose;
    }
    auto region = brute_force_solve(g, o.budget);
    std::cout << render_region(region) << "\n";
    if (o.check) {
        auto solved = solve(g).region;
        if (solved != region) {
            std::cout << "solver disagrees: " << render_region(solved) << "\n";
            return kInternal;
        }
        std::cout << "solver agrees\n";
    }
    return kOk;
}

struct BenchOpts {
    std::string dir;
    std::vector<unsigned> sweep;
    unsigned k = 2;
    std::optional<std::uint64_t> seed;
    unsigned jobs = 1;
};

int cmd_bench(const BenchOpts& o)
{
    std::vector<std::pair<std::string, RabinGame>> games;
    if (!o.sweep.empty()) {
        if (!o.seed) throw CLI::RequiredError("--seed");
        games = sweep_games(o.sweep, o.k, *o.seed);
    } else {
        if (o.dir.empty()) throw CLI::ValidationError("bench", "give a directory or --sweep-n");
        if (!fs::is_directory(o.dir)) throw io_error("not a directory: " + o.dir);
        std::vector<fs::path> files;
        for (const auto& e : fs::directory_iterator(o.dir))
            if (e.is_regular_file()) files.push_back(e.path());
        std::sort(files.begin(), files.end());
        for (const auto& f : files) games.emplace_back(csv_name(f.filename().string()), load_game(f.string()));
    }

    std::vector<BenchRow> rows(games.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < games.size();) rows[i] = bench_game(games[i].first, games[i].second);
    };
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < std::max(1u, o.jobs); ++j) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    std::cout << kBenchHeader << "\n";
    for (const auto& r : rows) {
        if (!r.within_bound()) throw internal_error("lift count above bound for " + r.name);
        std::cout << csv_row(r) << "\n";
    }
    return kOk;
}

int cmd_stats(std::size_t n, unsigned k)
{
    if (n < 1 || k < 1 || k > kMaxColours) throw CLI::ValidationError("stats", "need n >= 1 and 1 <= k <= 63");
    const std::size_t ell = default_bits(n);
    const BoundCheck b = bound_check(ell, k - 1);
    std::cout << "n " << n << "\n"
              << "k " << k << "\n"
              << "ell " << ell << "\n"
              << "leaves " << b.leaves << "\n"
              << "nodes " << node_count(ell, k - 1) << "\n"
              << "bound_a " << b.bound_a << "\n"
              << "bound_b " << b.bound_b << "\n"
              << "lower_bound " << lower_bound_size(ell, k) << "\n"
              << "within_bounds " << (b.within() ? "yes" : "no") << "\n";
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rabin and Streett game solver"};
    app.require_subcommand(1);

    SolveOpts solve_o;
    auto* solve_cmd = app.add_subcommand("solve", "print Controller's winning region");
    solve_cmd->add_option("input", solve_o.input, "game file, or - for stdin")->required();
    solve_cmd->add_option("--ell", solve_o.ell, "label bit budget (default ceil(log2 n))");
    auto* streett_flag = solve_cmd->add_flag("--streett", solve_o.streett, "read the condition as Streett");
    solve_cmd->add_option("--dump-measure", solve_o.dump_measure_path, "write the final measure")->excludes(streett_flag);
    solve_cmd->add_option("--dump-strategy", solve_o.dump_strategy_path, "write Controller's strategy")
        ->excludes(streett_flag);

    std::string verify_game, verify_measure_path;
    auto* verify_cmd = app.add_subcommand("verify", "check that a measure dump is a Rabin measure");
    verify_cmd->add_option("game", verify_game)->required();
    verify_cmd->add_option("measure", verify_measure_path)->required();

    GenerateOpts gen_o;
    auto* gen_cmd = app.add_subcommand("generate", "write a random game");
    gen_cmd->add_option("--n", gen_o.params.n, "vertices");
    gen_cmd->add_option("--k", gen_o.params.colours, "colours including c0");
    gen_cmd->add_option("--seed", gen_o.seed, "generator seed (required for random games)");
    gen_cmd->add_option("--min-degree", gen_o.params.min_degree);
    gen_cmd->add_option("--max-degree", gen_o.params.max_degree);
    gen_cmd->add_option("--p-good", gen_o.params.p_good);
    gen_cmd->add_option("--p-bad", gen_o.params.p_bad);
    gen_cmd->add_option("--p-controller", gen_o.params.p_controller);
    gen_cmd->add_option("--parity", gen_o.parity, "encode a PGSolver parity game instead");
    gen_cmd->add_option("-o,--output", gen_o.output, "output file (default stdout)");

    OracleOpts oracle_o;
    auto* oracle_cmd = app.add_subcommand("oracle", "solve by strategy enumeration");
    oracle_cmd->add_option("input", oracle_o.input)->required();
    oracle_cmd->add_flag("--check-against-solver", oracle_o.check);
    oracle_cmd->add_option("--witness", oracle_o.witness, "strategy file; print a violating cycle under it");
    oracle_cmd->add_option("--budget", oracle_o.budget, "maximum number of strategies");

    BenchOpts bench_o;
    auto* bench_cmd = app.add_subcommand("bench", "CSV of solver statistics");
    bench_cmd->add_option("dir", bench_o.dir, "directory of game files");
    bench_cmd->add_option("--sweep-n", bench_o.sweep, "vertex counts for generated games")->delimiter(',');
    bench_cmd->add_option("--k", bench_o.k, "colours for generated games");
    bench_cmd->add_option("--seed", bench_o.seed);
    bench_cmd->add_option("--jobs", bench_o.jobs, "worker threads");

    std::size_t stats_n = 1;
    unsigned stats_k = 1;
    auto* stats_cmd = app.add_subcommand("stats", "universal tree sizes and bounds");
    stats_cmd->add_option("--n", stats_n)->required();
    stats_cmd->add_option("--k", stats_k)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*solve_cmd) return cmd_solve(solve_o);
        if (*verify_cmd) return cmd_verify(verify_game, verify_measure_path);
        if (*gen_cmd) return cmd_generate(gen_o);
        if (*oracle_cmd) return cmd_oracle(oracle_o);
        if (*bench_cmd) return cmd_bench(bench_o);
        if (*stats_cmd) return cmd_stats(stats_n, stats_k);
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const CLI::Error& e) {
        std::cerr << "usage: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
