#include "cli.hpp"

#include "saddle/bench.hpp"
#include "saddle/generators.hpp"
#include "saddle/lower_bound.hpp"
#include "saddle/matrix.hpp"
#include "saddle/oracle.hpp"
#include "saddle/report.hpp"
#include "saddle/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>

namespace saddle::cli {

namespace {

struct SolverFlags {
    std::uint64_t seed = 0;
    std::string preset = "practical";
    std::string rng = "full";
    unsigned dwise_d = 8;
    std::optional<std::size_t> base_case;
    std::optional<std::size_t> max_restarts;
    std::optional<double> delete_fraction;
    std::optional<double> phase1_quantile;
    std::optional<double> stop_exponent;
    std::optional<double> sample_exponent;
    std::optional<std::size_t> sample_floor;
    std::optional<double> log_sample_factor;
    std::optional<double> order_fraction;
    std::optional<double> validity_fraction;

    void attach(CLI::App& app)
    {
        app.add_option("--seed", seed, "Random seed");
        app.add_option("--preset", preset, "Parameter preset")->check(CLI::IsMember({"paper", "practical"}));
        app.add_option("--rng", rng, "Randomness mode")->check(CLI::IsMember({"full", "dwise"}));
        app.add_option("--dwise-d", dwise_d, "Independence degree for --rng dwise (even, >= 2)");
        app.add_option("--base-case", base_case, "Side length solved by exhaustive scan");
        app.add_option("--max-restarts", max_restarts, "Reduction attempts per level before falling back");
        app.add_option("--delete-fraction", delete_fraction, "Fraction of lines deleted per pivot");
        app.add_option("--pivot-phase1-quantile", phase1_quantile);
        app.add_option("--pivot-stop-exponent", stop_exponent);
        app.add_option("--pivot-sample-exponent", sample_exponent);
        app.add_option("--pivot-sample-floor", sample_floor);
        app.add_option("--pivot-log-sample-factor", log_sample_factor);
        app.add_option("--pivot-order-fraction", order_fraction);
        app.add_option("--pivot-validity-fraction", validity_fraction);
    }

    SolveParams params() const
    {
        SolveParams p = make_preset(preset);
        p.rng = RngConfig{parse_rng_mode(rng), dwise_d};
        if (base_case) p.base_case_size = *base_case;
        if (max_restarts) p.max_restarts_per_level = *max_restarts;
        if (delete_fraction) p.reduce.delete_fraction = *delete_fraction;
        auto& piv = p.reduce.pivot;
        if (phase1_quantile) piv.phase1_quantile = *phase1_quantile;
        if (stop_exponent) piv.stop_exponent = *stop_exponent;
        if (sample_exponent) piv.sample_exponent = *sample_exponent;
        if (sample_floor) piv.sample_floor = *sample_floor;
        if (log_sample_factor) piv.log_sample_factor = *log_sample_factor;
        if (order_fraction) piv.order_fraction = *order_fraction;
        if (validity_fraction) piv.validity_fraction = *validity_fraction;
        p.validate();
        return p;
    }
};

std::string truth_path_for(const std::string& out)
{
    std::filesystem::path p(out);
    p.replace_extension(".truth.json");
    return p.string();
}

void write_json_file(const std::string& path, const nlohmann::ordered_json& j)
{
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write '" + path + "'");
    f << j.dump(2) << '\n';
}

int cmd_generate(const std::string& kind, std::size_t rows, std::size_t cols, std::uint64_t seed,
                 const std::string& out_path, std::ostream& out)
{
    nlohmann::ordered_json truth;
    truth["kind"] = kind;
    truth["rows"] = rows;
    truth["cols"] = cols;
    truth["seed"] = seed;

    std::optional<Matrix> matrix;
    if (kind == "planted") {
        auto inst = generate_planted(rows, cols, seed);
        truth["row"] = inst.row;
        truth["col"] = inst.col;
        matrix.emplace(std::move(inst.matrix));
    } else if (kind == "uniform") {
        matrix.emplace(generate_uniform(rows, cols, seed));
    } else if (kind == "nosaddle") {
        matrix.emplace(generate_nosaddle(rows, cols, seed));
    } else {
        if (rows != cols) throw std::invalid_argument("hard instances are square: pass --rows equal to --cols");
        RandomPool pool(seed, rows);
        auto inst = gen_hard_matrix(rows, pool);
        truth["t_row"] = inst.t_row;
        truth["t_col"] = inst.t_col;
        truth["t_value"] = inst.t_value;
        truth["special_cols"] = inst.special_cols;
        const GameValue v = classify_hard_instance(inst);
        truth["value"] = v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
        matrix.emplace(std::move(inst.matrix));
    }

    if (out_path.empty()) {
        save_matrix(out, *matrix);
        return 0;
    }
    save_matrix_file(out_path, *matrix);
    if (kind == "planted" || kind == "hard") write_json_file(truth_path_for(out_path), truth);
    return 0;
}

int cmd_solve(const std::string& in_path, const SolverFlags& flags, bool json, bool timing, std::ostream& out,
              std::ostream& err)
{
    const Matrix m = load_matrix_file(in_path);
    const SolveParams params = flags.params();
    const SolveReport report = find_strict_saddlepoint(m, params, flags.seed);

    if (report.found && !verify_strict_candidate(m, report.found->row, report.found->col)) {
        err << "defect: reported saddlepoint (" << report.found->row << ", " << report.found->col
            << ") fails verification\n";
        return 3;
    }

    if (json) {
        out << report_to_json(report, timing).dump(2) << '\n';
    } else if (report.found) {
        out << "strict saddlepoint at (" << report.found->row << ", " << report.found->col
            << ") value " << report.found->value << '\n';
        out << "entry reads " << report.entry_reads << ", comparisons " << report.comparisons << ", restarts "
            << report.restarts << '\n';
    } else {
        out << "no strict saddlepoint\n";
        out << "entry reads " << report.entry_reads << ", comparisons " << report.comparisons << ", restarts "
            << report.restarts << '\n';
    }
    return 0;
}

int cmd_oracle(const std::string& in_path, const std::string& mode, std::ostream& out)
{
    const Matrix m = load_matrix_file(in_path);
    const OracleResult r = mode == "strict" ? brute_strict(m) : brute_nonstrict(m);
    out << oracle_to_json(r).dump(2) << '\n';
    return 0;
}

int cmd_bench(std::size_t min_n, std::size_t max_n, std::size_t trials, const SolverFlags& flags,
              const std::string& csv_path, std::ostream& out)
{
    const SolveParams params = flags.params();
    const auto rows = run_bench(min_n, max_n, trials, params);
    if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        if (!f) throw std::runtime_error("cannot write '" + csv_path + "'");
        write_bench_csv(f, rows);
    } else {
        write_bench_csv(out, rows);
    }

    const ScalingSummary s = summarize_scaling(rows);
    const auto wrong = std::count_if(rows.begin(), rows.end(), [](const BenchRow& r) { return !r.correct; });
    out << std::fixed << std::setprecision(3);
    for (std::size_t i = 0; i < s.sizes.size(); ++i) {
        out << "n=" << s.sizes[i] << " median_entry_reads=" << s.median_reads[i]
            << " reads_per_n=" << s.median_reads[i] / static_cast<double>(s.sizes[i]);
        if (i > 0) out << " doubling_ratio=" << s.doubling_ratios[i - 1];
        out << '\n';
    }
    out << "C_bound=" << s.c_bound << " C_fit=" << s.c_fit << " planted_misses=" << wrong << '\n';
    return wrong == 0 ? 0 : 4;
}

int cmd_lb(std::size_t n, std::size_t trials, std::uint64_t divisor, const std::string& strategy_name,
           std::uint64_t seed, const std::string& csv_path, std::ostream& out)
{
    auto strategy = make_strategy(strategy_name);
    const ExperimentRecord rec = run_budget_experiment(*strategy, n, trials, divisor, seed);

    auto write_csv = [&](std::ostream& os) {
        os << "n,trial,budget,reads,answer,truth,success\n";
        for (const auto& t : rec.records)
            os << t.n << ',' << t.trial << ',' << t.budget << ',' << t.reads << ',' << format_value(t.answer) << ','
               << format_value(t.truth) << ',' << (t.success ? "true" : "false") << '\n';
    };
    if (!csv_path.empty()) {
        std::ofstream f(csv_path);
        if (!f) throw std::runtime_error("cannot write '" + csv_path + "'");
        write_csv(f);
    }

    out << std::fixed << std::setprecision(4);
    out << "strategy=" << strategy->name() << " n=" << n << " trials=" << rec.trials
        << " budget=" << (rec.records.empty() ? 0 : rec.records.front().budget)
        << " success_rate=" << rec.success_rate() << " mean_reads=" << rec.mean_reads << '\n';
    out << "read_histogram=";
    for (std::size_t i = 0; i < rec.read_histogram.size(); ++i) out << (i ? "," : "") << rec.read_histogram[i];
    out << '\n';
    return 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Strict saddlepoint search, oracles, benchmarks and lower-bound experiments", "sp"};
    app.require_subcommand(1);

    auto* generate = app.add_subcommand("generate", "Write a random instance");
    std::string gen_kind = "planted";
    std::size_t gen_rows = 0, gen_cols = 0;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    generate->add_option("--kind", gen_kind)->check(CLI::IsMember({"planted", "uniform", "nosaddle", "hard"}));
    generate->add_option("--rows", gen_rows)->required();
    generate->add_option("--cols", gen_cols)->required();
    generate->add_option("--seed", gen_seed);
    generate->add_option("--out", gen_out, "Matrix file; planted and hard kinds also write <stem>.truth.json");

    auto* solve = app.add_subcommand("solve", "Find the strict saddlepoint of a matrix file");
    SolverFlags solve_flags;
    std::string solve_in;
    bool solve_json = false, solve_timing = false;
    solve->add_option("--in", solve_in)->required();
    solve->add_flag("--json", solve_json, "Print the report as JSON");
    solve->add_flag("--timing", solve_timing, "Include wall_time_ns in the JSON report");
    solve_flags.attach(*solve);

    auto* oracle = app.add_subcommand("oracle", "Brute-force saddlepoints of a matrix file");
    std::string oracle_in, oracle_mode = "strict";
    oracle->add_option("--in", oracle_in)->required();
    oracle->add_option("--mode", oracle_mode)->check(CLI::IsMember({"strict", "nonstrict"}));

    auto* bench = app.add_subcommand("bench", "Doubling benchmark on planted instances");
    SolverFlags bench_flags;
    std::size_t min_n = 4096, max_n = 65536, bench_trials = 11;
    std::string bench_csv;
    bench->add_option("--min-n", min_n);
    bench->add_option("--max-n", max_n);
    bench->add_option("--trials", bench_trials);
    bench->add_option("--csv", bench_csv);
    bench_flags.attach(*bench);

    auto* lb = app.add_subcommand("lb", "Budgeted-query experiment on the hard distribution");
    std::size_t lb_n = 200, lb_trials = 1000;
    std::uint64_t lb_divisor = 1000, lb_seed = 0;
    std::string lb_strategy = "row-scan", lb_csv;
    lb->add_option("--n", lb_n);
    lb->add_option("--trials", lb_trials);
    lb->add_option("--budget-divisor", lb_divisor);
    lb->add_option("--strategy", lb_strategy)->check(CLI::IsMember({"full-scan", "row-scan", "random-probe"}));
    lb->add_option("--seed", lb_seed);
    lb->add_option("--csv", lb_csv);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*generate) return cmd_generate(gen_kind, gen_rows, gen_cols, gen_seed, gen_out, out);
        if (*solve) return cmd_solve(solve_in, solve_flags, solve_json, solve_timing, out, err);
        if (*oracle) return cmd_oracle(oracle_in, oracle_mode, out);
        if (*bench) return cmd_bench(min_n, max_n, bench_trials, bench_flags, bench_csv, out);
        if (*lb) return cmd_lb(lb_n, lb_trials, lb_divisor, lb_strategy, lb_seed, lb_csv, out);
    } catch (const std::exception& e) {
        err << "sp: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace saddle::cli
