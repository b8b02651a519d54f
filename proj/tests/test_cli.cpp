#include "cli.hpp"
#include "saddle/matrix.hpp"
#include "saddle/oracle.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run sp(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int status = saddle::cli::run_command(args, out, err);
    return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

fs::path scratch(const std::string& name)
{
    const fs::path dir = fs::temp_directory_path() / "sp_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("generate, solve and oracle agree on a planted instance")
{
    const auto path = scratch("planted.txt");
    REQUIRE(sp({"generate", "--kind", "planted", "--rows", "40", "--cols", "30", "--seed", "3", "--out",
                path.string()}).status == 0);
    const auto truth = nlohmann::json::parse(slurp(scratch("planted.truth.json")));

    const Run solved = sp({"solve", "--in", path.string(), "--json", "--seed", "9"});
    REQUIRE(solved.status == 0);
    const auto report = nlohmann::json::parse(solved.out);
    CHECK(report["outcome"] == "found");
    CHECK(report["row"] == truth["row"]);
    CHECK(report["col"] == truth["col"]);
    CHECK(report["wall_time_ns"].is_null());
    CHECK(report["preset"] == "practical");

    const Run oracle = sp({"oracle", "--in", path.string()});
    REQUIRE(oracle.status == 0);
    const auto cells = nlohmann::json::parse(oracle.out)["cells"];
    REQUIRE(cells.size() == 1);
    CHECK(cells[0]["row"] == truth["row"]);
    CHECK(cells[0]["value"] == report["value"]);
}

TEST_CASE("solve reports none and oracle lists ties")
{
    const auto path = scratch("ties.txt");
    std::ofstream(path) << "2 2\n7 7\n7 7\n";
    const Run solved = sp({"solve", "--in", path.string(), "--json", "--preset", "paper"});
    REQUIRE(solved.status == 0);
    const auto report = nlohmann::json::parse(solved.out);
    CHECK(report["outcome"] == "none");
    CHECK(report["row"].is_null());

    const auto nonstrict = nlohmann::json::parse(sp({"oracle", "--in", path.string(), "--mode", "nonstrict"}).out);
    CHECK(nonstrict["kind"] == "nonstrict");
    CHECK(nonstrict["cells"].size() == 4);
    CHECK(nlohmann::json::parse(sp({"oracle", "--in", path.string()}).out)["cells"].empty());
}

TEST_CASE("timing is opt-in and everything else is reproducible")
{
    const auto path = scratch("repro.txt");
    REQUIRE(sp({"generate", "--kind", "uniform", "--rows", "64", "--cols", "64", "--seed", "1", "--out",
                path.string()}).status == 0);
    const Run a = sp({"solve", "--in", path.string(), "--json", "--seed", "5"});
    const Run b = sp({"solve", "--in", path.string(), "--json", "--seed", "5"});
    CHECK(a.out == b.out);
    const auto timed = nlohmann::json::parse(sp({"solve", "--in", path.string(), "--json", "--timing"}).out);
    CHECK(timed["wall_time_ns"].is_number_unsigned());
}

TEST_CASE("generated files are stable and round-trip byte for byte")
{
    const auto first = scratch("g1.txt"), second = scratch("g2.txt"), resaved = scratch("g3.txt");
    for (const char* kind : {"planted", "uniform", "nosaddle", "hard"}) {
        REQUIRE(sp({"generate", "--kind", kind, "--rows", "6", "--cols", "6", "--seed", "8", "--out",
                    first.string()}).status == 0);
        REQUIRE(sp({"generate", "--kind", kind, "--rows", "6", "--cols", "6", "--seed", "8", "--out",
                    second.string()}).status == 0);
        CHECK(slurp(first) == slurp(second));
        saddle::save_matrix_file(resaved.string(), saddle::load_matrix_file(first.string()));
        CHECK(slurp(first) == slurp(resaved));
    }
    const auto hard = nlohmann::json::parse(slurp(scratch("g1.truth.json")));
    CHECK(hard["kind"] == "hard");
    const auto m = saddle::load_matrix_file(first.string());
    const auto brute = saddle::brute_nonstrict(m);
    if (brute.cells.empty()) CHECK(hard["value"].is_null());
    else CHECK(hard["value"] == brute.cells.front().value);
}

TEST_CASE("generate without --out writes the matrix to stdout")
{
    const Run r = sp({"generate", "--kind", "uniform", "--rows", "2", "--cols", "3", "--seed", "0"});
    CHECK(r.status == 0);
    std::istringstream in(r.out);
    CHECK(saddle::load_matrix(in).cols() == 3);
}

TEST_CASE("bench and lb print summaries")
{
    const auto csv = scratch("bench.csv");
    const Run bench = sp({"bench", "--min-n", "64", "--max-n", "256", "--trials", "2", "--csv", csv.string()});
    CHECK(bench.status == 0);
    CHECK(bench.out.find("C_bound=") != std::string::npos);
    CHECK(bench.out.find("planted_misses=0") != std::string::npos);
    CHECK(slurp(csv).rfind("n,seed,comparisons,entry_reads,restarts,time_ns,found\n", 0) == 0);

    const auto lb_csv = scratch("lb.csv");
    const Run lb = sp({"lb", "--n", "8", "--trials", "20", "--budget-divisor", "1", "--strategy", "full-scan",
                       "--csv", lb_csv.string()});
    CHECK(lb.status == 0);
    CHECK(lb.out.find("success_rate=1.0000") != std::string::npos);
    const std::string rows = slurp(lb_csv);
    CHECK(rows.rfind("n,trial,budget,reads,answer,truth,success\n", 0) == 0);
    CHECK(std::count(rows.begin(), rows.end(), '\n') == 21);
}

TEST_CASE("errors exit nonzero with a message")
{
    CHECK(sp({}).status != 0);
    CHECK(sp({"solve"}).status != 0);
    CHECK(sp({"solve", "--in", scratch("missing.txt").string()}).status == 1);

    const auto bad = scratch("bad.txt");
    std::ofstream(bad) << "2 2 1 2 x 4";
    const Run parse = sp({"solve", "--in", bad.string()});
    CHECK(parse.status == 1);
    CHECK(parse.err.rfind("sp: ", 0) == 0);

    const auto ok = scratch("ok.txt");
    std::ofstream(ok) << "1 1 5";
    CHECK(sp({"solve", "--in", ok.string(), "--preset", "fast"}).status != 0);
    CHECK(sp({"solve", "--in", ok.string(), "--rng", "dwise", "--dwise-d", "3"}).status == 1);
    CHECK(sp({"solve", "--in", ok.string(), "--delete-fraction", "0.5"}).status == 1);
    CHECK(sp({"generate", "--kind", "hard", "--rows", "3", "--cols", "4"}).status == 1);
    CHECK(sp({"solve", "--in", ok.string()}).out.find("(0, 0) value 5") != std::string::npos);
}
