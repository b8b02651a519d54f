#include "saddle/report.hpp"

namespace saddle {

nlohmann::ordered_json report_to_json(const SolveReport& report, bool with_timing)
{
    nlohmann::ordered_json j;
    j["outcome"] = report.found ? "found" : "none";
    j["row"] = report.found ? nlohmann::ordered_json(report.found->row) : nlohmann::ordered_json(nullptr);
    j["col"] = report.found ? nlohmann::ordered_json(report.found->col) : nlohmann::ordered_json(nullptr);
    j["value"] = report.found ? nlohmann::ordered_json(report.found->value) : nlohmann::ordered_json(nullptr);
    j["comparisons"] = report.comparisons;
    j["entry_reads"] = report.entry_reads;
    j["restarts"] = report.restarts;
    j["random_words"] = report.random_words;
    j["wall_time_ns"] = with_timing ? nlohmann::ordered_json(report.wall_time_ns) : nlohmann::ordered_json(nullptr);
    j["seed"] = report.seed;
    j["preset"] = report.preset;
    return j;
}

nlohmann::ordered_json oracle_to_json(const OracleResult& result)
{
    nlohmann::ordered_json j;
    j["kind"] = result.kind == SaddleKind::strict ? "strict" : "nonstrict";
    j["cells"] = nlohmann::ordered_json::array();
    for (const Cell& c : result.cells) j["cells"].push_back({{"row", c.row}, {"col", c.col}, {"value", c.value}});
    return j;
}

}  // namespace saddle
