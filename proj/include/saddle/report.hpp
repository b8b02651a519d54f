#pragma once

#include "saddle/oracle.hpp"
#include "saddle/solver.hpp"

#include <json.hpp>

namespace saddle {

/// Stable field names: outcome, row, col, value, comparisons, entry_reads,
/// restarts, random_words, wall_time_ns, seed, preset. row/col/value are null
/// when nothing is found; wall_time_ns is null unless `with_timing`, so that
/// reruns produce identical bytes.
nlohmann::ordered_json report_to_json(const SolveReport& report, bool with_timing);

/// {"kind": "strict"|"nonstrict", "cells": [{"row", "col", "value"}, ...]}
nlohmann::ordered_json oracle_to_json(const OracleResult& result);

}  // namespace saddle
