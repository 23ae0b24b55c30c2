#pragma once

#include <cstdint>
#include <filesystem>
#include <set>
#include <vector>

#include "leachsim/config.hpp"
#include "leachsim/metrics.hpp"

namespace leachsim {

enum class EmitKind { RoundCsv, SummaryJson, PlotDat };

struct RunManifest {
    ScenarioConfig scenario;
    std::vector<std::uint64_t> seeds;  // non-empty, pairwise distinct
    std::filesystem::path output_dir;
    std::set<EmitKind> emit = {EmitKind::RoundCsv, EmitKind::SummaryJson};
};

/// Throws ConfigParseError on an empty or duplicated seed list or an
/// invalid scenario.
ValidatedConfig validate_manifest(const RunManifest& manifest);

/// One simulation per seed; writes run_<seed>.csv and run_<seed>.json.
void cmd_run(const RunManifest& manifest);

/// Runs LEACH and R-LEACH on identical seeds; writes compare.json,
/// compare.csv, and gnuplot-style lifetime.dat / packets.dat / energy.dat
/// (seed-averaged series, one block per protocol).
void cmd_compare(const RunManifest& manifest);

enum class SweepAxis { E0, PacketBits };

/// Full compare at each axis point; writes sweep.csv with per-protocol
/// marker means and standard errors, rows sorted by (axis_value, protocol).
void cmd_sweep(const RunManifest& manifest, SweepAxis axis,
               const std::vector<double>& values);

}  // namespace leachsim
