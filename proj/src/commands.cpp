#include "leachsim/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "leachsim/engine.hpp"
#include "leachsim/version.hpp"

namespace leachsim {

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

// joules and other reals: plain decimal notation with 15 significant
// digits, never scientific, so the columns stay greppable and exceed the
// 12-digit reproducibility floor
std::string fmt(double v) {
    if (v == 0.0) return "0";
    int decimals = 14 - static_cast<int>(std::floor(std::log10(std::abs(v))));
    if (decimals < 0) decimals = 0;
    if (decimals > 30) decimals = 30;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

std::string fmt_marker(const std::optional<long long>& m) {
    return m ? std::to_string(*m) : std::string();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out.good()) throw IoError("cannot open for writing: " + path.string());
    out << content;
    out.flush();
    if (!out.good()) throw IoError("write failed: " + path.string());
}

void ensure_dir(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir))
        throw IoError("cannot create output directory: " + dir.string());
}

// every output file carries the resolved configuration so any figure can be
// regenerated from the file alone
void append_metadata_comments(std::ostringstream& out, const ScenarioConfig& cfg,
                              const std::string& extra = {}) {
    out << "# leachsim " << kVersion << "\n";
    out << "# config: " << config_to_json(cfg).dump() << "\n";
    if (!extra.empty()) out << extra;
}

std::string seeds_comment(const std::vector<std::uint64_t>& seeds) {
    std::ostringstream ss;
    ss << "# seeds:";
    for (std::uint64_t s : seeds) ss << ' ' << s;
    ss << "\n";
    return ss.str();
}

RunSummary run_one(ScenarioConfig cfg, std::uint64_t seed) {
    cfg.seed = seed;
    auto res = validate_config(cfg);
    if (!res.ok()) {
        std::ostringstream ss;
        for (size_t i = 0; i < res.errors.size(); ++i) {
            if (i) ss << "; ";
            ss << res.errors[i].field << ": " << res.errors[i].message;
        }
        throw ConfigParseError(ss.str());
    }
    return run_simulation(*res.config);
}

std::string run_csv(const RunSummary& run) {
    std::ostringstream out;
    std::ostringstream extra;
    extra << "# seed: " << run.config_echo.seed << "\n";
    extra << "# protocol: " << to_string(run.config_echo.proto.protocol) << "\n";
    extra << "# kopt_mode: " << to_string(run.config_echo.proto.kopt_mode) << "\n";
    extra << "# no_ch_fallback: " << to_string(run.config_echo.no_ch_fallback) << "\n";
    extra << "# k_opt: " << fmt(run.k_opt) << "\n";
    extra << "# mean_d_to_bs: " << fmt(run.mean_d_to_bs) << "\n";
    append_metadata_comments(out, run.config_echo, extra.str());

    out << "round,alive,ch_count,direct_count,packets_to_bs_cum,packets_to_ch_cum,"
           "dissipated_j,total_residual_j,avg_residual_j\n";
    const double n = static_cast<double>(run.config_echo.n_nodes);
    long long bs_cum = 0;
    long long ch_cum = 0;
    for (const RoundReport& r : run.rounds) {
        bs_cum += r.packets_to_bs;
        ch_cum += r.packets_to_ch;
        out << r.round << ',' << r.alive_after() << ',' << r.ch_count << ','
            << r.direct_count << ',' << bs_cum << ',' << ch_cum << ','
            << fmt(r.dissipated_j) << ',' << fmt(r.total_residual_j) << ','
            << fmt(r.total_residual_j / n) << "\n";
    }
    return out.str();
}

json markers_json(const LifetimeMarkers& m) {
    json j;
    j["fnd"] = m.fnd ? json(*m.fnd) : json(nullptr);
    j["hnd"] = m.hnd ? json(*m.hnd) : json(nullptr);
    j["lnd"] = m.lnd ? json(*m.lnd) : json(nullptr);
    j["stability_period"] = m.stability_period() ? json(*m.stability_period()) : json(nullptr);
    j["lifetime_span"] = m.lifetime_span() ? json(*m.lifetime_span()) : json(nullptr);
    return j;
}

std::string run_json(const RunSummary& run) {
    json j;
    j["version"] = kVersion;
    j["seed"] = run.config_echo.seed;
    j["protocol"] = to_string(run.config_echo.proto.protocol);
    j["kopt_mode"] = to_string(run.config_echo.proto.kopt_mode);
    j["k_opt"] = run.k_opt;
    j["mean_d_to_bs"] = run.mean_d_to_bs;
    j["config"] = config_to_json(run.config_echo);

    json s = markers_json(run.markers);
    s["total_packets_bs"] = run.total_packets_bs;
    s["total_packets_ch"] = run.total_packets_ch;
    json rounds = json::array();
    for (const RoundReport& r : run.rounds) {
        json row;
        row["round"] = r.round;
        row["alive"] = r.alive_after();
        row["ch_count"] = r.ch_count;
        row["direct_count"] = r.direct_count;
        row["packets_to_bs"] = r.packets_to_bs;
        row["packets_to_ch"] = r.packets_to_ch;
        row["dissipated_j"] = r.dissipated_j;
        row["total_residual_j"] = r.total_residual_j;
        row["deaths"] = r.deaths;
        rounds.push_back(std::move(row));
    }
    s["rounds"] = std::move(rounds);
    j["summary"] = std::move(s);
    return j.dump(2) + "\n";
}

// seed-averaged per-round series; shorter runs hold their last value (a
// finished network stays dead, cumulative deliveries stay put)
std::vector<double> mean_series(const std::vector<std::vector<double>>& per_run) {
    size_t len = 0;
    for (const auto& s : per_run) len = std::max(len, s.size());
    std::vector<double> mean(len, 0.0);
    for (const auto& s : per_run) {
        for (size_t i = 0; i < len; ++i)
            mean[i] += i < s.size() ? s[i] : s.back();
    }
    for (double& v : mean) v /= static_cast<double>(per_run.size());
    return mean;
}

std::string plot_dat(const ScenarioConfig& cfg,
                     const std::vector<std::uint64_t>& seeds, const std::string& what,
                     const std::vector<double>& leach,
                     const std::vector<double>& rleach) {
    std::ostringstream out;
    append_metadata_comments(out, cfg,
                             seeds_comment(seeds) + "# series: " + what +
                                 " (seed-averaged)\n");
    out << "# protocol: leach\n";
    for (size_t i = 0; i < leach.size(); ++i)
        out << i << ' ' << fmt(leach[i]) << "\n";
    out << "\n\n# protocol: rleach\n";
    for (size_t i = 0; i < rleach.size(); ++i)
        out << i << ' ' << fmt(rleach[i]) << "\n";
    return out.str();
}

struct ProtocolBatch {
    std::vector<RunSummary> runs;

    std::vector<double> alive_series(size_t i) const {
        std::vector<double> s;
        for (const RoundReport& r : runs[i].rounds)
            s.push_back(static_cast<double>(r.alive_after()));
        return s;
    }
};

ProtocolBatch run_batch(ScenarioConfig cfg, Protocol proto,
                        const std::vector<std::uint64_t>& seeds) {
    cfg.proto.protocol = proto;
    ProtocolBatch batch;
    batch.runs.reserve(seeds.size());
    for (std::uint64_t seed : seeds) batch.runs.push_back(run_one(cfg, seed));
    return batch;
}

json mean_se_json(const MeanSe& ms) {
    return json{{"mean", ms.mean}, {"se", ms.se}, {"n", ms.n}};
}

json ratio_json(const std::optional<double>& r) {
    return r ? json(*r) : json(nullptr);
}

}  // namespace

ValidatedConfig validate_manifest(const RunManifest& manifest) {
    if (manifest.seeds.empty())
        throw ConfigParseError("seeds: list must be non-empty");
    auto sorted = manifest.seeds;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ConfigParseError("seeds: list must be pairwise distinct");

    auto res = validate_config(manifest.scenario);
    if (!res.ok()) {
        std::ostringstream ss;
        for (size_t i = 0; i < res.errors.size(); ++i) {
            if (i) ss << "; ";
            ss << res.errors[i].field << ": " << res.errors[i].message;
        }
        throw ConfigParseError(ss.str());
    }
    return *res.config;
}

void cmd_run(const RunManifest& manifest) {
    validate_manifest(manifest);
    ensure_dir(manifest.output_dir);
    for (std::uint64_t seed : manifest.seeds) {
        const RunSummary run = run_one(manifest.scenario, seed);
        const std::string stem = "run_" + std::to_string(seed);
        if (manifest.emit.count(EmitKind::RoundCsv))
            write_file(manifest.output_dir / (stem + ".csv"), run_csv(run));
        if (manifest.emit.count(EmitKind::SummaryJson))
            write_file(manifest.output_dir / (stem + ".json"), run_json(run));
    }
}

void cmd_compare(const RunManifest& manifest) {
    const ScenarioConfig resolved = validate_manifest(manifest).get();
    ensure_dir(manifest.output_dir);

    const auto leach = run_batch(manifest.scenario, Protocol::Leach, manifest.seeds);
    const auto rleach = run_batch(manifest.scenario, Protocol::Rleach, manifest.seeds);
    const ComparisonTable table = compare_runs(leach.runs, rleach.runs);

    // compare.json: per-seed metric and ratio table
    json j;
    j["version"] = kVersion;
    j["kopt_mode"] = to_string(resolved.proto.kopt_mode);
    j["no_ch_fallback"] = to_string(resolved.no_ch_fallback);
    j["config"] = config_to_json(resolved);
    j["seeds"] = manifest.seeds;
    json per_seed = json::array();
    for (size_t i = 0; i < manifest.seeds.size(); ++i) {
        const RunSummary& a = leach.runs[i];
        const RunSummary& b = rleach.runs[i];
        const SeedRatios& row = table.per_seed[i];
        const long long window =
            a.markers.lnd.value_or(static_cast<long long>(a.rounds.size()) - 1);
        auto side = [&](const RunSummary& run) {
            json s = markers_json(run.markers);
            s["total_packets_bs"] = run.total_packets_bs;
            s["residual_auc"] = residual_auc(run, window);
            s["k_opt"] = run.k_opt;
            return s;
        };
        json entry;
        entry["seed"] = manifest.seeds[i];
        entry["leach"] = side(a);
        entry["rleach"] = side(b);
        entry["ratios"] = json{{"fnd", ratio_json(row.fnd)},
                               {"hnd", ratio_json(row.hnd)},
                               {"lnd", ratio_json(row.lnd)},
                               {"packets_bs", ratio_json(row.packets_bs)},
                               {"residual_auc", ratio_json(row.residual_auc)}};
        per_seed.push_back(std::move(entry));
    }
    j["per_seed"] = std::move(per_seed);
    j["mean_ratios"] = json{{"fnd", mean_se_json(table.fnd)},
                            {"hnd", mean_se_json(table.hnd)},
                            {"lnd", mean_se_json(table.lnd)},
                            {"packets_bs", mean_se_json(table.packets_bs)},
                            {"residual_auc", mean_se_json(table.residual_auc)}};
    write_file(manifest.output_dir / "compare.json", j.dump(2) + "\n");

    // compare.csv: one row per seed plus mean-ratio footers
    std::ostringstream csv;
    append_metadata_comments(csv, resolved,
                             seeds_comment(manifest.seeds) + "# kopt_mode: " +
                                 to_string(resolved.proto.kopt_mode) + "\n");
    csv << "seed,fnd_leach,hnd_leach,lnd_leach,packets_bs_leach,"
           "fnd_rleach,hnd_rleach,lnd_rleach,packets_bs_rleach,"
           "ratio_fnd,ratio_hnd,ratio_lnd,ratio_packets_bs,ratio_residual_auc\n";
    for (size_t i = 0; i < manifest.seeds.size(); ++i) {
        const auto& a = leach.runs[i].markers;
        const auto& b = rleach.runs[i].markers;
        const SeedRatios& row = table.per_seed[i];
        auto opt = [](const std::optional<double>& v) {
            return v ? fmt(*v) : std::string();
        };
        csv << manifest.seeds[i] << ',' << fmt_marker(a.fnd) << ',' << fmt_marker(a.hnd)
            << ',' << fmt_marker(a.lnd) << ',' << leach.runs[i].total_packets_bs << ','
            << fmt_marker(b.fnd) << ',' << fmt_marker(b.hnd) << ',' << fmt_marker(b.lnd)
            << ',' << rleach.runs[i].total_packets_bs << ',' << opt(row.fnd) << ','
            << opt(row.hnd) << ',' << opt(row.lnd) << ',' << opt(row.packets_bs) << ','
            << opt(row.residual_auc) << "\n";
    }
    auto footer = [&](const char* name, const MeanSe& ms) {
        csv << "# mean_ratio_" << name << ": " << fmt(ms.mean) << " (se " << fmt(ms.se)
            << ", n " << ms.n << ")\n";
    };
    footer("fnd", table.fnd);
    footer("hnd", table.hnd);
    footer("lnd", table.lnd);
    footer("packets_bs", table.packets_bs);
    footer("residual_auc", table.residual_auc);
    write_file(manifest.output_dir / "compare.csv", csv.str());

    // plot data for the lifetime / packets / energy figures
    const int n = resolved.n_nodes;
    auto series_of = [&](const ProtocolBatch& batch, int kind) {
        std::vector<std::vector<double>> all;
        for (size_t i = 0; i < batch.runs.size(); ++i) {
            if (kind == 0) {
                all.push_back(batch.alive_series(i));
            } else if (kind == 1) {
                std::vector<double> s;
                for (long long v : throughput_series(batch.runs[i].rounds))
                    s.push_back(static_cast<double>(v));
                all.push_back(std::move(s));
            } else {
                all.push_back(residual_energy_series(batch.runs[i].rounds, n));
            }
        }
        return mean_series(all);
    };
    write_file(manifest.output_dir / "lifetime.dat",
               plot_dat(resolved, manifest.seeds, "alive nodes per round",
                        series_of(leach, 0), series_of(rleach, 0)));
    write_file(manifest.output_dir / "packets.dat",
               plot_dat(resolved, manifest.seeds, "cumulative packets to BS",
                        series_of(leach, 1), series_of(rleach, 1)));
    write_file(manifest.output_dir / "energy.dat",
               plot_dat(resolved, manifest.seeds, "average residual energy (J)",
                        series_of(leach, 2), series_of(rleach, 2)));
}

void cmd_sweep(const RunManifest& manifest, SweepAxis axis,
               const std::vector<double>& values) {
    const ScenarioConfig resolved = validate_manifest(manifest).get();
    if (values.empty())
        throw ConfigParseError("sweep: axis values must be non-empty");
    ensure_dir(manifest.output_dir);

    auto sorted = values;
    std::sort(sorted.begin(), sorted.end());

    std::ostringstream csv;
    const char* axis_name = axis == SweepAxis::E0 ? "e0_j" : "packet_bits";
    append_metadata_comments(csv, resolved,
                             seeds_comment(manifest.seeds) +
                                 "# axis: " + axis_name + "\n");
    csv << "axis_value,protocol,mean_fnd,mean_hnd,mean_lnd,mean_packets_bs,"
           "se_fnd,se_hnd,se_lnd\n";

    for (double value : sorted) {
        ScenarioConfig cfg = manifest.scenario;
        if (axis == SweepAxis::E0) {
            cfg.e0_joules = value;
        } else {
            cfg.packet_bits = static_cast<long long>(std::llround(value));
        }
        for (Protocol proto : {Protocol::Leach, Protocol::Rleach}) {
            const auto batch = run_batch(cfg, proto, manifest.seeds);
            std::vector<double> fnd, hnd, lnd, packets;
            for (const RunSummary& run : batch.runs) {
                if (run.markers.fnd) fnd.push_back(static_cast<double>(*run.markers.fnd));
                if (run.markers.hnd) hnd.push_back(static_cast<double>(*run.markers.hnd));
                if (run.markers.lnd) lnd.push_back(static_cast<double>(*run.markers.lnd));
                packets.push_back(static_cast<double>(run.total_packets_bs));
            }
            const auto f = mean_se(fnd);
            const auto h = mean_se(hnd);
            const auto l = mean_se(lnd);
            const auto p = mean_se(packets);
            auto cell = [](const MeanSe& ms, bool se) {
                return ms.n == 0 ? std::string() : fmt(se ? ms.se : ms.mean);
            };
            csv << fmt(value) << ',' << to_string(proto) << ',' << cell(f, false)
                << ',' << cell(h, false) << ',' << cell(l, false) << ','
                << cell(p, false) << ',' << cell(f, true) << ',' << cell(h, true)
                << ',' << cell(l, true) << "\n";
        }
    }
    write_file(manifest.output_dir / "sweep.csv", csv.str());
}

}  // namespace leachsim
