#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "leachsim/commands.hpp"
#include "leachsim/version.hpp"

using namespace leachsim;

namespace {

// "--seeds N" expands to N consecutive seeds starting at the config seed;
// "--seeds a,b,c" is taken verbatim
std::vector<std::uint64_t> parse_seeds(const std::string& arg, std::uint64_t base) {
    if (arg.empty()) return {base};
    if (arg.find(',') == std::string::npos) {
        std::size_t pos = 0;
        unsigned long long count = 0;
        try {
            count = std::stoull(arg, &pos);
        } catch (const std::exception&) {
            throw ConfigParseError("--seeds: expected a count or a comma list, got \"" + arg + "\"");
        }
        if (pos != arg.size() || count == 0)
            throw ConfigParseError("--seeds: expected a positive count, got \"" + arg + "\"");
        std::vector<std::uint64_t> seeds;
        for (unsigned long long i = 0; i < count; ++i)
            seeds.push_back(base + i);
        return seeds;
    }
    std::vector<std::uint64_t> seeds;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        try {
            seeds.push_back(std::stoull(item, &pos));
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != item.size())
            throw ConfigParseError("--seeds: bad seed \"" + item + "\"");
    }
    if (seeds.empty()) throw ConfigParseError("--seeds: empty list");
    return seeds;
}

struct CommonOpts {
    std::string config_path;
    std::string seeds_spec;
    std::string out_dir;
    std::string protocol;
    std::string kopt_mode;
    std::string fallback;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "JSON scenario file (defaults apply if omitted)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--seeds", opts.seeds_spec,
                    "seed count (expands from the config seed) or comma-separated list");
    cmd->add_option("--out", opts.out_dir, "output directory")->required();
    cmd->add_option("--protocol", opts.protocol, "leach|rleach")
        ->check(CLI::IsMember({"leach", "rleach"}));
    cmd->add_option("--kopt-mode", opts.kopt_mode, "literal_clamp|normalized|off")
        ->check(CLI::IsMember({"literal_clamp", "normalized", "off"}));
    cmd->add_option("--fallback", opts.fallback, "direct_to_bs|idle")
        ->check(CLI::IsMember({"direct_to_bs", "idle"}));
}

RunManifest build_manifest(const CommonOpts& opts) {
    ScenarioConfig cfg =
        opts.config_path.empty() ? ScenarioConfig{} : load_config(opts.config_path);
    if (!opts.protocol.empty()) cfg.proto.protocol = protocol_from_string(opts.protocol);
    if (!opts.kopt_mode.empty()) cfg.proto.kopt_mode = kopt_mode_from_string(opts.kopt_mode);
    if (!opts.fallback.empty()) cfg.no_ch_fallback = fallback_from_string(opts.fallback);

    RunManifest manifest;
    manifest.scenario = cfg;
    manifest.seeds = parse_seeds(opts.seeds_spec, cfg.seed);
    manifest.output_dir = opts.out_dir;
    return manifest;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic LEACH / R-LEACH wireless sensor network simulator"};
    app.set_version_flag("--version", std::string("leachsim ") + kVersion);
    app.require_subcommand(1);

    CommonOpts run_opts, compare_opts, sweep_opts;
    std::vector<double> sweep_e0;
    std::vector<double> sweep_bits;

    CLI::App* run = app.add_subcommand("run", "simulate one protocol, one file pair per seed");
    add_common(run, run_opts);
    CLI::App* compare = app.add_subcommand(
        "compare", "paired LEACH vs R-LEACH comparison over shared seeds");
    add_common(compare, compare_opts);
    CLI::App* sweep = app.add_subcommand(
        "sweep", "paired comparison across an initial-energy or packet-size axis");
    add_common(sweep, sweep_opts);
    sweep->add_option("--e0", sweep_e0, "initial energies in joules")->delimiter(',');
    sweep->add_option("--packet-bits", sweep_bits, "packet sizes in bits")->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // usage problems are configuration errors
    }

    try {
        if (run->parsed()) {
            cmd_run(build_manifest(run_opts));
        } else if (compare->parsed()) {
            cmd_compare(build_manifest(compare_opts));
        } else {
            if (sweep_e0.empty() == sweep_bits.empty())
                throw ConfigParseError("sweep: give exactly one of --e0 or --packet-bits");
            const SweepAxis axis = sweep_e0.empty() ? SweepAxis::PacketBits : SweepAxis::E0;
            cmd_sweep(build_manifest(sweep_opts), axis,
                      sweep_e0.empty() ? sweep_bits : sweep_e0);
        }
    } catch (const ConfigParseError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
