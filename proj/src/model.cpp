#include "leachsim/model.hpp"

#include <cmath>
#include <sstream>

namespace leachsim {

double distance(const Position& a, const Position& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

namespace {

std::string num(double v) {
    std::ostringstream ss;
    ss << v;
    return ss.str();
}

}  // namespace

ValidationResult validate_config(const ScenarioConfig& cfg) {
    std::vector<ConfigError> errors;
    auto bad = [&](const char* field, const std::string& message) {
        errors.push_back({field, message});
    };

    if (cfg.n_nodes < 1)
        bad("n_nodes", "must be >= 1, got " + std::to_string(cfg.n_nodes));
    if (cfg.packet_bits < 1)
        bad("packet_bits", "must be >= 1, got " + std::to_string(cfg.packet_bits));
    if (!(cfg.e0_joules > 0.0))
        bad("e0_j", "must be > 0, got " + num(cfg.e0_joules));
    if (cfg.max_rounds < 1)
        bad("max_rounds", "must be >= 1, got " + std::to_string(cfg.max_rounds));
    if (!(cfg.field_m > 0.0))
        bad("field_m", "must be > 0, got " + num(cfg.field_m));

    if (!(cfg.radio.e_elec > 0.0))
        bad("e_elec_nj_per_bit", "must be > 0, got " + num(cfg.radio.e_elec) + " J/bit");
    if (!(cfg.radio.e_fs > 0.0))
        bad("e_fs_pj_per_bit_m2", "must be > 0, got " + num(cfg.radio.e_fs) + " J/bit/m^2");
    if (!(cfg.radio.e_mp > 0.0))
        bad("e_mp_pj_per_bit_m4", "must be > 0, got " + num(cfg.radio.e_mp) + " J/bit/m^4");
    if (!(cfg.radio.e_da > 0.0))
        bad("e_da_nj_per_bit", "must be > 0, got " + num(cfg.radio.e_da) + " J/bit");
    if (cfg.radio.e_fs > 0.0 && cfg.radio.e_mp > 0.0) {
        const double ratio = cfg.radio.e_fs / cfg.radio.e_mp;
        if (!std::isfinite(ratio) || !(ratio > 0.0))
            bad("e_mp_pj_per_bit_m4",
                "e_fs/e_mp must give a finite positive crossover, got " + num(ratio));
    }

    if (!(cfg.proto.p_ch > 0.0) || cfg.proto.p_ch > 1.0)
        bad("p_ch", "must be in (0, 1], got " + num(cfg.proto.p_ch));
    if (cfg.proto.kopt_override && !(*cfg.proto.kopt_override > 0.0))
        bad("kopt_override", "must be > 0, got " + num(*cfg.proto.kopt_override));

    if (!errors.empty()) return {std::nullopt, std::move(errors)};

    ScenarioConfig resolved = cfg;
    if (!resolved.bs_position)
        resolved.bs_position = Position{cfg.field_m / 2.0, cfg.field_m / 2.0};
    return {ValidatedConfig(std::move(resolved)), {}};
}

}  // namespace leachsim
