#include "leachsim/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace leachsim {

using nlohmann::json;

std::string to_string(Protocol p) {
    return p == Protocol::Leach ? "leach" : "rleach";
}

std::string to_string(KoptMode m) {
    switch (m) {
        case KoptMode::LiteralClamp: return "literal_clamp";
        case KoptMode::Normalized: return "normalized";
        default: return "off";
    }
}

std::string to_string(NoChFallback f) {
    return f == NoChFallback::DirectToBs ? "direct_to_bs" : "idle";
}

Protocol protocol_from_string(const std::string& s) {
    if (s == "leach") return Protocol::Leach;
    if (s == "rleach") return Protocol::Rleach;
    throw ConfigParseError("protocol: expected \"leach\" or \"rleach\", got \"" + s + "\"");
}

KoptMode kopt_mode_from_string(const std::string& s) {
    if (s == "literal_clamp") return KoptMode::LiteralClamp;
    if (s == "normalized") return KoptMode::Normalized;
    if (s == "off") return KoptMode::Off;
    throw ConfigParseError(
        "kopt_mode: expected \"literal_clamp\", \"normalized\" or \"off\", got \"" + s + "\"");
}

NoChFallback fallback_from_string(const std::string& s) {
    if (s == "direct_to_bs") return NoChFallback::DirectToBs;
    if (s == "idle") return NoChFallback::Idle;
    throw ConfigParseError(
        "no_ch_fallback: expected \"direct_to_bs\" or \"idle\", got \"" + s + "\"");
}

namespace {

double require_number(const json& doc, const char* key) {
    const json& v = doc.at(key);
    if (!v.is_number())
        throw ConfigParseError(std::string(key) + ": expected a number");
    return v.get<double>();
}

long long require_integer(const json& doc, const char* key) {
    const json& v = doc.at(key);
    if (!v.is_number_integer())
        throw ConfigParseError(std::string(key) + ": expected an integer");
    return v.get<long long>();
}

std::string require_string(const json& doc, const char* key) {
    const json& v = doc.at(key);
    if (!v.is_string())
        throw ConfigParseError(std::string(key) + ": expected a string");
    return v.get<std::string>();
}

// Serialized unit-suffixed values must reload to the identical SI double.
// si/factor alone can be one ulp off after the reload multiplication, so
// nudge the quotient until quotient * factor == si.
double exact_quotient(double si, double factor) {
    const double q = si / factor;
    if (q * factor == si) return q;
    const double up = std::nextafter(q, std::numeric_limits<double>::infinity());
    if (up * factor == si) return up;
    const double dn = std::nextafter(q, -std::numeric_limits<double>::infinity());
    if (dn * factor == si) return dn;
    return q;
}

Position parse_bs(const json& v) {
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
        return {v[0].get<double>(), v[1].get<double>()};
    if (v.is_object() && v.contains("x") && v.contains("y") && v.size() == 2 &&
        v["x"].is_number() && v["y"].is_number())
        return {v["x"].get<double>(), v["y"].get<double>()};
    throw ConfigParseError(
        "bs_position: expected \"center\", [x, y], or {\"x\": ..., \"y\": ...}");
}

}  // namespace

ScenarioConfig config_from_json(const json& doc) {
    if (!doc.is_object())
        throw ConfigParseError("config root must be a JSON object");

    static const std::set<std::string> known = {
        "seed",          "n_nodes",
        "field_m",       "bs_position",
        "packet_bits",   "e0_j",
        "e_elec_nj_per_bit", "e_fs_pj_per_bit_m2",
        "e_mp_pj_per_bit_m4", "e_da_nj_per_bit",
        "p_ch",          "protocol",
        "kopt_mode",     "kopt_override",
        "no_ch_fallback", "max_rounds",
    };
    for (const auto& item : doc.items()) {
        if (!known.count(item.key()))
            throw ConfigParseError("unknown key: " + item.key());
    }

    ScenarioConfig cfg;  // stock defaults
    if (doc.contains("seed")) {
        const json& v = doc.at("seed");
        if (!v.is_number_unsigned())
            throw ConfigParseError("seed: expected a non-negative integer");
        cfg.seed = v.get<std::uint64_t>();
    }
    if (doc.contains("n_nodes"))
        cfg.n_nodes = static_cast<int>(require_integer(doc, "n_nodes"));
    if (doc.contains("field_m")) cfg.field_m = require_number(doc, "field_m");
    if (doc.contains("packet_bits"))
        cfg.packet_bits = require_integer(doc, "packet_bits");
    if (doc.contains("e0_j")) cfg.e0_joules = require_number(doc, "e0_j");
    if (doc.contains("max_rounds"))
        cfg.max_rounds = require_integer(doc, "max_rounds");

    if (doc.contains("e_elec_nj_per_bit"))
        cfg.radio.e_elec = require_number(doc, "e_elec_nj_per_bit") * 1e-9;
    if (doc.contains("e_fs_pj_per_bit_m2"))
        cfg.radio.e_fs = require_number(doc, "e_fs_pj_per_bit_m2") * 1e-12;
    if (doc.contains("e_mp_pj_per_bit_m4"))
        cfg.radio.e_mp = require_number(doc, "e_mp_pj_per_bit_m4") * 1e-12;
    if (doc.contains("e_da_nj_per_bit"))
        cfg.radio.e_da = require_number(doc, "e_da_nj_per_bit") * 1e-9;

    if (doc.contains("p_ch")) cfg.proto.p_ch = require_number(doc, "p_ch");
    if (doc.contains("protocol"))
        cfg.proto.protocol = protocol_from_string(require_string(doc, "protocol"));
    if (doc.contains("kopt_mode"))
        cfg.proto.kopt_mode = kopt_mode_from_string(require_string(doc, "kopt_mode"));
    if (doc.contains("kopt_override"))
        cfg.proto.kopt_override = require_number(doc, "kopt_override");
    if (doc.contains("no_ch_fallback"))
        cfg.no_ch_fallback = fallback_from_string(require_string(doc, "no_ch_fallback"));

    if (doc.contains("bs_position")) {
        const json& v = doc.at("bs_position");
        if (v.is_string()) {
            if (v.get<std::string>() != "center")
                throw ConfigParseError("bs_position: unknown keyword \"" +
                                       v.get<std::string>() + "\"");
            cfg.bs_position = std::nullopt;
        } else {
            cfg.bs_position = parse_bs(v);
        }
    }

    const auto res = validate_config(cfg);
    if (!res.ok()) {
        std::ostringstream ss;
        for (size_t i = 0; i < res.errors.size(); ++i) {
            if (i) ss << "; ";
            ss << res.errors[i].field << ": " << res.errors[i].message;
        }
        throw ConfigParseError(ss.str());
    }
    return cfg;
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw IoError("cannot open config file: " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::parse_error& e) {
        throw ConfigParseError(path + ": " + e.what());
    }
    return config_from_json(doc);
}

json config_to_json(const ScenarioConfig& cfg) {
    json j;
    j["seed"] = cfg.seed;
    j["n_nodes"] = cfg.n_nodes;
    j["field_m"] = cfg.field_m;
    if (cfg.bs_position)
        j["bs_position"] = {cfg.bs_position->x, cfg.bs_position->y};
    else
        j["bs_position"] = "center";
    j["packet_bits"] = cfg.packet_bits;
    j["e0_j"] = cfg.e0_joules;
    j["e_elec_nj_per_bit"] = exact_quotient(cfg.radio.e_elec, 1e-9);
    j["e_fs_pj_per_bit_m2"] = exact_quotient(cfg.radio.e_fs, 1e-12);
    j["e_mp_pj_per_bit_m4"] = exact_quotient(cfg.radio.e_mp, 1e-12);
    j["e_da_nj_per_bit"] = exact_quotient(cfg.radio.e_da, 1e-9);
    j["p_ch"] = cfg.proto.p_ch;
    j["protocol"] = to_string(cfg.proto.protocol);
    j["kopt_mode"] = to_string(cfg.proto.kopt_mode);
    if (cfg.proto.kopt_override) j["kopt_override"] = *cfg.proto.kopt_override;
    j["no_ch_fallback"] = to_string(cfg.no_ch_fallback);
    j["max_rounds"] = cfg.max_rounds;
    return j;
}

}  // namespace leachsim
