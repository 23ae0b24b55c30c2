#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "leachsim/model.hpp"

namespace leachsim {

/// Raised for malformed documents, unknown keys, and invariant violations;
/// the message names the offending key(s).
class ConfigParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string to_string(Protocol p);
std::string to_string(KoptMode m);
std::string to_string(NoChFallback f);
Protocol protocol_from_string(const std::string& s);
KoptMode kopt_mode_from_string(const std::string& s);
NoChFallback fallback_from_string(const std::string& s);

/// Parses a config document with unit-suffixed keys (e_elec_nj_per_bit,
/// e_fs_pj_per_bit_m2, ...). Every key is optional and defaults to the
/// stock scenario; unknown keys are an error. The result has passed
/// validate_config.
ScenarioConfig config_from_json(const nlohmann::json& doc);

/// Loads and parses a JSON config file. Throws IoError if the file cannot
/// be read, ConfigParseError for any document problem.
ScenarioConfig load_config(const std::string& path);

/// Serializes a config back to the unit-suffixed document form; reloadable
/// via config_from_json.
nlohmann::json config_to_json(const ScenarioConfig& cfg);

}  // namespace leachsim
