#pragma once

#include <string>

#include "wsnsim/report.hpp"

namespace wsnsim {

// Flat key-value config file, TOML syntax ('#' comments, key = value, dotted
// keys for the nested groups, [a, b] arrays). Unknown keys and malformed
// values raise ConfigError naming the key.
void apply_config_line(SimConfig& config, SweepSpec& sweep, const std::string& key,
                       const std::string& raw_value);
void load_config_file(const std::string& path, SimConfig& config, SweepSpec& sweep);

Protocol parse_protocol(const std::string& name);          // "lmeec" | "leach"
RunUntil parse_run_until(const std::string& name);         // "time" | "all-dead"
WeightVariant parse_weight_variant(const std::string& s);  // "literal" | "magnitude"

}  // namespace wsnsim
