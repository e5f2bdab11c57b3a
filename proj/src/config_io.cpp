#include "wsnsim/config_io.hpp"

#include <charconv>
#include <fstream>

namespace wsnsim {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  double out = 0.0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size())
    throw ConfigError(key, "expected a number, got '" + v + "'");
  return out;
}

long long parse_int(const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  long long out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size())
    throw ConfigError(key, "expected an integer, got '" + v + "'");
  return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  std::uint64_t out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size())
    throw ConfigError(key, "expected an unsigned integer, got '" + v + "'");
  return out;
}

std::string parse_string(const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"') return v.substr(1, v.size() - 2);
  if (!v.empty() && v.front() != '"') return v;  // bare word is accepted too
  throw ConfigError(key, "expected a string, got '" + v + "'");
}

std::vector<std::string> parse_array(const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  if (v.size() < 2 || v.front() != '[' || v.back() != ']')
    throw ConfigError(key, "expected an array [..], got '" + v + "'");
  std::vector<std::string> items;
  std::string body = v.substr(1, v.size() - 2);
  std::size_t pos = 0;
  while (pos <= body.size()) {
    const std::size_t comma = body.find(',', pos);
    const std::string item =
        trim(comma == std::string::npos ? body.substr(pos) : body.substr(pos, comma - pos));
    if (!item.empty()) items.push_back(item);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return items;
}

}  // namespace

Protocol parse_protocol(const std::string& name) {
  if (name == "lmeec") return Protocol::Lmeec;
  if (name == "leach") return Protocol::Leach;
  throw ConfigError("protocol", "unknown protocol '" + name + "' (expected lmeec or leach)");
}

RunUntil parse_run_until(const std::string& name) {
  if (name == "time") return RunUntil::TimeCap;
  if (name == "all-dead") return RunUntil::AllDead;
  throw ConfigError("run_until", "unknown mode '" + name + "' (expected time or all-dead)");
}

WeightVariant parse_weight_variant(const std::string& s) {
  if (s == "literal") return WeightVariant::Literal;
  if (s == "magnitude") return WeightVariant::Magnitude;
  throw ConfigError("weights.variant",
                    "unknown variant '" + s + "' (expected literal or magnitude)");
}

void apply_config_line(SimConfig& config, SweepSpec& sweep, const std::string& key,
                       const std::string& raw) {
  if (key == "n_nodes") {
    config.n_nodes = static_cast<int>(parse_int(key, raw));
  } else if (key == "field_side") {
    config.field_side = parse_double(key, raw);
  } else if (key == "bs_pos") {
    const auto items = parse_array(key, raw);
    if (items.size() != 2) throw ConfigError(key, "expected [x, y]");
    config.bs_pos = {parse_double(key, items[0]), parse_double(key, items[1])};
  } else if (key == "radio_range") {
    config.radio_range = parse_double(key, raw);
  } else if (key == "initial_energy") {
    config.initial_energy = parse_double(key, raw);
  } else if (key == "sim_time") {
    config.sim_time = parse_double(key, raw);
  } else if (key == "packet_interval") {
    config.packet_interval = parse_double(key, raw);
  } else if (key == "round_duration") {
    config.round_duration = parse_double(key, raw);
  } else if (key == "data_bits") {
    config.data_bits = parse_int(key, raw);
  } else if (key == "ctrl_bits") {
    config.ctrl_bits = parse_int(key, raw);
  } else if (key == "seed") {
    config.seed = parse_u64(key, raw);
  } else if (key == "reconfig_period") {
    config.reconfig_period = static_cast<int>(parse_int(key, raw));
  } else if (key == "protocol") {
    config.protocol = parse_protocol(parse_string(key, raw));
  } else if (key == "run_until") {
    config.run_until = parse_run_until(parse_string(key, raw));
  } else if (key == "weights.alpha") {
    config.weights.alpha = parse_double(key, raw);
  } else if (key == "weights.beta") {
    config.weights.beta = parse_double(key, raw);
  } else if (key == "weights.gamma") {
    config.weights.gamma = parse_double(key, raw);
  } else if (key == "weights.t0") {
    config.weights.t0 = parse_double(key, raw);
  } else if (key == "weights.variant") {
    config.weights.variant = parse_weight_variant(parse_string(key, raw));
  } else if (key == "leach.p") {
    config.leach.p = parse_double(key, raw);
  } else if (key == "radio.e_elec") {
    config.radio.e_elec = parse_double(key, raw);
  } else if (key == "radio.eps_fs") {
    config.radio.eps_fs = parse_double(key, raw);
  } else if (key == "radio.eps_mp") {
    config.radio.eps_mp = parse_double(key, raw);
  } else if (key == "radio.e_da") {
    config.radio.e_da = parse_double(key, raw);
  } else if (key == "sweep.node_counts") {
    sweep.node_counts.clear();
    for (const auto& item : parse_array(key, raw)) {
      sweep.node_counts.push_back(static_cast<int>(parse_int(key, item)));
    }
  } else if (key == "sweep.seed_count") {
    sweep.seed_count = static_cast<int>(parse_int(key, raw));
  } else if (key == "sweep.protocols") {
    sweep.protocols.clear();
    for (const auto& item : parse_array(key, raw)) {
      sweep.protocols.push_back(parse_protocol(parse_string(key, item)));
    }
  } else {
    throw ConfigError(key, "unknown configuration key");
  }
}

void load_config_file(const std::string& path, SimConfig& config, SweepSpec& sweep) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // strip comments outside quotes
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') quoted = !quoted;
      if (line[i] == '#' && !quoted) {
        line = line.substr(0, i);
        break;
      }
    }
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos)
      throw ConfigError("line " + std::to_string(lineno), "expected key = value");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key.empty()) throw ConfigError("line " + std::to_string(lineno), "empty key");
    apply_config_line(config, sweep, key, value);
  }
}

}  // namespace wsnsim
