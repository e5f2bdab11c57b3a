#include "wsnsim/core.hpp"

#include <cstring>

namespace wsnsim {

double distance(const Position& a, const Position& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

std::string protocol_name(Protocol p) {
  return p == Protocol::Lmeec ? "lmeec" : "leach";
}

double tx_cost(long bits, double d, const RadioEnergyModel& radio) {
  assert(bits >= 0 && d >= 0.0);
  const double b = static_cast<double>(bits);
  if (d < radio.d0()) {
    return radio.e_elec * b + radio.eps_fs * b * d * d;
  }
  return radio.e_elec * b + radio.eps_mp * b * d * d * d * d;
}

double rx_cost(long bits, const RadioEnergyModel& radio) {
  assert(bits >= 0);
  return radio.e_elec * static_cast<double>(bits);
}

double aggregation_cost(long bits, int n_signals, const RadioEnergyModel& radio) {
  assert(bits >= 0 && n_signals >= 1);
  return radio.e_da * static_cast<double>(bits) * static_cast<double>(n_signals);
}

int SimConfig::frames_per_round() const {
  return static_cast<int>(std::llround(round_duration / packet_interval));
}

void SimConfig::validate() const {
  if (n_nodes < 2) throw ConfigError("n_nodes", "must be at least 2");
  if (field_side <= 0.0) throw ConfigError("field_side", "must be positive");
  if (radio_range <= 0.0) throw ConfigError("radio_range", "must be positive");
  if (initial_energy <= 0.0) throw ConfigError("initial_energy", "must be positive");
  if (packet_interval <= 0.0) throw ConfigError("packet_interval", "must be positive");
  if (round_duration < packet_interval)
    throw ConfigError("round_duration", "must be at least packet_interval");
  if (sim_time < round_duration) throw ConfigError("sim_time", "must be at least round_duration");
  const double frames = round_duration / packet_interval;
  if (std::fabs(frames - std::llround(frames)) > 1e-9 * std::max(1.0, frames))
    throw ConfigError("round_duration", "must be an integer multiple of packet_interval");
  if (data_bits <= 0) throw ConfigError("data_bits", "must be positive");
  if (ctrl_bits <= 0) throw ConfigError("ctrl_bits", "must be positive");
  if (reconfig_period < 1) throw ConfigError("reconfig_period", "must be at least 1");
  if (!(weights.alpha >= 0.0 && weights.alpha < 1.0))
    throw ConfigError("weights.alpha", "must lie in [0,1)");
  if (!(weights.beta >= 0.0 && weights.beta <= 1.0))
    throw ConfigError("weights.beta", "must lie in [0,1]");
  if (!(weights.gamma >= 0.0 && weights.gamma <= 1.0))
    throw ConfigError("weights.gamma", "must lie in [0,1]");
  if (!(weights.t0 > 0.0)) throw ConfigError("weights.t0", "must be positive");
  if (!(leach.p > 0.0 && leach.p < 1.0)) throw ConfigError("leach.p", "must lie in (0,1)");
  if (!(radio.e_elec > 0.0)) throw ConfigError("radio.e_elec", "must be positive");
  if (!(radio.eps_fs > 0.0)) throw ConfigError("radio.eps_fs", "must be positive");
  if (!(radio.eps_mp > 0.0)) throw ConfigError("radio.eps_mp", "must be positive");
  if (!(radio.e_da > 0.0)) throw ConfigError("radio.e_da", "must be positive");
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull + stream;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

void drain(Node& node, double joules, EnergyLedger& ledger) {
  assert(node.role != Role::Dead && node.alive);
  assert(joules >= 0.0);
  node.residual_energy -= joules;
  ledger.charge(joules);
}

std::vector<Node> deploy(const SimConfig& config) {
  Rng rng(mix_seed(config.seed, kDeployStream));
  std::vector<Node> nodes(static_cast<std::size_t>(config.n_nodes));
  for (int i = 0; i < config.n_nodes; ++i) {
    Node& n = nodes[static_cast<std::size_t>(i)];
    n.id = i;
    n.pos.x = rng.uniform(0.0, config.field_side);
    n.pos.y = rng.uniform(0.0, config.field_side);
    n.residual_energy = config.initial_energy;
  }
  return nodes;
}

std::uint64_t deployment_hash(const std::vector<Node>& nodes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto feed = [&h](double v) {
    unsigned char bytes[sizeof(double)];
    std::memcpy(bytes, &v, sizeof(double));
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 0x100000001b3ull;
    }
  };
  for (const Node& n : nodes) {
    feed(n.pos.x);
    feed(n.pos.y);
  }
  return h;
}

}  // namespace wsnsim
