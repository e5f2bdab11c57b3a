#pragma once

#include <cassert>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace wsnsim {

struct Position {
  double x = 0.0;
  double y = 0.0;
};

double distance(const Position& a, const Position& b);

enum class Role { Member, ClusterHead, Dead };
enum class Protocol { Lmeec, Leach };
enum class RunUntil { TimeCap, AllDead };
enum class WeightVariant { Literal, Magnitude };

std::string protocol_name(Protocol p);

struct Node {
  int id = 0;
  Position pos;
  double residual_energy = 0.0;  // joules; may dip below zero on the action that kills the node
  int layer = 0;                 // hop count to the base station; 0 = unset or unreachable
  Role role = Role::Member;
  int num_ch = 0;                // cluster-head terms served so far, never reset
  int last_ch_round = -1;        // round of the most recent CH term (LEACH epoch bookkeeping)
  bool alive = true;
};

// First-order radio model: fixed electronics cost per bit plus an amplifier
// term growing with d^2 below the crossover distance d0 and d^4 above it.
struct RadioEnergyModel {
  double e_elec = 50e-9;      // J/bit, tx and rx electronics
  double eps_fs = 10e-12;     // J/bit/m^2, free-space amplifier
  double eps_mp = 0.0013e-12; // J/bit/m^4, multipath amplifier
  double e_da = 5e-9;         // J/bit/signal, aggregation

  double d0() const { return std::sqrt(eps_fs / eps_mp); }  // ~87.7 m with defaults
};

double tx_cost(long bits, double d, const RadioEnergyModel& radio);
double rx_cost(long bits, const RadioEnergyModel& radio);
double aggregation_cost(long bits, int n_signals, const RadioEnergyModel& radio);

// Knobs of the election weight and threshold.
struct WeightParams {
  double alpha = 0.5;  // in [0,1); keeps the layer denominators away from zero
  double beta = 0.5;   // in [0,1]
  double gamma = 0.5;  // in [0,1], scales the re-election penalty
  double t0 = 0.5;     // threshold base; threshold(layer) = t0 / layer
  WeightVariant variant = WeightVariant::Magnitude;
};

struct LeachParams {
  double p = 0.05;  // desired CH fraction per round, in (0,1)

  int epoch_rounds() const { return static_cast<int>(std::ceil(1.0 / p)); }
};

// Configuration problem reported with the offending key so the CLI can name it.
struct ConfigError : std::runtime_error {
  std::string key;

  ConfigError(std::string k, const std::string& msg)
      : std::runtime_error(k + ": " + msg), key(std::move(k)) {}
};

struct SimConfig {
  int n_nodes = 100;
  double field_side = 100.0;
  Position bs_pos{50.0, 50.0};
  double radio_range = 25.0;
  double initial_energy = 2.0;   // joules per node
  double sim_time = 500.0;       // seconds
  double packet_interval = 0.2;  // seconds between data packets
  double round_duration = 20.0;  // seconds per protocol round
  long data_bits = 4000;
  long ctrl_bits = 200;
  std::uint64_t seed = 1;
  int reconfig_period = 1;  // re-run neighbor discovery / layering every k rounds
  WeightParams weights;
  LeachParams leach;
  RadioEnergyModel radio;
  Protocol protocol = Protocol::Lmeec;
  RunUntil run_until = RunUntil::TimeCap;

  int frames_per_round() const;
  void validate() const;  // throws ConfigError
};

// Deterministic seeded RNG. Uniform doubles come from the raw 64-bit stream
// (53-bit mantissa mapping) so results do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  double uniform() { return (next() >> 11) * 0x1.0p-53; }  // [0,1)
  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

 private:
  std::mt19937_64 eng_;
};

// splitmix64-style mixing for independent substreams of one master seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

inline constexpr std::uint64_t kDeployStream = 0x9e3779b97f4a7c15ull;
inline constexpr std::uint64_t kLeachStream = 0xbf58476d1ce4e5b9ull;
inline constexpr std::uint64_t kSweepStream = 0x94d049bb133111ebull;

// Every joule leaving a battery goes through the ledger.
struct EnergyLedger {
  double total = 0.0;
  double round = 0.0;

  void begin_round() { round = 0.0; }
  void charge(double joules) {
    total += joules;
    round += joules;
  }
};

void drain(Node& node, double joules, EnergyLedger& ledger);

// Uniform random placement over the field; node ids equal vector indices.
std::vector<Node> deploy(const SimConfig& config);

// FNV-1a over the position bytes in id order; audits paired-topology runs.
std::uint64_t deployment_hash(const std::vector<Node>& nodes);

}  // namespace wsnsim
