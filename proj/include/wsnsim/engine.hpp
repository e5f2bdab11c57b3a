#pragma once

#include <optional>

#include "wsnsim/leach.hpp"
#include "wsnsim/lmeec.hpp"
#include "wsnsim/topology.hpp"

namespace wsnsim {

struct RoundReport {
  int round_index = 0;
  double time_start = 0.0;
  int alive_count = 0;        // after end-of-round death marking
  int unreachable_count = 0;  // alive nodes with no path to the BS this round
  int ch_count = 0;
  double energy_dissipated_this_round = 0.0;
  double total_residual = 0.0;  // raw sum over every deployed node
  std::vector<std::pair<int, int>> cluster_sizes;  // (CH layer, cluster node count)
};

struct SimResult {
  SimConfig config;
  std::vector<RoundReport> rounds;
  int n_reachable0 = 0;  // nodes with a BS path at deployment; metric denominator
  double total_dissipated_J = 0.0;
  double residual_drop_J = 0.0;  // sum(initial - residual) over all nodes at the end
  double avg_dissipated_J = 0.0;
  std::optional<double> fnd_s;
  std::optional<double> hnd_s;
  std::optional<double> lnd_s;
  std::uint64_t deployment_hash = 0;
  int rounds_run = 0;
};

// One run's mutable world. Tests drive run_round directly and inspect the
// clustering left behind by the latest round.
struct SimState {
  SimConfig config;
  std::vector<Node> nodes;
  EnergyLedger ledger;
  int round = 0;
  double time = 0.0;
  AdjacencyMap adj;
  LayerMap layers;
  ClusterSet clusters;
  int n_reachable0 = 0;
  int dead_count = 0;
  bool exhausted = false;  // no alive reachable node left; the run is over
  std::optional<double> fnd_s;
  std::optional<double> hnd_s;
  std::optional<double> lnd_s;
  std::uint64_t deployment_hash = 0;
};

SimState init_state(const SimConfig& config);

// One protocol cycle: configuration, election + formation + control traffic,
// data phase, then death marking. Requires at least one alive reachable node.
RoundReport run_round(SimState& state);

// TDMA data frames plus the relay chains toward the BS, charged per round.
void data_phase(const ClusterSet& clusters, std::vector<Node>& nodes, const SimConfig& config,
                EnergyLedger& ledger);

SimResult run_simulation(const SimConfig& config);

}  // namespace wsnsim
