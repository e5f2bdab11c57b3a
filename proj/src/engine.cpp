#include "wsnsim/engine.hpp"

#include <algorithm>
#include <limits>

namespace wsnsim {

namespace {

int count_alive_reachable(const std::vector<Node>& nodes, const LayerMap& layers) {
  int count = 0;
  for (const Node& n : nodes) {
    if (n.alive && layers.reachable(n.id)) ++count;
  }
  return count;
}

void sync_node_layers(std::vector<Node>& nodes, const LayerMap& layers) {
  for (Node& n : nodes) n.layer = n.alive ? layers.of(n.id) : LayerMap::kUnreachable;
}

}  // namespace

SimState init_state(const SimConfig& config) {
  SimState s;
  s.config = config;
  s.nodes = deploy(config);
  s.deployment_hash = deployment_hash(s.nodes);
  s.adj = build_adjacency(s.nodes, config.radio_range);
  s.layers = assign_layers(s.adj, s.nodes, config.bs_pos, config.radio_range);
  sync_node_layers(s.nodes, s.layers);
  s.n_reachable0 = count_alive_reachable(s.nodes, s.layers);
  s.exhausted = s.n_reachable0 == 0;
  return s;
}

void data_phase(const ClusterSet& clusters, std::vector<Node>& nodes, const SimConfig& config,
                EnergyLedger& ledger) {
  const double frames = static_cast<double>(config.frames_per_round());
  const double rx_data = rx_cost(config.data_bits, config.radio);

  if (clusters.direct_fallback) {
    for (int id : clusters.direct_senders) {
      Node& n = nodes[static_cast<std::size_t>(id)];
      drain(n, frames * tx_cost(config.data_bits, distance(n.pos, config.bs_pos), config.radio),
            ledger);
    }
    return;
  }

  // intra-cluster frames: members up to their CH, CH receives and aggregates
  for (const auto& [ch, members] : clusters.members) {
    Node& head = nodes[static_cast<std::size_t>(ch)];
    for (int m : members) {
      Node& member = nodes[static_cast<std::size_t>(m)];
      drain(member,
            frames * tx_cost(config.data_bits, distance(member.pos, head.pos), config.radio),
            ledger);
    }
    const int signals = static_cast<int>(members.size()) + 1;
    drain(head,
          frames * (rx_data * static_cast<double>(members.size()) +
                    aggregation_cost(config.data_bits, signals, config.radio)),
          ledger);
  }

  // each CH's aggregate rides its relay chain to the BS, one packet per frame
  for (const auto& [origin, _] : clusters.members) {
    int cur = origin;
    while (true) {
      const RelayTarget hop = clusters.relay.at(cur);
      Node& sender = nodes[static_cast<std::size_t>(cur)];
      if (hop.direct_to_bs) {
        drain(sender,
              frames * tx_cost(config.data_bits, distance(sender.pos, config.bs_pos), config.radio),
              ledger);
        break;
      }
      Node& receiver = nodes[static_cast<std::size_t>(hop.ch_id)];
      drain(sender,
            frames * tx_cost(config.data_bits, distance(sender.pos, receiver.pos), config.radio),
            ledger);
      drain(receiver, frames * rx_data, ledger);
      cur = hop.ch_id;
    }
  }
}

RoundReport run_round(SimState& s) {
  const SimConfig& cfg = s.config;
  RoundReport rep;
  rep.round_index = s.round;
  rep.time_start = s.time;
  s.ledger.begin_round();

  // phase 1: neighbor discovery and layering
  if (s.round % cfg.reconfig_period == 0) {
    s.adj = build_adjacency(s.nodes, cfg.radio_range);
    s.layers = assign_layers(s.adj, s.nodes, cfg.bs_pos, cfg.radio_range);
    sync_node_layers(s.nodes, s.layers);
    charge_configuration_energy(s.nodes, s.adj, s.layers, cfg, s.ledger);
  }
  assert(count_alive_reachable(s.nodes, s.layers) > 0);
  for (const Node& n : s.nodes) {
    if (n.alive && !s.layers.reachable(n.id)) ++rep.unreachable_count;
  }

  // phase 2: election, cluster formation, relays, control traffic
  if (cfg.protocol == Protocol::Lmeec) {
    const std::vector<int> ch_set = elect_cluster_heads(s.nodes, s.layers, s.adj, cfg.weights,
                                                        cfg.n_nodes, cfg.initial_energy);
    const std::vector<ChAnnouncement> anns = make_announcements(ch_set, s.nodes, s.adj, s.layers);
    s.clusters = form_clusters(ch_set, anns, s.adj, s.layers, s.nodes);
    select_all_relays(s.clusters, s.adj, s.layers, s.nodes);
    charge_control_traffic(s.clusters, s.nodes, s.adj, cfg, s.ledger, false);
  } else {
    Rng rng(mix_seed(mix_seed(cfg.seed, kLeachStream), static_cast<std::uint64_t>(s.round)));
    const std::vector<int> ch_set = leach_elect(s.nodes, s.layers, cfg.leach, s.round, rng);
    s.clusters = leach_form_clusters(ch_set, s.nodes, s.layers);
    charge_control_traffic(s.clusters, s.nodes, s.adj, cfg, s.ledger, true);
  }

  // phase 3
  data_phase(s.clusters, s.nodes, cfg, s.ledger);

  // deaths are marked only at the round boundary
  const double time_end = s.time + cfg.round_duration;
  int deaths = 0;
  for (Node& n : s.nodes) {
    if (n.alive && n.residual_energy <= 0.0) {
      n.alive = false;
      n.role = Role::Dead;
      ++deaths;
    }
  }
  if (deaths > 0) {
    s.dead_count += deaths;
    if (!s.fnd_s) s.fnd_s = time_end;
    if (!s.hnd_s && s.n_reachable0 > 0 && 2 * s.dead_count >= s.n_reachable0) s.hnd_s = time_end;
    // deaths can strand survivors, so re-derive reachability before deciding
    // whether anything is left to run
    const AdjacencyMap adj_now = build_adjacency(s.nodes, cfg.radio_range);
    const LayerMap layers_now = assign_layers(adj_now, s.nodes, cfg.bs_pos, cfg.radio_range);
    if (count_alive_reachable(s.nodes, layers_now) == 0) {
      s.exhausted = true;
      s.lnd_s = time_end;
    }
  }

  for (const Node& n : s.nodes) {
    if (n.alive) ++rep.alive_count;
    rep.total_residual += n.residual_energy;
  }
  rep.ch_count = s.clusters.direct_fallback ? 0 : s.clusters.ch_count();
  if (!s.clusters.direct_fallback) {
    for (const auto& [ch, members] : s.clusters.members) {
      rep.cluster_sizes.emplace_back(s.layers.of(ch), static_cast<int>(members.size()) + 1);
    }
  }
  rep.energy_dissipated_this_round = s.ledger.round;

  s.round += 1;
  s.time = time_end;
  return rep;
}

SimResult run_simulation(const SimConfig& config) {
  config.validate();
  SimState s = init_state(config);

  const long long max_rounds =
      config.run_until == RunUntil::TimeCap
          ? std::llround(config.sim_time / config.round_duration)
          : std::numeric_limits<long long>::max();

  SimResult result;
  while (!s.exhausted && s.round < max_rounds) {
    result.rounds.push_back(run_round(s));
  }

  result.config = config;
  result.n_reachable0 = s.n_reachable0;
  result.total_dissipated_J = s.ledger.total;
  for (const Node& n : s.nodes) {
    result.residual_drop_J += config.initial_energy - n.residual_energy;
  }
  result.avg_dissipated_J =
      s.n_reachable0 > 0 ? s.ledger.total / static_cast<double>(s.n_reachable0) : 0.0;
  result.fnd_s = s.fnd_s;
  result.hnd_s = s.hnd_s;
  result.lnd_s = s.lnd_s;
  result.deployment_hash = s.deployment_hash;
  result.rounds_run = static_cast<int>(result.rounds.size());
  return result;
}

}  // namespace wsnsim
