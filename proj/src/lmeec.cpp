#include "wsnsim/lmeec.hpp"

#include <algorithm>

namespace wsnsim {

double node_weight(int layer, int deg, int n_total, double e_res, double e_total,
                   int num_ch, const WeightParams& params) {
  assert(layer >= 1);
  assert(n_total >= 1);
  assert(e_total > 0.0);
  assert(num_ch >= 0);
  const double l = static_cast<double>(layer);
  const double degree_factor = params.variant == WeightVariant::Literal
                                   ? 1.0 / (params.alpha - l)
                                   : 1.0 / (l - params.alpha);
  const double degree_term = degree_factor * (static_cast<double>(deg) / n_total);
  const double energy_term = (1.0 / (params.beta + l)) * (e_res / e_total);
  const double history_penalty = params.gamma * (1.0 - 1.0 / (1.0 + num_ch));
  return degree_term + energy_term - history_penalty;
}

double election_threshold(int layer, const WeightParams& params) {
  assert(layer >= 1);
  return params.t0 / static_cast<double>(layer);
}

std::vector<int> elect_cluster_heads(std::vector<Node>& nodes, const LayerMap& layers,
                                     const AdjacencyMap& adj, const WeightParams& params,
                                     int n_total, double e_total) {
  std::vector<int> ch_set;
  for (Node& n : nodes) {
    if (!n.alive) continue;
    n.role = Role::Member;
    if (!layers.reachable(n.id)) continue;
    const double w = node_weight(layers.of(n.id), adj.degree(n.id), n_total,
                                 n.residual_energy, e_total, n.num_ch, params);
    if (w >= election_threshold(layers.of(n.id), params)) ch_set.push_back(n.id);
  }
  for (int id : ch_set) {
    nodes[static_cast<std::size_t>(id)].role = Role::ClusterHead;
    nodes[static_cast<std::size_t>(id)].num_ch += 1;
  }
  return ch_set;
}

double ch_announcement_weight(double e_res, int deg, int layer) {
  assert(deg >= 1);
  assert(layer >= 1);
  return (e_res / static_cast<double>(deg)) * static_cast<double>(layer);
}

std::vector<ChAnnouncement> make_announcements(const std::vector<int>& ch_set,
                                               const std::vector<Node>& nodes,
                                               const AdjacencyMap& adj, const LayerMap& layers) {
  std::vector<ChAnnouncement> anns;
  anns.reserve(ch_set.size());
  for (int id : ch_set) {
    const int deg = adj.degree(id);
    if (deg == 0) continue;  // no one in range to hear it
    anns.push_back({id, ch_announcement_weight(nodes[static_cast<std::size_t>(id)].residual_energy,
                                               deg, layers.of(id)),
                    layers.of(id)});
  }
  return anns;
}

ClusterSet form_clusters(const std::vector<int>& ch_set,
                         const std::vector<ChAnnouncement>& announcements,
                         const AdjacencyMap& adj, const LayerMap& layers,
                         std::vector<Node>& nodes) {
  ClusterSet cs;
  for (int id : ch_set) cs.members[id];

  std::vector<const ChAnnouncement*> ann_of(nodes.size(), nullptr);
  for (const ChAnnouncement& a : announcements) ann_of[static_cast<std::size_t>(a.ch_id)] = &a;

  for (Node& n : nodes) {
    if (!n.alive || !layers.reachable(n.id)) continue;
    if (n.role == Role::ClusterHead) continue;

    const ChAnnouncement* best = nullptr;
    for (int j : adj.of(n.id)) {
      const ChAnnouncement* a = ann_of[static_cast<std::size_t>(j)];
      if (a == nullptr) continue;
      if (best == nullptr || a->p_ch > best->p_ch ||
          (a->p_ch == best->p_ch &&
           (a->layer > best->layer || (a->layer == best->layer && a->ch_id < best->ch_id)))) {
        best = a;
      }
    }
    if (best != nullptr) {
      cs.members[best->ch_id].push_back(n.id);
    } else {
      // heard nothing: promote to a singleton cluster so its data still flows
      n.role = Role::ClusterHead;
      n.num_ch += 1;
      cs.members[n.id];
    }
  }
  return cs;
}

RelayTarget select_relay(int ch_id, const ClusterSet& clusters, const AdjacencyMap& adj,
                         const LayerMap& layers, const std::vector<Node>& nodes) {
  const int own_layer = layers.of(ch_id);
  if (own_layer == 1) return {true, -1};

  int best = -1;
  for (int j : adj.of(ch_id)) {
    if (clusters.members.find(j) == clusters.members.end()) continue;
    if (layers.of(j) >= own_layer) continue;
    if (best == -1 || nodes[static_cast<std::size_t>(j)].residual_energy >
                          nodes[static_cast<std::size_t>(best)].residual_energy) {
      best = j;
    }
  }
  if (best == -1) return {true, -1};
  return {false, best};
}

void select_all_relays(ClusterSet& clusters, const AdjacencyMap& adj, const LayerMap& layers,
                       const std::vector<Node>& nodes) {
  for (const auto& [ch, _] : clusters.members) {
    clusters.relay[ch] = select_relay(ch, clusters, adj, layers, nodes);
  }
}

void charge_control_traffic(const ClusterSet& clusters, std::vector<Node>& nodes,
                            const AdjacencyMap& adj, const SimConfig& config,
                            EnergyLedger& ledger, bool network_wide_announcements) {
  if (clusters.direct_fallback) return;

  const double tx_broadcast = tx_cost(config.ctrl_bits, config.radio_range, config.radio);
  const double rx_ctrl = rx_cost(config.ctrl_bits, config.radio);

  for (const auto& [ch, members] : clusters.members) {
    // announcement + TDMA schedule broadcasts, one join heard per member
    Node& head = nodes[static_cast<std::size_t>(ch)];
    drain(head, 2.0 * tx_broadcast + rx_ctrl * static_cast<double>(members.size()), ledger);

    for (int m : members) {
      Node& member = nodes[static_cast<std::size_t>(m)];
      int heard;
      if (network_wide_announcements) {
        heard = clusters.ch_count();
      } else {
        heard = 0;
        for (int j : adj.of(m)) {
          if (clusters.members.find(j) != clusters.members.end()) ++heard;
        }
      }
      const double join = tx_cost(config.ctrl_bits, distance(member.pos, head.pos), config.radio);
      drain(member, rx_ctrl * heard + join + rx_ctrl, ledger);
    }
  }
}

}  // namespace wsnsim
