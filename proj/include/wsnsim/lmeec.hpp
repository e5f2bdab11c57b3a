#pragma once

#include <map>

#include "wsnsim/core.hpp"
#include "wsnsim/topology.hpp"

namespace wsnsim {

struct ChAnnouncement {
  int ch_id = -1;
  double p_ch = 0.0;
  int layer = 0;
};

struct RelayTarget {
  bool direct_to_bs = true;
  int ch_id = -1;  // valid when !direct_to_bs
};

// Per-round clustering outcome. Keyed maps keep iteration deterministic.
struct ClusterSet {
  std::map<int, std::vector<int>> members;  // CH id -> sorted member ids
  std::map<int, RelayTarget> relay;         // CH id -> next hop toward the BS
  bool direct_fallback = false;             // LEACH round that elected no CH
  std::vector<int> direct_senders;          // used only under direct_fallback

  int ch_count() const { return static_cast<int>(members.size()); }
};

// Election weight. The Literal variant keeps the printed 1/(alpha - layer)
// factor, which is negative for every layer >= 1; the Magnitude variant uses
// 1/(layer - alpha) so the degree term rewards well-connected nodes and decays
// with depth. Magnitude is the default.
double node_weight(int layer, int deg, int n_total, double e_res, double e_total,
                   int num_ch, const WeightParams& params);

double election_threshold(int layer, const WeightParams& params);

// Self-election pass: node i becomes CH iff weight >= threshold(layer).
// Elected nodes get num_ch incremented and role ClusterHead. Weights are
// evaluated on a snapshot taken before any increment.
std::vector<int> elect_cluster_heads(std::vector<Node>& nodes, const LayerMap& layers,
                                     const AdjacencyMap& adj, const WeightParams& params,
                                     int n_total, double e_total);

// Announcement weight: high residual energy, few neighbors to manage, and a
// deep layer all make a CH more attractive to join.
double ch_announcement_weight(double e_res, int deg, int layer);

std::vector<ChAnnouncement> make_announcements(const std::vector<int>& ch_set,
                                               const std::vector<Node>& nodes,
                                               const AdjacencyMap& adj, const LayerMap& layers);

// Members join the adjacent CH with the highest (p_ch, layer, lower id) rank.
// A node hearing no announcement promotes itself to a singleton CH.
ClusterSet form_clusters(const std::vector<int>& ch_set,
                         const std::vector<ChAnnouncement>& announcements,
                         const AdjacencyMap& adj, const LayerMap& layers,
                         std::vector<Node>& nodes);

// Next hop for a CH: layer 1 goes straight to the BS; otherwise the adjacent
// CH on a strictly lower layer with the most residual energy (ties to lower
// id), falling back to a long-range direct transmission.
RelayTarget select_relay(int ch_id, const ClusterSet& clusters, const AdjacencyMap& adj,
                         const LayerMap& layers, const std::vector<Node>& nodes);

void select_all_relays(ClusterSet& clusters, const AdjacencyMap& adj, const LayerMap& layers,
                       const std::vector<Node>& nodes);

// Announcement / join / TDMA-schedule control messages for one round.
// network_wide_announcements models LEACH, where members hear every CH in the
// field instead of only the CHs within radio range.
void charge_control_traffic(const ClusterSet& clusters, std::vector<Node>& nodes,
                            const AdjacencyMap& adj, const SimConfig& config,
                            EnergyLedger& ledger, bool network_wide_announcements = false);

}  // namespace wsnsim
