#include "wsnsim/leach.hpp"

namespace wsnsim {

std::vector<int> leach_elect(std::vector<Node>& nodes, const LayerMap& layers,
                             const LeachParams& params, int round_index, Rng& rng) {
  const int epoch = params.epoch_rounds();
  const int epoch_start = (round_index / epoch) * epoch;
  const double threshold =
      params.p / (1.0 - params.p * static_cast<double>(round_index % epoch));

  std::vector<int> ch_set;
  for (Node& n : nodes) {
    // one draw per node regardless of state keeps the stream aligned as nodes die
    const double u = rng.uniform();
    if (!n.alive) continue;
    n.role = Role::Member;
    if (!layers.reachable(n.id)) continue;
    const bool eligible = n.last_ch_round < epoch_start;
    if (eligible && u < threshold) ch_set.push_back(n.id);
  }
  for (int id : ch_set) {
    Node& n = nodes[static_cast<std::size_t>(id)];
    n.role = Role::ClusterHead;
    n.num_ch += 1;
    n.last_ch_round = round_index;
  }
  return ch_set;
}

ClusterSet leach_form_clusters(const std::vector<int>& ch_set, const std::vector<Node>& nodes,
                               const LayerMap& layers) {
  ClusterSet cs;
  if (ch_set.empty()) {
    cs.direct_fallback = true;
    for (const Node& n : nodes) {
      if (n.alive && layers.reachable(n.id)) cs.direct_senders.push_back(n.id);
    }
    return cs;
  }

  for (int id : ch_set) cs.members[id];
  for (const Node& n : nodes) {
    if (!n.alive || !layers.reachable(n.id)) continue;
    if (n.role == Role::ClusterHead) continue;
    int best = -1;
    double best_d = 0.0;
    for (int ch : ch_set) {
      const double d = distance(n.pos, nodes[static_cast<std::size_t>(ch)].pos);
      if (best == -1 || d < best_d) {
        best = ch;
        best_d = d;
      }
    }
    cs.members[best].push_back(n.id);
  }
  for (const auto& [ch, _] : cs.members) cs.relay[ch] = {true, -1};
  return cs;
}

}  // namespace wsnsim
