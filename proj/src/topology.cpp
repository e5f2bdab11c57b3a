#include "wsnsim/topology.hpp"

#include <algorithm>

namespace wsnsim {

AdjacencyMap build_adjacency(const std::vector<Node>& nodes, double radio_range) {
  AdjacencyMap adj;
  adj.nbrs.assign(nodes.size(), {});
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!nodes[i].alive) continue;
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (!nodes[j].alive) continue;
      if (distance(nodes[i].pos, nodes[j].pos) <= radio_range) {
        adj.nbrs[i].push_back(static_cast<int>(j));
        adj.nbrs[j].push_back(static_cast<int>(i));
      }
    }
  }
  // inner loop emits j ascending for row i, but row j collects out of order
  for (auto& row : adj.nbrs) std::sort(row.begin(), row.end());
  return adj;
}

LayerMap assign_layers(const AdjacencyMap& adj, const std::vector<Node>& nodes,
                       const Position& bs_pos, double radio_range) {
  LayerMap lm;
  lm.layer.assign(nodes.size(), LayerMap::kUnreachable);

  std::vector<int> frontier;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].alive && distance(nodes[i].pos, bs_pos) <= radio_range) {
      lm.layer[i] = 1;
      frontier.push_back(static_cast<int>(i));
    }
  }

  int depth = frontier.empty() ? 0 : 1;
  while (!frontier.empty()) {
    lm.max_layer = depth;
    std::vector<int> next;
    for (int u : frontier) {
      for (int v : adj.of(u)) {
        if (lm.layer[static_cast<std::size_t>(v)] == LayerMap::kUnreachable) {
          lm.layer[static_cast<std::size_t>(v)] = depth + 1;
          next.push_back(v);
        }
      }
    }
    frontier = std::move(next);
    ++depth;
  }
  return lm;
}

void charge_configuration_energy(std::vector<Node>& nodes, const AdjacencyMap& adj,
                                 const LayerMap& layers, const SimConfig& config,
                                 EnergyLedger& ledger) {
  const double tx = tx_cost(config.ctrl_bits, config.radio_range, config.radio);
  const double rx = rx_cost(config.ctrl_bits, config.radio);
  for (Node& n : nodes) {
    if (!n.alive || !layers.reachable(n.id)) continue;
    drain(n, tx + rx * adj.degree(n.id), ledger);
  }
}

}  // namespace wsnsim
