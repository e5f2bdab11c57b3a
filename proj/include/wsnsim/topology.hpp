#pragma once

#include "wsnsim/core.hpp"

namespace wsnsim {

// Symmetric disk graph over alive nodes; dead nodes keep empty lists.
struct AdjacencyMap {
  std::vector<std::vector<int>> nbrs;  // per node id, sorted ascending

  int degree(int id) const { return static_cast<int>(nbrs[static_cast<std::size_t>(id)].size()); }
  const std::vector<int>& of(int id) const { return nbrs[static_cast<std::size_t>(id)]; }
};

// Hop count to the base station; 0 marks unreachable (or dead) nodes.
struct LayerMap {
  static constexpr int kUnreachable = 0;

  std::vector<int> layer;
  int max_layer = 0;

  bool reachable(int id) const { return layer[static_cast<std::size_t>(id)] > 0; }
  int of(int id) const { return layer[static_cast<std::size_t>(id)]; }
};

AdjacencyMap build_adjacency(const std::vector<Node>& nodes, double radio_range);

// Hop layering by flood from the base station: layer 1 holds the alive nodes
// within radio range of bs_pos, layer k the unvisited neighbors of layer k-1.
LayerMap assign_layers(const AdjacencyMap& adj, const std::vector<Node>& nodes,
                       const Position& bs_pos, double radio_range);

// Every reachable alive node broadcasts one Hello and hears one per neighbor.
void charge_configuration_energy(std::vector<Node>& nodes, const AdjacencyMap& adj,
                                 const LayerMap& layers, const SimConfig& config,
                                 EnergyLedger& ledger);

}  // namespace wsnsim
