#pragma once

#include "wsnsim/lmeec.hpp"

namespace wsnsim {

// Classic rotating-probability election. Every eligible alive reachable node
// draws independently against p / (1 - p * (round mod ceil(1/p))); a node that
// served earlier in the current epoch sits out until the epoch resets.
std::vector<int> leach_elect(std::vector<Node>& nodes, const LayerMap& layers,
                             const LeachParams& params, int round_index, Rng& rng);

// Nearest-CH clustering with no range limit; ties go to the lower CH id. An
// empty election leaves every node transmitting straight to the BS this round.
// Relay targets are always DirectToBS.
ClusterSet leach_form_clusters(const std::vector<int>& ch_set, const std::vector<Node>& nodes,
                               const LayerMap& layers);

}  // namespace wsnsim
