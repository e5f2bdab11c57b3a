#pragma once

// Independent reference implementations the tests pin expected values against.
// Everything here recomputes results from first principles (pairwise scans,
// queue BFS, per-message enumeration) instead of calling the code under test;
// only placement and RNG plumbing are shared.

#include <cmath>
#include <cstdint>
#include <deque>
#include <map>
#include <vector>

#include "wsnsim/core.hpp"

namespace oracle {

using wsnsim::Node;
using wsnsim::Position;
using wsnsim::SimConfig;

inline double dist(const Position& a, const Position& b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

inline std::vector<std::vector<int>> brute_adjacency(const std::vector<Node>& nodes,
                                                     double range) {
  const std::size_t n = nodes.size();
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || !nodes[i].alive || !nodes[j].alive) continue;
      if (dist(nodes[i].pos, nodes[j].pos) <= range) adj[i].push_back(static_cast<int>(j));
    }
  }
  return adj;
}

// Queue-based BFS from a virtual base-station vertex; 0 marks unreachable.
inline std::vector<int> bfs_layers(const std::vector<Node>& nodes,
                                   const std::vector<std::vector<int>>& adj,
                                   const Position& bs, double range) {
  std::vector<int> hop(nodes.size(), 0);
  std::deque<int> queue;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].alive && dist(nodes[i].pos, bs) <= range) {
      hop[i] = 1;
      queue.push_back(static_cast<int>(i));
    }
  }
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : adj[static_cast<std::size_t>(u)]) {
      if (hop[static_cast<std::size_t>(v)] == 0) {
        hop[static_cast<std::size_t>(v)] = hop[static_cast<std::size_t>(u)] + 1;
        queue.push_back(v);
      }
    }
  }
  return hop;
}

// Eq-style weight written out longhand.
inline double weight_formula(int layer, int deg, int n_total, double e_res, double e_total,
                             int num_ch, double alpha, double beta, double gamma, bool literal) {
  const double first = literal ? 1.0 / (alpha - layer) : 1.0 / (layer - alpha);
  return first * (double(deg) / double(n_total)) +
         (1.0 / (beta + layer)) * (e_res / e_total) -
         gamma * (1.0 - 1.0 / (1.0 + double(num_ch)));
}

struct AnnRef {
  int id;
  double p;
  int layer;
};

// Per-node exhaustive argmax with the (p, layer, lower id) tie order.
// Returns -1 when the node hears nothing.
inline int best_announcement(const std::vector<int>& heard, const std::vector<AnnRef>& anns) {
  int best = -1;
  for (int cand : heard) {
    const AnnRef* a = nullptr;
    for (const AnnRef& x : anns) {
      if (x.id == cand) a = &x;
    }
    if (a == nullptr) continue;
    if (best == -1) {
      best = cand;
      continue;
    }
    const AnnRef* b = nullptr;
    for (const AnnRef& x : anns) {
      if (x.id == best) b = &x;
    }
    if (a->p > b->p || (a->p == b->p && a->layer > b->layer) ||
        (a->p == b->p && a->layer == b->layer && a->id < b->id)) {
      best = cand;
    }
  }
  return best;
}

// Full independent replay of a run: rebuilds topology, elections, clusters,
// relays and enumerates every message with its cost. Mirrors the shipped
// round semantics so ledgers and residuals can be compared one to one.
struct ReplayResult {
  double total = 0.0;
  std::vector<double> per_round;
  std::vector<double> residual;
  std::vector<bool> alive;
  int rounds = 0;
};

inline ReplayResult replay(const SimConfig& cfg) {
  using wsnsim::Protocol;
  using wsnsim::RunUntil;
  using wsnsim::WeightVariant;

  std::vector<Node> placed = wsnsim::deploy(cfg);
  const std::size_t n = placed.size();

  ReplayResult out;
  out.residual.assign(n, cfg.initial_energy);
  out.alive.assign(n, true);
  std::vector<int> num_ch(n, 0), last_ch(n, -1);

  const double d0 = std::sqrt(cfg.radio.eps_fs / cfg.radio.eps_mp);
  auto tx = [&](long bits, double d) {
    const double b = double(bits);
    const double amp = d < d0 ? cfg.radio.eps_fs * b * d * d : cfg.radio.eps_mp * b * d * d * d * d;
    return cfg.radio.e_elec * b + amp;
  };
  auto rx = [&](long bits) { return cfg.radio.e_elec * double(bits); };
  auto agg = [&](long bits, int signals) { return cfg.radio.e_da * double(bits) * signals; };

  const long long cap = cfg.run_until == RunUntil::TimeCap
                            ? std::llround(cfg.sim_time / cfg.round_duration)
                            : (1ll << 40);
  const double frames = double(cfg.frames_per_round());

  double round_sum = 0.0;
  auto charge = [&](std::size_t i, double joules) {
    out.residual[i] -= joules;
    out.total += joules;
    round_sum += joules;
  };

  for (long long r = 0; r < cap; ++r) {
    round_sum = 0.0;
    std::vector<Node> snapshot = placed;
    for (std::size_t i = 0; i < n; ++i) snapshot[i].alive = out.alive[i];

    const auto adj = brute_adjacency(snapshot, cfg.radio_range);
    const auto layer = bfs_layers(snapshot, adj, cfg.bs_pos, cfg.radio_range);

    std::vector<int> active;  // alive and reachable
    for (std::size_t i = 0; i < n; ++i) {
      if (out.alive[i] && layer[i] > 0) active.push_back(static_cast<int>(i));
    }
    if (active.empty()) break;

    // --- configuration: one Hello broadcast each, one heard per neighbor
    for (int i : active) {
      charge(std::size_t(i), tx(cfg.ctrl_bits, cfg.radio_range));
      charge(std::size_t(i), rx(cfg.ctrl_bits) * double(adj[std::size_t(i)].size()));
    }

    // --- election + clusters
    std::vector<int> chs;
    std::map<int, std::vector<int>> members;
    bool direct_mode = false;
    std::vector<AnnRef> anns;

    if (cfg.protocol == Protocol::Lmeec) {
      for (int i : active) {
        const double w = weight_formula(layer[std::size_t(i)],
                                        int(adj[std::size_t(i)].size()), cfg.n_nodes,
                                        out.residual[std::size_t(i)], cfg.initial_energy,
                                        num_ch[std::size_t(i)], cfg.weights.alpha,
                                        cfg.weights.beta, cfg.weights.gamma,
                                        cfg.weights.variant == WeightVariant::Literal);
        if (w >= cfg.weights.t0 / layer[std::size_t(i)]) chs.push_back(i);
      }
      for (int c : chs) num_ch[std::size_t(c)] += 1;
      for (int c : chs) {
        const int deg = int(adj[std::size_t(c)].size());
        if (deg >= 1) {
          anns.push_back({c, out.residual[std::size_t(c)] / deg * layer[std::size_t(c)],
                          layer[std::size_t(c)]});
        }
        members[c];
      }
      std::vector<bool> is_ch(n, false);
      for (int c : chs) is_ch[std::size_t(c)] = true;
      for (int i : active) {
        if (is_ch[std::size_t(i)]) continue;
        const int join = best_announcement(adj[std::size_t(i)], anns);
        if (join >= 0) {
          members[join].push_back(i);
        } else {
          num_ch[std::size_t(i)] += 1;  // orphan promotes itself
          members[i];
        }
      }
    } else {
      const int epoch = int(std::ceil(1.0 / cfg.leach.p));
      const int epoch_start = int(r) / epoch * epoch;
      const double th = cfg.leach.p / (1.0 - cfg.leach.p * double(r % epoch));
      wsnsim::Rng rng(wsnsim::mix_seed(wsnsim::mix_seed(cfg.seed, wsnsim::kLeachStream),
                                       std::uint64_t(r)));
      std::vector<bool> reach(n, false);
      for (int i : active) reach[std::size_t(i)] = true;
      for (std::size_t i = 0; i < n; ++i) {
        const double u = rng.uniform();
        if (!out.alive[i] || !reach[i]) continue;
        if (last_ch[i] < epoch_start && u < th) chs.push_back(int(i));
      }
      for (int c : chs) {
        num_ch[std::size_t(c)] += 1;
        last_ch[std::size_t(c)] = int(r);
        members[c];
      }
      if (chs.empty()) {
        direct_mode = true;
      } else {
        std::vector<bool> is_ch(n, false);
        for (int c : chs) is_ch[std::size_t(c)] = true;
        for (int i : active) {
          if (is_ch[std::size_t(i)]) continue;
          int best = -1;
          double bd = 0.0;
          for (int c : chs) {
            const double d = dist(placed[std::size_t(i)].pos, placed[std::size_t(c)].pos);
            if (best == -1 || d < bd) {
              best = c;
              bd = d;
            }
          }
          members[best].push_back(i);
        }
      }
    }

    // --- relays
    std::map<int, int> relay;  // CH id -> next CH, or -1 for the BS
    if (!direct_mode) {
      for (const auto& [c, _] : members) {
        int next = -1;
        if (cfg.protocol == Protocol::Lmeec && layer[std::size_t(c)] > 1) {
          for (int j : adj[std::size_t(c)]) {
            if (members.find(j) == members.end()) continue;
            if (layer[std::size_t(j)] >= layer[std::size_t(c)]) continue;
            if (next == -1 || out.residual[std::size_t(j)] > out.residual[std::size_t(next)]) {
              next = j;
            }
          }
        }
        relay[c] = next;
      }
    }

    // --- control traffic
    if (!direct_mode) {
      for (const auto& [c, ms] : members) {
        charge(std::size_t(c), tx(cfg.ctrl_bits, cfg.radio_range));  // announcement
        charge(std::size_t(c), tx(cfg.ctrl_bits, cfg.radio_range));  // schedule
        for (int m : ms) {
          charge(std::size_t(c), rx(cfg.ctrl_bits));  // join received
          int heard = 0;
          if (cfg.protocol == Protocol::Lmeec) {
            for (int j : adj[std::size_t(m)]) {
              if (members.find(j) != members.end()) ++heard;
            }
          } else {
            heard = int(members.size());
          }
          charge(std::size_t(m), rx(cfg.ctrl_bits) * double(heard));
          charge(std::size_t(m),
                 tx(cfg.ctrl_bits, dist(placed[std::size_t(m)].pos, placed[std::size_t(c)].pos)));
          charge(std::size_t(m), rx(cfg.ctrl_bits));  // schedule heard
        }
      }
    }

    // --- data frames
    if (direct_mode) {
      for (int i : active) {
        charge(std::size_t(i),
               frames * tx(cfg.data_bits, dist(placed[std::size_t(i)].pos, cfg.bs_pos)));
      }
    } else {
      for (const auto& [c, ms] : members) {
        for (int m : ms) {
          charge(std::size_t(m),
                 frames * tx(cfg.data_bits,
                             dist(placed[std::size_t(m)].pos, placed[std::size_t(c)].pos)));
        }
        charge(std::size_t(c), frames * rx(cfg.data_bits) * double(ms.size()));
        charge(std::size_t(c), frames * agg(cfg.data_bits, int(ms.size()) + 1));
      }
      for (const auto& [c, _] : members) {
        int cur = c;
        while (relay[cur] != -1) {
          const int next = relay[cur];
          charge(std::size_t(cur),
                 frames * tx(cfg.data_bits,
                             dist(placed[std::size_t(cur)].pos, placed[std::size_t(next)].pos)));
          charge(std::size_t(next), frames * rx(cfg.data_bits));
          cur = next;
        }
        charge(std::size_t(cur),
               frames * tx(cfg.data_bits, dist(placed[std::size_t(cur)].pos, cfg.bs_pos)));
      }
    }

    for (std::size_t i = 0; i < n; ++i) {
      if (out.alive[i] && out.residual[i] <= 0.0) out.alive[i] = false;
    }
    out.per_round.push_back(round_sum);
    out.rounds += 1;
  }
  return out;
}

}  // namespace oracle
