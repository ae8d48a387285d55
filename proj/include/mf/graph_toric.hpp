#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mf/binomial_engine.hpp"
#include "mf/composition.hpp"

namespace mf {

/// Bipartite graph on row vertices u_1..u_n and column vertices v_1..v_n with
/// an edge (i, j) exactly when w_i > w_j.
struct BipartiteGraph {
  int n = 0;
  std::vector<std::vector<bool>> adj;  // adj[i-1][j-1]

  bool edge(int i, int j) const { return adj[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)]; }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j)
        if (edge(i, j)) out.emplace_back(i, j);
    return out;
  }
};

inline BipartiteGraph build_graph(const WeightData& wd) {
  BipartiteGraph g;
  g.n = wd.n();
  g.adj.assign(static_cast<size_t>(g.n), std::vector<bool>(static_cast<size_t>(g.n), false));
  for (int i = 1; i <= g.n; ++i)
    for (int j = 1; j <= g.n; ++j)
      if (wd.at(i) > wd.at(j)) g.adj[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = true;
  return g;
}

/// Alternating vertex sequence (u_{i_1}, v_{j_1}, ..., u_{i_q}, v_{j_q}).
struct EvenCycle {
  std::vector<int> us, vs;

  int q() const { return static_cast<int>(us.size()); }
};

inline void validate_cycle(const BipartiteGraph& g, const EvenCycle& c) {
  const int q = c.q();
  if (q < 2 || static_cast<int>(c.vs.size()) != q) throw std::invalid_argument("cycle needs length >= 4");
  std::set<int> su(c.us.begin(), c.us.end()), sv(c.vs.begin(), c.vs.end());
  if (static_cast<int>(su.size()) != q || static_cast<int>(sv.size()) != q)
    throw std::invalid_argument("cycle has repeated vertices");
  for (int k = 0; k < q; ++k) {
    if (!g.edge(c.us[static_cast<size_t>(k)], c.vs[static_cast<size_t>(k)]))
      throw std::invalid_argument("cycle edge {u_" + std::to_string(c.us[static_cast<size_t>(k)]) + ",v_" +
                                  std::to_string(c.vs[static_cast<size_t>(k)]) + "} is absent");
    const int next_u = c.us[static_cast<size_t>((k + 1) % q)];
    if (!g.edge(next_u, c.vs[static_cast<size_t>(k)]))
      throw std::invalid_argument("cycle edge {u_" + std::to_string(next_u) + ",v_" +
                                  std::to_string(c.vs[static_cast<size_t>(k)]) + "} is absent");
  }
}

/// The edge variables of a graph, ranked lexicographically by (i, j); the
/// lex-smallest pair is the largest variable, matching the order
/// x_{ij} > x_{kl} iff i < k or (i = k and j < l).
class EdgeRing {
 public:
  explicit EdgeRing(BipartiteGraph g) : g_(std::move(g)), edges_(g_.edges()) {
    for (size_t k = 0; k < edges_.size(); ++k) rank_[edges_[k]] = static_cast<int>(k);
  }

  const BipartiteGraph& graph() const { return g_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::pair<int, int> edge(int rank) const { return edges_.at(static_cast<size_t>(rank)); }

  int rank(int i, int j) const {
    auto it = rank_.find({i, j});
    if (it == rank_.end()) throw std::invalid_argument("no such edge");
    return it->second;
  }

  std::string monomial_to_string(const Monomial& m) const {
    std::string out;
    for (int rk : m.ranks) {
      auto [i, j] = edge(rk);
      out += "x_{" + std::to_string(i) + "," + std::to_string(j) + "}";
    }
    return out.empty() ? "1" : out;
  }

 private:
  BipartiteGraph g_;
  std::vector<std::pair<int, int>> edges_;
  std::map<std::pair<int, int>, int> rank_;
};

/// f_C = prod_k x_{i_k j_k} - x_{i_1 j_q} prod_{k<q} x_{i_{k+1} j_k}; both
/// sides have degree q and equal images under x_{ij} -> s_i t_j.
inline Binomial cycle_binomial(const EdgeRing& ring, const EvenCycle& c) {
  validate_cycle(ring.graph(), c);
  const int q = c.q();
  Monomial first, second;
  for (int k = 0; k < q; ++k) {
    first.ranks.push_back(ring.rank(c.us[static_cast<size_t>(k)], c.vs[static_cast<size_t>(k)]));
    second.ranks.push_back(ring.rank(c.us[static_cast<size_t>((k + 1) % q)], c.vs[static_cast<size_t>(k)]));
  }
  std::sort(first.ranks.begin(), first.ranks.end());
  std::sort(second.ranks.begin(), second.ranks.end());
  return Binomial{std::move(first), std::move(second)};
}

/// All even cycles of length at most max_len, each reported once (smallest
/// row vertex first, orientation fixed by j_1 < j_q).
inline std::vector<EvenCycle> enumerate_even_cycles(const BipartiteGraph& g, int max_len = 6) {
  std::vector<EvenCycle> out;
  const int max_q = max_len / 2;
  EvenCycle cur;
  std::vector<bool> used_u(static_cast<size_t>(g.n + 1), false), used_v(static_cast<size_t>(g.n + 1), false);

  // extend with v after us.back(), then with a new u
  auto dfs = [&](auto&& self, int root) -> void {
    const int u = cur.us.back();
    for (int v = 1; v <= g.n; ++v) {
      if (used_v[static_cast<size_t>(v)] || !g.edge(u, v)) continue;
      // close the cycle: v adjacent back to the root
      if (cur.q() >= 2 && g.edge(root, v) && cur.vs.front() < v) {
        cur.vs.push_back(v);
        out.push_back(cur);
        cur.vs.pop_back();
      }
      if (cur.q() + 1 > max_q) continue;
      cur.vs.push_back(v);
      used_v[static_cast<size_t>(v)] = true;
      for (int nu = root + 1; nu <= g.n; ++nu) {
        if (used_u[static_cast<size_t>(nu)] || !g.edge(nu, v)) continue;
        cur.us.push_back(nu);
        used_u[static_cast<size_t>(nu)] = true;
        self(self, root);
        used_u[static_cast<size_t>(nu)] = false;
        cur.us.pop_back();
      }
      used_v[static_cast<size_t>(v)] = false;
      cur.vs.pop_back();
    }
  };

  for (int root = 1; root <= g.n; ++root) {
    cur.us.assign(1, root);
    cur.vs.clear();
    used_u.assign(static_cast<size_t>(g.n + 1), false);
    used_v.assign(static_cast<size_t>(g.n + 1), false);
    used_u[static_cast<size_t>(root)] = true;
    dfs(dfs, root);
  }
  return out;
}

/// The quadratic set of 4-cycle binomials x_{il}x_{kj} - x_{ij}x_{kl} with
/// i < k, j < l and all four edges present; the first monomial is the
/// designated initial monomial.
inline std::vector<Binomial> quadratic_cycle_set(const EdgeRing& ring) {
  const BipartiteGraph& g = ring.graph();
  std::vector<Binomial> out;
  for (int i = 1; i <= g.n; ++i)
    for (int k = i + 1; k <= g.n; ++k)
      for (int j = 1; j <= g.n; ++j)
        for (int l = j + 1; l <= g.n; ++l) {
          if (!(g.edge(i, l) && g.edge(k, j) && g.edge(i, j) && g.edge(k, l))) continue;
          Monomial first{{ring.rank(i, l), ring.rank(k, j)}};
          Monomial second{{ring.rank(i, j), ring.rank(k, l)}};
          std::sort(first.ranks.begin(), first.ranks.end());
          std::sort(second.ranks.begin(), second.ranks.end());
          out.push_back(Binomial{std::move(first), std::move(second)});
        }
  return out;
}

inline std::vector<Binomial> quadratic_cycle_set(const Composition& a) {
  return quadratic_cycle_set(EdgeRing(build_graph(weight_vector(a))));
}

/// Neither [[1,0],[0,1]] nor [[0,1],[1,0]] occurs as a submatrix of the
/// adjacency matrix on rows k1 < k2 and columns k3 < k4.
inline bool check_forbidden_submatrices(const BipartiteGraph& g) {
  for (int k1 = 1; k1 <= g.n; ++k1)
    for (int k2 = k1 + 1; k2 <= g.n; ++k2)
      for (int k3 = 1; k3 <= g.n; ++k3)
        for (int k4 = k3 + 1; k4 <= g.n; ++k4) {
          const bool a = g.edge(k1, k3), b = g.edge(k1, k4), c = g.edge(k2, k3), d = g.edge(k2, k4);
          if (a && d && !b && !c) return false;
          if (b && c && !a && !d) return false;
        }
  return true;
}

}  // namespace mf
