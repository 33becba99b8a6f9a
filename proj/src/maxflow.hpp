#pragma once

#include <limits>
#include <queue>
#include <vector>

namespace cauchon {

// Dinic's algorithm, integer capacities. Small and exact; the graphs here
// have a few hundred nodes at most.
class MaxFlow {
 public:
  explicit MaxFlow(int n) : head_(n, -1) {}

  void add_edge(int u, int v, int cap) {
    edges_.push_back({v, head_[u], cap});
    head_[u] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({u, head_[v], 0});
    head_[v] = static_cast<int>(edges_.size()) - 1;
  }

  int run(int s, int t) {
    int flow = 0;
    while (bfs(s, t)) {
      iter_ = head_;
      while (int pushed = dfs(s, t, std::numeric_limits<int>::max())) flow += pushed;
    }
    return flow;
  }

 private:
  struct Edge {
    int to;
    int next;
    int cap;
  };

  bool bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int e = head_[u]; e >= 0; e = edges_[e].next)
        if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
          level_[edges_[e].to] = level_[u] + 1;
          q.push(edges_[e].to);
        }
    }
    return level_[t] >= 0;
  }

  int dfs(int u, int t, int limit) {
    if (u == t) return limit;
    for (int& e = iter_[u]; e >= 0; e = edges_[e].next) {
      Edge& fwd = edges_[e];
      if (fwd.cap <= 0 || level_[fwd.to] != level_[u] + 1) continue;
      int pushed = dfs(fwd.to, t, std::min(limit, fwd.cap));
      if (pushed > 0) {
        fwd.cap -= pushed;
        edges_[e ^ 1].cap += pushed;
        return pushed;
      }
    }
    level_[u] = -1;
    return 0;
  }

  std::vector<int> head_;
  std::vector<int> iter_;
  std::vector<int> level_;
  std::vector<Edge> edges_;
};

}  // namespace cauchon
