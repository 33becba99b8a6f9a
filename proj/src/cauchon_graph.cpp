#include "cauchon/cauchon_graph.hpp"

#include <sstream>
#include <stdexcept>

#include "cauchon/errors.hpp"

namespace cauchon {

std::string Vertex::name() const {
  switch (kind) {
    case Kind::Row:
      return "r" + std::to_string(row);
    case Kind::Col:
      return "c" + std::to_string(col);
    case Kind::White:
      return "w" + std::to_string(row) + "_" + std::to_string(col);
  }
  return "?";
}

Element GraphEdge::weight() const {
  Element w = Element::one();
  for (const auto& [g, e] : factors) w *= Element::generator(g, e);
  return w;
}

std::string GraphEdge::label() const {
  if (factors.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [g, e] : factors) {
    if (!first) out << " ";
    first = false;
    out << "t[" << g.row << "," << g.col << "]";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

CauchonGraph::CauchonGraph(const CauchonDiagram& d) : diagram_(d) {
  const int m = d.rows();
  const int n = d.cols();
  for (int i = 1; i <= m; ++i) vertices_.push_back({Vertex::Kind::Row, i, 0});
  for (int j = 1; j <= n; ++j) vertices_.push_back({Vertex::Kind::Col, 0, j});
  white_ids_.assign(static_cast<std::size_t>(m) * n, -1);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      if (d.is_white(i, j)) {
        white_ids_[(i - 1) * static_cast<std::size_t>(n) + (j - 1)] =
            static_cast<int>(vertices_.size());
        vertices_.push_back({Vertex::Kind::White, i, j});
      }

  auto add_edge = [&](int from, int to, bool horizontal,
                      std::vector<std::pair<GenIndex, int>> factors) {
    edges_.push_back({from, to, horizontal, std::move(factors)});
  };

  for (int i = 1; i <= m; ++i)
    for (int j = n; j >= 1; --j)
      if (d.is_white(i, j)) {
        add_edge(row_vertex(i), white_vertex(i, j), true, {{GenIndex{i, j}, 1}});
        break;
      }

  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      if (d.is_black(i, j)) continue;
      int v = white_vertex(i, j);
      for (int j2 = j - 1; j2 >= 1; --j2)
        if (d.is_white(i, j2)) {
          add_edge(v, white_vertex(i, j2), true,
                   {{GenIndex{i, j}, -1}, {GenIndex{i, j2}, 1}});
          break;
        }
      int below = -1;
      for (int i2 = i + 1; i2 <= m && below < 0; ++i2)
        if (d.is_white(i2, j)) below = white_vertex(i2, j);
      add_edge(v, below >= 0 ? below : col_vertex(j), false, {});
    }

  succ_.assign(vertices_.size(), {});
  for (std::size_t e = 0; e < edges_.size(); ++e)
    succ_[edges_[e].from].push_back(static_cast<int>(e));
}

int CauchonGraph::row_vertex(int i) const {
  if (i < 1 || i > diagram_.rows()) throw std::out_of_range("row vertex index");
  return i - 1;
}

int CauchonGraph::col_vertex(int j) const {
  if (j < 1 || j > diagram_.cols()) throw std::out_of_range("col vertex index");
  return diagram_.rows() + j - 1;
}

int CauchonGraph::white_vertex(int i, int j) const {
  if (i < 1 || i > diagram_.rows() || j < 1 || j > diagram_.cols())
    throw std::out_of_range("white vertex index");
  return white_ids_[(i - 1) * static_cast<std::size_t>(diagram_.cols()) + (j - 1)];
}

namespace {

bool path_dfs(const CauchonGraph& g, int v, int to, const std::vector<char>* blocked,
              DirectedPath& p, const std::function<bool(const DirectedPath&)>& visit) {
  if (v == to) return visit(p);
  for (int e : g.successors(v)) {
    int w = g.edges()[e].to;
    if (blocked && (*blocked)[w]) continue;
    p.vertices.push_back(w);
    p.edges.push_back(e);
    bool keep_going = path_dfs(g, w, to, blocked, p, visit);
    p.vertices.pop_back();
    p.edges.pop_back();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

void CauchonGraph::for_each_path(int from, int to,
                                 const std::function<bool(const DirectedPath&)>& visit) const {
  DirectedPath p;
  p.vertices.push_back(from);
  path_dfs(*this, from, to, nullptr, p, visit);
}

void CauchonGraph::for_each_path(int from, int to, const std::vector<char>& blocked,
                                 const std::function<bool(const DirectedPath&)>& visit) const {
  if (blocked[from] || blocked[to]) return;
  DirectedPath p;
  p.vertices.push_back(from);
  path_dfs(*this, from, to, &blocked, p, visit);
}

std::vector<DirectedPath> CauchonGraph::all_paths(int from, int to,
                                                  std::size_t max_paths) const {
  std::vector<DirectedPath> out;
  bool overflow = false;
  for_each_path(from, to, [&](const DirectedPath& p) {
    if (out.size() >= max_paths) {
      overflow = true;
      return false;
    }
    out.push_back(p);
    return true;
  });
  if (overflow)
    throw ResourceLimitError("more than " + std::to_string(max_paths) + " paths " +
                             vertices_[from].name() + " => " + vertices_[to].name());
  return out;
}

Element CauchonGraph::path_weight(const DirectedPath& p) const {
  // all weights are single monomials, so fold exponent vectors directly
  std::int64_t qpow = 0;
  Monomial mono;
  for (int e : p.edges)
    for (const auto& [g, exp] : edges_[e].factors) {
      MonoProduct mp = mono_mul(mono, Monomial::generator(g, exp));
      qpow += mp.qpow;
      mono = std::move(mp.mono);
    }
  return Element::term(QLaurent::q_power(qpow), mono);
}

std::vector<int> CauchonGraph::topological_order() const {
  std::vector<int> indegree(vertices_.size(), 0);
  for (const auto& e : edges_) ++indegree[e.to];
  std::vector<int> order;
  std::vector<int> ready;
  for (std::size_t v = 0; v < vertices_.size(); ++v)
    if (indegree[v] == 0) ready.push_back(static_cast<int>(v));
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (int e : succ_[v])
      if (--indegree[edges_[e].to] == 0) ready.push_back(edges_[e].to);
  }
  if (order.size() != vertices_.size()) throw std::logic_error("cycle in Cauchon graph");
  return order;
}

std::string CauchonGraph::to_dot() const {
  std::ostringstream out;
  out << "digraph cauchon_graph {\n";
  for (const auto& v : vertices_) out << "  " << v.name() << ";\n";
  for (const auto& e : edges_)
    out << "  " << vertices_[e.from].name() << " -> " << vertices_[e.to].name()
        << " [label=\"" << e.label() << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace cauchon
