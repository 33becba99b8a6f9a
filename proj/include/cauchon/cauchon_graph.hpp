#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cauchon/diagram.hpp"
#include "cauchon/qtorus.hpp"

namespace cauchon {

struct Vertex {
  enum class Kind { White, Row, Col };
  Kind kind = Kind::White;
  int row = 0;  // White and Row vertices
  int col = 0;  // White and Col vertices
  std::string name() const;  // "w<i>_<j>", "r<i>", "c<j>"
  bool operator==(const Vertex&) const = default;
};

struct GraphEdge {
  int from = -1;
  int to = -1;
  bool horizontal = false;
  // weight as a product of generator powers in definitional order;
  // empty means weight 1
  std::vector<std::pair<GenIndex, int>> factors;
  Element weight() const;
  std::string label() const;  // e.g. "t[1,2]^-1 t[1,1]", "1" when trivial
};

struct DirectedPath {
  std::vector<int> vertices;  // v_0 .. v_len
  std::vector<int> edges;     // edge ids, one fewer than vertices
  bool operator==(const DirectedPath&) const = default;
};

// Weighted DAG on the white squares plus row sources r_1..r_m and column
// sinks c_1..c_n. Edge families:
//   r_i -> rightmost white square of row i       weight t_{i,k}
//   (i,j) -> nearest white square to its left    weight t_{i,j}^-1 t_{i,j'}
//   (i,j) -> nearest white square below          weight 1
//   bottom-most white square of column j -> c_j  weight 1
// Horizontal successors precede vertical ones, so traversals are
// deterministic. Immutable after construction.
class CauchonGraph {
 public:
  explicit CauchonGraph(const CauchonDiagram& d);

  const CauchonDiagram& diagram() const { return diagram_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const std::vector<int>& successors(int v) const { return succ_[v]; }

  int row_vertex(int i) const;
  int col_vertex(int j) const;
  int white_vertex(int i, int j) const;  // -1 when (i,j) is black

  // Streams every directed path from -> to in DFS order over the ordered
  // adjacency lists; the visitor returns false to stop early. The overload
  // with `blocked` skips paths through any marked vertex (endpoints
  // included).
  void for_each_path(int from, int to,
                     const std::function<bool(const DirectedPath&)>& visit) const;
  void for_each_path(int from, int to, const std::vector<char>& blocked,
                     const std::function<bool(const DirectedPath&)>& visit) const;
  // Throws ResourceLimitError past max_paths.
  std::vector<DirectedPath> all_paths(int from, int to, std::size_t max_paths) const;

  // Ordered left-to-right product of edge weights; 1 for the empty path.
  Element path_weight(const DirectedPath& p) const;

  std::vector<int> topological_order() const;  // throws std::logic_error on a cycle

  std::string to_dot() const;

 private:
  CauchonDiagram diagram_;
  std::vector<Vertex> vertices_;
  std::vector<GraphEdge> edges_;
  std::vector<std::vector<int>> succ_;
  std::vector<int> white_ids_;  // dense (i,j) -> vertex id, -1 for black
};

}  // namespace cauchon
