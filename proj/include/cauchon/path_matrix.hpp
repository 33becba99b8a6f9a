#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include <nlohmann/json.hpp>

#include "cauchon/cauchon_graph.hpp"

namespace cauchon {

inline constexpr std::size_t kDefaultMaxPaths = 200000;
inline constexpr std::size_t kDefaultMaxSystems = 200000;

// Matrix over the quantum torus, 1-based like the rest of the domain.
class BMatrix {
 public:
  BMatrix(int rows, int cols);
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Element& at(int i, int j);
  const Element& at(int i, int j) const;
  bool operator==(const BMatrix&) const = default;
  nlohmann::json to_json() const;  // m x n nested array of Element forms
  static BMatrix from_json(const nlohmann::json& j);

 private:
  int rows_;
  int cols_;
  std::vector<Element> entries_;
};

// M[i,j] = sum of path weights over every directed path r_i => c_j;
// an entry is 0 exactly when no such path exists.
BMatrix path_matrix(const CauchonGraph& g, std::size_t max_paths = kDefaultMaxPaths);
// Same sum restricted to paths whose edges all satisfy `allow`.
BMatrix path_matrix_filtered(const CauchonGraph& g,
                             const std::function<bool(const GraphEdge&)>& allow,
                             std::size_t max_paths = kDefaultMaxPaths);

struct RestoreStats {
  std::size_t max_entry_terms = 0;  // peak term count seen in any entry, any step
};

// Restoration (reverse deleting-derivations): start from the matrix with
// t_{i,j} on white squares and 0 on black ones; for each step (s,t) in
// lexicographic order with (s,t) white, every entry with i < s, j < t gains
// T[i][t] * t_{s,t}^{-1} * T[s][j]. Row s is untouched before and during
// step (s,*), so t_{s,t}^{-1} is always a plain generator inverse.
BMatrix restore(const CauchonDiagram& d, RestoreStats* stats = nullptr);
// Stops after step (stop_row, stop_col); (1,1) returns the initial matrix.
BMatrix restore_partial(const CauchonDiagram& d, int stop_row, int stop_col,
                        RestoreStats* stats = nullptr);

// restore(d) == path_matrix over the graph of d
bool check_equivalence(const CauchonDiagram& d, std::size_t max_paths = kDefaultMaxPaths);

}  // namespace cauchon
