#include "cauchon/path_matrix.hpp"

#include <algorithm>
#include <stdexcept>

#include "cauchon/errors.hpp"

namespace cauchon {

using nlohmann::json;

BMatrix::BMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("matrix shape must be positive");
  entries_.resize(static_cast<std::size_t>(rows) * cols);
}

Element& BMatrix::at(int i, int j) {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) throw std::out_of_range("matrix entry");
  return entries_[(i - 1) * static_cast<std::size_t>(cols_) + (j - 1)];
}

const Element& BMatrix::at(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_) throw std::out_of_range("matrix entry");
  return entries_[(i - 1) * static_cast<std::size_t>(cols_) + (j - 1)];
}

json BMatrix::to_json() const {
  json rows = json::array();
  for (int i = 1; i <= rows_; ++i) {
    json row = json::array();
    for (int j = 1; j <= cols_; ++j) row.push_back(at(i, j).to_json());
    rows.push_back(std::move(row));
  }
  return rows;
}

BMatrix BMatrix::from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw FormatError("matrix must be a non-empty array of rows");
  int rows = static_cast<int>(j.size());
  if (!j[0].is_array() || j[0].empty()) throw FormatError("matrix row must be a non-empty array");
  int cols = static_cast<int>(j[0].size());
  BMatrix m(rows, cols);
  for (int i = 1; i <= rows; ++i) {
    if (!j[i - 1].is_array() || static_cast<int>(j[i - 1].size()) != cols)
      throw FormatError("ragged matrix row");
    for (int c = 1; c <= cols; ++c) m.at(i, c) = Element::from_json(j[i - 1][c - 1]);
  }
  return m;
}

namespace {

BMatrix path_matrix_impl(const CauchonGraph& g,
                         const std::function<bool(const GraphEdge&)>* allow,
                         std::size_t max_paths) {
  const CauchonDiagram& d = g.diagram();
  BMatrix m(d.rows(), d.cols());
  for (int i = 1; i <= d.rows(); ++i)
    for (int j = 1; j <= d.cols(); ++j) {
      Element sum;
      std::size_t count = 0;
      bool overflow = false;
      g.for_each_path(g.row_vertex(i), g.col_vertex(j), [&](const DirectedPath& p) {
        if (allow)
          for (int e : p.edges)
            if (!(*allow)(g.edges()[e])) return true;
        if (++count > max_paths) {
          overflow = true;
          return false;
        }
        sum += g.path_weight(p);
        return true;
      });
      if (overflow)
        throw ResourceLimitError("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") exceeds " + std::to_string(max_paths) + " paths");
      m.at(i, j) = std::move(sum);
    }
  return m;
}

}  // namespace

BMatrix path_matrix(const CauchonGraph& g, std::size_t max_paths) {
  return path_matrix_impl(g, nullptr, max_paths);
}

BMatrix path_matrix_filtered(const CauchonGraph& g,
                             const std::function<bool(const GraphEdge&)>& allow,
                             std::size_t max_paths) {
  return path_matrix_impl(g, &allow, max_paths);
}

BMatrix restore_partial(const CauchonDiagram& d, int stop_row, int stop_col,
                        RestoreStats* stats) {
  const int m = d.rows();
  const int n = d.cols();
  if (stop_row < 1 || stop_row > m || stop_col < 1 || stop_col > n)
    throw std::invalid_argument("stop step outside the grid");
  BMatrix t(m, n);
  RestoreStats local;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j)
      if (d.is_white(i, j)) {
        t.at(i, j) = Element::generator({i, j});
        local.max_entry_terms = 1;
      }

  for (int s = 1; s <= m; ++s) {
    for (int c = 1; c <= n; ++c) {
      if (s > stop_row || (s == stop_row && c > stop_col)) break;
      if (d.is_black(s, c)) continue;  // guard: t_{s,c} nonzero on the initial matrix
      Element inv = Element::generator({s, c}, -1);
      for (int i = 1; i < s; ++i)
        for (int j = 1; j < c; ++j) {
          // reads row s and column c, both untouched by this step
          Element gain = t.at(i, c) * inv * t.at(s, j);
          if (gain.is_zero()) continue;
          t.at(i, j) += gain;
          local.max_entry_terms = std::max(local.max_entry_terms, t.at(i, j).term_count());
        }
    }
    if (s >= stop_row) break;
  }
  if (stats) *stats = local;
  return t;
}

BMatrix restore(const CauchonDiagram& d, RestoreStats* stats) {
  return restore_partial(d, d.rows(), d.cols(), stats);
}

bool check_equivalence(const CauchonDiagram& d, std::size_t max_paths) {
  return restore(d) == path_matrix(CauchonGraph(d), max_paths);
}

}  // namespace cauchon
