#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cauchon/cauchon_graph.hpp"
#include "cauchon/path_matrix.hpp"

namespace cauchon {

// Row set I and column set J naming the quantum minor det_q M[I,J];
// both strictly increasing, same size.
struct MinorIndex {
  std::vector<int> rows;
  std::vector<int> cols;
  std::size_t size() const { return rows.size(); }
  void validate(int m, int n) const;  // throws std::invalid_argument
  std::string str() const;            // "I=1,2 J=1,3"
  auto operator<=>(const MinorIndex&) const = default;
};

// Every MinorIndex on an m x n grid, sizes 1..min(m,n), ordered by
// (size, rows, cols).
std::vector<MinorIndex> all_minor_indices(int m, int n);

// det_q M[I,J] = sum over permutations s of (-q)^{inversions(s)} times the
// ordered product M[I_1,J_{s(1)}] ... M[I_k,J_{s(k)}] (rows ascending,
// left to right). The empty minor is 1.
Element qdet(const BMatrix& M, const MinorIndex& idx);

// k paths, paths[l] from r_{I_l} to c_{J_{sigma[l]}} (sigma holds 0-based
// positions into cols); vertex-disjoint: no two share any vertex.
struct PathSystem {
  std::vector<DirectedPath> paths;
  std::vector<int> sigma;
  bool identity_sigma() const;
};

// Maximum number of vertex-disjoint directed paths from distinct vertices
// of R_I to distinct vertices of C_J, by unit-vertex-capacity max-flow:
// every vertex (row and column vertices included) is split into an
// in/out pair of capacity 1, with a super-source feeding R_I and C_J
// draining into a super-sink.
int max_disjoint_paths(const CauchonGraph& g, const MinorIndex& idx);
// True iff a full system of size() disjoint paths exists.
bool disjoint_system_exists(const CauchonGraph& g, const MinorIndex& idx);

// Exhaustive backtracking over column assignments and path choices; emits
// every vertex-disjoint system exactly once (each has identity sigma, which
// callers may assert). Visitor returns false to stop. Throws
// ResourceLimitError past max_systems emissions.
void for_each_disjoint_system(const CauchonGraph& g, const MinorIndex& idx,
                              std::size_t max_systems,
                              const std::function<bool(const PathSystem&)>& visit);
std::vector<PathSystem> disjoint_systems(const CauchonGraph& g, const MinorIndex& idx,
                                         std::size_t max_systems = kDefaultMaxSystems);

// Ordered product w(P_1) ... w(P_k), rows ascending.
Element system_weight(const CauchonGraph& g, const PathSystem& ps);

// Path-counting identity: qdet of the path-matrix minor equals the sum of
// disjoint-system weights. Both sides computed independently.
bool lgv_check(const CauchonGraph& g, const BMatrix& M, const MinorIndex& idx,
               std::size_t max_systems = kDefaultMaxSystems);
bool lgv_check(const CauchonGraph& g, const MinorIndex& idx,
               std::size_t max_systems = kDefaultMaxSystems,
               std::size_t max_paths = kDefaultMaxPaths);

// All minor indices with no disjoint path system, i.e. the quantum-minor
// generators of the ideal attached to the diagram (not a minimal set).
// Ordered by (size, rows, cols). Decided by the flow solver alone.
std::vector<MinorIndex> generators(const CauchonDiagram& d);

struct CrossValidateReport {
  int minors_checked = 0;
  std::map<int, int> total_by_size;
  std::map<int, int> vanishing_by_size;
  std::vector<MinorIndex> violations;
  bool ok() const { return violations.empty(); }
  std::string str() const;
};

// For every minor index of the grid: qdet of the path-matrix minor is zero
// exactly when no disjoint system exists. The two sides come from
// independent implementations (algebra vs. flow).
CrossValidateReport cross_validate(const CauchonDiagram& d,
                                   std::size_t max_paths = kDefaultMaxPaths);

}  // namespace cauchon
