#include "cauchon/minors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cauchon/errors.hpp"
#include "maxflow.hpp"

namespace cauchon {

namespace {

void require_index_set(const std::vector<int>& xs, int bound, const char* what) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] < 1 || xs[i] > bound)
      throw std::invalid_argument(std::string(what) + " index out of range");
    if (i > 0 && xs[i - 1] >= xs[i])
      throw std::invalid_argument(std::string(what) + " indices must strictly increase");
  }
}

std::string join(const std::vector<int>& xs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out << ",";
    out << xs[i];
  }
  return out.str();
}

}  // namespace

void MinorIndex::validate(int m, int n) const {
  if (rows.size() != cols.size())
    throw std::invalid_argument("row and column sets must have equal size");
  require_index_set(rows, m, "row");
  require_index_set(cols, n, "column");
}

std::string MinorIndex::str() const { return "I=" + join(rows) + " J=" + join(cols); }

std::vector<MinorIndex> all_minor_indices(int m, int n) {
  std::vector<MinorIndex> out;
  int kmax = std::min(m, n);
  std::vector<int> subset;
  auto subsets = [&](int bound, int k, auto&& emit) {
    subset.assign(k, 0);
    std::iota(subset.begin(), subset.end(), 1);
    while (true) {
      emit(subset);
      int i = k - 1;
      while (i >= 0 && subset[i] == bound - (k - 1 - i)) --i;
      if (i < 0) break;
      ++subset[i];
      for (int l = i + 1; l < k; ++l) subset[l] = subset[l - 1] + 1;
    }
  };
  for (int k = 1; k <= kmax; ++k) {
    std::vector<std::vector<int>> row_sets;
    subsets(m, k, [&](const std::vector<int>& s) { row_sets.push_back(s); });
    std::vector<std::vector<int>> col_sets;
    subsets(n, k, [&](const std::vector<int>& s) { col_sets.push_back(s); });
    for (const auto& I : row_sets)
      for (const auto& J : col_sets) out.push_back({I, J});
  }
  return out;
}

Element qdet(const BMatrix& M, const MinorIndex& idx) {
  idx.validate(M.rows(), M.cols());
  const int k = static_cast<int>(idx.size());
  if (k == 0) return Element::one();
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Element acc;
  do {
    std::int64_t inversions = 0;
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Element prod = Element::one();
    for (int l = 0; l < k && !prod.is_zero(); ++l)
      prod *= M.at(idx.rows[l], idx.cols[perm[l]]);
    prod.scale(QLaurent::signed_q_power(inversions));
    acc += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

bool PathSystem::identity_sigma() const {
  for (std::size_t l = 0; l < sigma.size(); ++l)
    if (sigma[l] != static_cast<int>(l)) return false;
  return true;
}

int max_disjoint_paths(const CauchonGraph& g, const MinorIndex& idx) {
  idx.validate(g.diagram().rows(), g.diagram().cols());
  const int nv = static_cast<int>(g.vertices().size());
  // v_in = 2v, v_out = 2v+1; one unit of capacity through every vertex
  const int source = 2 * nv;
  const int sink = 2 * nv + 1;
  MaxFlow flow(2 * nv + 2);
  for (int v = 0; v < nv; ++v) flow.add_edge(2 * v, 2 * v + 1, 1);
  for (const auto& e : g.edges()) flow.add_edge(2 * e.from + 1, 2 * e.to, 1);
  for (int i : idx.rows) flow.add_edge(source, 2 * g.row_vertex(i), 1);
  for (int j : idx.cols) flow.add_edge(2 * g.col_vertex(j) + 1, sink, 1);
  return flow.run(source, sink);
}

bool disjoint_system_exists(const CauchonGraph& g, const MinorIndex& idx) {
  return max_disjoint_paths(g, idx) == static_cast<int>(idx.size());
}

void for_each_disjoint_system(const CauchonGraph& g, const MinorIndex& idx,
                              std::size_t max_systems,
                              const std::function<bool(const PathSystem&)>& visit) {
  idx.validate(g.diagram().rows(), g.diagram().cols());
  const std::size_t k = idx.size();
  PathSystem ps;
  ps.paths.resize(k);
  ps.sigma.assign(k, -1);
  std::vector<char> col_used(k, 0);
  std::vector<char> blocked(g.vertices().size(), 0);
  std::size_t emitted = 0;
  bool stop = false;

  auto rec = [&](auto&& self, std::size_t l) -> void {
    if (stop) return;
    if (l == k) {
      if (++emitted > max_systems)
        throw ResourceLimitError("more than " + std::to_string(max_systems) +
                                 " disjoint systems for " + idx.str());
      if (!visit(ps)) stop = true;
      return;
    }
    for (std::size_t p = 0; p < k && !stop; ++p) {
      if (col_used[p]) continue;
      col_used[p] = 1;
      ps.sigma[l] = static_cast<int>(p);
      g.for_each_path(g.row_vertex(idx.rows[l]), g.col_vertex(idx.cols[p]), blocked,
                      [&](const DirectedPath& path) {
                        for (int v : path.vertices) blocked[v] = 1;
                        ps.paths[l] = path;
                        self(self, l + 1);
                        for (int v : path.vertices) blocked[v] = 0;
                        return !stop;
                      });
      col_used[p] = 0;
      ps.sigma[l] = -1;
    }
  };
  rec(rec, 0);
}

std::vector<PathSystem> disjoint_systems(const CauchonGraph& g, const MinorIndex& idx,
                                         std::size_t max_systems) {
  std::vector<PathSystem> out;
  for_each_disjoint_system(g, idx, max_systems, [&](const PathSystem& ps) {
    out.push_back(ps);
    return true;
  });
  return out;
}

Element system_weight(const CauchonGraph& g, const PathSystem& ps) {
  Element w = Element::one();
  for (const auto& p : ps.paths) w *= g.path_weight(p);
  return w;
}

bool lgv_check(const CauchonGraph& g, const BMatrix& M, const MinorIndex& idx,
               std::size_t max_systems) {
  Element lhs = qdet(M, idx);
  Element rhs;
  for_each_disjoint_system(g, idx, max_systems, [&](const PathSystem& ps) {
    rhs += system_weight(g, ps);
    return true;
  });
  return lhs == rhs;
}

bool lgv_check(const CauchonGraph& g, const MinorIndex& idx, std::size_t max_systems,
               std::size_t max_paths) {
  return lgv_check(g, path_matrix(g, max_paths), idx, max_systems);
}

std::vector<MinorIndex> generators(const CauchonDiagram& d) {
  CauchonGraph g(d);
  std::vector<MinorIndex> out;
  for (const auto& idx : all_minor_indices(d.rows(), d.cols()))
    if (!disjoint_system_exists(g, idx)) out.push_back(idx);
  return out;
}

std::string CrossValidateReport::str() const {
  std::ostringstream out;
  out << "checked " << minors_checked << " minors";
  for (const auto& [k, total] : total_by_size) {
    auto it = vanishing_by_size.find(k);
    int vanishing = it == vanishing_by_size.end() ? 0 : it->second;
    out << "; size " << k << ": " << vanishing << "/" << total << " vanishing";
  }
  out << "; violations: " << violations.size();
  for (const auto& v : violations) out << " [" << v.str() << "]";
  return out.str();
}

CrossValidateReport cross_validate(const CauchonDiagram& d, std::size_t max_paths) {
  CauchonGraph g(d);
  BMatrix M = path_matrix(g, max_paths);
  CrossValidateReport report;
  for (const auto& idx : all_minor_indices(d.rows(), d.cols())) {
    const int k = static_cast<int>(idx.size());
    bool vanishes = qdet(M, idx).is_zero();
    bool system = disjoint_system_exists(g, idx);
    ++report.minors_checked;
    ++report.total_by_size[k];
    if (vanishes) ++report.vanishing_by_size[k];
    if (vanishes == system) report.violations.push_back(idx);
  }
  return report;
}

}  // namespace cauchon
