#include "cauchon/cauchon_graph.hpp"

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "cauchon/diagram.hpp"
#include "cauchon/errors.hpp"
#include "doctest.h"
#include "testutil.hpp"

using namespace cauchon;
using namespace testutil;

namespace {

void check_horizontal_pair_relations(const CauchonGraph& g) {
  for (const GraphEdge& e1 : g.edges()) {
    if (!e1.horizontal) continue;
    for (const GraphEdge& e2 : g.edges()) {
      if (!e2.horizontal) continue;
      std::int64_t want = expected_kappa(hedge_cols(g, e1), hedge_cols(g, e2));
      CHECK(observed_commutation(e1.weight(), e2.weight()) == want);
    }
  }
}

// Splitting any source-to-sink path at an interior vertex: the prefix
// commutes with an all-vertical suffix and picks up q^-1 against any
// suffix that moves left.
void check_path_split_relations(const CauchonGraph& g, std::size_t max_paths) {
  const CauchonDiagram& d = g.diagram();
  for (int i = 1; i <= d.rows(); ++i)
    for (int j = 1; j <= d.cols(); ++j)
      for (const DirectedPath& p : g.all_paths(g.row_vertex(i), g.col_vertex(j), max_paths))
        for (std::size_t cut = 1; cut + 1 < p.vertices.size(); ++cut) {
          DirectedPath head{{p.vertices.begin(), p.vertices.begin() + cut + 1},
                            {p.edges.begin(), p.edges.begin() + cut}};
          DirectedPath tail{{p.vertices.begin() + cut, p.vertices.end()},
                            {p.edges.begin() + cut, p.edges.end()}};
          Element wk = g.path_weight(head);
          Element wl = g.path_weight(tail);
          if (all_vertical(g, tail)) {
            CHECK(wl == Element::one());
            CHECK(wk * wl == wl * wk);
          } else {
            CHECK(observed_commutation(wk, wl) == -1);
          }
        }
}

// Two sink-bound paths leaving one white square, one horizontally and one
// vertically, meeting nowhere else: they commute when the vertical one
// never turns, and otherwise the horizontal one picks up q^+1.
void check_branch_pair_relations(const CauchonGraph& g, std::size_t max_paths) {
  const CauchonDiagram& d = g.diagram();
  for (const Vertex& v : g.vertices()) {
    if (v.kind != Vertex::Kind::White) continue;
    int vid = g.white_vertex(v.row, v.col);
    std::vector<DirectedPath> horiz;
    std::vector<DirectedPath> vert;
    for (int j = 1; j <= d.cols(); ++j)
      for (const DirectedPath& p : g.all_paths(vid, g.col_vertex(j), max_paths))
        (g.edges()[p.edges.front()].horizontal ? horiz : vert).push_back(p);
    for (const DirectedPath& k : horiz)
      for (const DirectedPath& l : vert) {
        std::set<int> seen(k.vertices.begin() + 1, k.vertices.end());
        bool disjoint = true;
        for (std::size_t t = 1; t < l.vertices.size() && disjoint; ++t)
          disjoint = seen.count(l.vertices[t]) == 0;
        if (!disjoint) continue;
        Element wk = g.path_weight(k);
        Element wl = g.path_weight(l);
        if (all_vertical(g, l))
          CHECK(wk * wl == wl * wk);
        else
          CHECK(observed_commutation(wk, wl) == 1);
      }
  }
}

}  // namespace

TEST_CASE("vertex layout") {
  CauchonDiagram d = CauchonDiagram::parse(".X\n..\n");
  CauchonGraph g(d);
  CHECK(g.vertices().size() == 2 + 2 + 3);
  CHECK(g.row_vertex(1) == 0);
  CHECK(g.row_vertex(2) == 1);
  CHECK(g.col_vertex(1) == 2);
  CHECK(g.col_vertex(2) == 3);
  CHECK(g.white_vertex(1, 1) == 4);
  CHECK(g.white_vertex(1, 2) == -1);
  CHECK(g.white_vertex(2, 1) == 5);
  CHECK(g.white_vertex(2, 2) == 6);
  CHECK(g.vertices()[0].name() == "r1");
  CHECK(g.vertices()[3].name() == "c2");
  CHECK(g.vertices()[4].name() == "w1_1");

  CauchonGraph black(CauchonDiagram::all_black(2, 2));
  CHECK(black.vertices().size() == 4);
  CHECK(black.edges().empty());
}

TEST_CASE("edge families") {
  CauchonDiagram d = CauchonDiagram::parse("..X\n...\nX..\n");
  CauchonGraph g(d);

  // row sources point at the rightmost white square of their row
  const GraphEdge& r1 = g.edges()[g.successors(g.row_vertex(1)).front()];
  CHECK(r1.to == g.white_vertex(1, 2));
  CHECK(r1.horizontal);
  CHECK(r1.label() == "t[1,2]");
  CHECK(r1.weight() == gen(1, 2));

  // every white square has one vertical successor, after any horizontal one
  for (const Vertex& v : g.vertices()) {
    if (v.kind != Vertex::Kind::White) continue;
    const auto& succ = g.successors(g.white_vertex(v.row, v.col));
    REQUIRE(!succ.empty());
    CHECK(succ.size() <= 2);
    CHECK_FALSE(g.edges()[succ.back()].horizontal);
    if (succ.size() == 2) CHECK(g.edges()[succ.front()].horizontal);
    for (int e : succ) CHECK(g.edges()[e].weight().is_unit_monomial());
  }
  for (int j = 1; j <= 3; ++j) CHECK(g.successors(g.col_vertex(j)).empty());

  CauchonGraph row(CauchonDiagram::all_white(1, 2));
  REQUIRE(row.edges().size() == 4);
  CHECK(row.edges()[0].from == row.row_vertex(1));
  CHECK(row.edges()[0].to == row.white_vertex(1, 2));
  CHECK(row.edges()[0].label() == "t[1,2]");
  CHECK(row.edges()[1].from == row.white_vertex(1, 1));
  CHECK(row.edges()[1].to == row.col_vertex(1));
  CHECK(row.edges()[1].label() == "1");
  CHECK(row.edges()[2].from == row.white_vertex(1, 2));
  CHECK(row.edges()[2].to == row.white_vertex(1, 1));
  CHECK(row.edges()[2].label() == "t[1,2]^-1 t[1,1]");
  CHECK(row.edges()[3].from == row.white_vertex(1, 2));
  CHECK(row.edges()[3].to == row.col_vertex(2));
  CHECK(row.edges()[3].label() == "1");
}

TEST_CASE("path enumeration") {
  CauchonGraph black(CauchonDiagram::all_black(2, 2));
  CHECK(black.all_paths(black.row_vertex(1), black.col_vertex(1), 10).empty());

  CauchonDiagram d = CauchonDiagram::parse("..X\n...\nX..\n");
  CauchonGraph g(d);
  auto paths = g.all_paths(g.row_vertex(1), g.col_vertex(1), 100);
  REQUIRE(paths.size() == 2);
  // ordered adjacency puts the horizontal continuation first
  CHECK(paths[0].vertices == std::vector<int>{g.row_vertex(1), g.white_vertex(1, 2),
                                              g.white_vertex(1, 1), g.white_vertex(2, 1),
                                              g.col_vertex(1)});
  CHECK(paths[1].vertices == std::vector<int>{g.row_vertex(1), g.white_vertex(1, 2),
                                              g.white_vertex(2, 2), g.white_vertex(2, 1),
                                              g.col_vertex(1)});
  CHECK(g.all_paths(g.row_vertex(1), g.col_vertex(3), 100).empty());

  CHECK_THROWS_AS(g.all_paths(g.row_vertex(1), g.col_vertex(1), 1), ResourceLimitError);

  // early stop: visitor sees only the first path
  int seen = 0;
  g.for_each_path(g.row_vertex(1), g.col_vertex(1), [&](const DirectedPath&) {
    ++seen;
    return false;
  });
  CHECK(seen == 1);

  // blocking the shared square kills both paths
  std::vector<char> blocked(g.vertices().size(), 0);
  blocked[g.white_vertex(1, 2)] = 1;
  int count = 0;
  g.for_each_path(g.row_vertex(1), g.col_vertex(1), blocked, [&](const DirectedPath&) {
    ++count;
    return true;
  });
  CHECK(count == 0);
}

TEST_CASE("path weights") {
  CauchonDiagram d = CauchonDiagram::parse("..X\n...\nX..\n");
  CauchonGraph g(d);

  DirectedPath empty{{g.row_vertex(1)}, {}};
  CHECK(g.path_weight(empty) == Element::one());

  auto paths = g.all_paths(g.row_vertex(1), g.col_vertex(1), 100);
  REQUIRE(paths.size() == 2);
  CHECK(g.path_weight(paths[0]) == gen(1, 1));
  CHECK(g.path_weight(paths[1]) == gen(1, 2) * gen(2, 2, -1) * gen(2, 1));

  // a full row telescopes to its leftmost generator
  CauchonGraph line(CauchonDiagram::all_white(1, 3));
  auto lp = line.all_paths(line.row_vertex(1), line.col_vertex(1), 10);
  REQUIRE(lp.size() == 1);
  CHECK(line.path_weight(lp[0]) == gen(1, 1));

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    CauchonDiagram rd = random_diagram(rng, 3, 4);
    CauchonGraph rg(rd);
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 4; ++j)
        for (const DirectedPath& p : rg.all_paths(rg.row_vertex(i), rg.col_vertex(j), 1000)) {
          Element folded = Element::one();
          for (int e : p.edges) folded *= rg.edges()[e].weight();
          CHECK(rg.path_weight(p) == folded);
          CHECK(rg.path_weight(p).is_unit_monomial());
        }
  }
}

TEST_CASE("topological order") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    CauchonGraph g(random_diagram(rng, 4, 4));
    std::vector<int> order = g.topological_order();
    REQUIRE(order.size() == g.vertices().size());
    std::vector<int> pos(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) pos[order[k]] = static_cast<int>(k);
    for (const GraphEdge& e : g.edges()) CHECK(pos[e.from] < pos[e.to]);
  }
}

TEST_CASE("drawn on the grid, edges never cross") {
  auto check_planar = [](const CauchonDiagram& d) {
    CauchonGraph g(d);
    const int m = d.rows();
    const int n = d.cols();
    struct Span {
      int fixed, lo, hi;
    };
    std::vector<Span> hspans, vspans;
    for (const GraphEdge& e : g.edges()) {
      const Vertex& a = g.vertices()[e.from];
      const Vertex& b = g.vertices()[e.to];
      if (e.horizontal) {
        int tail = a.kind == Vertex::Kind::Row ? n + 1 : a.col;
        hspans.push_back({b.row, b.col, tail});
      } else {
        int bottom = b.kind == Vertex::Kind::Col ? m + 1 : b.row;
        vspans.push_back({a.col, a.row, bottom});
      }
    }
    for (const Span& h : hspans)
      for (const Span& v : vspans) {
        bool cross = v.lo < h.fixed && h.fixed < v.hi && h.lo < v.fixed && v.fixed < h.hi;
        CHECK_FALSE(cross);
      }
  };
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (const CauchonDiagram& d : CauchonDiagram::enumerate_all(m, n)) check_planar(d);
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) check_planar(random_diagram(rng, 4, 4));
}

TEST_CASE("dot rendering") {
  CauchonGraph g(CauchonDiagram::all_white(1, 2));
  CHECK(g.to_dot() ==
        "digraph cauchon_graph {\n"
        "  r1;\n"
        "  c1;\n"
        "  c2;\n"
        "  w1_1;\n"
        "  w1_2;\n"
        "  r1 -> w1_2 [label=\"t[1,2]\"];\n"
        "  w1_1 -> c1 [label=\"1\"];\n"
        "  w1_2 -> w1_1 [label=\"t[1,2]^-1 t[1,1]\"];\n"
        "  w1_2 -> c2 [label=\"1\"];\n"
        "}\n");
}

TEST_CASE("weights of horizontal edge pairs q-commute by the geometric rule") {
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 3; ++n)
      for (const CauchonDiagram& d : CauchonDiagram::enumerate_all(m, n))
        check_horizontal_pair_relations(CauchonGraph(d));
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial)
    check_horizontal_pair_relations(CauchonGraph(random_diagram(rng, 4, 5)));
}

TEST_CASE("prefix and suffix weights of one path q-commute") {
  for (const CauchonDiagram& d : CauchonDiagram::enumerate_all(2, 3))
    check_path_split_relations(CauchonGraph(d), 2000);
  check_path_split_relations(CauchonGraph(CauchonDiagram::parse("..X\n...\nX..\n")), 2000);
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 6; ++trial)
    check_path_split_relations(CauchonGraph(random_diagram(rng, 3, 4)), 5000);
}

TEST_CASE("weights of disjoint branches from one square q-commute") {
  for (const CauchonDiagram& d : CauchonDiagram::enumerate_all(2, 3))
    check_branch_pair_relations(CauchonGraph(d), 2000);
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 6; ++trial)
    check_branch_pair_relations(CauchonGraph(random_diagram(rng, 3, 4)), 5000);
}
