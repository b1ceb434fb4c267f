#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "dimerwind/enumeration.hpp"
#include "dimerwind/honeycomb.hpp"

using namespace dimerwind;

namespace {

void check_graph_invariants(const TorusGraph& g) {
  const int m = g.m(), n = g.n();
  REQUIRE(g.num_vertices() == 4 * m * n);
  REQUIRE(g.num_edges() == 6 * m * n);

  int type_count[3] = {0, 0, 0};
  for (const Edge& e : g.edges()) {
    ++type_count[static_cast<int>(e.type)];
    CHECK(is_white(g.vertices()[static_cast<std::size_t>(e.white)].sub));
    CHECK(!is_white(g.vertices()[static_cast<std::size_t>(e.black)].sub));
  }
  CHECK(type_count[0] == 2 * m * n);
  CHECK(type_count[1] == 2 * m * n);
  CHECK(type_count[2] == 2 * m * n);

  // 3-regular with exactly one edge of each type per vertex.
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::set<EdgeType> types;
    for (int id : g.incident(v)) {
      REQUIRE(id >= 0);
      const Edge& e = g.edges()[static_cast<std::size_t>(id)];
      CHECK((e.white == v || e.black == v));
      types.insert(e.type);
    }
    CHECK(types.size() == 3);
  }

  // Each cell holds two whites and two blacks.
  std::map<std::pair<int, int>, std::pair<int, int>> per_cell;
  for (const Vertex& v : g.vertices()) {
    auto& [whites, blacks] = per_cell[{v.cell_i, v.cell_j}];
    (is_white(v.sub) ? whites : blacks) += 1;
  }
  CHECK(per_cell.size() == static_cast<std::size_t>(m * n));
  for (const auto& [cell, wb] : per_cell) {
    CHECK(wb.first == 2);
    CHECK(wb.second == 2);
  }

  // Offsets vanish except on seam edges, and cancel around every face.
  for (const Face& f : g.faces()) {
    int h = 0, v = 0;
    CHECK(f.steps.size() == 6);
    for (auto [id, fwd] : f.steps) {
      const Edge& e = g.edges()[static_cast<std::size_t>(id)];
      h += (fwd ? 1 : -1) * e.h;
      v += (fwd ? 1 : -1) * e.v;
    }
    CHECK(h == 0);
    CHECK(v == 0);
  }
  CHECK(g.faces().size() == static_cast<std::size_t>(2 * m * n));
}

}  // namespace

TEST_CASE("graph shape at the smallest sizes") {
  const auto g1 = TorusGraph::build(1, 1);
  CHECK(g1.num_vertices() == 4);
  CHECK(g1.num_edges() == 6);
  const auto g = TorusGraph::build(2, 3);
  CHECK(g.num_vertices() == 24);
  CHECK(g.num_edges() == 36);
  for (int v = 0; v < g.num_vertices(); ++v) {
    int degree = 0;
    for (const Edge& e : g.edges()) degree += (e.white == v) + (e.black == v);
    CHECK(degree == 3);
  }
}

TEST_CASE("graph invariants hold exhaustively for m <= 4, n in {3, 6}") {
  for (int m = 1; m <= 4; ++m) {
    for (int n : {3, 6}) {
      check_graph_invariants(TorusGraph::build(m, n));
    }
  }
  check_graph_invariants(TorusGraph::build(1, 1));
  check_graph_invariants(TorusGraph::build(3, 2));
}

TEST_CASE("degenerate sizes are rejected") {
  CHECK_THROWS_AS(TorusGraph::build(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(TorusGraph::build(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(TorusGraph::build(-1, 3), std::invalid_argument);
}

TEST_CASE("deterministic labeling") {
  const auto a = TorusGraph::build(2, 3);
  const auto b = TorusGraph::build(2, 3);
  REQUIRE(a.num_edges() == b.num_edges());
  for (int id = 0; id < a.num_edges(); ++id) {
    const Edge& ea = a.edges()[static_cast<std::size_t>(id)];
    const Edge& eb = b.edges()[static_cast<std::size_t>(id)];
    CHECK(ea.white == eb.white);
    CHECK(ea.black == eb.black);
    CHECK(ea.type == eb.type);
  }
}

TEST_CASE("modulus descriptor") {
  const auto g = TorusGraph::build(2, 6);
  CHECK(g.modulus_ratio() == std::pair<int, int>{3, 1});
  CHECK(g.rho() == doctest::Approx(6.0 / (std::sqrt(3.0) * 2.0)));
}

TEST_CASE("reference matching is balanced and translation invariant") {
  for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 6}, {3, 3}}) {
    const auto g = TorusGraph::build(m, n);
    const auto m0 = reference_matching(g);
    CHECK(static_cast<int>(m0.edge_ids().size()) == 2 * m * n);
    const auto c = count_types(g, m0);
    CHECK(c.type_i == 2 * m * n / 3);
    CHECK(c.type_ii == 2 * m * n / 3);
    CHECK(c.type_iii == 2 * m * n / 3);
    // Perfect: covers every vertex once.
    std::set<int> covered;
    for (int id : m0.edge_ids()) {
      const Edge& e = g.edges()[static_cast<std::size_t>(id)];
      CHECK(covered.insert(e.white).second);
      CHECK(covered.insert(e.black).second);
    }
    CHECK(static_cast<int>(covered.size()) == g.num_vertices());
    // Invariant under x-translation and 3-step y-translation of cell labels.
    for (int id : m0.edge_ids()) {
      const int cell = id / 6, slot = id % 6;
      const int i = cell % m, j = cell / m;
      CHECK(m0.contains(g.edge_id(i + 1, j, slot)));
      CHECK(m0.contains(g.edge_id(i, j + 3, slot)));
    }
  }
  CHECK(reference_matching(TorusGraph::build(2, 6)).edge_ids().size() == 24);
}

TEST_CASE("reference matching rejects n not divisible by 3") {
  CHECK_THROWS_AS(reference_matching(TorusGraph::build(2, 4)), std::invalid_argument);
  CHECK_THROWS_AS(reference_matching(TorusGraph::build(1, 2)), std::invalid_argument);
}

TEST_CASE("dual paths: cardinalities, coverage, signs") {
  const auto g = TorusGraph::build(1, 3);
  const auto d = dual_paths(g);
  CHECK(d.horizontal.size() == 6);
  CHECK(d.vertical.size() == 2);

  // Every type-I edge crossed by exactly one vertical cycle, every type-II
  // and type-III edge by exactly one horizontal cycle.
  std::map<int, int> vert_hits, horiz_hits;
  for (const DualCycle& c : d.vertical) {
    for (auto [e, s] : c.crossings) {
      ++vert_hits[e];
      CHECK(s == 1);
      CHECK(g.edges()[static_cast<std::size_t>(e)].type == EdgeType::I);
    }
  }
  for (const DualCycle& c : d.horizontal) {
    for (auto [e, s] : c.crossings) {
      ++horiz_hits[e];
      const EdgeType t = g.edges()[static_cast<std::size_t>(e)].type;
      CHECK(t != EdgeType::I);
      CHECK(s == (t == EdgeType::II ? 1 : -1));
    }
  }
  CHECK(vert_hits.size() == 6);
  CHECK(horiz_hits.size() == 12);
  for (const auto& [e, c] : vert_hits) CHECK(c == 1);
  for (const auto& [e, c] : horiz_hits) CHECK(c == 1);

  // Crossing signs of the reference matching cancel over horizontal cycles.
  const auto m0 = reference_matching(g);
  int total = 0;
  for (const DualCycle& c : d.horizontal) {
    for (auto [e, s] : c.crossings) total += s * (m0.contains(e) ? 1 : 0);
  }
  CHECK(total == 0);
}

TEST_CASE("every dual cycle reports the winding of every matching") {
  // Stronger than the aggregated formulas: each left-to-right cycle yields
  // the vertical component, each top-to-bottom cycle the horizontal one.
  const auto g = TorusGraph::build(2, 3);
  const auto m0 = reference_matching(g);
  const auto d = dual_paths(g);
  for_each_matching(g, [&](const Matching& mt) {
    const auto [k, l] = winding_by_counts(g, mt);
    for (const DualCycle& c : d.horizontal) {
      int s = 0;
      for (auto [e, sign] : c.crossings)
        s += sign * ((mt.contains(e) ? 1 : 0) - (m0.contains(e) ? 1 : 0));
      CHECK(s == l);
    }
    for (const DualCycle& c : d.vertical) {
      int s = 0;
      for (auto [e, sign] : c.crossings)
        s += sign * ((mt.contains(e) ? 1 : 0) - (m0.contains(e) ? 1 : 0));
      CHECK(s == k);
    }
    return true;
  });
}

TEST_CASE("only seam edges carry homology offsets") {
  const auto g = TorusGraph::build(3, 6);
  int h_edges = 0, v_plus = 0, v_minus = 0;
  for (const Edge& e : g.edges()) {
    CHECK(e.h * e.v == 0);  // no edge crosses both cuts
    if (e.h != 0) {
      CHECK(e.h == 1);
      CHECK(e.type == EdgeType::I);
      CHECK(g.vertices()[static_cast<std::size_t>(e.white)].cell_i == g.m() - 1);
      ++h_edges;
    }
    if (e.v == 1) {
      CHECK(e.type == EdgeType::II);
      CHECK(g.vertices()[static_cast<std::size_t>(e.white)].cell_j == g.n() - 1);
      ++v_plus;
    }
    if (e.v == -1) {
      CHECK(e.type == EdgeType::III);
      CHECK(g.vertices()[static_cast<std::size_t>(e.white)].cell_j == 0);
      ++v_minus;
    }
  }
  CHECK(h_edges == g.n());
  CHECK(v_plus == g.m());
  CHECK(v_minus == g.m());
}

TEST_CASE("cyclic cell shifts are type-preserving automorphisms") {
  const auto g = TorusGraph::build(3, 6);
  for (auto [di, dj] : std::vector<std::pair<int, int>>{{1, 0}, {0, 1}, {2, 5}}) {
    for (int j = 0; j < g.n(); ++j) {
      for (int i = 0; i < g.m(); ++i) {
        for (int slot = 0; slot < 6; ++slot) {
          const Edge& e = g.edges()[static_cast<std::size_t>(g.edge_id(i, j, slot))];
          const Edge& s =
              g.edges()[static_cast<std::size_t>(g.edge_id(i + di, j + dj, slot))];
          CHECK(e.type == s.type);
          // Endpoints map to the shifted vertices of the same sublattices.
          const Vertex& ew = g.vertices()[static_cast<std::size_t>(e.white)];
          const Vertex& eb = g.vertices()[static_cast<std::size_t>(e.black)];
          CHECK(s.white == g.vertex_id(ew.cell_i + di, ew.cell_j + dj, ew.sub));
          CHECK(s.black == g.vertex_id(eb.cell_i + di, eb.cell_j + dj, eb.sub));
        }
      }
    }
  }
  // Homology is preserved: a shifted matching keeps its winding class.
  const auto m0 = reference_matching(g);
  std::vector<int> all_ii;
  for (int id = 0; id < g.num_edges(); ++id) {
    if (g.edges()[static_cast<std::size_t>(id)].type == EdgeType::II) all_ii.push_back(id);
  }
  const Matching mii(g.m(), g.n(), all_ii);
  std::vector<int> shifted;
  for (int id : mii.edge_ids()) {
    const int cell = id / 6, slot = id % 6;
    shifted.push_back(g.edge_id(cell % g.m() + 1, cell / g.m() + 1, slot));
  }
  const Matching mshift(g.m(), g.n(), shifted);
  CHECK(winding_by_counts(g, mii) == winding_by_counts(g, mshift));
  CHECK(winding_by_loops(superimpose(g, mii, m0)) ==
        winding_by_loops(superimpose(g, mshift, m0)));
}

TEST_CASE("graph serialization format") {
  const auto g = TorusGraph::build(1, 1);
  std::ostringstream os;
  write_graph(os, g);
  const std::string text = os.str();
  CHECK(text.substr(0, 4) == "1 1\n");
  // 6 edges, one line each, plus the header.
  CHECK(std::count(text.begin(), text.end(), '\n') == 7);
  std::istringstream is(text);
  std::string header;
  std::getline(is, header);
  int id, w, b, h, v;
  std::string type;
  int lines = 0;
  std::set<std::string> seen_types;
  while (is >> id >> w >> b >> type >> h >> v) {
    CHECK(id == lines);
    seen_types.insert(type);
    ++lines;
  }
  CHECK(lines == 6);
  CHECK(seen_types == std::set<std::string>{"I", "II", "III"});
}
