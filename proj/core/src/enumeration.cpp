#include "dimerwind/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace dimerwind {

namespace {

void check_same_graph(const TorusGraph& g, const Matching& a) {
  if (a.m() != g.m() || a.n() != g.n()) {
    throw std::invalid_argument("matching belongs to a different graph");
  }
}

void check_cap(const TorusGraph& g, int cap) {
  if (4 * g.m() * g.n() > cap) {
    throw std::invalid_argument(
        "exhaustive enumeration refused: 4mn = " +
        std::to_string(4 * g.m() * g.n()) + " exceeds the cap " +
        std::to_string(cap));
  }
}

}  // namespace

EdgeTypeCounts count_types(const TorusGraph& g, const Matching& mt) {
  check_same_graph(g, mt);
  EdgeTypeCounts c;
  for (int e : mt.edge_ids()) {
    switch (g.edges()[static_cast<std::size_t>(e)].type) {
      case EdgeType::I: ++c.type_i; break;
      case EdgeType::II: ++c.type_ii; break;
      case EdgeType::III: ++c.type_iii; break;
    }
  }
  return c;
}

LoopDecomposition superimpose(const TorusGraph& g, const Matching& m,
                              const Matching& m0) {
  check_same_graph(g, m);
  check_same_graph(g, m0);

  // Matched edge per vertex for both matchings.
  std::vector<int> in_m(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<int> in_m0(in_m);
  auto fill = [&](const Matching& mt, std::vector<int>& slot) {
    for (int e : mt.edge_ids()) {
      const Edge& ed = g.edges()[static_cast<std::size_t>(e)];
      if (slot[static_cast<std::size_t>(ed.white)] != -1 ||
          slot[static_cast<std::size_t>(ed.black)] != -1) {
        throw std::invalid_argument("edge set is not a matching");
      }
      slot[static_cast<std::size_t>(ed.white)] = e;
      slot[static_cast<std::size_t>(ed.black)] = e;
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (slot[static_cast<std::size_t>(v)] == -1) {
        throw std::invalid_argument("matching does not cover every vertex");
      }
    }
  };
  fill(m, in_m);
  fill(m0, in_m0);

  LoopDecomposition dec;
  std::vector<char> visited(static_cast<std::size_t>(g.num_vertices()), 0);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (visited[static_cast<std::size_t>(v)]) continue;
    const int em = in_m[static_cast<std::size_t>(v)];
    const int e0 = in_m0[static_cast<std::size_t>(v)];
    if (em == e0) {
      const Edge& ed = g.edges()[static_cast<std::size_t>(em)];
      visited[static_cast<std::size_t>(ed.white)] = 1;
      visited[static_cast<std::size_t>(ed.black)] = 1;
      dec.doubled_edges.push_back(em);
      continue;
    }
    Loop loop;
    int cur = v;
    do {
      visited[static_cast<std::size_t>(cur)] = 1;
      const bool white = is_white(g.vertices()[static_cast<std::size_t>(cur)].sub);
      // From white follow the M edge forward, from black the M0 edge back.
      const int e = white ? in_m[static_cast<std::size_t>(cur)]
                          : in_m0[static_cast<std::size_t>(cur)];
      const Edge& ed = g.edges()[static_cast<std::size_t>(e)];
      loop.steps.push_back({e, white});
      const int sgn = white ? +1 : -1;
      loop.wind_h += sgn * ed.h;
      loop.wind_v += sgn * ed.v;
      cur = white ? ed.black : ed.white;
    } while (cur != v);
    dec.loops.push_back(std::move(loop));
  }
  return dec;
}

std::pair<int, int> winding_by_loops(const LoopDecomposition& dec) {
  int k = 0;
  int l = 0;
  for (const Loop& loop : dec.loops) {
    k += loop.wind_h;
    l += loop.wind_v;
  }
  return {k, l};
}

std::pair<int, int> winding_by_counts(const TorusGraph& g, const Matching& mt) {
  if (g.n() % 3 != 0) {
    throw std::invalid_argument("winding_by_counts requires n divisible by 3");
  }
  const EdgeTypeCounts c = count_types(g, mt);
  const long mn = static_cast<long>(g.m()) * g.n();
  const long knum = c.type_i - 2 * mn / 3;
  const long lnum = c.type_ii - c.type_iii;
  if (knum % (2 * g.m()) != 0 || lnum % (2 * g.n()) != 0) {
    throw std::logic_error("winding formulas gave a non-exact division; "
                           "graph conventions are broken");
  }
  return {static_cast<int>(knum / (2 * g.m())),
          static_cast<int>(lnum / (2 * g.n()))};
}

void for_each_matching(const TorusGraph& g,
                       const std::function<bool(const Matching&)>& visit,
                       int cap) {
  check_cap(g, cap);
  const int nv = g.num_vertices();
  std::vector<char> covered(static_cast<std::size_t>(nv), 0);
  std::vector<int> picked;
  picked.reserve(static_cast<std::size_t>(nv / 2));
  bool stop = false;

  // Backtracking over the lowest-indexed uncovered vertex; its three
  // incident edges are tried in type order, which fixes the stream order.
  auto rec = [&](auto&& self, int from) -> void {
    if (stop) return;
    int v = from;
    while (v < nv && covered[static_cast<std::size_t>(v)]) ++v;
    if (v == nv) {
      if (!visit(Matching(g.m(), g.n(), picked))) stop = true;
      return;
    }
    for (int e : g.incident(v)) {
      const Edge& ed = g.edges()[static_cast<std::size_t>(e)];
      const int other = ed.white == v ? ed.black : ed.white;
      if (covered[static_cast<std::size_t>(other)]) continue;
      covered[static_cast<std::size_t>(v)] = 1;
      covered[static_cast<std::size_t>(other)] = 1;
      picked.push_back(e);
      self(self, v + 1);
      picked.pop_back();
      covered[static_cast<std::size_t>(v)] = 0;
      covered[static_cast<std::size_t>(other)] = 0;
      if (stop) return;
    }
  };
  rec(rec, 0);
}

std::uint64_t count_matchings(const TorusGraph& g, int cap) {
  std::uint64_t count = 0;
  for_each_matching(g, [&](const Matching&) {
    ++count;
    return true;
  }, cap);
  return count;
}

WindingTable brute_winding_table(const TorusGraph& g, int cap) {
  if (g.n() % 3 != 0) {
    throw std::invalid_argument("winding tables require n divisible by 3");
  }
  WindingTable t(g.m(), g.n());
  for_each_matching(g, [&](const Matching& mt) {
    auto [k, l] = winding_by_counts(g, mt);
    t.add(k, l, 1);
    return true;
  }, cap);
  return t;
}

}  // namespace dimerwind
