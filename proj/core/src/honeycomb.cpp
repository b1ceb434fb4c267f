#include "dimerwind/honeycomb.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace dimerwind {

namespace {

int wrap(int x, int mod) {
  int r = x % mod;
  return r < 0 ? r + mod : r;
}

}  // namespace

int TorusGraph::cell_index(int i, int j) const {
  return wrap(j, n_) * m_ + wrap(i, m_);
}

int TorusGraph::vertex_id(int i, int j, Sublattice s) const {
  return 4 * cell_index(i, j) + static_cast<int>(s);
}

int TorusGraph::edge_id(int i, int j, int slot) const {
  return 6 * cell_index(i, j) + slot;
}

TorusGraph TorusGraph::build(int m, int n) {
  if (m < 1 || n < 1) {
    throw std::invalid_argument("TorusGraph::build requires m >= 1 and n >= 1");
  }
  TorusGraph g;
  g.m_ = m;
  g.n_ = n;
  g.vertices_.resize(static_cast<std::size_t>(4) * m * n);
  g.edges_.resize(static_cast<std::size_t>(6) * m * n);

  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      for (int s = 0; s < 4; ++s) {
        g.vertices_[static_cast<std::size_t>(4 * g.cell_index(i, j) + s)] =
            Vertex{i, j, static_cast<Sublattice>(s)};
      }
    }
  }

  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      const int w1 = g.vertex_id(i, j, Sublattice::w1);
      const int w2 = g.vertex_id(i, j, Sublattice::w2);
      const int b1 = g.vertex_id(i, j, Sublattice::b1);
      const int b2 = g.vertex_id(i, j, Sublattice::b2);
      // Seam crossings: h on the i -> i+1 wrap, v on the j -> j+-1 wraps.
      const int h_wrap = (i == m - 1) ? 1 : 0;
      const int v_up = (j == n - 1) ? 1 : 0;
      const int v_down = (j == 0) ? -1 : 0;

      Edge* e = &g.edges_[static_cast<std::size_t>(6 * g.cell_index(i, j))];
      e[0] = Edge{w1, b2, EdgeType::I, 0, 0};
      e[1] = Edge{w2, g.vertex_id(i + 1, j, Sublattice::b1), EdgeType::I, h_wrap, 0};
      e[2] = Edge{w1, b1, EdgeType::II, 0, 0};
      e[3] = Edge{w2, g.vertex_id(i, j + 1, Sublattice::b2), EdgeType::II, 0, v_up};
      e[4] = Edge{w1, g.vertex_id(i, j - 1, Sublattice::b1), EdgeType::III, 0, v_down};
      e[5] = Edge{w2, b2, EdgeType::III, 0, 0};
    }
  }

  g.incident_.assign(g.vertices_.size(), {-1, -1, -1});
  for (int id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edges_[static_cast<std::size_t>(id)];
    g.incident_[static_cast<std::size_t>(e.white)][static_cast<int>(e.type)] = id;
    g.incident_[static_cast<std::size_t>(e.black)][static_cast<int>(e.type)] = id;
  }
  return g;
}

std::vector<Face> TorusGraph::faces() const {
  std::vector<Face> out;
  out.reserve(static_cast<std::size_t>(2) * m_ * n_);
  for (int j = 0; j < n_; ++j) {
    for (int i = 0; i < m_; ++i) {
      // Hexagon around w1(i,j) -> b2(i,j) -> w2(i,j) -> b2(i,j+1)
      //   -> w1(i,j+1) -> b1(i,j) -> back.
      Face a;
      a.steps = {
          {edge_id(i, j, 0), true},       // w1 -> b2
          {edge_id(i, j, 5), false},      // b2 -> w2
          {edge_id(i, j, 3), true},       // w2 -> b2(i,j+1)
          {edge_id(i, j + 1, 0), false},  // b2 -> w1(i,j+1)
          {edge_id(i, j + 1, 4), true},   // w1(i,j+1) -> b1(i,j)
          {edge_id(i, j, 2), false},      // b1 -> w1
      };
      out.push_back(std::move(a));
      // Hexagon around w1(i+1,j) -> b1(i+1,j) -> w2(i,j) -> b2(i,j)
      //   -> w2(i,j-1) -> b1(i+1,j-1) -> back.
      Face b;
      b.steps = {
          {edge_id(i + 1, j, 2), true},       // w1(i+1,j) -> b1(i+1,j)
          {edge_id(i, j, 1), false},          // b1(i+1,j) -> w2(i,j)
          {edge_id(i, j, 5), true},           // w2 -> b2(i,j)
          {edge_id(i, j - 1, 3), false},      // b2(i,j) -> w2(i,j-1)
          {edge_id(i, j - 1, 1), true},       // w2(i,j-1) -> b1(i+1,j-1)
          {edge_id(i + 1, j, 4), false},      // b1(i+1,j-1) -> w1(i+1,j)
      };
      out.push_back(std::move(b));
    }
  }
  return out;
}

std::pair<int, int> TorusGraph::modulus_ratio() const {
  int g = std::gcd(n_, m_);
  return {n_ / g, m_ / g};
}

double TorusGraph::rho() const { return n_ / (std::sqrt(3.0) * m_); }

Matching::Matching(int m, int n, std::vector<int> edge_ids)
    : m_(m), n_(n), edge_ids_(std::move(edge_ids)) {
  std::sort(edge_ids_.begin(), edge_ids_.end());
}

bool Matching::contains(int edge) const {
  return std::binary_search(edge_ids_.begin(), edge_ids_.end(), edge);
}

Matching reference_matching(const TorusGraph& g) {
  if (g.n() % 3 != 0) {
    throw std::invalid_argument(
        "reference matching requires n divisible by 3, got n = " +
        std::to_string(g.n()));
  }
  std::vector<int> picked;
  picked.reserve(static_cast<std::size_t>(2) * g.m() * g.n());
  for (int j = 0; j < g.n(); j += 3) {
    for (int i = 0; i < g.m(); ++i) {
      picked.push_back(g.edge_id(i, j, 0));      // I   w1(j0)   - b2(j0)
      picked.push_back(g.edge_id(i, j, 3));      // II  w2(j0)   - b2(j0+1)
      picked.push_back(g.edge_id(i, j + 1, 4));  // III w1(j0+1) - b1(j0)
      picked.push_back(g.edge_id(i, j + 1, 1));  // I   w2(j0+1) - b1(i+1,j0+1)
      picked.push_back(g.edge_id(i, j + 2, 2));  // II  w1(j0+2) - b1(j0+2)
      picked.push_back(g.edge_id(i, j + 2, 5));  // III w2(j0+2) - b2(j0+2)
    }
  }
  return Matching(g.m(), g.n(), std::move(picked));
}

DualPaths dual_paths(const TorusGraph& g) {
  DualPaths d;
  d.horizontal.resize(static_cast<std::size_t>(2) * g.n());
  d.vertical.resize(static_cast<std::size_t>(2) * g.m());
  for (int j = 0; j < g.n(); ++j) {
    DualCycle& low = d.horizontal[static_cast<std::size_t>(2 * j)];
    DualCycle& high = d.horizontal[static_cast<std::size_t>(2 * j + 1)];
    for (int i = 0; i < g.m(); ++i) {
      // Faces alternate A(i,j), B(i,j): the crossed edges alternate between
      // II w1-b1 and III w2-b2 of the same cell row.
      low.crossings.push_back({g.edge_id(i, j, 2), +1});
      low.crossings.push_back({g.edge_id(i, j, 5), -1});
      // Second family, through B(i,j+1): II w2-b2(j+1) and III w1(j+1)-b1(j).
      high.crossings.push_back({g.edge_id(i, j, 3), +1});
      high.crossings.push_back({g.edge_id(i, j + 1, 4), -1});
    }
  }
  for (int i = 0; i < g.m(); ++i) {
    DualCycle& in_cell = d.vertical[static_cast<std::size_t>(2 * i)];
    DualCycle& seam = d.vertical[static_cast<std::size_t>(2 * i + 1)];
    for (int j = 0; j < g.n(); ++j) {
      in_cell.crossings.push_back({g.edge_id(i, j, 0), +1});
      seam.crossings.push_back({g.edge_id(i, j, 1), +1});
    }
  }
  return d;
}

void write_graph(std::ostream& os, const TorusGraph& g) {
  static const char* kType[] = {"I", "II", "III"};
  os << g.m() << ' ' << g.n() << '\n';
  for (int id = 0; id < g.num_edges(); ++id) {
    const Edge& e = g.edges()[static_cast<std::size_t>(id)];
    os << id << ' ' << e.white << ' ' << e.black << ' '
       << kType[static_cast<int>(e.type)] << ' ' << e.h << ' ' << e.v << '\n';
  }
}

}  // namespace dimerwind
