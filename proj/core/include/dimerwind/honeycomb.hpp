#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace dimerwind {

enum class EdgeType : std::uint8_t { I = 0, II = 1, III = 2 };

enum class Sublattice : std::uint8_t { w1 = 0, b1 = 1, w2 = 2, b2 = 3 };

inline bool is_white(Sublattice s) {
  return s == Sublattice::w1 || s == Sublattice::w2;
}

struct Vertex {
  int cell_i;
  int cell_j;
  Sublattice sub;
};

// (h, v) are the signed crossings of the two cut cycles when the edge is
// traversed white -> black; nonzero only on edges wrapping a torus seam.
struct Edge {
  int white;
  int black;
  EdgeType type;
  int h;
  int v;
};

// Oriented boundary of a hexagonal face: (edge id, true if the boundary walk
// traverses the edge white -> black).
struct Face {
  std::vector<std::pair<int, bool>> steps;
};

// Quotient of the honeycomb lattice by the translations m*x and n*y.
// Each cell (i, j) holds sublattices {w1, b1, w2, b2} wired so that the
// Fourier-transformed weighted adjacency block is
//     [ 1/b + b/w   a        ]
//     [ a z         b + w/b  ]
// i.e. per cell: two type-I edges (w1-b2 in cell, w2-b1 one cell right),
// a type-II and a type-III edge on each of w1-b1 / w2-b2 (one of the pair
// shifted one cell in the n-direction). Degree is 3, one edge of each type
// at every vertex.
class TorusGraph {
 public:
  static TorusGraph build(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  int num_vertices() const { return 4 * m_ * n_; }
  int num_edges() const { return 6 * m_ * n_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  int cell_index(int i, int j) const;  // indices wrap mod (m, n)
  int vertex_id(int i, int j, Sublattice s) const;

  // Edge slots within cell (i, j), fixed order:
  //   0: I   w1(i,j) - b2(i,j)
  //   1: I   w2(i,j) - b1(i+1,j)
  //   2: II  w1(i,j) - b1(i,j)
  //   3: II  w2(i,j) - b2(i,j+1)
  //   4: III w1(i,j) - b1(i,j-1)
  //   5: III w2(i,j) - b2(i,j)
  int edge_id(int i, int j, int slot) const;

  // Incident edges of a vertex, indexed by EdgeType.
  const std::array<int, 3>& incident(int vertex) const {
    return incident_[static_cast<std::size_t>(vertex)];
  }

  // The 2mn hexagonal faces, each a closed 6-step walk.
  std::vector<Face> faces() const;

  // Torus modulus i*n/(sqrt(3) m): exact ratio (n, m) reduced, and its value.
  std::pair<int, int> modulus_ratio() const;
  double rho() const;

 private:
  TorusGraph() = default;
  int m_ = 0;
  int n_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::array<int, 3>> incident_;
};

// A perfect matching stored as a sorted set of edge ids, tagged with the
// graph dimensions so mismatched-graph use fails loudly.
class Matching {
 public:
  Matching(int m, int n, std::vector<int> edge_ids);
  const std::vector<int>& edge_ids() const { return edge_ids_; }
  bool contains(int edge) const;
  int m() const { return m_; }
  int n() const { return n_; }

 private:
  int m_;
  int n_;
  std::vector<int> edge_ids_;
};

// The translation-invariant reference matching with balanced edge types
// N_I = N_II = N_III = 2mn/3. Requires n divisible by 3.
Matching reference_matching(const TorusGraph& g);

struct DualCycle {
  // (edge id, crossing sign when the edge is traversed white -> black)
  std::vector<std::pair<int, int>> crossings;
};

// 2n left-to-right cycles of the dual graph (each crossing m type-II edges
// with sign +1 and m type-III edges with sign -1) and 2m top-to-bottom
// cycles (each crossing n type-I edges with sign +1).
struct DualPaths {
  std::vector<DualCycle> horizontal;
  std::vector<DualCycle> vertical;
};

DualPaths dual_paths(const TorusGraph& g);

// Line format: header "m n", then one edge per line
// "edge_id white_id black_id type h v" with type in {I, II, III}.
void write_graph(std::ostream& os, const TorusGraph& g);

}  // namespace dimerwind
