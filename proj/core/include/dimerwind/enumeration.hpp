#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "dimerwind/honeycomb.hpp"
#include "dimerwind/winding_table.hpp"

namespace dimerwind {

struct EdgeTypeCounts {
  long type_i = 0;
  long type_ii = 0;
  long type_iii = 0;
};

EdgeTypeCounts count_types(const TorusGraph& g, const Matching& mt);

// One oriented alternating loop of a superimposition. Steps list
// (edge id, true if traversed white -> black); M-edges are traversed
// white -> black, reference edges black -> white.
struct Loop {
  std::vector<std::pair<int, bool>> steps;
  int wind_h = 0;
  int wind_v = 0;
};

struct LoopDecomposition {
  std::vector<int> doubled_edges;
  std::vector<Loop> loops;
};

LoopDecomposition superimpose(const TorusGraph& g, const Matching& m,
                              const Matching& m0);

std::pair<int, int> winding_by_loops(const LoopDecomposition& dec);

// Winding from edge-type counts alone:
//   k = (N_I - 2mn/3) / (2m),  l = (N_II - N_III) / (2n).
// Requires n divisible by 3; a non-exact division means the graph
// conventions are broken and raises logic_error.
std::pair<int, int> winding_by_counts(const TorusGraph& g, const Matching& mt);

// Max 4mn admitted to exhaustive search unless the caller raises the cap.
inline constexpr int kEnumerationCap = 96;

// Deterministic backtracking over the lowest-indexed uncovered vertex.
// The visitor returns false to stop early.
void for_each_matching(const TorusGraph& g,
                       const std::function<bool(const Matching&)>& visit,
                       int cap = kEnumerationCap);

std::uint64_t count_matchings(const TorusGraph& g, int cap = kEnumerationCap);

WindingTable brute_winding_table(const TorusGraph& g, int cap = kEnumerationCap);

}  // namespace dimerwind
