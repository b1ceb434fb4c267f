#pragma once

#include <iosfwd>
#include <map>
#include <utility>

#include "dimerwind/bigfloat.hpp"

namespace dimerwind {

// Exact counts C_{k,l} of configurations per winding class (k, l). Only
// nonzero entries are stored; supports are bounded by k in [-n/3, 2n/3]
// and l in [-m, m].
struct WindingTable {
  int m = 0;
  int n = 0;
  std::map<std::pair<int, int>, BigInt> counts;

  WindingTable() = default;
  WindingTable(int m_, int n_) : m(m_), n(n_) {}

  // Rejects entries outside the support bounds and nonpositive counts.
  void add(int k, int l, BigInt c);

  BigInt total() const;
  BigInt count(int k, int l) const;
  double probability(int k, int l) const;

  int k_min() const { return -n / 3; }
  int k_max() const { return 2 * n / 3; }
  int l_min() const { return -m; }
  int l_max() const { return m; }

  // Empirical moment generating function sum C e^{-pi(alpha k + beta l)} / total.
  double mgf(double alpha, double beta) const;
  BigFloat mgf_big(const BigFloat& alpha, const BigFloat& beta) const;

  bool operator==(const WindingTable& o) const = default;
};

// CSV with header "k,l,count", rows ordered by (k, l).
void write_table_csv(std::ostream& os, const WindingTable& t);
WindingTable read_table_csv(std::istream& is, int m, int n);

}  // namespace dimerwind
