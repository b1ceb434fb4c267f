#include "dimerwind/winding_table.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace dimerwind {

void WindingTable::add(int k, int l, BigInt c) {
  if (c <= 0) {
    throw std::invalid_argument("winding table counts must be positive");
  }
  if (k < k_min() || k > k_max() || l < l_min() || l > l_max()) {
    throw std::invalid_argument("winding class (" + std::to_string(k) + "," +
                                std::to_string(l) + ") outside support bounds");
  }
  counts[{k, l}] += c;
}

BigInt WindingTable::total() const {
  BigInt t = 0;
  for (const auto& [kl, c] : counts) t += c;
  return t;
}

BigInt WindingTable::count(int k, int l) const {
  auto it = counts.find({k, l});
  return it == counts.end() ? BigInt(0) : it->second;
}

double WindingTable::probability(int k, int l) const {
  BigFloat p = BigFloat(count(k, l)) / BigFloat(total());
  return p.convert_to<double>();
}

double WindingTable::mgf(double alpha, double beta) const {
  const double pi = 3.14159265358979323846;
  double num = 0;
  BigFloat tot(total());
  for (const auto& [kl, c] : counts) {
    double p = (BigFloat(c) / tot).convert_to<double>();
    num += p * std::exp(-pi * (alpha * kl.first + beta * kl.second));
  }
  return num;
}

BigFloat WindingTable::mgf_big(const BigFloat& alpha, const BigFloat& beta) const {
  const BigFloat pi = 4 * atan(BigFloat(1));
  BigFloat num = 0;
  for (const auto& [kl, c] : counts) {
    num += BigFloat(c) * exp(-pi * (alpha * kl.first + beta * kl.second));
  }
  return num / BigFloat(total());
}

void write_table_csv(std::ostream& os, const WindingTable& t) {
  os << "k,l,count\n";
  for (const auto& [kl, c] : t.counts) {
    os << kl.first << ',' << kl.second << ',' << c.str() << '\n';
  }
}

WindingTable read_table_csv(std::istream& is, int m, int n) {
  WindingTable t(m, n);
  std::string line;
  if (!std::getline(is, line) || line != "k,l,count") {
    throw std::invalid_argument("winding table CSV must start with 'k,l,count'");
  }
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string k, l, c;
    if (!std::getline(row, k, ',') || !std::getline(row, l, ',') ||
        !std::getline(row, c)) {
      throw std::invalid_argument("malformed winding table row: " + line);
    }
    t.add(std::stoi(k), std::stoi(l), BigInt(c));
  }
  return t;
}

}  // namespace dimerwind
