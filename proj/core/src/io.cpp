#include "dimerwind/io.hpp"

#include <sstream>

#include <json.hpp>

namespace dimerwind {

namespace {

using ordered_json = nlohmann::ordered_json;

// Counts survive serialization exactly: plain number while within 53 bits,
// decimal string beyond.
ordered_json count_json(const BigInt& c) {
  static const BigInt kMaxExact = (BigInt(1) << 53);
  if (c <= kMaxExact) return c.convert_to<std::int64_t>();
  return c.str();
}

}  // namespace

std::string table_csv(const WindingTable& t) {
  std::ostringstream os;
  write_table_csv(os, t);
  return os.str();
}

std::string table_json(const WindingTable& t) {
  ordered_json j;
  j["m"] = t.m;
  j["n"] = t.n;
  j["total"] = count_json(t.total());
  ordered_json entries = ordered_json::array();
  for (const auto& [kl, c] : t.counts) {
    ordered_json e;
    e["k"] = kl.first;
    e["l"] = kl.second;
    e["count"] = count_json(c);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j.dump(2);
}

std::string graph_text(const TorusGraph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

std::string report_json(const ConvergenceReport& r) {
  ordered_json j;
  j["rho_target"] = r.rho_target;
  ordered_json entries = ordered_json::array();
  for (const ConvergenceEntry& e : r.entries) {
    ordered_json row;
    row["m"] = e.m;
    row["n"] = e.n;
    row["rho"] = e.rho;
    row["tv"] = e.tv;
    row["mgf_gap_max"] = e.mgf_gap_max;
    row["theorem4_ratio"] = e.prediction_ratio;
    row["table_path"] = e.table_path;
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j.dump(2);
}

}  // namespace dimerwind
