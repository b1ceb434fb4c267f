#pragma once

#include <string>

#include "dimerwind/honeycomb.hpp"
#include "dimerwind/limitlaw.hpp"
#include "dimerwind/winding_table.hpp"

namespace dimerwind {

std::string table_csv(const WindingTable& t);

// {"m":, "n":, "total":, "entries":[{"k":, "l":, "count":}, ...]} with counts
// emitted as JSON numbers while exactly representable in 53 bits and as
// decimal strings beyond that.
std::string table_json(const WindingTable& t);

std::string graph_text(const TorusGraph& g);

// {"rho_target":, "entries":[{"m":, "n":, "rho":, "tv":, "mgf_gap_max":,
//  "theorem4_ratio":, "table_path":}, ...]}
std::string report_json(const ConvergenceReport& r);

}  // namespace dimerwind
