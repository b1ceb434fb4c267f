#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dimerwind/log_product.hpp"
#include "dimerwind/winding_table.hpp"

namespace dimerwind {

// The limiting winding-number law: P[(k,l)] proportional to
// e^{-pi(k^2/rho + rho l^2)/2} on the lattice truncated to [-K, K]^2.
struct DiscreteGaussianLaw {
  double rho = 0.0;
  int truncation = 0;
  double z_rho = 0.0;
  std::map<std::pair<int, int>, double> probabilities;

  double prob(int k, int l) const;
};

// K is chosen so the Gaussian tail outside [-K, K]^2 stays below eps;
// min_radius lets callers widen the support (e.g. to cover a finite-size
// table before a total-variation comparison).
DiscreteGaussianLaw law(double rho, double eps = 1e-12, int min_radius = 0);

// (1/Z_rho) sum e^{-pi(alpha k + beta l)} e^{-pi(k^2/rho + rho l^2)/2}.
double limit_mgf(double alpha, double beta, double rho);

// The full asymptotic form of the perturbed partition function:
// (-1)^{mn} e^{-pi n alpha/3} e^{-mn f} e^{pi rho/6} / (sqrt(2 rho) P(q)^2)
//   * sum e^{pi(alpha k + beta l)} e^{-pi(k^2/rho + rho l^2)/2},
// with rho = n/(sqrt 3 m), q = e^{-rho pi}, f supplied by the caller.
LogProduct<double> asymptotic_prediction(double alpha, double beta, int m, int n,
                                         double f);

// Half the L1 distance between the table's empirical law and the truncated
// limit law. The law must cover the table support.
double tv_distance(const WindingTable& table, const DiscreteGaussianLaw& lw);

struct ConvergenceEntry {
  int m = 0;
  int n = 0;
  double rho = 0.0;
  double tv = 0.0;
  double mgf_gap_max = 0.0;
  double prediction_ratio = 0.0;  // emitted as "theorem4_ratio"
  std::string table_path;
};

struct ConvergenceReport {
  double rho_target = 0.0;
  std::vector<ConvergenceEntry> entries;
};

// Per size: exact winding table by transform extraction, total-variation
// distance to the law at the exact finite-size modulus ratio, max MGF gap
// over (alpha, beta) in {-1, 0, 1}^2, and the prediction ratio at (0, 0).
// Writes one CSV per size under out_dir when it is nonempty.
ConvergenceReport convergence_report(double rho_target,
                                     const std::vector<std::pair<int, int>>& sizes,
                                     unsigned digits = 0,
                                     const std::string& out_dir = {});

}  // namespace dimerwind
