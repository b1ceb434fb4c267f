#include "dimerwind/limitlaw.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "dimerwind/kasteleyn.hpp"
#include "dimerwind/spectral.hpp"
#include "dimerwind/theta.hpp"

namespace dimerwind {

namespace {

constexpr double kPi = std::numbers::pi;

double weight(double rho, int k, int l) {
  return std::exp(-kPi * (k * static_cast<double>(k) / rho + rho * l * static_cast<double>(l)) / 2.0);
}

}  // namespace

double DiscreteGaussianLaw::prob(int k, int l) const {
  auto it = probabilities.find({k, l});
  return it == probabilities.end() ? 0.0 : it->second;
}

DiscreteGaussianLaw law(double rho, double eps, int min_radius) {
  if (rho <= 0.0 || eps <= 0.0) {
    throw std::invalid_argument("law requires rho > 0 and eps > 0");
  }
  int radius = static_cast<int>(
      std::ceil(std::sqrt(2.0 * std::max(rho, 1.0 / rho) * std::abs(std::log(eps)) / kPi))) + 1;
  radius = std::max(radius, min_radius);

  DiscreteGaussianLaw lw;
  lw.rho = rho;
  lw.truncation = radius;
  for (int k = -radius; k <= radius; ++k) {
    for (int l = -radius; l <= radius; ++l) {
      lw.z_rho += weight(rho, k, l);
    }
  }
  for (int k = -radius; k <= radius; ++k) {
    for (int l = -radius; l <= radius; ++l) {
      lw.probabilities[{k, l}] = weight(rho, k, l) / lw.z_rho;
    }
  }
  return lw;
}

double limit_mgf(double alpha, double beta, double rho) {
  if (rho <= 0.0) throw std::invalid_argument("limit_mgf requires rho > 0");
  const double num = gaussian_exp_sum(-kPi * alpha, kPi / (2.0 * rho)) *
                     gaussian_exp_sum(-kPi * beta, kPi * rho / 2.0);
  const double den = gaussian_exp_sum(0.0, kPi / (2.0 * rho)) *
                     gaussian_exp_sum(0.0, kPi * rho / 2.0);
  return num / den;
}

LogProduct<double> asymptotic_prediction(double alpha, double beta, int m, int n,
                                         double f) {
  if (m < 1 || n < 1) throw std::invalid_argument("prediction needs m, n >= 1");
  const double rho = n / (std::sqrt(3.0) * m);
  const double q = std::exp(-rho * kPi);
  const double pq = euler_p(Nome::from_q(q)).real();
  const double lattice = gaussian_exp_sum(kPi * alpha, kPi / (2.0 * rho)) *
                         gaussian_exp_sum(kPi * beta, kPi * rho / 2.0);
  const double log_mag = -kPi * n * alpha / 3.0 - m * n * f + kPi * rho / 6.0 -
                         0.5 * std::log(2.0 * rho) - 2.0 * std::log(pq) +
                         std::log(lattice);
  const double phase = (static_cast<long>(m) * n % 2 == 0) ? 0.0 : kPi;
  return LogProduct<double>::from_parts(log_mag, phase);
}

double tv_distance(const WindingTable& table, const DiscreteGaussianLaw& lw) {
  const int need = std::max(
      {std::abs(table.k_min()), std::abs(table.k_max()), std::abs(table.l_min()),
       std::abs(table.l_max())});
  if (lw.truncation < need) {
    throw std::invalid_argument(
        "law truncation " + std::to_string(lw.truncation) +
        " does not cover the table support radius " + std::to_string(need));
  }
  const BigFloat total(table.total());
  double acc = 0.0;
  for (const auto& [kl, p] : lw.probabilities) {
    const double pt = (BigFloat(table.count(kl.first, kl.second)) / total).convert_to<double>();
    acc += std::abs(pt - p);
  }
  return acc / 2.0;
}

ConvergenceReport convergence_report(double rho_target,
                                     const std::vector<std::pair<int, int>>& sizes,
                                     unsigned digits,
                                     const std::string& out_dir) {
  if (rho_target <= 0.0) throw std::invalid_argument("rho_target must be positive");
  for (const auto& [m, n] : sizes) {
    if (n % 3 != 0) {
      throw std::invalid_argument("convergence sizes need n divisible by 3");
    }
    const double rho = n / (std::sqrt(3.0) * m);
    if (std::abs(rho / rho_target - 1.0) > 0.2) {
      throw std::invalid_argument("size (" + std::to_string(m) + "," +
                                  std::to_string(n) +
                                  ") is more than 20% off the target modulus ratio");
    }
  }

  const double f = free_energy(FreeEnergyMethod::log_r1_integral, 1e-10).value;

  ConvergenceReport report;
  report.rho_target = rho_target;
  for (const auto& [m, n] : sizes) {
    ConvergenceEntry e;
    e.m = m;
    e.n = n;
    e.rho = n / (std::sqrt(3.0) * m);

    const WindingTable table = extract_winding_counts(m, n, digits);
    const int support = std::max({std::abs(table.k_min()), std::abs(table.k_max()),
                                  std::abs(table.l_min()), std::abs(table.l_max())});
    const DiscreteGaussianLaw lw = law(e.rho, 1e-12, support);
    e.tv = tv_distance(table, lw);

    double gap = 0.0;
    for (int a = -1; a <= 1; ++a) {
      for (int b = -1; b <= 1; ++b) {
        gap = std::max(gap, std::abs(table.mgf(a, b) - limit_mgf(a, b, e.rho)));
      }
    }
    e.mgf_gap_max = gap;

    const auto p0 = Perturbation<double>::make(Cx<double>(0.0), Cx<double>(0.0), m, n);
    const LogProduct<double> z = partition(p0);
    const LogProduct<double> pred = asymptotic_prediction(0.0, 0.0, m, n, f);
    const double sign = std::cos(wrap_phase(z.phase - pred.phase)) < 0.0 ? -1.0 : 1.0;
    e.prediction_ratio = sign * std::exp(z.log_mag - pred.log_mag);

    if (!out_dir.empty()) {
      std::filesystem::create_directories(out_dir);
      const std::string path = out_dir + "/winding_" + std::to_string(m) + "x" +
                               std::to_string(n) + ".csv";
      std::ofstream os(path);
      if (!os) throw std::runtime_error("cannot write " + path);
      write_table_csv(os, table);
      e.table_path = path;
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace dimerwind
