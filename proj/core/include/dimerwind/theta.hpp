#pragma once

#include <complex>

namespace dimerwind {

// Nome q with |q| < 1, optionally tied to a modular parameter tau in the
// upper half plane through q = e^{i pi tau}.
struct Nome {
  std::complex<double> q;
  static Nome from_q(std::complex<double> q);
  static Nome from_tau(std::complex<double> tau);
};

// Default stopping tolerance for the series/product truncations.
inline constexpr double kThetaEps = 1e-14;

// Jacobi theta value by the defining series. The half-odd power (-1)^{k-1/2}
// in the first function is read as e^{i pi (k - 1/2)}, which matches the
// product form 2 q^{1/4} sin(zeta) P(q) ... . Truncation stops after three
// consecutive terms fall below eps * (1 + |partial sum|).
std::complex<double> theta(int index, std::complex<double> zeta, const Nome& q,
                           int* terms_used = nullptr, double eps = kThetaEps);

// The same values by the infinite-product representations.
std::complex<double> theta_product(int index, std::complex<double> zeta,
                                   const Nome& q, int* terms_used = nullptr,
                                   double eps = kThetaEps);

// P(q) = prod_{k>=1} (1 - q^{2k}).
std::complex<double> euler_p(const Nome& q, double eps = kThetaEps);

// |theta3(u | sigma) - sqrt(i/sigma) e^{-i u^2/(pi sigma)}
//     theta3(u/sigma | -1/sigma)|, the modular-transform defect (principal
// square root). Zero up to roundoff for every u, Im sigma > 0.
double theta3_modular_residual(std::complex<double> u, std::complex<double> sigma);

enum class CombinationSide { sum, closed };

// sum_{i=1..4} theta_i(zeta|tau) theta_i(conj zeta|tau), either as the plain
// sum or in the closed form
// sqrt(2i/tau) e^{-2i x^2/(pi tau)} theta3(x/tau | -1/(2 tau))
//     theta3(i y | tau/2)  with zeta = x + i y.
std::complex<double> theta_combination(std::complex<double> zeta,
                                       std::complex<double> tau,
                                       CombinationSide side);

// sum_{k in Z} e^{linear k - quad k^2} with quad > 0, truncated so that the
// discarded Gaussian tail is below eps.
double gaussian_exp_sum(double linear, double quad, double eps = kThetaEps);

// sqrt(2/rho) e^{-pi alpha^2 rho/2}
//     sum_{k,l} A^k B^l e^{-pi(k^2/rho + rho l^2)/2},
// the closed Gaussian form the theta combination takes at
// zeta = pi/2 (rho alpha + i beta), tau = i rho.
double gaussian_lattice_sum(double alpha, double beta, double rho,
                            double eps = kThetaEps);

}  // namespace dimerwind
