#pragma once

#include <array>
#include <complex>

#include "dimerwind/log_product.hpp"

namespace dimerwind {

// The reciprocal pair r1, r2 solving r + 1/r = e^{i phi} - 2, with r1 picked
// by Im r1 > 0 on Re phi in (-pi, pi) and continued analytically to
// Re phi in [-pi, 3pi]. log_r1 carries the analytic argument in (0, 2pi),
// which lies in (pi/2, 3pi/2) wherever Re r1 < 0.
struct BranchedRoot {
  std::complex<double> phi;
  std::complex<double> r1;
  std::complex<double> r2;
  std::complex<double> log_r1;
};

// Strip half-width for Im phi; comfortably below the branch point at log 4.
inline constexpr double kStripHalfWidth = 1.0;

BranchedRoot roots(std::complex<double> phi);

// |arg r1(phi + 2pi) + arg r1(phi) - 2pi|; zero up to roundoff on the strip.
double arg_shift_check(std::complex<double> phi);

// (prod_{j=0}^{m-1} r1(pi(i alpha + 2j + 1)/m))^n — the two odd-frequency
// bulk products merged into one, which is where the partition blocks grow
// like e^{-mn f}.
LogProduct<double> lambda_product(double alpha, int m, int n);

// (prod_{j=1}^{m-1} r1(pi(i alpha + 2j)/m))^n, the even-frequency grid with
// j = 0 excluded.
LogProduct<double> gamma_product(double alpha, int m, int n);

enum class Block { s00, s01, s10, s11 };

// Finite-size block over its bulk product next to the theta-function value
// it approaches: finite = (-1)^{mn} Z^{(sigma eta)} / (Lambda or Gamma),
// limit = the matching theta expression at zeta = pi/2 (rho alpha + i beta),
// q = e^{-rho pi}, rho = n/(sqrt 3 m).
struct RatioCheck {
  double finite;
  double limit;
};

RatioCheck block_limit_check(Block which, double alpha, double beta, int m, int n);

enum class FreeEnergyMethod { double_integral, log_r1_integral };

struct FreeEnergy {
  double value;
  FreeEnergyMethod method;
  double estimated_error;
};

// Free energy per fundamental domain by adaptive Gauss-Legendre quadrature:
// either -(1/4 pi^2) int int log|2(cos psi + 1) - e^{i phi}| or the 1-D
// reduction -(1/2 pi) int_0^{2pi} log r1 (real part reported).
FreeEnergy free_energy(FreeEnergyMethod method, double tol);

// Near-zero-frequency partial products against their theta-ratio targets and
// the four decaying tail products (which approach 1). J = floor(m^{1/4}).
struct PartialProductReport {
  std::complex<double> head_r1;         // -> theta3(conj zeta, q)/P(q)
  std::complex<double> head_r1_target;
  std::complex<double> head_r2;         // -> theta3(zeta, q)/P(q)
  std::complex<double> head_r2_target;
  std::array<std::complex<double>, 4> tails;  // -> 1
};

PartialProductReport partial_product_report(double alpha, double beta, int m, int n);

}  // namespace dimerwind
