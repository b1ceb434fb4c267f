#include "dimerwind/theta.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dimerwind/errors.hpp"

namespace dimerwind {

namespace {

using cxd = std::complex<double>;
// Interior series terms can reach ~1e4 with heavy cancellation near
// |q| = 0.9, |Im zeta| = 1; accumulating in 80-bit keeps the final double
// well inside the 1e-12 agreement bound.
using cxl = std::complex<long double>;
constexpr double kPi = std::numbers::pi;
constexpr int kMaxTerms = 100000;

void check_index(int index) {
  if (index < 1 || index > 4) {
    throw std::invalid_argument("theta index must be in 1..4");
  }
}

cxl widen(cxd z) { return {static_cast<long double>(z.real()), static_cast<long double>(z.imag())}; }

cxd narrow(cxl z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }

cxd theta_series(int index, cxd zeta_d, cxd q_d, int* terms_used, double eps) {
  const cxl zeta = widen(zeta_d);
  const cxl q = widen(q_d);
  const cxl i(0.0L, 1.0L);
  const cxl e2 = std::exp(2.0L * i * zeta);
  const cxl e2inv = std::exp(-2.0L * i * zeta);
  const cxl q2 = q * q;

  cxl sum = 0.0L;
  int small_streak = 0;
  int terms = 0;

  if (index == 1 || index == 2) {
    // Half-integer powers: q^{(k+1/2)^2} = q^{1/4} q^{k(k+1)}.
    const long double sgn = index == 1 ? -1.0L : 1.0L;
    cxl up = std::exp(i * zeta);  // e^{(2k+1) i zeta} at k = 0
    cxl down = std::exp(-i * zeta);
    cxl qpow = 1.0L;   // q^{k(k+1)}
    cxl qstep = q2;    // ratio to the next k
    long double parity = 1.0L;
    for (int k = 0; k < kMaxTerms; ++k) {
      // Index 2 pairs k with -(k+1) into up + down; index 1, with the
      // e^{i pi (k - 1/2)} reading of the alternating factor, gives
      // -i (up - down) = 2 sin((2k+1) zeta).
      const cxl pair = index == 2 ? up + down : -i * (up - down);
      const cxl term = parity * qpow * pair;
      sum += term;
      ++terms;
      small_streak = std::abs(term) <= eps * (1.0L + std::abs(sum)) ? small_streak + 1 : 0;
      if (small_streak >= 3) break;
      parity *= sgn;
      qpow *= qstep;
      qstep *= q2;
      up *= e2;
      down *= e2inv;
    }
    sum *= std::pow(q, 0.25L);
  } else {
    const long double sgn = index == 4 ? -1.0L : 1.0L;
    sum = 1.0L;
    cxl up = e2;
    cxl down = e2inv;
    cxl qpow = q;        // q^{k^2}
    cxl qstep = q * q2;  // q^{2k+1}
    long double parity = sgn;
    for (int k = 1; k < kMaxTerms; ++k) {
      const cxl term = parity * qpow * (up + down);
      sum += term;
      ++terms;
      small_streak = std::abs(term) <= eps * (1.0L + std::abs(sum)) ? small_streak + 1 : 0;
      if (small_streak >= 3) break;
      parity *= sgn;
      qpow *= qstep;
      qstep *= q2;
      up *= e2;
      down *= e2inv;
    }
  }
  if (small_streak < 3) {
    throw PrecisionFailure("theta series did not converge");
  }
  if (terms_used) *terms_used = terms;
  return narrow(sum);
}

}  // namespace

Nome Nome::from_q(cxd q) {
  if (std::abs(q) >= 1.0) {
    throw std::invalid_argument("nome requires |q| < 1");
  }
  return Nome{q};
}

Nome Nome::from_tau(cxd tau) {
  if (tau.imag() <= 0.0) {
    throw std::invalid_argument("modular parameter requires Im tau > 0");
  }
  return Nome{std::exp(cxd(0.0, kPi) * tau)};
}

std::complex<double> theta(int index, cxd zeta, const Nome& nome,
                           int* terms_used, double eps) {
  check_index(index);
  return theta_series(index, zeta, nome.q, terms_used, eps);
}

std::complex<double> euler_p(const Nome& nome, double eps) {
  const cxl q2 = widen(nome.q) * widen(nome.q);
  cxl prod = 1.0L;
  cxl qpow = q2;  // q^{2k}
  int small_streak = 0;
  for (int k = 1; k < kMaxTerms; ++k) {
    prod *= 1.0L - qpow;
    small_streak = std::abs(qpow) <= eps ? small_streak + 1 : 0;
    if (small_streak >= 3) return narrow(prod);
    qpow *= q2;
  }
  throw PrecisionFailure("Euler product did not converge");
}

std::complex<double> theta_product(int index, cxd zeta_d, const Nome& nome,
                                   int* terms_used, double eps) {
  check_index(index);
  const cxl zeta = widen(zeta_d);
  const cxl q = widen(nome.q);
  const cxl q2 = q * q;
  const cxl c2 = std::cos(2.0L * zeta);
  const long double sgn = (index == 1 || index == 4) ? -1.0L : 1.0L;

  cxl prod = 1.0L;
  int terms = 0;
  int small_streak = 0;
  // The (1 - q^{2k}) factors and the zeta-dependent factors shrink in
  // lockstep like powers of q^2, so one loop walks both.
  cxl qeven = q2;                        // q^{2k}
  cxl qarg = (index <= 2) ? q2 : q;      // q^{2l} or q^{2l+1}
  for (int k = 1; k < kMaxTerms; ++k) {
    prod *= 1.0L - qeven;
    prod *= 1.0L + qarg * (2.0L * sgn * c2 + qarg);
    ++terms;
    const long double dev =
        std::abs(qeven) + std::abs(qarg) * (2.0L * std::abs(c2) + std::abs(qarg));
    small_streak = dev <= eps ? small_streak + 1 : 0;
    if (small_streak >= 3) break;
    qeven *= q2;
    qarg *= q2;
  }
  if (small_streak < 3) {
    throw PrecisionFailure("theta product did not converge");
  }
  if (terms_used) *terms_used = terms;

  switch (index) {
    case 1: return narrow(2.0L * std::pow(q, 0.25L) * std::sin(zeta) * prod);
    case 2: return narrow(2.0L * std::pow(q, 0.25L) * std::cos(zeta) * prod);
    default: return narrow(prod);
  }
}

double theta3_modular_residual(cxd u, cxd sigma) {
  if (sigma.imag() <= 0.0) {
    throw std::invalid_argument("modular transform requires Im sigma > 0");
  }
  const cxd lhs = theta(3, u, Nome::from_tau(sigma));
  const cxd i(0.0, 1.0);
  const cxd rhs = std::sqrt(i / sigma) * std::exp(-i * u * u / (kPi * sigma)) *
                  theta(3, u / sigma, Nome::from_tau(-1.0 / sigma));
  return std::abs(lhs - rhs);
}

std::complex<double> theta_combination(cxd zeta, cxd tau, CombinationSide side) {
  if (tau.imag() <= 0.0) {
    throw std::invalid_argument("theta combination requires Im tau > 0");
  }
  if (side == CombinationSide::sum) {
    const Nome nome = Nome::from_tau(tau);
    cxd total = 0.0;
    for (int i = 1; i <= 4; ++i) {
      total += theta(i, zeta, nome) * theta(i, std::conj(zeta), nome);
    }
    return total;
  }
  const double x = zeta.real();
  const double y = zeta.imag();
  const cxd i(0.0, 1.0);
  return std::sqrt(2.0 * i / tau) * std::exp(-2.0 * i * x * x / (kPi * tau)) *
         theta(3, x / tau, Nome::from_tau(-1.0 / (2.0 * tau))) *
         theta(3, i * y, Nome::from_tau(tau / 2.0));
}

double gaussian_exp_sum(double linear, double quad, double eps) {
  if (quad <= 0.0) {
    throw std::invalid_argument("gaussian sum requires a positive quadratic coefficient");
  }
  // Terms peak near k* = linear/(2 quad); beyond K the tail is bounded by a
  // geometric series with ratio < e^{-quad}.
  const double kstar = std::abs(linear) / (2.0 * quad);
  const double safety = std::sqrt(std::max(1.0, -std::log(eps / 4.0)) / quad);
  const long radius = static_cast<long>(std::ceil(kstar + safety)) + 2;
  long double sum = 0.0L;
  for (long k = -radius; k <= radius; ++k) {
    sum += std::exp(static_cast<long double>(linear) * k -
                    static_cast<long double>(quad) * k * k);
  }
  return static_cast<double>(sum);
}

double gaussian_lattice_sum(double alpha, double beta, double rho, double eps) {
  if (rho <= 0.0) {
    throw std::invalid_argument("gaussian lattice sum requires rho > 0");
  }
  const double sk = gaussian_exp_sum(kPi * alpha, kPi / (2.0 * rho), eps);
  const double sl = gaussian_exp_sum(kPi * beta, kPi * rho / 2.0, eps);
  return std::sqrt(2.0 / rho) * std::exp(-kPi * alpha * alpha * rho / 2.0) * sk * sl;
}

}  // namespace dimerwind
