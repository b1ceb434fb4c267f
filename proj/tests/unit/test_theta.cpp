#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "dimerwind/theta.hpp"

using namespace dimerwind;
using cxd = std::complex<double>;

namespace {
constexpr double kPi = std::numbers::pi;

const cxd kSamples[] = {
    {0.31, 0.22}, {-1.17, 0.84}, {2.73, -0.95}, {0.05, -0.41}, {1.44, 1.02},
};
}  // namespace

TEST_CASE("nome validation") {
  CHECK_THROWS_AS(Nome::from_q(cxd(1.0, 0.0)), std::invalid_argument);
  CHECK_THROWS_AS(Nome::from_q(cxd(0.8, 0.8)), std::invalid_argument);
  CHECK_THROWS_AS(Nome::from_tau(cxd(0.5, -0.1)), std::invalid_argument);
  CHECK(std::abs(Nome::from_tau(cxd(0.0, 1.0)).q - std::exp(-kPi)) < 1e-15);
  CHECK_THROWS_AS(theta(5, cxd(0.0), Nome::from_q(0.5)), std::invalid_argument);
}

TEST_CASE("pinned values") {
  for (double q : {0.05, 0.4, 0.8}) {
    CHECK(std::abs(theta(1, cxd(0.0), Nome::from_q(q))) < 1e-14);
    CHECK(std::abs(theta(2, cxd(kPi / 2.0), Nome::from_q(q))) < 1e-14);
  }
  // q -> 0 leaves only the constant term of the third function.
  CHECK(theta(3, cxd(0.7, 0.1), Nome::from_q(1e-12)).real() == doctest::Approx(1.0));
  CHECK(std::abs(theta_product(1, cxd(kPi, 0.0), Nome::from_q(0.3))) < 1e-14);
}

TEST_CASE("series and product evaluations agree") {
  for (double q : {0.1, 0.5, 0.9}) {
    for (const cxd& z : kSamples) {
      for (int i = 1; i <= 4; ++i) {
        const cxd s = theta(i, z, Nome::from_q(q));
        const cxd p = theta_product(i, z, Nome::from_q(q));
        CHECK(std::abs(s - p) / (1.0 + std::abs(s)) < 1e-12);
      }
    }
  }
}

TEST_CASE("series/product agreement at a complex nome") {
  const Nome nome = Nome::from_q(cxd(0.2, 0.35));
  for (int i = 1; i <= 4; ++i) {
    const cxd s = theta(i, kSamples[0], nome);
    const cxd p = theta_product(i, kSamples[0], nome);
    CHECK(std::abs(s - p) / (1.0 + std::abs(s)) < 1e-12);
  }
}

TEST_CASE("parity and pi-periodicity") {
  const Nome nome = Nome::from_q(0.6);
  for (const cxd& z : kSamples) {
    CHECK(std::abs(theta(1, z, nome) + theta(1, -z, nome)) < 1e-12);
    for (int i = 2; i <= 4; ++i) {
      CHECK(std::abs(theta(i, z, nome) - theta(i, -z, nome)) < 1e-12);
    }
    CHECK(std::abs(theta(3, z + kPi, nome) - theta(3, z, nome)) < 1e-12);
    CHECK(std::abs(theta(4, z + kPi, nome) - theta(4, z, nome)) < 1e-12);
    CHECK(std::abs(theta(1, z + kPi, nome) + theta(1, z, nome)) < 1e-12);
    CHECK(std::abs(theta(2, z + kPi, nome) + theta(2, z, nome)) < 1e-12);
  }
}

TEST_CASE("euler product") {
  CHECK(euler_p(Nome::from_q(0.0)).real() == doctest::Approx(1.0));
  for (double q : {0.1, 0.5, 0.9}) {
    const double v = euler_p(Nome::from_q(q)).real();
    CHECK(v > 0.0);
    CHECK(v < 1.0);
  }
  // theta4 at zeta = 0 factors as P(q) prod (1 - q^{2l+1})^2.
  const Nome nome = Nome::from_q(0.45);
  cxd odd = 1.0;
  for (int l = 0; l < 200; ++l) odd *= 1.0 - std::pow(0.45, 2 * l + 1);
  CHECK(std::abs(theta_product(4, cxd(0.0), nome) - euler_p(nome) * odd * odd) < 1e-12);
  // 2 q^{1/4} P^3 equals the product of the three even theta values at 0.
  const Nome qe = Nome::from_q(std::exp(-kPi));
  const cxd pq = euler_p(qe);
  const cxd lhs = 2.0 * std::pow(qe.q, 0.25) * pq * pq * pq;
  const cxd rhs = theta(2, cxd(0.0), qe) * theta(3, cxd(0.0), qe) * theta(4, cxd(0.0), qe);
  CHECK(std::abs(lhs - rhs) < 1e-10);
}

TEST_CASE("modular transform residual") {
  CHECK(theta3_modular_residual(cxd(0.0), cxd(0.0, 1.0)) < 1e-14);
  CHECK(theta3_modular_residual(cxd(0.3, 0.1), cxd(0.0, 2.0)) < 1e-10);
  for (double x : {0.0, 0.3, -0.45, 0.8, 1.2}) {
    for (const cxd s : {cxd(0.0, 0.5), cxd(0.0, 1.0), cxd(0.0, 2.0), cxd(0.3, 1.0),
                        cxd(-0.2, 1.5)}) {
      CHECK(theta3_modular_residual(cxd(x, 0.1), s) < 1e-10);
    }
  }
  CHECK_THROWS_AS(theta3_modular_residual(cxd(0.0), cxd(1.0, 0.0)), std::invalid_argument);
}

TEST_CASE("pair-sum combination: sum side vs closed side") {
  // At zeta = 0, tau = i the first term drops and the sum is the three
  // even squares.
  const Nome qi = Nome::from_q(std::exp(-kPi));
  const cxd direct = theta(2, cxd(0.0), qi) * theta(2, cxd(0.0), qi) +
                     theta(3, cxd(0.0), qi) * theta(3, cxd(0.0), qi) +
                     theta(4, cxd(0.0), qi) * theta(4, cxd(0.0), qi);
  CHECK(std::abs(theta_combination(cxd(0.0), cxd(0.0, 1.0), CombinationSide::sum) -
                 direct) < 1e-12);

  CHECK(std::abs(theta_combination(cxd(0.2, 0.3), cxd(0.0, 1.0), CombinationSide::sum) -
                 theta_combination(cxd(0.2, 0.3), cxd(0.0, 1.0), CombinationSide::closed)) <
        1e-10);
  for (double rho : {0.5, 1.0, 2.0}) {
    for (const cxd& z : kSamples) {
      const cxd s = theta_combination(z, cxd(0.0, rho), CombinationSide::sum);
      const cxd c = theta_combination(z, cxd(0.0, rho), CombinationSide::closed);
      CHECK(std::abs(s - c) / (1.0 + std::abs(s)) < 1e-10);
    }
  }
  CHECK_THROWS_AS(theta_combination(cxd(0.0), cxd(1.0, -0.5), CombinationSide::sum),
                  std::invalid_argument);
}

TEST_CASE("gaussian lattice sum") {
  // alpha = beta = 0 reduces to sqrt(2/rho) times the law normalizer.
  for (double rho : {0.7, 1.0, 1.9}) {
    const double z = gaussian_exp_sum(0.0, kPi / (2.0 * rho)) *
                     gaussian_exp_sum(0.0, kPi * rho / 2.0);
    CHECK(gaussian_lattice_sum(0.0, 0.0, rho) ==
          doctest::Approx(std::sqrt(2.0 / rho) * z).epsilon(1e-13));
  }
  // Symmetric under joint sign flip.
  CHECK(gaussian_lattice_sum(0.37, -0.58, 1.3) ==
        doctest::Approx(gaussian_lattice_sum(-0.37, 0.58, 1.3)).epsilon(1e-13));
  // Equals the theta pair sum at the special point.
  const double a = 0.3, b = -0.4, rho = 1.2;
  const cxd zeta = kPi / 2.0 * cxd(rho * a, b);
  const cxd sum = theta_combination(zeta, cxd(0.0, rho), CombinationSide::sum);
  CHECK(std::abs(sum - cxd(gaussian_lattice_sum(a, b, rho))) < 1e-10);
  CHECK_THROWS_AS(gaussian_lattice_sum(0.0, 0.0, -1.0), std::invalid_argument);
}

TEST_CASE("quasi-periodicity in the tau direction over seeded samples") {
  // theta3(zeta + pi tau, q) = q^{-1} e^{-2 i zeta} theta3(zeta, q) and the
  // fourth function picks up an extra sign; independent of how the series
  // is summed.
  std::mt19937 rng(20240811);
  std::uniform_real_distribution<double> real_part(-2.5, 2.5);
  std::uniform_real_distribution<double> imag_part(-0.8, 0.8);
  std::uniform_real_distribution<double> tau_im(0.4, 2.0);
  for (int trial = 0; trial < 40; ++trial) {
    const cxd zeta(real_part(rng), imag_part(rng));
    const cxd tau(0.3 * real_part(rng), tau_im(rng));
    const Nome nome = Nome::from_tau(tau);
    const cxd q = nome.q;
    const cxd factor = std::exp(cxd(0.0, -2.0) * zeta) / q;
    const cxd shifted3 = theta(3, zeta + kPi * tau, nome);
    const cxd shifted4 = theta(4, zeta + kPi * tau, nome);
    CHECK(std::abs(shifted3 - factor * theta(3, zeta, nome)) /
              (1.0 + std::abs(shifted3)) < 1e-11);
    CHECK(std::abs(shifted4 + factor * theta(4, zeta, nome)) /
              (1.0 + std::abs(shifted4)) < 1e-11);
  }
}

TEST_CASE("term counters are reported") {
  int terms = 0;
  theta(3, cxd(0.1, 0.05), Nome::from_q(0.5), &terms);
  CHECK(terms > 3);
  int pterms = 0;
  theta_product(3, cxd(0.1, 0.05), Nome::from_q(0.5), &pterms);
  CHECK(pterms > 3);
}
