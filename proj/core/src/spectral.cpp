#include "dimerwind/spectral.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dimerwind/errors.hpp"
#include "dimerwind/kasteleyn.hpp"
#include "dimerwind/theta.hpp"

namespace dimerwind {

namespace {

using cxd = std::complex<double>;
constexpr double kPi = std::numbers::pi;

void check_strip(cxd phi) {
  const double tol = 1e-12;
  if (phi.real() < -kPi - tol || phi.real() > 3.0 * kPi + tol ||
      std::abs(phi.imag()) > kStripHalfWidth + tol) {
    throw std::invalid_argument("phi outside the root strip");
  }
}

// Analytic argument in (0, 2pi), pinned by arg r1(0) = 2pi/3. r1 never
// touches the positive real axis on the strip, so lifting negative
// principal arguments by 2pi is the analytic branch; it stays in
// (pi/2, 3pi/2) wherever Re r1 < 0 and slides into the outer quarters only
// in the lenses near Re phi = 0 mod 2pi with |Im phi| > log 2.
double analytic_arg(cxd r) {
  const double a = std::arg(r);
  return a < 0.0 ? a + 2.0 * kPi : a;
}

}  // namespace

BranchedRoot roots(cxd phi) {
  check_strip(phi);
  if (phi.real() > kPi) {
    BranchedRoot base = roots(phi - 2.0 * kPi);
    BranchedRoot out;
    out.phi = phi;
    out.r1 = 1.0 / base.r1;
    out.r2 = base.r1;
    out.log_r1 = cxd(std::log(std::abs(out.r1)), analytic_arg(out.r1));
    return out;
  }

  const cxd c = std::exp(cxd(0.0, 1.0) * phi) * 0.5 - 1.0;  // (e^{i phi} - 2)/2
  const cxd s = std::sqrt(c * c - 1.0);
  cxd big = c + s;
  if (std::abs(big) < std::abs(c - s)) big = c - s;  // avoid cancellation
  cxd other = 1.0 / big;

  cxd r1;
  const double im_scale = std::max(std::abs(big.imag()), std::abs(other.imag()));
  if (im_scale > 1e-12 * std::abs(big)) {
    r1 = big.imag() > 0.0 ? big : other;
  } else {
    // Real roots occur only at Re phi = +-pi: continuity from the interior
    // picks |r1| > 1 at +pi and |r1| < 1 at -pi.
    r1 = phi.real() > 0.0 ? big : other;
  }
  BranchedRoot out;
  out.phi = phi;
  out.r1 = r1;
  out.r2 = 1.0 / r1;
  out.log_r1 = cxd(std::log(std::abs(r1)), analytic_arg(r1));
  return out;
}

double arg_shift_check(cxd phi) {
  const double a = roots(phi).log_r1.imag();
  const double b = roots(phi + 2.0 * kPi).log_r1.imag();
  return std::abs(a + b - 2.0 * kPi);
}

LogProduct<double> lambda_product(double alpha, int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("lambda product needs m, n >= 1");
  double log_mag = 0.0;
  double phase = 0.0;
  for (int j = 0; j < m; ++j) {
    const cxd phi = kPi * cxd(2.0 * j + 1.0, alpha) / static_cast<double>(m);
    const cxd lr = roots(phi).log_r1;
    log_mag += lr.real();
    phase += lr.imag();
  }
  return LogProduct<double>::from_parts(n * log_mag, n * phase);
}

LogProduct<double> gamma_product(double alpha, int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("gamma product needs m, n >= 1");
  double log_mag = 0.0;
  double phase = 0.0;
  for (int j = 1; j < m; ++j) {
    const cxd phi = kPi * cxd(2.0 * j, alpha) / static_cast<double>(m);
    const cxd lr = roots(phi).log_r1;
    log_mag += lr.real();
    phase += lr.imag();
  }
  return LogProduct<double>::from_parts(n * log_mag, n * phase);
}

RatioCheck block_limit_check(Block which, double alpha, double beta, int m, int n) {
  if (m < 2 || n < 2) throw std::invalid_argument("block check needs m, n >= 2");
  const int sigma = (which == Block::s10 || which == Block::s11) ? 1 : 0;
  const int eta = (which == Block::s01 || which == Block::s11) ? 1 : 0;

  const auto p = Perturbation<double>::make(Cx<double>(alpha), Cx<double>(beta), m, n);
  const LogProduct<double> block = block_term(sigma, eta, p);
  const LogProduct<double> denom =
      sigma == 1 ? lambda_product(alpha, m, n) : gamma_product(alpha, m, n);

  RatioCheck out{};
  if (block.is_zero) {
    out.finite = 0.0;
  } else {
    const LogProduct<double> ratio = block / denom;
    const double ph = wrap_phase(ratio.phase + kPi * ((m * n) % 2));
    out.finite = std::exp(ratio.log_mag) * std::cos(ph);
  }

  const double rho = n / (std::sqrt(3.0) * m);
  const double q = std::exp(-rho * kPi);
  const Nome nome = Nome::from_q(q);
  const cxd zeta = kPi / 2.0 * cxd(rho * alpha, beta);
  const cxd pq = euler_p(nome);
  const cxd p2 = pq * pq;
  switch (which) {
    case Block::s11:
      out.limit = (theta(3, zeta, nome) * theta(3, std::conj(zeta), nome) / p2).real();
      break;
    case Block::s10:
      out.limit = (theta(4, zeta, nome) * theta(4, std::conj(zeta), nome) / p2).real();
      break;
    case Block::s01:
      out.limit = (theta(2, zeta, nome) * theta(2, std::conj(zeta), nome) / p2).real() /
                  std::sqrt(q);
      break;
    case Block::s00:
      out.limit = -(theta(1, zeta, nome) * theta(1, std::conj(zeta), nome) / p2).real() /
                  std::sqrt(q);
      break;
  }
  return out;
}

namespace {

// 15-point Gauss-Legendre nodes/weights on [-1, 1], by Newton iteration.
struct GaussRule {
  std::array<double, 15> x{};
  std::array<double, 15> w{};
  GaussRule() {
    const int n = 15;
    for (int i = 0; i < (n + 1) / 2; ++i) {
      double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p1 = 1.0, p2 = 0.0;
        for (int j = 1; j <= n; ++j) {
          double p3 = p2;
          p2 = p1;
          p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
        }
        pp = n * (z * p1 - p2) / (z * z - 1.0);
        double z1 = z;
        z = z1 - p1 / pp;
        if (std::abs(z - z1) < 1e-15) break;
      }
      double p1 = 1.0, p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      x[static_cast<std::size_t>(i)] = -z;
      x[static_cast<std::size_t>(n - 1 - i)] = z;
      w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - z * z) * pp * pp);
      w[static_cast<std::size_t>(n - 1 - i)] = w[static_cast<std::size_t>(i)];
    }
  }
};

const GaussRule& rule() {
  static const GaussRule r;
  return r;
}

double gl_1d(const std::function<double(double)>& f, double a, double b) {
  const GaussRule& r = rule();
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = 0.0;
  for (int i = 0; i < 15; ++i) {
    sum += r.w[static_cast<std::size_t>(i)] * f(mid + half * r.x[static_cast<std::size_t>(i)]);
  }
  return half * sum;
}

double adapt_1d(const std::function<double(double)>& f, double a, double b,
                double tol, int depth, double* err_acc) {
  const double whole = gl_1d(f, a, b);
  const double mid = 0.5 * (a + b);
  const double split = gl_1d(f, a, mid) + gl_1d(f, mid, b);
  const double err = std::abs(whole - split);
  if (err < tol || depth >= 40) {
    *err_acc += err;
    return split;
  }
  return adapt_1d(f, a, mid, tol / 2.0, depth + 1, err_acc) +
         adapt_1d(f, mid, b, tol / 2.0, depth + 1, err_acc);
}

double gl_2d(const std::function<double(double, double)>& f, double ax, double bx,
             double ay, double by) {
  const GaussRule& r = rule();
  const double midx = 0.5 * (ax + bx), halfx = 0.5 * (bx - ax);
  const double midy = 0.5 * (ay + by), halfy = 0.5 * (by - ay);
  double sum = 0.0;
  for (int i = 0; i < 15; ++i) {
    double row = 0.0;
    const double x = midx + halfx * r.x[static_cast<std::size_t>(i)];
    for (int j = 0; j < 15; ++j) {
      row += r.w[static_cast<std::size_t>(j)] * f(x, midy + halfy * r.x[static_cast<std::size_t>(j)]);
    }
    sum += r.w[static_cast<std::size_t>(i)] * row;
  }
  return halfx * halfy * sum;
}

// Local tolerances scale with area; panels that keep missing their budget
// (the log-singular corners) are depth-capped and their defects summed, so
// the caller can judge the total against the requested tolerance.
double adapt_2d(const std::function<double(double, double)>& f, double ax, double bx,
                double ay, double by, double tol, int depth, double* err_acc) {
  const double whole = gl_2d(f, ax, bx, ay, by);
  const double mx = 0.5 * (ax + bx);
  const double my = 0.5 * (ay + by);
  const double split = gl_2d(f, ax, mx, ay, my) + gl_2d(f, mx, bx, ay, my) +
                       gl_2d(f, ax, mx, my, by) + gl_2d(f, mx, bx, my, by);
  const double err = std::abs(whole - split);
  if (err < tol || depth >= 26) {
    *err_acc += err;
    return split;
  }
  return adapt_2d(f, ax, mx, ay, my, tol / 4.0, depth + 1, err_acc) +
         adapt_2d(f, mx, bx, ay, my, tol / 4.0, depth + 1, err_acc) +
         adapt_2d(f, ax, mx, my, by, tol / 4.0, depth + 1, err_acc) +
         adapt_2d(f, mx, bx, my, by, tol / 4.0, depth + 1, err_acc);
}

}  // namespace

FreeEnergy free_energy(FreeEnergyMethod method, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("free energy tolerance must be positive");
  double err = 0.0;
  double value = 0.0;
  if (method == FreeEnergyMethod::log_r1_integral) {
    auto f = [](double phi) { return roots(cxd(phi, 0.0)).log_r1.real(); };
    // Smooth on [0, pi] and [pi, 2pi]; endpoint kinks only.
    const double budget = tol * 2.0 * kPi;
    const double integral = adapt_1d(f, 0.0, kPi, budget / 2.0, 0, &err) +
                            adapt_1d(f, kPi, 2.0 * kPi, budget / 2.0, 0, &err);
    value = -integral / (2.0 * kPi);
    err /= 2.0 * kPi;
  } else {
    auto f = [](double phi, double psi) {
      const double re = 2.0 * (std::cos(psi) + 1.0) - std::cos(phi);
      const double im = -std::sin(phi);
      return 0.5 * std::log(re * re + im * im);
    };
    // The integrand has log zeros at (phi, psi) = (0 or 2pi, 2pi/3 or 4pi/3);
    // panel corners are placed there so refinement stays local.
    const double xs[3] = {0.0, kPi, 2.0 * kPi};
    const double ys[4] = {0.0, 2.0 * kPi / 3.0, 4.0 * kPi / 3.0, 2.0 * kPi};
    const double budget = tol * 4.0 * kPi * kPi;
    double integral = 0.0;
    for (int ix = 0; ix < 2; ++ix) {
      for (int iy = 0; iy < 3; ++iy) {
        integral += adapt_2d(f, xs[ix], xs[ix + 1], ys[iy], ys[iy + 1],
                             budget / 6.0, 0, &err);
      }
    }
    value = -integral / (4.0 * kPi * kPi);
    err /= 4.0 * kPi * kPi;
  }
  if (err > tol) {
    throw PrecisionFailure("free-energy quadrature failed to reach the requested tolerance");
  }
  return FreeEnergy{value, method, err};
}

PartialProductReport partial_product_report(double alpha, double beta, int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("partial products need m, n >= 1");
  const int J = static_cast<int>(std::floor(std::pow(m, 0.25)));
  if (J < 1) throw std::invalid_argument("m too small for the head/tail split");
  const double B = std::exp(kPi * beta);

  auto phi_plus = [&](int j) { return kPi * cxd(2.0 * j + 1.0, alpha) / static_cast<double>(m); };
  auto phi_minus = [&](int j) { return kPi * cxd(-(2.0 * j + 1.0), alpha) / static_cast<double>(m); };
  auto pow_n = [&](cxd logr, int e) { return std::exp(static_cast<double>(e) * logr); };

  PartialProductReport rep{};
  rep.head_r1 = 1.0;
  rep.head_r2 = 1.0;
  for (int j = 0; j < J; ++j) {
    const BranchedRoot plus = roots(phi_plus(j));
    const BranchedRoot minus = roots(phi_minus(j));
    const cxd log_r2_plus = -plus.log_r1;
    const cxd log_r2_minus = -minus.log_r1;
    rep.head_r1 *= (1.0 + pow_n(plus.log_r1, -n) / B) *
                   (1.0 + B * pow_n(minus.log_r1, n));
    rep.head_r2 *= (1.0 + B * pow_n(log_r2_plus, n)) *
                   (1.0 + pow_n(log_r2_minus, -n) / B);
  }

  const double rho = n / (std::sqrt(3.0) * m);
  const Nome nome = Nome::from_q(std::exp(-rho * kPi));
  const cxd zeta = kPi / 2.0 * cxd(rho * alpha, beta);
  const cxd pq = euler_p(nome);
  rep.head_r1_target = theta(3, std::conj(zeta), nome) / pq;
  rep.head_r2_target = theta(3, zeta, nome) / pq;

  rep.tails = {cxd(1.0), cxd(1.0), cxd(1.0), cxd(1.0)};
  for (int j = J; j <= (m - 1) / 2; ++j) {
    const BranchedRoot plus = roots(phi_plus(j));
    rep.tails[0] *= 1.0 + pow_n(plus.log_r1, -n) / B;
    rep.tails[1] *= 1.0 + B * pow_n(-plus.log_r1, n);
  }
  for (int j = J; j <= m / 2 - 1; ++j) {
    const BranchedRoot minus = roots(phi_minus(j));
    rep.tails[2] *= 1.0 + B * pow_n(minus.log_r1, n);
    rep.tails[3] *= 1.0 + pow_n(-minus.log_r1, -n) / B;
  }
  return rep;
}

}  // namespace dimerwind
