#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "dimerwind/cx.hpp"
#include "dimerwind/log_product.hpp"
#include "dimerwind/winding_table.hpp"

namespace dimerwind {

// Exact phase e^{2 pi i num/den}, used to decide factor zeros exactly.
struct UnitPhase {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

// Perturbed edge weights a = e^{-alpha pi/(2m)} on type I, 1/b and b with
// b = e^{beta pi/(2n)} on types II and III, plus A = e^{alpha pi} and
// B = e^{beta pi}. When a^2 and b^2 are exact roots of unity (alpha, beta
// purely imaginary rationals, including the uniform point alpha = beta = 0)
// the phases are kept as integer fractions so that vanishing factors of the
// spectral curve are detected exactly instead of by thresholding.
template <class R>
struct Perturbation {
  Cx<R> alpha, beta;
  Cx<R> a, b, A, B;
  int m = 0;
  int n = 0;
  bool unit = false;
  UnitPhase a2_phase, b2_phase;

  static Perturbation make(const Cx<R>& alpha, const Cx<R>& beta, int m, int n);
  // alpha = -2iu/NA, beta = -2iv/NB, so that (e^{-pi alpha}, e^{-pi beta})
  // runs over the NA x NB grid of roots of unity used by the extraction.
  static Perturbation roots_of_unity(int u, int NA, int v, int NB, int m, int n);
};

// P(z, w) = w/b^2 + b^2/w + 2 - a^2 z, the determinant of the 2x2
// weighted adjacency block of the fundamental domain.
template <class R>
Cx<R> charpoly(const Cx<R>& z, const Cx<R>& w, const Perturbation<R>& p);

// prod_{z^m = (-1)^sigma} prod_{w^n = (-1)^eta} P(z, w) in log form, with an
// exact zero flag whenever a grid factor vanishes.
template <class R>
LogProduct<R> block_term(int sigma, int eta, const Perturbation<R>& p);

// Z_{m,n}(alpha, beta) = ((-1)^n (-Z00 + Z01) + Z10 + Z11) / 2, combined by
// shifting the four terms to a common exponent before signed summation.
template <class R>
LogProduct<R> partition(const Perturbation<R>& p);

// e^{pi alpha n/3} Z(alpha, beta) / Z(0, 0), the winding-number moment
// generating function, for real alpha, beta.
template <class R>
R mgf(const R& alpha, const R& beta, int m, int n);

// Exact winding counts by evaluating e^{pi alpha n/3} Z(alpha, beta) on a
// grid of unit-modulus perturbations and inverting the finite Fourier sum.
// digits = 0 picks a precision from the size; any coefficient farther than
// 1e-3 from an integer raises PrecisionFailure rather than rounding quietly.
WindingTable extract_winding_counts(int m, int n, unsigned digits = 0);

// ---- implementation ----

template <class R>
Perturbation<R> Perturbation<R>::make(const Cx<R>& alpha, const Cx<R>& beta,
                                      int m, int n) {
  Perturbation<R> p;
  p.alpha = alpha;
  p.beta = beta;
  p.m = m;
  p.n = n;
  const R pi = const_pi<R>();
  p.a = cx_exp(R(-1) / R(2 * m) * (pi * alpha));
  p.b = cx_exp(R(1) / R(2 * n) * (pi * beta));
  p.A = cx_exp(pi * alpha);
  p.B = cx_exp(pi * beta);
  if (alpha.re == 0 && alpha.im == 0 && beta.re == 0 && beta.im == 0) {
    p.unit = true;
    p.a2_phase = {0, 1};
    p.b2_phase = {0, 1};
  }
  return p;
}

template <class R>
Perturbation<R> Perturbation<R>::roots_of_unity(int u, int NA, int v, int NB,
                                                int m, int n) {
  Perturbation<R> p;
  const R pi = const_pi<R>();
  const R two = 2;
  p.alpha = Cx<R>(R(0), -two * u / R(NA));
  p.beta = Cx<R>(R(0), -two * v / R(NB));
  p.m = m;
  p.n = n;
  p.a = cis(pi * u / R(static_cast<std::int64_t>(NA) * m));
  p.b = cis(-pi * v / R(static_cast<std::int64_t>(NB) * n));
  p.A = cis(-2 * pi * u / R(NA));
  p.B = cis(-2 * pi * v / R(NB));
  p.unit = true;
  p.a2_phase = {u, static_cast<std::int64_t>(NA) * m};
  p.b2_phase = {-v, static_cast<std::int64_t>(NB) * n};
  return p;
}

template <class R>
Cx<R> charpoly(const Cx<R>& z, const Cx<R>& w, const Perturbation<R>& p) {
  const Cx<R> b2 = p.b * p.b;
  const Cx<R> a2 = p.a * p.a;
  return w / b2 + b2 / w + Cx<R>(R(2)) - a2 * z;
}

namespace detail {

inline std::int64_t mod_pos(std::int64_t x, std::int64_t mod) {
  std::int64_t r = x % mod;
  return r < 0 ? r + mod : r;
}

// On a unit-modulus grid, P(z, w) = 2 Re(w/b^2) + 2 - a^2 z vanishes iff
// a^2 z = 1 and w/b^2 = e^{+-2 pi i/3}; both are integer phase conditions.
inline bool unit_factor_vanishes(const UnitPhase& a2, const UnitPhase& b2,
                                 int two_j_sigma, int two_k_eta, int m, int n) {
  const std::int64_t zden = a2.den * 2 * m;
  const std::int64_t znum = mod_pos(a2.num * 2 * m + static_cast<std::int64_t>(two_j_sigma) * a2.den, zden);
  if (znum != 0) return false;
  const std::int64_t wden = b2.den * 2 * n;
  const std::int64_t wnum =
      mod_pos(static_cast<std::int64_t>(two_k_eta) * b2.den - b2.num * 2 * n, wden);
  const std::int64_t x = mod_pos(3 * wnum, 3 * wden);
  return x == wden || x == 2 * wden;
}

}  // namespace detail

template <class R>
LogProduct<R> block_term(int sigma, int eta, const Perturbation<R>& p) {
  using std::log;
  const R pi = const_pi<R>();
  std::vector<Cx<R>> zs(static_cast<std::size_t>(p.m));
  std::vector<Cx<R>> ws(static_cast<std::size_t>(p.n));
  for (int j = 0; j < p.m; ++j) zs[static_cast<std::size_t>(j)] = cis(pi * (2 * j + sigma) / R(p.m));
  for (int k = 0; k < p.n; ++k) ws[static_cast<std::size_t>(k)] = cis(pi * (2 * k + eta) / R(p.n));

  R log_mag(0);
  R phase(0);
  for (int j = 0; j < p.m; ++j) {
    for (int k = 0; k < p.n; ++k) {
      if (p.unit && detail::unit_factor_vanishes(p.a2_phase, p.b2_phase,
                                                 2 * j + sigma, 2 * k + eta,
                                                 p.m, p.n)) {
        return LogProduct<R>::zero();
      }
      const Cx<R> f = charpoly(zs[static_cast<std::size_t>(j)],
                               ws[static_cast<std::size_t>(k)], p);
      log_mag += log(cx_abs(f));
      phase += cx_arg(f);
    }
  }
  return LogProduct<R>::from_parts(log_mag, phase);
}

template <class R>
LogProduct<R> partition(const Perturbation<R>& p) {
  using std::log;
  const int sgn_n = (p.n % 2 == 0) ? 1 : -1;
  std::vector<std::pair<int, LogProduct<R>>> terms;
  terms.push_back({-sgn_n, block_term(0, 0, p)});
  terms.push_back({sgn_n, block_term(0, 1, p)});
  terms.push_back({1, block_term(1, 0, p)});
  terms.push_back({1, block_term(1, 1, p)});
  const R floor_rel = std::numeric_limits<R>::epsilon() * R(1024);
  LogProduct<R> z = signed_sum(terms, floor_rel);
  z.shift_log(-log(R(2)));
  return z;
}

template <class R>
R mgf(const R& alpha, const R& beta, int m, int n) {
  using std::cos;
  using std::exp;
  const R pi = const_pi<R>();
  const auto p = Perturbation<R>::make(Cx<R>(alpha), Cx<R>(beta), m, n);
  const auto p0 = Perturbation<R>::make(Cx<R>(R(0)), Cx<R>(R(0)), m, n);
  const LogProduct<R> z = partition(p);
  const LogProduct<R> z0 = partition(p0);
  R value = exp(pi * alpha * n / R(3) + z.log_mag - z0.log_mag);
  // Both partition values are positive; the phases only carry rounding.
  if (cos(wrap_phase(z.phase - z0.phase)) < 0) value = -value;
  return value;
}

}  // namespace dimerwind
