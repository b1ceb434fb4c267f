#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "dimerwind/cx.hpp"
#include "dimerwind/errors.hpp"

namespace dimerwind {

// Wraps an angle into (-pi, pi].
template <class R>
R wrap_phase(R t) {
  using std::floor;
  const R two_pi = 2 * const_pi<R>();
  t -= two_pi * floor(t / two_pi + R(0.5));
  if (t <= -const_pi<R>()) t += two_pi;
  return t;
}

// A complex value held as (log-magnitude, phase) so that products of
// thousands of factors neither overflow nor underflow. An exact zero is
// carried as a flag, not as log(-inf).
template <class R>
struct LogProduct {
  R log_mag{};
  R phase{};  // in (-pi, pi]
  bool is_zero = false;

  static LogProduct one() { return {}; }
  static LogProduct zero() {
    LogProduct p;
    p.is_zero = true;
    return p;
  }
  static LogProduct from_parts(R lm, R ph) {
    LogProduct p;
    p.log_mag = std::move(lm);
    p.phase = wrap_phase(std::move(ph));
    return p;
  }
  static LogProduct from_value(const Cx<R>& v) {
    using std::log;
    if (v.re == 0 && v.im == 0) return zero();
    LogProduct p;
    p.log_mag = log(cx_abs(v));
    p.phase = cx_arg(v);
    return p;
  }

  // exp(log_mag) may overflow for R = double; callers that need huge values
  // use BigFloat or stay in log form.
  Cx<R> value() const {
    using std::exp;
    if (is_zero) return Cx<R>(R(0));
    return exp(log_mag) * cis(phase);
  }

  LogProduct& operator*=(const LogProduct& o) {
    if (is_zero || o.is_zero) {
      *this = zero();
      return *this;
    }
    log_mag += o.log_mag;
    phase = wrap_phase(phase + o.phase);
    return *this;
  }

  friend LogProduct operator*(LogProduct a, const LogProduct& b) { return a *= b; }

  friend LogProduct operator/(const LogProduct& a, const LogProduct& b) {
    if (a.is_zero) return zero();
    return from_parts(a.log_mag - b.log_mag, a.phase - b.phase);
  }

  LogProduct pow_int(long e) const {
    if (is_zero) return e == 0 ? one() : zero();
    return from_parts(log_mag * R(static_cast<double>(e)), phase * R(static_cast<double>(e)));
  }

  // Multiply by exp(dlm) without touching the phase.
  LogProduct& shift_log(const R& dlm) {
    if (!is_zero) log_mag += dlm;
    return *this;
  }
};

// Signed sum sum_i c_i t_i, evaluated after shifting every term to the
// largest exponent. `min_rel` is the cancellation floor: if the result
// magnitude falls below min_rel times the largest term, the digits left are
// untrustworthy and we fail loudly instead of returning noise.
template <class R>
LogProduct<R> signed_sum(const std::vector<std::pair<int, LogProduct<R>>>& terms,
                         const R& min_rel) {
  using std::exp;
  using std::log;
  bool any = false;
  R top{};
  for (const auto& [c, t] : terms) {
    if (t.is_zero || c == 0) continue;
    if (!any || t.log_mag > top) top = t.log_mag;
    any = true;
  }
  if (!any) return LogProduct<R>::zero();

  Cx<R> acc(R(0));
  for (const auto& [c, t] : terms) {
    if (t.is_zero || c == 0) continue;
    Cx<R> v = exp(t.log_mag - top) * cis(t.phase);
    acc = acc + R(c) * v;
  }
  R mag = cx_abs(acc);
  if (mag == 0 || mag < min_rel) {
    throw PrecisionFailure(
        "catastrophic cancellation in signed sum; rerun at higher precision");
  }
  return LogProduct<R>::from_parts(top + log(mag), cx_arg(acc));
}

}  // namespace dimerwind
