#pragma once

#include <cmath>
#include <complex>
#include <utility>

namespace dimerwind {

// Minimal complex value over a generic real type. Works with double and
// BigFloat alike; math functions resolve via ADL (boost::multiprecision)
// or the std:: fallbacks pulled in below.
template <class R>
struct Cx {
  R re{};
  R im{};

  Cx() = default;
  Cx(R r) : re(std::move(r)) {}
  Cx(R r, R i) : re(std::move(r)), im(std::move(i)) {}
};

template <class R>
Cx<R> operator+(const Cx<R>& a, const Cx<R>& b) {
  return {a.re + b.re, a.im + b.im};
}

template <class R>
Cx<R> operator-(const Cx<R>& a, const Cx<R>& b) {
  return {a.re - b.re, a.im - b.im};
}

template <class R>
Cx<R> operator-(const Cx<R>& a) {
  return {-a.re, -a.im};
}

template <class R>
Cx<R> operator*(const Cx<R>& a, const Cx<R>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

template <class R>
Cx<R> operator*(const R& s, const Cx<R>& a) {
  return {s * a.re, s * a.im};
}

// Scaled division (Smith's algorithm), robust for wide magnitude ranges.
template <class R>
Cx<R> operator/(const Cx<R>& a, const Cx<R>& b) {
  using std::abs;
  if (abs(b.re) >= abs(b.im)) {
    R r = b.im / b.re;
    R d = b.re + b.im * r;
    return {(a.re + a.im * r) / d, (a.im - a.re * r) / d};
  }
  R r = b.re / b.im;
  R d = b.im + b.re * r;
  return {(a.re * r + a.im) / d, (a.im * r - a.re) / d};
}

template <class R>
Cx<R> conj(const Cx<R>& a) {
  return {a.re, -a.im};
}

template <class R>
R abs_sq(const Cx<R>& a) {
  return a.re * a.re + a.im * a.im;
}

template <class R>
R cx_abs(const Cx<R>& a) {
  using std::hypot;
  return hypot(a.re, a.im);
}

template <class R>
R cx_arg(const Cx<R>& a) {
  using std::atan2;
  return atan2(a.im, a.re);
}

// e^{i t}
template <class R>
Cx<R> cis(const R& t) {
  using std::cos;
  using std::sin;
  return {cos(t), sin(t)};
}

template <class R>
Cx<R> cx_exp(const Cx<R>& a) {
  using std::exp;
  R mag = exp(a.re);
  return mag * cis(a.im);
}

// pi at the working precision of R.
template <class R>
R const_pi() {
  using std::atan;
  return 4 * atan(R(1));
}

inline std::complex<double> to_std(const Cx<double>& a) { return {a.re, a.im}; }
inline Cx<double> from_std(const std::complex<double>& a) { return {a.real(), a.imag()}; }

}  // namespace dimerwind
