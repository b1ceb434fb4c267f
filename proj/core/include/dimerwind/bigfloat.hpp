#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/mpfr.hpp>

namespace dimerwind {

namespace mp = boost::multiprecision;

// Arbitrary-precision real with runtime-selected precision (decimal digits)
// and exact integer for winding counts, which overflow int64 well before the
// sizes the transform extraction can handle.
using BigFloat = mp::number<mp::mpfr_float_backend<0>, mp::et_off>;
using BigInt = mp::cpp_int;

// Sets the default BigFloat precision for the current scope.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(unsigned digits10)
      : saved_(BigFloat::default_precision()) {
    BigFloat::default_precision(digits10);
  }
  ~ScopedPrecision() { BigFloat::default_precision(saved_); }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned saved_;
};

// Digits so that values of order exp(-mn*f) (|f| < 0.65) keep absolute error
// well below the 1/2 needed for integer snapping, plus inversion headroom.
inline unsigned suggested_digits(int m, int n) {
  unsigned growth = static_cast<unsigned>(0.29 * m * n) + 30;
  return growth < 50 ? 50 : growth;
}

}  // namespace dimerwind
