#include "dimerwind/kasteleyn.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "dimerwind/bigfloat.hpp"
#include "dimerwind/errors.hpp"

namespace dimerwind {

WindingTable extract_winding_counts(int m, int n, unsigned digits) {
  if (m < 1 || n < 1) throw std::invalid_argument("extract_winding_counts: m, n must be >= 1");
  if (n % 3 != 0) {
    throw std::invalid_argument("winding extraction requires n divisible by 3");
  }
  if (digits == 0) digits = suggested_digits(m, n);
  ScopedPrecision prec(digits);

  // Support k in [-n/3, 2n/3] (n + 1 values), l in [-m, m] (2m + 1 values);
  // grids carry one extra sample beyond the minimum.
  const int NA = n + n / 3 + 1;
  const int NB = 2 * m + 2;
  const BigFloat pi = const_pi<BigFloat>();
  const BigFloat two_pi = 2 * pi;

  std::vector<Cx<BigFloat>> wa(static_cast<std::size_t>(NA));
  std::vector<Cx<BigFloat>> wb(static_cast<std::size_t>(NB));
  for (int t = 0; t < NA; ++t) wa[static_cast<std::size_t>(t)] = cis(-two_pi * t / BigFloat(NA));
  for (int t = 0; t < NB; ++t) wb[static_cast<std::size_t>(t)] = cis(-two_pi * t / BigFloat(NB));

  std::vector<Cx<BigFloat>> grid(static_cast<std::size_t>(NA) * NB);
  for (int u = 0; u < NA; ++u) {
    for (int v = 0; v < NB; ++v) {
      const auto p = Perturbation<BigFloat>::roots_of_unity(u, NA, v, NB, m, n);
      const LogProduct<BigFloat> z = partition(p);
      // e^{pi alpha n/3} = e^{-2 pi i u (n/3) / NA}
      const Cx<BigFloat>& shift =
          wa[static_cast<std::size_t>((static_cast<std::int64_t>(u) * (n / 3)) % NA)];
      grid[static_cast<std::size_t>(u) * NB + v] = z.value() * shift;
    }
  }

  const double snap_tol = 1e-3;
  WindingTable table(m, n);
  const BigFloat inv_count = BigFloat(1) / (BigFloat(NA) * NB);
  for (int khat = 0; khat < NA; ++khat) {
    const int k = khat <= 2 * n / 3 ? khat : khat - NA;
    const bool k_dead = k < -n / 3;
    for (int lhat = 0; lhat < NB; ++lhat) {
      const int l = lhat <= m ? lhat : lhat - NB;
      const bool l_dead = l < -m;
      Cx<BigFloat> acc(BigFloat(0));
      for (int u = 0; u < NA; ++u) {
        const std::int64_t tu = (static_cast<std::int64_t>(u) * khat) % NA;
        const Cx<BigFloat>& fu = wa[static_cast<std::size_t>(tu)];
        for (int v = 0; v < NB; ++v) {
          const std::int64_t tv = (static_cast<std::int64_t>(v) * lhat) % NB;
          acc = acc + grid[static_cast<std::size_t>(u) * NB + v] * fu *
                          wb[static_cast<std::size_t>(tv)];
        }
      }
      acc = inv_count * acc;
      const double imag_err = abs(acc.im).convert_to<double>();
      const BigFloat rounded = floor(acc.re + BigFloat(0.5));
      const double real_err = abs(acc.re - rounded).convert_to<double>();
      if (imag_err > snap_tol || real_err > snap_tol) {
        throw PrecisionFailure(
            "winding coefficient at (" + std::to_string(k) + "," +
            std::to_string(l) + ") is " + std::to_string(real_err) + " + " +
            std::to_string(imag_err) +
            "i away from an integer; increase precision (used " +
            std::to_string(digits) + " digits)");
      }
      BigInt count = rounded.convert_to<BigInt>();
      if (count < 0 || ((k_dead || l_dead) && count != 0)) {
        throw PrecisionFailure("winding inversion produced an impossible count at (" +
                               std::to_string(k) + "," + std::to_string(l) + ")");
      }
      if (count > 0) table.add(k, l, count);
    }
  }
  return table;
}

}  // namespace dimerwind
