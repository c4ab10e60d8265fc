#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lorenz/kneading.hpp"
#include "lorenz/poly.hpp"

namespace lorenz {

/// Exact kneading determinant K(t) = K+(t) - K-(t) as a rational
/// function numerator / prod(1 - t^p).  The denominator is positive on
/// (0,1), so signs there are signs of the numerator.
struct KneadingDeterminant {
  IntPoly num;
  std::vector<size_t> den_periods;

  static KneadingDeterminant from_pair(const EpSeq& kplus,
                                       const EpSeq& kminus);

  int sign_at_dyadic(const BigInt& k, unsigned m) const {
    return num.sign_at_dyadic(k, m);
  }
  double eval_double(double t) const;
  /// Denominator as a polynomial (for cross-multiplied comparisons).
  IntPoly den() const;
};

/// Smallest positive root of K in (0,1) bracketed to width <= 1e-12, or
/// nothing (entropy 0).
struct EntropyResult {
  std::optional<std::pair<double, double>> t0;
  double entropy_nats = 0.0;
  std::vector<std::string> flags;

  bool has_root() const { return t0.has_value(); }
};

EntropyResult smallest_root(const KneadingDeterminant& k);

/// Entropy of the Lorenz shift Omega(k+, k-).
EntropyResult shift_entropy(const KneadingPair& pair);

/// Entropy of a survivor shift (1s, 0t); degenerate shifts give 0.
EntropyResult survivor_shift_entropy(const SurvivorShift& sh);

/// Entropy of the survivor set of a hole: surgery then determinant.
EntropyResult survivor_entropy(const KneadingPair& pair,
                               const HoleKneading& hole);

/// beta with Omega(k+,k-) = Omega_beta,alpha: 1 / t0.  Throws ZeroEntropy.
double beta_from_kneading(const KneadingPair& pair);

/// Hausdorff dimension h / log(beta), clamped to [0, 1].
double dimension(double beta, const EntropyResult& entropy);

}  // namespace lorenz
