#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lorenz/kneading.hpp"

namespace lorenz {

/// One end of a maximal constancy interval, given by the upper kneading
/// sequence of the endpoint.
struct PlateauEndpoint {
  EpSeq kneading;
  bool closed = false;
};

/// Maximal interval of hole endpoints over which the survivor shift is
/// constant.  For a moving upper endpoint b the right end is always
/// attained; the mirrored a-side intervals close on the left instead.
struct Plateau {
  PlateauEndpoint left;
  PlateauEndpoint right;
  std::string case_tag;
};

/// Plateau of the hole (c, b) for a purely periodic bold-b.
Plateau plateau_at_critical(const KneadingPair& pair, const EpSeq& b_upper);

/// Plateau of the hole (a, b), a < c < b, moving b; bold-b periodic.
Plateau plateau_interior(const KneadingPair& pair, const EpSeq& a_lower,
                         const EpSeq& b_upper);

/// Plateau of the moving lower endpoint a (b fixed), through the
/// bit-complement symmetry; bold-a must be purely periodic.
Plateau plateau_interior_a_side(const KneadingPair& pair,
                                const EpSeq& a_lower, const EpSeq& b_upper);

/// True iff bold-b belongs to its own survivor set:
/// sigma(bold-b) <= sigma^n(bold-b) <= sigma(bold-a) for all n.
bool in_bifurcation_set(const KneadingPair& pair, const EpSeq& a_lower,
                        const EpSeq& b_upper);

struct PlateauSample {
  EpSeq kneading;
  std::string kind;  // interior | left_endpoint | below_left | beyond_right
  bool same_survivor = false;
};

struct PlateauReport {
  SurvivorShift base;
  std::vector<PlateauSample> samples;
  std::vector<std::string> violations;
  bool verified = false;
};

/// Samples the interior and both boundary sides of a computed plateau
/// and checks constancy of the survivor shift inside, difference outside.
/// a_lower empty means the hole (c, b).
PlateauReport verify_plateau(const KneadingPair& pair,
                             const std::optional<EpSeq>& a_lower,
                             const Plateau& plateau, size_t n_samples);

/// Deterministic bisection sampling of the kneading-order interval
/// (lo, hi); endpoints included per the closed flags.
std::vector<EpSeq> sample_kneading_interval(const EpSeq& lo, const EpSeq& hi,
                                            bool lo_closed, bool hi_closed,
                                            size_t want);

}  // namespace lorenz
