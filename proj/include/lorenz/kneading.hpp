#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lorenz/seq.hpp"

namespace lorenz {

/// Kneading invariants (k+, k-) of a Lorenz map; k+ starts with 1 and
/// k- starts with 0.  Determines the Lorenz shift Omega(k+, k-).
struct KneadingPair {
  EpSeq kplus;
  EpSeq kminus;

  KneadingPair(EpSeq kp, EpSeq km);

  EpSeq k0() const { return shift(kplus, 1); }
  EpSeq k1() const { return shift(kminus, 1); }

  static KneadingPair full_shift();
};

enum class Admissibility { HSAdmissible, WeakOnly, NotAdmissible };
const char* admissibility_name(Admissibility a);

/// Strict conditions give HSAdmissible, non-strict only give WeakOnly.
Admissibility classify(const KneadingPair& pair);

/// True iff k(0) <= sigma^n(w) <= k(1) for all n.  Throws
/// NotAdmissiblePair when classify(pair) == NotAdmissible.
bool shift_contains(const EpSeq& w, const KneadingPair& pair);

/// Symbolic hole.  An interval hole (a,b) around the critical point
/// carries the one-sided kneading sequences bold-a = tau(a-) and
/// bold-b = tau(b+); critical flags mean the endpoint sits at c.  Holes
/// anchored at 0 or 1 carry the single free endpoint's kneading.
struct HoleKneading {
  enum class Kind { interval, at_zero, at_one };
  Kind kind = Kind::interval;
  std::optional<EpSeq> a_lower;  // interval: tau(a-), starts with 0
  std::optional<EpSeq> b_upper;  // interval: tau(b+), starts with 1
  bool a_is_critical = false;
  bool b_is_critical = false;
  std::optional<EpSeq> edge;  // at_zero: tau(t+); at_one: tau(s-)

  static HoleKneading interval(EpSeq a, EpSeq b);
  static HoleKneading critical_a(EpSeq b);            // hole (c, b)
  static HoleKneading critical_b(EpSeq a);            // hole (a, c)
  static HoleKneading both_critical();                // empty hole (c, c)
  static HoleKneading at_zero(EpSeq t_upper);         // hole (0, t)
  static HoleKneading at_one(EpSeq s_lower);          // hole (s, 1)
};

/// Resolves critical flags to concrete bounds (k- for a = c, k+ for b = c).
HoleKneading normalize_hole(const HoleKneading& h, const KneadingPair& pair);

/// True iff the survivor set is contained in the fixed points {0,1}:
/// bold-b starts 11 or bold-a starts 00 (and the analogous edge cases).
bool degenerate_check(const HoleKneading& h);

/// The two-sided constraint [lo, hi]: the survivor language is
/// { w : lo <= sigma^n(w) <= hi for all n }.
struct SurvivorBounds {
  EpSeq lo;
  EpSeq hi;
};

/// Constraint bounds of a normalized hole: (sigma(bold-b), sigma(bold-a))
/// for interval holes, (tau(t+), k(1)) for a hole at zero, and
/// (k(0), tau(s-)) for a hole at one.
SurvivorBounds bounds_of(const HoleKneading& h, const KneadingPair& pair);

/// Result of converting a hole at the critical point to a boundary hole.
struct BoundaryHole {
  HoleKneading hole;
  /// Whether the boundary fixed-point orbit itself survives; this is the
  /// side condition under which the full survivor sets (not only their
  /// shift-invariant cores) coincide.
  bool endpoint_orbit_survives = false;
};

/// Maps hole (c,b) to (0, f(b)) and hole (a,c) to (f(a), 1); the
/// free-bound kneading is shifted once.  Requires a critical flag.
BoundaryHole hole_to_boundary(const HoleKneading& h, const KneadingPair& pair);

/// Largest self-admissible (lexicographically smallest among its shifts)
/// floor of sigma(bold-b): returns sigma(bold-b) if already smallest,
/// else the periodic word cut at the first shift that drops below it.
EpSeq self_admissibilize_lower(const EpSeq& b_upper);

/// Symmetric ceiling of sigma(bold-a) (largest among its shifts).
EpSeq self_admissibilize_upper(const EpSeq& a_lower);

/// Core forms working directly on a bound sequence.
EpSeq min_self_admissible(const EpSeq& x);
EpSeq max_self_admissible(const EpSeq& x);
bool is_min_self_admissible(const EpSeq& x);
bool is_max_self_admissible(const EpSeq& x);

/// One digit-flip step of the bound surgery.
struct FlipStep {
  char side;       // 's' or 't'
  size_t position; // 1-based digit that was flipped
  EpSeq from;
  EpSeq to;
};

/// Weak-admissible pair (1s, 0t) with Omega(1s, 0t) equal to the
/// constraint language; s is its minimum, t its maximum.
struct SurvivorShift {
  EpSeq s;
  EpSeq t;
  bool degenerate = false;
  std::vector<FlipStep> flips;

  bool operator==(const SurvivorShift& o) const {
    return s == o.s && t == o.t && degenerate == o.degenerate;
  }
};

/// Bound surgery: self-admissibilize both bounds, then iterate digit
/// flips until (1s, 0t) is weak-admissible.  Sets degenerate when the
/// bounds cross (survivor inside {0^inf, 1^inf}).
SurvivorShift weak_admissibilize_bounds(const SurvivorBounds& b);

/// Spec-level operation on a hole; normalizes first and never raises on
/// degenerate holes (the flag is carried instead).
SurvivorShift weak_admissibilize(const HoleKneading& h,
                                 const KneadingPair& pair);

/// Membership in the survivor language: all shifts of w lie in [s, t].
bool survivor_member(const SurvivorShift& shift, const EpSeq& w);

}  // namespace lorenz
