#include "lorenz/kneading.hpp"

namespace lorenz {

KneadingPair::KneadingPair(EpSeq kp, EpSeq km)
    : kplus(std::move(kp)), kminus(std::move(km)) {
  if (kplus.front() != 1) fail(Errc::precondition, "k+ must start with 1");
  if (kminus.front() != 0) fail(Errc::precondition, "k- must start with 0");
}

KneadingPair KneadingPair::full_shift() {
  return KneadingPair(EpSeq::canon({1}, {0}), EpSeq::canon({0}, {1}));
}

const char* admissibility_name(Admissibility a) {
  switch (a) {
    case Admissibility::HSAdmissible: return "hs-admissible";
    case Admissibility::WeakOnly: return "weak-only";
    case Admissibility::NotAdmissible: return "not-admissible";
  }
  return "?";
}

namespace {

using std::strong_ordering;

bool le(const EpSeq& a, const EpSeq& b) { return compare(a, b) != strong_ordering::greater; }
bool lt(const EpSeq& a, const EpSeq& b) { return compare(a, b) == strong_ordering::less; }

// Checks lo (<=|<) sigma^n(w) (<=|<) hi over all distinct shifts of w.
bool shifts_within(const EpSeq& w, const EpSeq& lo, const EpSeq& hi,
                   bool strict_lo, bool strict_hi) {
  for (size_t n = 0; n < w.tails(); ++n) {
    EpSeq sn = shift(w, n);
    if (strict_lo ? !lt(lo, sn) : !le(lo, sn)) return false;
    if (strict_hi ? !lt(sn, hi) : !le(sn, hi)) return false;
  }
  return true;
}

}  // namespace

Admissibility classify(const KneadingPair& pair) {
  EpSeq lo = pair.k0(), hi = pair.k1();
  bool weak = shifts_within(pair.kplus, lo, hi, false, false) &&
              shifts_within(pair.kminus, lo, hi, false, false);
  if (!weak) return Admissibility::NotAdmissible;
  bool hs = shifts_within(pair.kplus, lo, hi, false, true) &&
            shifts_within(pair.kminus, lo, hi, true, false);
  return hs ? Admissibility::HSAdmissible : Admissibility::WeakOnly;
}

bool shift_contains(const EpSeq& w, const KneadingPair& pair) {
  if (classify(pair) == Admissibility::NotAdmissible)
    fail(Errc::not_admissible_pair, "pair is not admissible");
  return shifts_within(w, pair.k0(), pair.k1(), false, false);
}

HoleKneading HoleKneading::interval(EpSeq a, EpSeq b) {
  HoleKneading h;
  h.a_lower = std::move(a);
  h.b_upper = std::move(b);
  return h;
}

HoleKneading HoleKneading::critical_a(EpSeq b) {
  HoleKneading h;
  h.a_is_critical = true;
  h.b_upper = std::move(b);
  return h;
}

HoleKneading HoleKneading::critical_b(EpSeq a) {
  HoleKneading h;
  h.b_is_critical = true;
  h.a_lower = std::move(a);
  return h;
}

HoleKneading HoleKneading::both_critical() {
  HoleKneading h;
  h.a_is_critical = h.b_is_critical = true;
  return h;
}

HoleKneading HoleKneading::at_zero(EpSeq t_upper) {
  HoleKneading h;
  h.kind = Kind::at_zero;
  h.edge = std::move(t_upper);
  return h;
}

HoleKneading HoleKneading::at_one(EpSeq s_lower) {
  HoleKneading h;
  h.kind = Kind::at_one;
  h.edge = std::move(s_lower);
  return h;
}

HoleKneading normalize_hole(const HoleKneading& h, const KneadingPair& pair) {
  HoleKneading out = h;
  if (h.kind != HoleKneading::Kind::interval) return out;
  if (h.a_is_critical) out.a_lower = pair.kminus;
  if (h.b_is_critical) out.b_upper = pair.kplus;
  if (!out.a_lower || !out.b_upper)
    fail(Errc::precondition, "interval hole is missing a bound");
  if (!out.a_is_critical && out.a_lower->front() != 0)
    fail(Errc::precondition, "bold-a must start with 0");
  if (!out.b_is_critical && out.b_upper->front() != 1)
    fail(Errc::precondition, "bold-b must start with 1");
  return out;
}

bool degenerate_check(const HoleKneading& h) {
  switch (h.kind) {
    case HoleKneading::Kind::interval: {
      if (!h.a_lower || !h.b_upper)
        fail(Errc::precondition, "degenerate_check needs a normalized hole");
      const EpSeq& a = *h.a_lower;
      const EpSeq& b = *h.b_upper;
      return (b.at(0) == 1 && b.at(1) == 1) || (a.at(0) == 0 && a.at(1) == 0);
    }
    case HoleKneading::Kind::at_zero:
      return h.edge->front() == 1;
    case HoleKneading::Kind::at_one:
      return h.edge->front() == 0;
  }
  return false;
}

SurvivorBounds bounds_of(const HoleKneading& h, const KneadingPair& pair) {
  switch (h.kind) {
    case HoleKneading::Kind::interval: {
      HoleKneading n = normalize_hole(h, pair);
      return {shift(*n.b_upper, 1), shift(*n.a_lower, 1)};
    }
    case HoleKneading::Kind::at_zero:
      return {*h.edge, pair.k1()};
    case HoleKneading::Kind::at_one:
      return {pair.k0(), *h.edge};
  }
  fail(Errc::internal, "bounds_of: bad hole kind");
}

BoundaryHole hole_to_boundary(const HoleKneading& h, const KneadingPair& pair) {
  if (h.kind != HoleKneading::Kind::interval ||
      (!h.a_is_critical && !h.b_is_critical))
    fail(Errc::not_critical_hole, "hole_to_boundary needs an endpoint at c");
  HoleKneading n = normalize_hole(h, pair);
  BoundaryHole out;
  if (h.a_is_critical) {
    // (c, b) -> (0, f(b)); the free bound becomes tau(f(b)+) = sigma(bold-b).
    // The endpoint orbit survives when every shift of k(0) that is not a
    // return to k(0) itself stays above the bound.
    EpSeq t = shift(*n.b_upper, 1);
    EpSeq k0 = pair.k0();
    bool survives = true;
    for (size_t i = 1; i < k0.tails() + 1 && survives; ++i) {
      EpSeq si = shift(k0, i);
      if (si == k0) continue;
      survives = le(t, si);
    }
    out.hole = HoleKneading::at_zero(std::move(t));
    out.endpoint_orbit_survives = survives;
  } else {
    // (a, c) -> (f(a), 1); the free bound becomes tau(f(a)-) = sigma(bold-a).
    EpSeq s = shift(*n.a_lower, 1);
    EpSeq k1 = pair.k1();
    bool survives = true;
    for (size_t i = 1; i < k1.tails() + 1 && survives; ++i) {
      EpSeq si = shift(k1, i);
      if (si == k1) continue;
      survives = le(si, s);
    }
    out.hole = HoleKneading::at_one(std::move(s));
    out.endpoint_orbit_survives = survives;
  }
  return out;
}

bool is_min_self_admissible(const EpSeq& x) {
  for (size_t n = 1; n < x.tails(); ++n)
    if (lt(shift(x, n), x)) return false;
  return true;
}

bool is_max_self_admissible(const EpSeq& x) {
  for (size_t n = 1; n < x.tails(); ++n)
    if (lt(x, shift(x, n))) return false;
  return true;
}

EpSeq min_self_admissible(const EpSeq& x) {
  for (size_t n = 1; n < x.tails(); ++n)
    if (lt(shift(x, n), x)) return EpSeq::canon({}, x.head(n));
  return x;
}

EpSeq max_self_admissible(const EpSeq& x) {
  for (size_t n = 1; n < x.tails(); ++n)
    if (lt(x, shift(x, n))) return EpSeq::canon({}, x.head(n));
  return x;
}

EpSeq self_admissibilize_lower(const EpSeq& b_upper) {
  if (b_upper.front() != 1)
    fail(Errc::precondition, "bold-b must start with 1");
  return min_self_admissible(shift(b_upper, 1));
}

EpSeq self_admissibilize_upper(const EpSeq& a_lower) {
  if (a_lower.front() != 0)
    fail(Errc::precondition, "bold-a must start with 0");
  return max_self_admissible(shift(a_lower, 1));
}

SurvivorShift weak_admissibilize_bounds(const SurvivorBounds& b) {
  SurvivorShift out;
  EpSeq s = min_self_admissible(b.lo);
  EpSeq t = max_self_admissible(b.hi);
  if (!(s == b.lo)) out.flips.push_back({'s', 0, b.lo, s});
  if (!(t == b.hi)) out.flips.push_back({'t', 0, b.hi, t});

  size_t cap = 4 * s.tails() * t.tails();
  size_t flips = 0;
  for (;;) {
    if (lt(t, s)) {  // bounds crossed: nothing but fixed points survives
      out.degenerate = true;
      break;
    }
    // first shift of s that escapes above t
    size_t p = 0;
    for (size_t n = 1; n < s.tails(); ++n) {
      if (lt(t, shift(s, n))) { p = n; break; }
    }
    if (p > 0) {
      if (s.at(p - 1) != 0)
        fail(Errc::internal, "flip digit of s is not 0 at " + s.str());
      Word w = s.head(p);
      w[p - 1] = 1;
      EpSeq next = EpSeq::canon({}, std::move(w));
      out.flips.push_back({'s', p, s, next});
      s = std::move(next);
      if (++flips > cap)
        fail(Errc::iteration_cap_exceeded, "bound surgery did not settle");
      continue;
    }
    // first shift of t that escapes below s
    size_t q = 0;
    for (size_t n = 1; n < t.tails(); ++n) {
      if (lt(shift(t, n), s)) { q = n; break; }
    }
    if (q > 0) {
      if (t.at(q - 1) != 1)
        fail(Errc::internal, "flip digit of t is not 1 at " + t.str());
      Word w = t.head(q);
      w[q - 1] = 0;
      EpSeq next = EpSeq::canon({}, std::move(w));
      out.flips.push_back({'t', q, t, next});
      t = std::move(next);
      if (++flips > cap)
        fail(Errc::iteration_cap_exceeded, "bound surgery did not settle");
      continue;
    }
    break;
  }
  out.s = std::move(s);
  out.t = std::move(t);
  return out;
}

SurvivorShift weak_admissibilize(const HoleKneading& h,
                                 const KneadingPair& pair) {
  HoleKneading n = h.kind == HoleKneading::Kind::interval
                       ? normalize_hole(h, pair)
                       : h;
  SurvivorBounds b = bounds_of(n, pair);
  if (degenerate_check(n)) {
    SurvivorShift out;
    out.s = b.lo;
    out.t = b.hi;
    out.degenerate = true;
    return out;
  }
  return weak_admissibilize_bounds(b);
}

bool survivor_member(const SurvivorShift& sh, const EpSeq& w) {
  if (sh.degenerate) return false;
  return shifts_within(w, sh.s, sh.t, false, false);
}

}  // namespace lorenz
