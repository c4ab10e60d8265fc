#include "lorenz/plateau.hpp"

#include <algorithm>
#include <deque>

namespace lorenz {

namespace {

using std::strong_ordering;

bool le(const EpSeq& a, const EpSeq& b) { return compare(a, b) != strong_ordering::greater; }
bool lt(const EpSeq& a, const EpSeq& b) { return compare(a, b) == strong_ordering::less; }

// weak-admissibility of the bound pair (b, a) as kneading invariants
bool pair_weak_admissible(const EpSeq& b_upper, const EpSeq& a_lower) {
  EpSeq lo = shift(b_upper, 1), hi = shift(a_lower, 1);
  for (size_t n = 0; n < b_upper.tails(); ++n) {
    EpSeq sn = shift(b_upper, n);
    if (lt(sn, lo) || lt(hi, sn)) return false;
  }
  for (size_t n = 0; n < a_lower.tails(); ++n) {
    EpSeq sn = shift(a_lower, n);
    if (lt(sn, lo) || lt(hi, sn)) return false;
  }
  return true;
}

// first n >= 1 with sigma^n(x) < s, or 0 when none
size_t first_drop_below(const EpSeq& x, const EpSeq& s) {
  for (size_t n = 1; n < x.tails(); ++n)
    if (lt(shift(x, n), s)) return n;
  return 0;
}

// first n >= 1 with sigma^n(x) > x, or 0 when none
size_t first_rise_above_self(const EpSeq& x) {
  for (size_t n = 1; n < x.tails(); ++n)
    if (lt(x, shift(x, n))) return n;
  return 0;
}

Word dec_last(Word w) {
  if (w.empty() || w.back() != 1)
    fail(Errc::internal, "expected a trailing 1 to decrement");
  w.back() = 0;
  return w;
}

void check_plateau_order(const Plateau& p) {
  auto c = compare(p.left.kneading, p.right.kneading);
  if (c == strong_ordering::greater ||
      (c == strong_ordering::equal && !(p.left.closed && p.right.closed)))
    fail(Errc::precondition,
         "hole bound is outside the ambient shift: no plateau");
}

void require_periodic(const EpSeq& b) {
  if (!b.pure_periodic())
    fail(Errc::non_periodic_bound, "moving bound must be purely periodic");
}

}  // namespace

Plateau plateau_at_critical(const KneadingPair& pair, const EpSeq& b_upper) {
  require_periodic(b_upper);
  if (b_upper.at(0) == 1 && b_upper.at(1) == 1)
    fail(Errc::degenerate_hole, "bold-b starts 11");
  if (b_upper.front() != 1)
    fail(Errc::precondition, "bold-b must start with 1");
  EpSeq x = shift(b_upper, 1);
  EpSeq k0 = pair.k0(), k1 = pair.k1();

  Plateau p;
  if (pair_weak_admissible(b_upper, pair.kminus)) {
    Word w = b_upper.head(b_upper.per_len() + 1);  // 1 v1..vp
    p.left = {concat(w, k0), true};
    p.right = {b_upper, true};
    p.case_tag = "critical:weak-admissible";
    check_plateau_order(p);
    return p;
  }

  SurvivorShift sh = weak_admissibilize_bounds({x, k1});
  if (sh.degenerate) fail(Errc::degenerate_hole, "survivor is degenerate");
  const EpSeq& s = sh.s;
  if (!s.pure_periodic())
    fail(Errc::internal, "periodic bold-b gave a non-periodic minimum");
  size_t r = s.per_len();
  EpSeq right = prepend(1, s);
  bool t_changed = !(sh.t == k1);

  if (!t_changed) {
    Word w = right.head(r + 1);  // 1 s1..sr
    p.left = {concat(w, k0), true};
    p.right = {right, true};
    p.case_tag = "critical:lower-rebuilt";
    check_plateau_order(p);
    return p;
  }

  // upper bound flips: locate the first escape of k(1) below s
  size_t q = first_drop_below(k1, s);
  if (q == 0) fail(Errc::internal, "flipped upper bound without an escape");
  if (s.at(r - 1) != 1)
    fail(Errc::internal, "minimum of a flipped pair must end in 1");
  EpSeq t = EpSeq::canon({}, dec_last(k1.head(q)));
  EpSeq gamma = concat(dec_last(s.head(r)), t);
  EpSeq sqk1 = shift(k1, q);

  p.right = {right, true};
  if (le(sqk1, gamma)) {
    Word w{1};
    Word body = dec_last(s.head(r));
    w.insert(w.end(), body.begin(), body.end());
    p.left = {concat(w, t), false};
    p.case_tag = "critical:upper-flip:below-gamma";
  } else if (k1.at(q + r - 1) == 1) {
    Word w = right.head(r + 1);
    p.left = {concat(w, k0), false};
    p.case_tag = "critical:upper-flip:digit-one";
  } else if (is_min_self_admissible(sqk1)) {
    p.left = {prepend(1, sqk1), false};
    p.case_tag = "critical:upper-flip:self-admissible";
  } else {
    size_t n = first_drop_below(sqk1, sqk1);
    if (n == 0) fail(Errc::internal, "non-self-admissible tail never drops");
    Word w{1};
    Word body = sqk1.head(n);
    w.insert(w.end(), body.begin(), body.end());
    p.left = {concat(w, k0), true};
    p.case_tag = "critical:upper-flip:recurrent";
  }
  check_plateau_order(p);
  return p;
}

Plateau plateau_interior(const KneadingPair& pair, const EpSeq& a_lower,
                         const EpSeq& b_upper) {
  require_periodic(b_upper);
  if (a_lower.front() != 0 || b_upper.front() != 1)
    fail(Errc::precondition, "hole bounds must straddle the critical point");
  if ((b_upper.at(1) == 1) || (a_lower.at(1) == 0))
    fail(Errc::degenerate_hole, "survivor is degenerate");

  EpSeq x = shift(b_upper, 1);
  EpSeq ya = shift(a_lower, 1);
  SurvivorShift sh = weak_admissibilize_bounds({x, ya});
  if (sh.degenerate) fail(Errc::degenerate_hole, "survivor is degenerate");
  const EpSeq& s = sh.s;
  if (!s.pure_periodic())
    fail(Errc::internal, "periodic bold-b gave a non-periodic minimum");
  size_t r = s.per_len();
  EpSeq right = prepend(1, s);

  Plateau p;
  p.right = {right, true};
  bool a_modified = !(sh.t == ya);

  auto left_word_dec_s = [&]() {
    // 1 s1 .. s_{r-1} (s_r - 1); collapses to "1" when s = (0)^inf
    Word w{1};
    if (s == EpSeq::zeros()) return w;
    Word body = dec_last(s.head(r));
    w.insert(w.end(), body.begin(), body.end());
    return w;
  };

  if (!a_modified) {
    if (s == EpSeq::zeros()) {
      // nothing lies below the ambient minimum; the interval collapses
      p.left = {right, true};
    } else {
      p.left = {concat(left_word_dec_s(), ya), false};
    }
    p.case_tag = "interior:upper-kept";
    check_plateau_order(p);
    return p;
  }

  size_t j = first_rise_above_self(ya);          // truncation point
  size_t i = first_drop_below(ya, s);            // flip point
  if (i == 0 && j == 0)
    fail(Errc::internal, "upper bound modified but no escape found");
  bool take_j = (i == 0) || (j != 0 && j < i);

  if (take_j) {
    EpSeq t = EpSeq::canon({}, ya.head(j));
    p.left = {concat(left_word_dec_s(), t), false};
    p.case_tag = "interior:truncate-first";
    check_plateau_order(p);
    return p;
  }

  if (ya.at(i - 1) != 1)
    fail(Errc::internal, "flip digit of the upper bound is not 1");
  EpSeq t = EpSeq::canon({}, dec_last(ya.head(i)));
  EpSeq eta = concat(dec_last(s.head(r)), t);
  EpSeq sia = shift(ya, i);

  if (le(sia, eta)) {
    p.left = {prepend(1, eta), false};
    p.case_tag = "interior:flip:below-eta";
  } else if (ya.at(i + r - 1) == 1) {
    p.left = {concat(left_word_dec_s(), ya), false};
    p.case_tag = "interior:flip:digit-one";
  } else if (is_min_self_admissible(sia)) {
    p.left = {concat(left_word_dec_s(), shift(ya, i + r)), false};
    p.case_tag = "interior:flip:self-admissible";
  } else {
    size_t n = first_drop_below(sia, sia);
    if (n == 0) fail(Errc::internal, "non-self-admissible tail never drops");
    Word w{1};
    Word window = sia.head(n);
    if (window.back() != 1)
      fail(Errc::internal, "window of the recurrent case must end in 1");
    window.back() = 0;
    w.insert(w.end(), window.begin(), window.end());
    p.left = {concat(w, ya), false};
    p.case_tag = "interior:flip:recurrent";
  }
  check_plateau_order(p);
  return p;
}

Plateau plateau_interior_a_side(const KneadingPair& pair,
                                const EpSeq& a_lower, const EpSeq& b_upper) {
  require_periodic(a_lower);
  KneadingPair mirrored(complement(pair.kminus), complement(pair.kplus));
  Plateau q = plateau_interior(mirrored, complement(b_upper),
                               complement(a_lower));
  Plateau p;
  p.left = {complement(q.right.kneading), q.right.closed};
  p.right = {complement(q.left.kneading), q.left.closed};
  p.case_tag = q.case_tag + ":mirrored";
  return p;
}

bool in_bifurcation_set(const KneadingPair& pair, const EpSeq& a_lower,
                        const EpSeq& b_upper) {
  HoleKneading h = normalize_hole(HoleKneading::interval(a_lower, b_upper),
                                  pair);
  EpSeq lo = shift(*h.b_upper, 1), hi = shift(*h.a_lower, 1);
  for (size_t n = 0; n < b_upper.tails(); ++n) {
    EpSeq sn = shift(b_upper, n);
    if (lt(sn, lo) || lt(hi, sn)) return false;
  }
  return true;
}

std::vector<EpSeq> sample_kneading_interval(const EpSeq& lo, const EpSeq& hi,
                                            bool lo_closed, bool hi_closed,
                                            size_t want) {
  std::vector<EpSeq> out;
  auto push = [&](const EpSeq& e) {
    if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
  };
  if (hi_closed) push(hi);
  if (lo_closed) push(lo);
  std::deque<std::pair<EpSeq, EpSeq>> spans{{lo, hi}};
  while (out.size() < want && !spans.empty()) {
    auto [a, b] = spans.front();
    spans.pop_front();
    if (compare(a, b) != strong_ordering::less) continue;
    auto mid = strictly_between(a, b);
    if (!mid) continue;
    push(*mid);
    spans.push_back({a, *mid});
    spans.push_back({*mid, b});
  }
  std::sort(out.begin(), out.end(),
            [](const EpSeq& a, const EpSeq& b) { return lt(a, b); });
  return out;
}

PlateauReport verify_plateau(const KneadingPair& pair,
                             const std::optional<EpSeq>& a_lower,
                             const Plateau& plateau, size_t n_samples) {
  PlateauReport rep;
  auto survivor_at = [&](const EpSeq& b) {
    HoleKneading h = a_lower ? HoleKneading::interval(*a_lower, b)
                             : HoleKneading::critical_a(b);
    return weak_admissibilize(h, pair);
  };
  rep.base = survivor_at(plateau.right.kneading);

  auto record = [&](const EpSeq& k, const std::string& kind, bool expect_same) {
    bool same = survivor_at(k) == rep.base;
    rep.samples.push_back({k, kind, same});
    if (same != expect_same)
      rep.violations.push_back(kind + " at " + k.str() +
                               (same ? " unexpectedly equal" : " differs"));
  };

  // interior samples between the endpoints
  for (const EpSeq& k :
       sample_kneading_interval(plateau.left.kneading, plateau.right.kneading,
                                false, false, n_samples))
    record(k, "interior", true);

  if (!(plateau.left.kneading == plateau.right.kneading))
    record(plateau.left.kneading, "left_endpoint", plateau.left.closed);

  // a point just below the interval (kneadings stay above k+)
  if (lt(pair.kplus, plateau.left.kneading)) {
    auto below = strictly_between(pair.kplus, plateau.left.kneading);
    if (below) record(*below, "below_left", false);
  }
  // and one just above it
  if (lt(plateau.right.kneading, EpSeq::ones())) {
    auto above = strictly_between(plateau.right.kneading, EpSeq::ones());
    if (above) record(*above, "beyond_right", false);
  }

  std::sort(rep.violations.begin(), rep.violations.end());
  rep.verified = rep.violations.empty();
  return rep;
}

}  // namespace lorenz
