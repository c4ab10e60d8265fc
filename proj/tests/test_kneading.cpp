#include <doctest.h>

#include "helpers.hpp"
#include "lorenz/kneading.hpp"

using namespace lorenz;
using lorenz::testing::random_seq;
using lorenz::testing::seq;

namespace {

KneadingPair pair_of(const std::string& kp, const std::string& km) {
  return KneadingPair(seq(kp), seq(km));
}

}  // namespace

TEST_SUITE("kneading") {

TEST_CASE("classify examples") {
  CHECK(classify(KneadingPair::full_shift()) == Admissibility::HSAdmissible);
  CHECK(classify(pair_of("(10)", "(01)")) == Admissibility::WeakOnly);
  CHECK(classify(pair_of("1(0)", "(001)")) == Admissibility::NotAdmissible);
}

TEST_CASE("shift_contains examples") {
  CHECK(shift_contains(seq("(01)"), KneadingPair::full_shift()));
  KneadingPair p = pair_of("(100)", "0(1)");
  CHECK(shift_contains(seq("(010)"), p));
  CHECK_FALSE(shift_contains(seq("(0)"), p));
  CHECK_THROWS_AS((void)shift_contains(seq("(0)"), pair_of("1(0)", "(001)")),
                  Error);
}

TEST_CASE("normalize_hole examples") {
  KneadingPair p = pair_of("1(0)", "(011001)");
  auto h = normalize_hole(HoleKneading::critical_a(seq("(100)")), p);
  CHECK(*h.a_lower == seq("(011001)"));
  CHECK(*h.b_upper == seq("(100)"));

  auto h2 = normalize_hole(HoleKneading::critical_b(seq("(011)")),
                           KneadingPair::full_shift());
  CHECK(*h2.b_upper == seq("1(0)"));

  auto h3 = normalize_hole(HoleKneading::interval(seq("(011)"), seq("(10)")),
                           KneadingPair::full_shift());
  CHECK(*h3.a_lower == seq("(011)"));
  CHECK(*h3.b_upper == seq("(10)"));
}

TEST_CASE("degenerate_check examples") {
  auto h = [](const char* a, const char* b) {
    return HoleKneading::interval(seq(a), seq(b));
  };
  CHECK(degenerate_check(h("(01)", "(110)")));
  CHECK(degenerate_check(h("(001)", "(10)")));
  CHECK_FALSE(degenerate_check(h("(01)", "(10)")));
}

TEST_CASE("hole_to_boundary examples") {
  // ambient pair ((100), 0(1))
  KneadingPair p = pair_of("(100)", "0(1)");
  auto b1 = hole_to_boundary(HoleKneading::critical_a(seq("(10010)")), p);
  CHECK(b1.hole.kind == HoleKneading::Kind::at_zero);
  CHECK(*b1.hole.edge == seq("(00101)"));

  auto b2 = hole_to_boundary(HoleKneading::critical_a(seq("(10)")), p);
  CHECK(*b2.hole.edge == seq("(01)"));

  auto b3 = hole_to_boundary(
      HoleKneading::critical_b(seq("0(1)")), KneadingPair::full_shift());
  CHECK(b3.hole.kind == HoleKneading::Kind::at_one);
  CHECK(*b3.hole.edge == seq("(1)"));

  CHECK_THROWS_AS(
      (void)hole_to_boundary(
          HoleKneading::interval(seq("(011)"), seq("(10)")), p),
      Error);
}

TEST_CASE("boundary endpoint orbit flag distinguishes the two A.1 holes") {
  KneadingPair p = pair_of("(100)", "0(1)");
  // bold-b = (10)^inf: sigma(k(0)) drops below (01)^inf, orbit of 0 dies
  auto b1 = hole_to_boundary(HoleKneading::critical_a(seq("(10)")), p);
  CHECK_FALSE(b1.endpoint_orbit_survives);
  // bold-b = (10010)^inf: the orbit of 0 stays above (00101)^inf
  auto b2 = hole_to_boundary(HoleKneading::critical_a(seq("(10010)")), p);
  CHECK(b2.endpoint_orbit_survives);
}

TEST_CASE("self_admissibilize examples") {
  // inputs stated via sigma(bold-b); prepend the leading symbol
  CHECK(self_admissibilize_lower(prepend(1, seq("(0101111010)"))) ==
        seq("(0101111)"));
  CHECK(self_admissibilize_lower(seq("1(0)")) == seq("(0)"));
  CHECK(self_admissibilize_lower(prepend(1, seq("(001011)"))) ==
        seq("(001011)"));

  CHECK(self_admissibilize_upper(prepend(0, seq("(111001011110)"))) ==
        seq("(1110010)"));
  CHECK(self_admissibilize_upper(seq("0(1)")) == seq("(1)"));
  CHECK(self_admissibilize_upper(prepend(0, seq("(110100)"))) ==
        seq("(110100)"));
}

TEST_CASE("self-admissibilized output is extremal among its shifts") {
  std::mt19937 rng(42);
  for (int it = 0; it < 300; ++it) {
    EpSeq x = random_seq(rng);
    EpSeq lo = min_self_admissible(x);
    EpSeq hi = max_self_admissible(x);
    CHECK(is_min_self_admissible(lo));
    CHECK(is_max_self_admissible(hi));
    for (size_t n = 0; n < lo.tails(); ++n)
      CHECK(compare(lo, shift(lo, n)) != std::strong_ordering::greater);
    for (size_t n = 0; n < hi.tails(); ++n)
      CHECK(compare(shift(hi, n), hi) != std::strong_ordering::greater);
  }
}

TEST_CASE("weak_admissibilize on the two-step surgery instance") {
  SurvivorBounds b{prepend(0, shift(seq("(0101111010)"), 0)),
                   prepend(1, shift(seq("(111001011110)"), 0))};
  b.lo = seq("(0101111010)");
  b.hi = seq("(111001011110)");
  SurvivorShift sh = weak_admissibilize_bounds(b);
  CHECK_FALSE(sh.degenerate);
  CHECK(sh.s == seq("(011)"));
  CHECK(sh.t == seq("(110)"));
  // intermediate self-admissible stages appear in the flip trace
  REQUIRE(sh.flips.size() >= 4);
  CHECK(sh.flips[0].to == seq("(0101111)"));
  CHECK(sh.flips[1].to == seq("(1110010)"));
}

TEST_CASE("weak_admissibilize keeps already weak-admissible bounds") {
  // hole (c,b) with bold-b = (100)^inf over k- = (011001)^inf
  KneadingPair p = pair_of("1(0)", "(011001)");
  SurvivorShift sh =
      weak_admissibilize(HoleKneading::critical_a(seq("(100)")), p);
  CHECK_FALSE(sh.degenerate);
  CHECK(sh.s == seq("(001)"));
  CHECK(sh.t == p.k1());
  CHECK(sh.flips.empty());
}

TEST_CASE("weak_admissibilize trivial full shift") {
  SurvivorShift sh = weak_admissibilize_bounds({seq("(0)"), seq("(1)")});
  CHECK(sh.s == seq("(0)"));
  CHECK(sh.t == seq("(1)"));
  CHECK_FALSE(sh.degenerate);
}

TEST_CASE("crossing bounds are reported degenerate") {
  SurvivorShift sh = weak_admissibilize_bounds({seq("(011)"), seq("(100)")});
  CHECK(sh.degenerate);
}

TEST_CASE("degenerate holes flagged without surgery") {
  auto sh = weak_admissibilize(
      HoleKneading::interval(seq("(01)"), seq("(110)")),
      KneadingPair::full_shift());
  CHECK(sh.degenerate);
}

TEST_CASE("survivor_member examples") {
  SurvivorShift sh = weak_admissibilize_bounds(
      {seq("(0101111010)"), seq("(111001011110)")});
  CHECK(survivor_member(sh, seq("(101)")));
  CHECK_FALSE(survivor_member(sh, seq("(100)")));
  CHECK(survivor_member(sh, sh.s));
}

TEST_CASE("surgery output is weak-admissible, never NotAdmissible") {
  std::mt19937 rng(2024);
  int checked = 0;
  for (int it = 0; it < 400; ++it) {
    // bold-a starting 01..., bold-b starting 10... (non-degenerate holes)
    Word wa{0, 1}, wb{1, 0};
    auto ta = lorenz::testing::random_word(rng, 1 + rng() % 5);
    auto tb = lorenz::testing::random_word(rng, 1 + rng() % 5);
    EpSeq a = concat(wa, EpSeq::canon({}, ta));
    EpSeq b = concat(wb, EpSeq::canon({}, tb));
    SurvivorShift sh = weak_admissibilize_bounds({shift(b, 1), shift(a, 1)});
    if (sh.degenerate) continue;
    ++checked;
    KneadingPair g(prepend(1, sh.s), prepend(0, sh.t));
    CHECK(classify(g) != Admissibility::NotAdmissible);
    // s and t themselves live in the language
    CHECK(survivor_member(sh, sh.s));
    CHECK(survivor_member(sh, sh.t));
  }
  CHECK(checked > 50);
}

}  // TEST_SUITE
