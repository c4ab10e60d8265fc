#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "lorenz/automaton.hpp"
#include "lorenz/determinant.hpp"

using namespace lorenz;
using lorenz::testing::seq;

namespace {

constexpr double kLogPhi = 0.48121182505960347;  // log((1+sqrt 5)/2)
constexpr double kPhi = 1.6180339887498949;

IntPoly poly(std::initializer_list<long> cs) {
  std::vector<BigInt> v;
  for (long c : cs) v.push_back(c);
  return IntPoly(std::move(v));
}

// rational-function equality by cross multiplication
bool same_fraction(const KneadingDeterminant& k, const IntPoly& num,
                   const IntPoly& den) {
  return k.num * den == num * k.den();
}

// Exact sign of the truncated digit series at p/q; independent oracle
// for the closed form.
int truncated_series_sign(const EpSeq& kplus, const EpSeq& kminus,
                          size_t depth, long p, long q) {
  // coefficient of t^i is kplus.at(i) - kminus.at(i); evaluate the
  // partial sum at p/q scaled by q^(depth-1)
  BigInt acc = 0, ppow = 1;
  for (size_t i = 0; i < depth; ++i) {
    BigInt qrest = 1;
    for (size_t j = 0; j < depth - 1 - i; ++j) qrest *= q;
    acc += BigInt(kplus.at(i) - kminus.at(i)) * ppow * qrest;
    ppow *= p;
  }
  return acc == 0 ? 0 : (acc > 0 ? 1 : -1);
}

}  // namespace

TEST_SUITE("entropy") {

TEST_CASE("poly arithmetic and exact division") {
  IntPoly a = poly({1, -2});          // 1 - 2t
  IntPoly b = poly({1, -1});          // 1 - t
  IntPoly prod = a * b;               // 1 - 3t + 2t^2
  CHECK(prod == poly({1, -3, 2}));
  auto q = prod.divide_exact(b);
  REQUIRE(q.has_value());
  CHECK(*q == a);
  CHECK_FALSE(poly({1, 1}).divide_exact(b).has_value());
  CHECK(poly({-1, 0, 0, 1}).sign_at_dyadic(1, 1) == -1);  // t^3-1 at 1/2
  CHECK(poly({-1, 2}).sign_at_dyadic(1, 1) == 0);         // 2t-1 at 1/2
}

TEST_CASE("determinant closed forms") {
  // full shift: (1-2t)/(1-t)
  auto k1 = KneadingDeterminant::from_pair(seq("1(0)"), seq("0(1)"));
  CHECK(same_fraction(k1, poly({1, -2}), poly({1, -1})));
  CHECK(k1.num == poly({1, -2}));
  CHECK(k1.den_periods == std::vector<size_t>{1});

  // golden mean: (1-t-t^2)/(1-t^2)
  auto k2 = KneadingDeterminant::from_pair(seq("1(0)"), seq("0(10)"));
  CHECK(same_fraction(k2, poly({1, -1, -1}), poly({1, 0, -1})));

  // survivor pair of the two-step surgery instance: 1/(1+t+t^2)
  auto k3 = KneadingDeterminant::from_pair(seq("1(011)"), seq("0(110)"));
  CHECK(same_fraction(k3, poly({1}), poly({1, 1, 1})));
}

TEST_CASE("closed form sign agrees with the truncated series") {
  const char* pairs[][2] = {
      {"1(0)", "0(1)"}, {"1(0)", "0(10)"}, {"1(011)", "0(110)"},
      {"(100)", "(011)"}, {"1(0)", "(011001)"},
  };
  for (auto& pr : pairs) {
    EpSeq kp = seq(pr[0]), km = seq(pr[1]);
    auto det = KneadingDeterminant::from_pair(kp, km);
    size_t depth = 4 * (kp.tails() + km.tails());
    // rationals clear of the smallest root's neighborhood are sampled
    for (long num = 1; num <= 6; ++num) {
      long den = 7;
      int closed = det.num.sign_at_rational(num, den);
      int series = truncated_series_sign(kp, km, depth, num, den);
      // truncation tail bound: skip points too close to a sign change
      double t = static_cast<double>(num) / static_cast<double>(den);
      double tail = std::pow(t, static_cast<double>(depth)) / (1.0 - t);
      if (std::abs(det.eval_double(t)) <= 2.0 * tail) continue;
      CHECK(closed == series);
    }
  }
}

TEST_CASE("smallest_root ground truths") {
  auto full = smallest_root(
      KneadingDeterminant::from_pair(seq("1(0)"), seq("0(1)")));
  REQUIRE(full.has_root());
  CHECK(full.t0->first == full.t0->second);  // exact dyadic hit at 1/2
  CHECK(full.t0->first == 0.5);
  CHECK(std::abs(full.entropy_nats - std::log(2.0)) < 1e-12);

  auto golden = smallest_root(
      KneadingDeterminant::from_pair(seq("1(0)"), seq("0(10)")));
  REQUIRE(golden.has_root());
  double root = 0.5 * (golden.t0->first + golden.t0->second);
  CHECK(std::abs(root - (std::sqrt(5.0) - 1.0) / 2.0) < 1e-12);
  CHECK(std::abs(golden.entropy_nats - kLogPhi) < 1e-10);
  CHECK(golden.t0->second - golden.t0->first <= 1e-12);

  auto none = smallest_root(
      KneadingDeterminant::from_pair(seq("1(011)"), seq("0(110)")));
  CHECK_FALSE(none.has_root());
  CHECK(none.entropy_nats == 0.0);
}

TEST_CASE("survivor entropy compositions") {
  // empty hole at the critical point: ambient entropy
  KneadingPair full = KneadingPair::full_shift();
  auto er = survivor_entropy(full, HoleKneading::both_critical());
  CHECK(std::abs(er.entropy_nats - std::log(2.0)) < 1e-10);

  // survivor bounds (0)^inf, (10)^inf: the no-11 subshift
  SurvivorShift sh;
  sh.s = seq("(0)");
  sh.t = seq("(10)");
  auto er2 = survivor_shift_entropy(sh);
  CHECK(std::abs(er2.entropy_nats - kLogPhi) < 1e-10);

  // the two-step surgery instance has entropy exactly zero
  auto sh3 = weak_admissibilize_bounds(
      {seq("(0101111010)"), seq("(111001011110)")});
  auto er3 = survivor_shift_entropy(sh3);
  CHECK(er3.entropy_nats == 0.0);
}

TEST_CASE("beta recovery") {
  CHECK(std::abs(beta_from_kneading(KneadingPair::full_shift()) - 2.0) <
        1e-10);
  CHECK(std::abs(beta_from_kneading(KneadingPair(seq("1(0)"), seq("0(10)"))) -
                 kPhi) < 1e-9);
  // tribonacci pair
  double trib = 1.8392867552141612;
  CHECK(std::abs(beta_from_kneading(KneadingPair(seq("1(0)"), seq("(011)"))) -
                 trib) < 1e-9);
  CHECK_THROWS_AS(
      (void)beta_from_kneading(KneadingPair(seq("1(011)"), seq("0(110)"))),
      Error);
}

TEST_CASE("dimension formula") {
  EntropyResult full;
  full.entropy_nats = std::log(2.0);
  full.t0 = {0.5, 0.5};
  CHECK(dimension(2.0, full) == 1.0);

  EntropyResult zero;
  CHECK(dimension(1.5, zero) == 0.0);

  EntropyResult phi;
  phi.entropy_nats = kLogPhi;
  CHECK(std::abs(dimension(kPhi, phi) - 1.0) < 1e-12);
  CHECK_THROWS_AS((void)dimension(1.0, phi), Error);
}

TEST_CASE("entropy bounds and oracle agreement on random survivor shifts") {
  std::mt19937 rng(4242);
  int checked = 0;
  while (checked < 40) {
    Word wa{0, 1}, wb{1, 0};
    auto ta = lorenz::testing::random_word(rng, 1 + rng() % 6);
    auto tb = lorenz::testing::random_word(rng, 1 + rng() % 6);
    EpSeq a = concat(wa, EpSeq::canon({}, ta));
    EpSeq b = concat(wb, EpSeq::canon({}, tb));
    SurvivorShift sh = weak_admissibilize_bounds({shift(b, 1), shift(a, 1)});
    if (sh.degenerate) continue;
    ++checked;
    auto er = survivor_shift_entropy(sh);
    CHECK(er.entropy_nats >= 0.0);
    CHECK(er.entropy_nats <= std::log(2.0) + 1e-15);
    auto aut = BoundAutomaton::build(sh);
    CHECK(std::abs(er.entropy_nats - entropy_estimate(aut)) <= 1e-3);
  }
}

TEST_CASE("enlarging the hole never increases entropy") {
  std::mt19937 rng(987);
  int checked = 0;
  while (checked < 40) {
    Word wb{1, 0};
    auto tb = lorenz::testing::random_word(rng, 1 + rng() % 6);
    EpSeq b = concat(wb, EpSeq::canon({}, tb));
    // grow the hole by pushing bold-b upward
    auto bigger = strictly_between(b, EpSeq::ones());
    if (!bigger || bigger->front() != 1 || bigger->at(1) != 0) continue;
    KneadingPair amb = KneadingPair::full_shift();
    auto e1 = survivor_entropy(amb, HoleKneading::critical_a(b));
    auto e2 = survivor_entropy(amb, HoleKneading::critical_a(*bigger));
    ++checked;
    CHECK(e2.entropy_nats <= e1.entropy_nats + 1e-9);
  }
}

}  // TEST_SUITE
