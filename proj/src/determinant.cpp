#include "lorenz/determinant.hpp"

#include <algorithm>
#include <cmath>

namespace lorenz {

namespace {

// Closed form of the digit series sum_i w_i t^(i-1) for an eventually
// periodic sequence: P(t) + t^m Q(t) / (1 - t^p).
struct SeriesForm {
  IntPoly p, q;
  size_t m, per;
};

SeriesForm series_of(const EpSeq& x) {
  SeriesForm f;
  f.m = x.pre_len();
  f.per = x.per_len();
  std::vector<BigInt> pc(x.pre().begin(), x.pre().end());
  std::vector<BigInt> qc(x.per().begin(), x.per().end());
  f.p = IntPoly(std::move(pc));
  f.q = IntPoly(std::move(qc));
  return f;
}

IntPoly times_tk(const IntPoly& p, size_t k) {
  if (p.zero()) return p;
  std::vector<BigInt> v(p.coeffs().size() + k, 0);
  for (size_t i = 0; i < p.coeffs().size(); ++i) v[i + k] = p.coeffs()[i];
  return IntPoly(std::move(v));
}

// numerator of the series over (1 - t^per)
IntPoly series_numerator(const SeriesForm& f) {
  return f.p * IntPoly::one_minus_tp(f.per) + times_tk(f.q, f.m);
}

}  // namespace

KneadingDeterminant KneadingDeterminant::from_pair(const EpSeq& kplus,
                                                   const EpSeq& kminus) {
  SeriesForm fp = series_of(kplus), fm = series_of(kminus);
  IntPoly np = series_numerator(fp), nm = series_numerator(fm);
  IntPoly dp = IntPoly::one_minus_tp(fp.per), dm = IntPoly::one_minus_tp(fm.per);

  KneadingDeterminant k;
  k.num = np * dm - nm * dp;
  k.den_periods = {fp.per, fm.per};

  // cancel whole (1 - t^p) factors
  for (bool again = true; again;) {
    again = false;
    for (auto it = k.den_periods.begin(); it != k.den_periods.end(); ++it) {
      auto q = k.num.divide_exact(IntPoly::one_minus_tp(*it));
      if (q) {
        k.num = *q;
        k.den_periods.erase(it);
        again = true;
        break;
      }
    }
  }
  std::sort(k.den_periods.begin(), k.den_periods.end());
  return k;
}

IntPoly KneadingDeterminant::den() const {
  IntPoly d = IntPoly::constant(1);
  for (size_t p : den_periods) d = d * IntPoly::one_minus_tp(p);
  return d;
}

double KneadingDeterminant::eval_double(double t) const {
  double d = 1.0;
  for (size_t p : den_periods) d *= 1.0 - std::pow(t, static_cast<double>(p));
  return num.eval_double(t) / d;
}

namespace {

int sign_variations(const std::vector<BigInt>& c) {
  int var = 0, prev = 0;
  for (const BigInt& x : c) {
    if (x == 0) continue;
    int s = x > 0 ? 1 : -1;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

// P(x+1), in place
void taylor_shift_1(std::vector<BigInt>& c) {
  if (c.empty()) return;
  size_t d = c.size() - 1;
  for (size_t k = 0; k < d; ++k)
    for (size_t j = d - 1; j + 1 > k; --j) c[j] += c[j + 1];
}

// Descartes bound for the number of roots in the open interval encoded
// by the transformed polynomial:变 M(x) = (1+x)^d P(1/(1+x)).
int descartes_bound_01(const std::vector<BigInt>& coeffs) {
  std::vector<BigInt> m(coeffs.rbegin(), coeffs.rend());
  taylor_shift_1(m);
  size_t lead = 0;
  while (lead < m.size() && m[lead] == 0) ++lead;  // x = 0 is the t = 1 edge
  if (lead) m.erase(m.begin(), m.begin() + static_cast<long>(lead));
  return sign_variations(m);
}

// children of the unit-interval representation: P(x/2) * 2^d and its shift
std::vector<BigInt> scale_lower_half(const std::vector<BigInt>& c) {
  std::vector<BigInt> v = c;
  size_t d = v.size() - 1;
  for (size_t i = 0; i < v.size(); ++i) v[i] <<= (d - i);
  return v;
}

struct Isolator {
  const IntPoly& n;           // original numerator
  unsigned depth_cap = 40;
  bool tangential = false;

  // leftmost root inside (a / 2^h, (a+1) / 2^h); poly is the interval
  // representative.  Returns bracket endpoints as (num, h) pairs.
  std::optional<std::pair<BigInt, unsigned>> leftmost(
      std::vector<BigInt> poly, const BigInt& a, unsigned h) {
    int var = descartes_bound_01(poly);
    if (var == 0) return std::nullopt;
    if (var == 1) return std::make_pair(a, h);
    if (h >= depth_cap) {
      tangential = true;
      return std::nullopt;
    }
    auto left = scale_lower_half(poly);
    auto res = leftmost(left, a * 2, h + 1);
    if (res) return res;
    BigInt mid = a * 2 + 1;
    if (n.sign_at_dyadic(mid, h + 1) == 0) return std::make_pair(mid, h + 1);
    taylor_shift_1(left);
    return leftmost(std::move(left), a * 2 + 1, h + 1);
  }
};

constexpr unsigned kScanBits = 16;
constexpr unsigned kTargetBits = 40;  // bracket width 2^-40 < 1e-12

// Exact bisection over (lo, hi) / 2^h with opposite endpoint signs,
// down to bracket width 2^-kTargetBits.
std::pair<double, double> bisect_span(const IntPoly& n, BigInt lo, BigInt hi,
                                      unsigned h, int sign_lo) {
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    int sm = n.sign_at_dyadic(mid, h);
    if (sm == 0) { lo = hi = mid; break; }
    if (sm == sign_lo) lo = mid; else hi = mid;
  }
  if (hi != lo) {
    while (h < kTargetBits) {
      BigInt mid = lo * 2 + 1;
      int sm = n.sign_at_dyadic(mid, h + 1);
      lo <<= 1;
      hi <<= 1;
      ++h;
      if (sm == 0) { lo = hi = mid; break; }
      if (sm == sign_lo) lo = mid; else hi = mid;
    }
  }
  double scale = std::ldexp(1.0, static_cast<int>(h));
  return {static_cast<double>(lo) / scale, static_cast<double>(hi) / scale};
}

// isolates a root with exact endpoints starting from a VCA bracket
std::optional<std::pair<double, double>> refine_vca_bracket(
    const IntPoly& n, const BigInt& a, unsigned h, bool& tangential) {
  int sl = n.sign_at_dyadic(a, h);
  if (sl == 0) {
    double r = static_cast<double>(a) / std::ldexp(1.0, static_cast<int>(h));
    return std::make_pair(r, r);
  }
  int sr = n.sign_at_dyadic(a + 1, h);
  if (sr == 0) {
    double r = static_cast<double>(a + 1) / std::ldexp(1.0, static_cast<int>(h));
    return std::make_pair(r, r);
  }
  if (sl == sr) {
    // a Descartes count of 1 means a simple root with opposite closed
    // endpoint signs; equal signs here means it sits on a boundary that
    // was already tested, so treat the cell as unresolved
    tangential = true;
    return std::nullopt;
  }
  return bisect_span(n, a, a + 1, h, sl);
}

}  // namespace

EntropyResult smallest_root(const KneadingDeterminant& k) {
  EntropyResult out;
  IntPoly n = k.num;
  if (n.zero()) return out;
  // strip t^j: roots at 0 are outside (0,1)
  {
    std::vector<BigInt> c = n.coeffs();
    size_t j = 0;
    while (j < c.size() && c[j] == 0) ++j;
    if (j) c.erase(c.begin(), c.begin() + static_cast<long>(j));
    n = IntPoly(std::move(c));
  }
  if (n.degree() == 0) return out;

  // Phase 1: double-precision scan of the 2^16 grid, with exact sign
  // confirmation at every suspected crossing.
  const int grid = 1 << kScanBits;
  int prev_sign = n.coeffs()[0] > 0 ? 1 : -1;  // exact sign at 0+
  BigInt prev_k = 0;
  std::optional<std::pair<double, double>> found;
  BigInt found_left = 0;  // left coordinate of the located cell, 2^16 scale
  for (int kk = 1; kk < grid; ++kk) {
    double t = std::ldexp(static_cast<double>(kk), -static_cast<int>(kScanBits));
    double v = n.eval_double(t);
    int ds = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (ds == prev_sign && std::abs(v) > 1e-9) { prev_k = kk; continue; }
    int es = n.sign_at_dyadic(kk, kScanBits);
    int ep = prev_k == 0 ? prev_sign : n.sign_at_dyadic(prev_k, kScanBits);
    if (ep == 0) {
      double tp = std::ldexp(static_cast<double>(prev_k),
                             -static_cast<int>(kScanBits));
      found = {tp, tp};
      found_left = prev_k;
      break;
    }
    if (es == 0) {
      found = {t, t};
      found_left = kk;
      break;
    }
    if (es != ep) {
      found = bisect_span(n, prev_k, BigInt(kk), kScanBits, ep);
      found_left = prev_k;
      break;
    }
    prev_sign = es;
    prev_k = kk;
  }

  bool tangential = false;
  if (!found) {
    // Phase 2: exact Descartes-driven subdivision of the whole interval.
    Isolator iso{n};
    auto res = iso.leftmost(n.coeffs(), 0, 0);
    tangential = iso.tangential;
    if (res) found = refine_vca_bracket(n, res->first, res->second, tangential);
  } else if (found_left > 0) {
    // Certify that no root (e.g. a tangential pair) hides left of the
    // located cell: subdivide (0, found_left / 2^16) exactly.
    std::vector<BigInt> pref = n.coeffs();
    size_t d = pref.size() - 1;
    BigInt pw = 1;
    for (size_t i = 0; i < pref.size(); ++i) {
      pref[i] *= pw << (kScanBits * (d - i));
      pw *= found_left;
    }
    if (descartes_bound_01(pref) > 0) {
      Isolator iso{n};
      auto res = iso.leftmost(std::move(pref), 0, 0);
      tangential = iso.tangential;
      if (res) {
        // map the sub-interval (a, a+1) / 2^h of (0, found_left/2^16)
        // back to the original axis: (a*L, (a+1)*L) / 2^(16+h)
        BigInt lo = res->first * found_left;
        BigInt hi = lo + found_left;
        unsigned hh = kScanBits + res->second;
        int sl = n.sign_at_dyadic(lo, hh);
        int sr = n.sign_at_dyadic(hi, hh);
        if (sl == 0) {
          double r = static_cast<double>(lo) / std::ldexp(1.0, static_cast<int>(hh));
          found = {r, r};
        } else if (sr == 0) {
          double r = static_cast<double>(hi) / std::ldexp(1.0, static_cast<int>(hh));
          found = {r, r};
        } else if (sl != sr) {
          found = bisect_span(n, lo, hi, hh, sl);
        } else {
          tangential = true;
        }
      }
    }
  }

  if (tangential) out.flags.push_back("tangential_cluster_unresolved");
  if (!found) return out;
  // the open-interval search can surface the denominator edge t = 1
  if (found->first >= 1.0 - 1e-15) return out;
  out.t0 = found;
  double mid = 0.5 * (found->first + found->second);
  out.entropy_nats = std::min(std::max(-std::log(mid), 0.0), std::log(2.0));
  return out;
}

EntropyResult shift_entropy(const KneadingPair& pair) {
  return smallest_root(KneadingDeterminant::from_pair(pair.kplus, pair.kminus));
}

EntropyResult survivor_shift_entropy(const SurvivorShift& sh) {
  if (sh.degenerate) {
    EntropyResult r;
    r.flags.push_back("degenerate");
    return r;
  }
  return smallest_root(
      KneadingDeterminant::from_pair(prepend(1, sh.s), prepend(0, sh.t)));
}

EntropyResult survivor_entropy(const KneadingPair& pair,
                               const HoleKneading& hole) {
  return survivor_shift_entropy(weak_admissibilize(hole, pair));
}

double beta_from_kneading(const KneadingPair& pair) {
  EntropyResult r = shift_entropy(pair);
  if (!r.has_root())
    fail(Errc::zero_entropy, "kneading determinant has no root in (0,1)");
  return 2.0 / (r.t0->first + r.t0->second);
}

double dimension(double beta, const EntropyResult& entropy) {
  if (!(beta > 1.0) || beta > 2.0)
    fail(Errc::precondition, "beta must lie in (1,2]");
  double d = entropy.entropy_nats / std::log(beta);
  return std::min(std::max(d, 0.0), 1.0);
}

}  // namespace lorenz
