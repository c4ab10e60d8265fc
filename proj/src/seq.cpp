#include "lorenz/seq.hpp"

#include <algorithm>
#include <numeric>

namespace lorenz {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::parse_error: return "ParseError";
    case Errc::empty_period: return "EmptyPeriod";
    case Errc::precondition: return "Precondition";
    case Errc::not_admissible_pair: return "NotAdmissiblePair";
    case Errc::not_critical_hole: return "NotCriticalHole";
    case Errc::iteration_cap_exceeded: return "IterationCapExceeded";
    case Errc::degenerate_hole: return "DegenerateHole";
    case Errc::non_periodic_bound: return "NonPeriodicBound";
    case Errc::zero_entropy: return "ZeroEntropy";
    case Errc::empty_language: return "EmptyLanguage";
    case Errc::out_of_delta: return "OutOfDelta";
    case Errc::internal: return "Internal";
  }
  return "Unknown";
}

Word parse_word(const std::string& s) {
  Word w;
  w.reserve(s.size());
  for (char ch : s) {
    if (ch == '0') w.push_back(0);
    else if (ch == '1') w.push_back(1);
    else fail(Errc::parse_error, std::string("invalid symbol '") + ch + "'");
  }
  return w;
}

std::string word_to_string(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (uint8_t b : w) s.push_back(b ? '1' : '0');
  return s;
}

namespace {

// Smallest d dividing n with w = (w|_d)^{n/d}.
size_t primitive_root_len(const Word& w) {
  size_t n = w.size();
  for (size_t d = 1; d <= n / 2; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (size_t i = d; i < n && ok; ++i) ok = (w[i] == w[i % d]);
    if (ok) return d;
  }
  return n;
}

}  // namespace

EpSeq EpSeq::canon(Word pre, Word per) {
  if (per.empty()) fail(Errc::empty_period, "period must be non-empty");
  for (uint8_t b : pre)
    if (b > 1) fail(Errc::precondition, "symbols must be 0 or 1");
  for (uint8_t b : per)
    if (b > 1) fail(Errc::precondition, "symbols must be 0 or 1");

  per.resize(primitive_root_len(per));
  // Absorb matching trailing symbols: u.s (v.s)^inf = u (s.v)^inf.
  while (!pre.empty() && pre.back() == per.back()) {
    pre.pop_back();
    std::rotate(per.begin(), per.end() - 1, per.end());
  }
  EpSeq e;
  e.pre_ = std::move(pre);
  e.per_ = std::move(per);
  return e;
}

EpSeq EpSeq::parse(const std::string& text) {
  auto open = text.find('(');
  auto close = text.find(')');
  if (open == std::string::npos || close == std::string::npos ||
      close != text.size() - 1 || close < open) {
    fail(Errc::parse_error,
         "sequence literal must be \"pre(per)\" or \"(per)\": " + text);
  }
  Word pre = parse_word(text.substr(0, open));
  Word per = parse_word(text.substr(open + 1, close - open - 1));
  if (per.empty()) fail(Errc::empty_period, "empty period in: " + text);
  return canon(std::move(pre), std::move(per));
}

std::string EpSeq::str() const {
  return word_to_string(pre_) + "(" + word_to_string(per_) + ")";
}

Word EpSeq::head(size_t n) const {
  Word w;
  w.reserve(n);
  for (size_t i = 0; i < n; ++i) w.push_back(static_cast<uint8_t>(at(i)));
  return w;
}

std::strong_ordering EpSeq::operator<=>(const EpSeq& o) const {
  // Two eventually periodic sequences agreeing on their preperiods plus
  // one lcm of the periods are equal.
  size_t bound = pre_.size() + o.pre_.size() +
                 std::lcm(per_.size(), o.per_.size());
  for (size_t i = 0; i < bound; ++i) {
    int a = at(i), b = o.at(i);
    if (a != b) return a <=> b;
  }
  return std::strong_ordering::equal;
}

EpSeq EpSeq::ones() {
  return canon({}, {1});
}

EpSeq shift(const EpSeq& x, size_t n) {
  if (n <= x.pre_len()) {
    Word pre(x.pre().begin() + static_cast<long>(n), x.pre().end());
    return EpSeq::canon(std::move(pre), x.per());
  }
  size_t k = (n - x.pre_len()) % x.per_len();
  Word per = x.per();
  std::rotate(per.begin(), per.begin() + static_cast<long>(k), per.end());
  return EpSeq::canon({}, std::move(per));
}

EpSeq prepend(int symbol, const EpSeq& x) {
  Word pre;
  pre.push_back(static_cast<uint8_t>(symbol));
  pre.insert(pre.end(), x.pre().begin(), x.pre().end());
  return EpSeq::canon(std::move(pre), x.per());
}

EpSeq concat(const Word& w, const EpSeq& x) {
  Word pre = w;
  pre.insert(pre.end(), x.pre().begin(), x.pre().end());
  return EpSeq::canon(std::move(pre), x.per());
}

EpSeq complement(const EpSeq& x) {
  Word pre = x.pre(), per = x.per();
  for (auto& b : pre) b ^= 1;
  for (auto& b : per) b ^= 1;
  return EpSeq::canon(std::move(pre), std::move(per));
}

std::optional<EpSeq> strictly_between(const EpSeq& x, const EpSeq& y) {
  if (compare(x, y) != std::strong_ordering::less)
    fail(Errc::precondition, "strictly_between requires x < y");

  size_t i = 0;
  while (x.at(i) == y.at(i)) ++i;  // terminates: x != y

  bool x_tail_ones = (shift(x, i + 1) == EpSeq::ones());
  bool y_tail_zeros = (shift(y, i + 1) == EpSeq::zeros());
  if (x_tail_ones && y_tail_zeros) return std::nullopt;  // adjacent

  auto valid = [&](const EpSeq& z) {
    return compare(x, z) == std::strong_ordering::less &&
           compare(z, y) == std::strong_ordering::less;
  };

  EpSeq c1 = EpSeq::canon(x.head(i), {0, 1});
  if (valid(c1)) return c1;

  if (!x_tail_ones) {
    size_t j = i + 1;
    while (x.at(j) != 0) ++j;
    Word pre = x.head(j);
    pre.push_back(1);
    EpSeq c2 = concat(pre, shift(x, j + 1));
    if (valid(c2)) return c2;
    fail(Errc::internal, "strictly_between: flip candidate out of range");
  }
  // x = w.0.1^inf, y-tail below is not all zeros
  size_t m = i + 1;
  while (y.at(m) != 1) ++m;
  Word pre = y.head(m);
  pre.push_back(0);
  EpSeq c3 = EpSeq::canon(std::move(pre), {1});
  if (valid(c3)) return c3;
  fail(Errc::internal, "strictly_between: predecessor candidate out of range");
}

}  // namespace lorenz
