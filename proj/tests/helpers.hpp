#pragma once

#include <random>
#include <vector>

#include "lorenz/kneading.hpp"
#include "lorenz/seq.hpp"

namespace lorenz::testing {

inline EpSeq seq(const std::string& lit) { return EpSeq::parse(lit); }

/// Expands the first n symbols; brute-force oracle for order and shift.
inline std::vector<int> expand(const EpSeq& e, size_t n) {
  std::vector<int> v(n);
  for (size_t i = 0; i < n; ++i) v[i] = e.at(i);
  return v;
}

inline Word random_word(std::mt19937& rng, size_t len) {
  Word w(len);
  for (auto& b : w) b = static_cast<uint8_t>(rng() & 1);
  return w;
}

/// Random canonical EpSeq with bounded preperiod/period.
inline EpSeq random_seq(std::mt19937& rng, size_t max_pre = 6,
                        size_t max_per = 6) {
  size_t np = rng() % (max_pre + 1);
  size_t pp = 1 + rng() % max_per;
  return EpSeq::canon(random_word(rng, np), random_word(rng, pp));
}

}  // namespace lorenz::testing
