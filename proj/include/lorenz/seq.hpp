#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lorenz/error.hpp"

namespace lorenz {

/// A finite binary word. Symbols are 0 or 1.
using Word = std::vector<uint8_t>;

Word parse_word(const std::string& s);
std::string word_to_string(const Word& w);

/// Exact eventually periodic binary sequence pre . per . per ...
///
/// Canonical form: the period is primitive and the preperiod is minimal
/// (its last symbol differs from the last symbol of the period).  Two
/// EpSeq values are structurally equal iff they denote the same infinite
/// sequence, so operator== is semantic equality.
class EpSeq {
 public:
  EpSeq() : per_{0} {}

  /// Canonicalizing constructor for pre . per^inf.  Throws empty_period.
  static EpSeq canon(Word pre, Word per);

  /// Parses the literal grammar "pre(per)" or "(per)".  Bare words are
  /// rejected; parsing canonicalizes.
  static EpSeq parse(const std::string& text);
  std::string str() const;

  const Word& pre() const { return pre_; }
  const Word& per() const { return per_; }
  size_t pre_len() const { return pre_.size(); }
  size_t per_len() const { return per_.size(); }
  bool pure_periodic() const { return pre_.empty(); }
  /// Number of distinct tails sigma^n, n = 0 .. tails()-1.
  size_t tails() const { return pre_.size() + per_.size(); }

  /// Symbol at position i (0-based) of the denoted infinite sequence.
  int at(size_t i) const {
    return i < pre_.size() ? pre_[i]
                           : per_[(i - pre_.size()) % per_.size()];
  }
  int front() const { return at(0); }

  /// First n symbols as a word.
  Word head(size_t n) const;

  bool operator==(const EpSeq& o) const {
    return pre_ == o.pre_ && per_ == o.per_;
  }
  /// Lexicographic order on the denoted sequences.
  std::strong_ordering operator<=>(const EpSeq& o) const;

  static EpSeq zeros() { return EpSeq(); }
  static EpSeq ones();

 private:
  Word pre_;
  Word per_;  // non-empty, primitive
};

inline std::strong_ordering compare(const EpSeq& x, const EpSeq& y) {
  return x <=> y;
}

/// sigma^n of the denoted sequence, canonical.
EpSeq shift(const EpSeq& x, size_t n);

/// x with one extra symbol in front.
EpSeq prepend(int symbol, const EpSeq& x);

/// w . x, canonical.
EpSeq concat(const Word& w, const EpSeq& x);

/// Bitwise complement (0 <-> 1); canonical form is preserved.
EpSeq complement(const EpSeq& x);

/// Some z with x < z < y, or nullopt when x = w.0.1^inf and y = w.1.0^inf
/// are adjacent.  Precondition x < y.
std::optional<EpSeq> strictly_between(const EpSeq& x, const EpSeq& y);

}  // namespace lorenz
