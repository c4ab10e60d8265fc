#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lorenz/kneading.hpp"

namespace lorenz {

/// Deterministic automaton of the two-sided lexicographic constraint
/// language { w : s <= sigma^n(w) <= t for all n }.  States track the
/// forced-prefix match lengths against both bounds; released constraints
/// reset through failure links.  Trimmed so every state has an infinite
/// continuation, then minimized.
class BoundAutomaton {
 public:
  struct State {
    int next[2] = {-1, -1};  // -1 rejects
  };

  /// Builds from a non-degenerate survivor shift.  Both bounds must be
  /// self-admissible (they are for every surgery output).
  static BoundAutomaton build(const SurvivorShift& shift);

  size_t state_count() const { return states_.size(); }
  size_t live_count() const { return states_.size(); }
  /// States of the product construction before trimming/minimization.
  size_t raw_state_count() const { return raw_states_; }
  bool empty_language() const { return states_.empty(); }
  int start() const { return start_; }
  const std::vector<State>& states() const { return states_; }

  /// Follows w through the machine over all distinct shifts' horizon.
  bool accepts(const EpSeq& w) const;

  std::string to_dot() const;

 private:
  std::vector<State> states_;
  int start_ = -1;
  size_t raw_states_ = 0;
};

/// Number of length-n labelled paths from the start state; after
/// trimming this is exactly the word count of the language.  n <= 62.
uint64_t count_words(const BoundAutomaton& aut, size_t n);

/// log of the spectral radius of the live-part adjacency matrix,
/// computed per strongly connected component.
double entropy_estimate(const BoundAutomaton& aut);

enum class Extremal { min, max };

/// Lexicographically smallest / largest accepted sequence.  Throws
/// EmptyLanguage when nothing is accepted.
EpSeq extremal(const BoundAutomaton& aut, Extremal which);

/// Sizes of the non-trivial strongly connected components of the live part.
std::vector<size_t> recurrent_components(const BoundAutomaton& aut);

}  // namespace lorenz
