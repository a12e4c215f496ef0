#pragma once

#include <vector>

#include "quivalg/quiver.hpp"

namespace quivalg {

// Multi-pattern factor matcher over arrow-index sequences.  Feeding a path
// arrow by arrow tracks the longest suffix of the input that is a prefix of
// some pattern; a state is "dead" once a whole pattern has occurred as a
// factor.  Dead-ness is suffix-monotone: every extension of a dead word is
// dead, so the dead flag is propagated along transitions.
class FactorMatcher {
 public:
  FactorMatcher(int alphabet_size, const std::vector<std::vector<int>>& patterns);

  int root() const { return 0; }
  int state_count() const { return static_cast<int>(dead_.size()); }
  int step(int state, int symbol) const { return delta_[state][symbol]; }
  bool dead(int state) const { return dead_[state]; }

  // State reached from the root on the whole word.
  int scan(const std::vector<int>& word) const;
  bool has_factor(const std::vector<int>& word) const;

 private:
  int alphabet_;
  std::vector<std::vector<int>> delta_;
  std::vector<bool> dead_;
};

}  // namespace quivalg
