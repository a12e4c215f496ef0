#include "quivalg/matcher.hpp"

#include <queue>

namespace quivalg {

FactorMatcher::FactorMatcher(int alphabet_size, const std::vector<std::vector<int>>& patterns)
    : alphabet_(alphabet_size) {
  // Trie construction.
  std::vector<std::vector<int>> next(1, std::vector<int>(alphabet_, -1));
  dead_.assign(1, false);
  for (const auto& pat : patterns) {
    int at = 0;
    for (int sym : pat) {
      if (next[at][sym] < 0) {
        next[at][sym] = static_cast<int>(next.size());
        next.emplace_back(alphabet_, -1);
        dead_.push_back(false);
      }
      at = next[at][sym];
    }
    dead_[at] = true;
  }

  // BFS turns the trie into a full transition table; missing edges follow
  // the failure function, and a state whose failure state is dead is dead.
  delta_.assign(next.size(), std::vector<int>(alphabet_, 0));
  std::vector<int> fail(next.size(), 0);
  std::queue<int> queue;
  for (int sym = 0; sym < alphabet_; ++sym) {
    int child = next[0][sym];
    if (child >= 0) {
      delta_[0][sym] = child;
      fail[child] = 0;
      queue.push(child);
    }
  }
  while (!queue.empty()) {
    int state = queue.front();
    queue.pop();
    if (dead_[fail[state]]) dead_[state] = true;
    for (int sym = 0; sym < alphabet_; ++sym) {
      int child = next[state][sym];
      if (child >= 0) {
        fail[child] = delta_[fail[state]][sym];
        delta_[state][sym] = child;
        queue.push(child);
      } else {
        delta_[state][sym] = delta_[fail[state]][sym];
      }
    }
  }

  // Dead states absorb, so step() is safe regardless of where a caller stops.
  for (int state = 0; state < state_count(); ++state) {
    if (dead_[state]) delta_[state].assign(alphabet_, state);
  }
}

int FactorMatcher::scan(const std::vector<int>& word) const {
  int state = 0;
  for (int sym : word) {
    state = delta_[state][sym];
    if (dead_[state]) return state;
  }
  return state;
}

bool FactorMatcher::has_factor(const std::vector<int>& word) const { return dead_[scan(word)]; }

}  // namespace quivalg
