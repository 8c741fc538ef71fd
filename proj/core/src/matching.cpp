#include "packnorm/matching.hpp"

#include <algorithm>

namespace packnorm {

BipartiteMatcher::BipartiteMatcher(std::size_t n_right)
    : n_right_(n_right), right_match_(n_right) {}

std::size_t BipartiteMatcher::add_left(std::vector<std::size_t> adjacency) {
  std::sort(adjacency.begin(), adjacency.end());
  adjacency.erase(std::unique(adjacency.begin(), adjacency.end()), adjacency.end());
  adj_.push_back(std::move(adjacency));
  left_match_.emplace_back();
  return adj_.size() - 1;
}

bool BipartiteMatcher::try_augment(std::size_t left, std::vector<char>& visited) {
  for (std::size_t r : adj_[left]) {
    if (visited[r]) continue;
    visited[r] = 1;
    if (!right_match_[r] || try_augment(*right_match_[r], visited)) {
      right_match_[r] = left;
      left_match_[left] = r;
      return true;
    }
  }
  return false;
}

std::size_t BipartiteMatcher::solve() {
  std::size_t matched = 0;
  for (std::size_t l = 0; l < adj_.size(); ++l) {
    std::vector<char> visited(n_right_, 0);
    if (try_augment(l, visited)) ++matched;
  }
  return matched;
}

std::optional<std::size_t> BipartiteMatcher::matched_right(std::size_t left) const {
  return left_match_[left];
}

bool BipartiteMatcher::perfect_left() const {
  return std::all_of(left_match_.begin(), left_match_.end(),
                     [](const auto& m) { return m.has_value(); });
}

}  // namespace packnorm
