#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace packnorm {

/// Deterministic bipartite maximum matching (augmenting paths, lowest index
/// first). Left vertices carry sorted adjacency lists of right vertices.
class BipartiteMatcher {
public:
  explicit BipartiteMatcher(std::size_t n_right);

  // Returns the left vertex id.
  std::size_t add_left(std::vector<std::size_t> adjacency);

  // Runs the augmenting-path search for every left vertex in id order.
  // Returns the matching size.
  std::size_t solve();

  std::optional<std::size_t> matched_right(std::size_t left) const;
  bool perfect_left() const;  // every left vertex matched

private:
  bool try_augment(std::size_t left, std::vector<char>& visited);

  std::size_t n_right_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::optional<std::size_t>> left_match_;
  std::vector<std::optional<std::size_t>> right_match_;
};

}  // namespace packnorm
