#pragma once

#include <vector>

#include "permsync/statistics.hpp"

namespace permsync {

enum class Parity { even, odd };
enum class LengthParity { plus, minus };

/// A permutation of [n] in one-line notation, 1-based semantics: the stored
/// vector holds pi_1..pi_n. Immutable after construction.
class PermutationA {
 public:
  /// Validates that images is a bijection on [n], n >= 1.
  explicit PermutationA(std::vector<int> images);

  static PermutationA identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  /// pi_i for 1 <= i <= n.
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  /// Evaluates a Type-A statistic; throws StatMismatchError on Type-B tags.
  long statistic(Statistic s) const;

  /// Parity of the inversion count (membership in the alternating group).
  Parity parity() const;

  /// (p * q)(i) = p(q(i)).
  PermutationA compose(const PermutationA& q) const;

  bool operator==(const PermutationA&) const = default;

 private:
  std::vector<int> images_;
};

/// An element of the hyperoctahedral group B_n, stored as its window
/// pi_1..pi_n with pi_i in {-n..-1, 1..n}; the full map is determined by
/// pi(-i) = -pi(i). Immutable after construction.
class SignedPermutation {
 public:
  /// Validates that the absolute values form a bijection on [n].
  explicit SignedPermutation(std::vector<int> window);

  static SignedPermutation identity(int n);

  int size() const { return static_cast<int>(window_.size()); }
  /// pi_i for any nonzero i in -n..n, via pi(-i) = -pi(i).
  int operator()(int i) const;
  const std::vector<int>& window() const { return window_; }

  /// Evaluates a Type-B statistic; throws StatMismatchError on Type-A tags.
  long statistic(Statistic s) const;

  /// Parity of inv_B (membership in B_n^+).
  LengthParity length_parity() const;

  bool operator==(const SignedPermutation&) const = default;

 private:
  std::vector<int> window_;
};

}  // namespace permsync
