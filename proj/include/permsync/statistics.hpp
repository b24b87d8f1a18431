#pragma once

#include <span>
#include <string>

namespace permsync {

/// Dispatch key over the supported permutation statistics. Type-A tags apply
/// to plain permutations, Type-B tags to signed permutations.
enum class Statistic {
  // Type A
  exc,   ///< #{ i : pi_i > i }
  nexc,  ///< #{ i : pi_i <= i }  (weak anti-excedance)
  des,   ///< #{ i in [n-1] : pi_i > pi_{i+1} }
  asc,   ///< #{ i in [n-1] : pi_i < pi_{i+1} }
  inv,   ///< #{ i < j : pi_i > pi_j }
  // Type B
  excB,    ///< #{ i : pi_{|pi_i|} > pi_i } + #{ i : pi_i = -i }
  wkexcB,  ///< #{ i : pi_{|pi_i|} > pi_i } + #{ i : pi_i = i }
  desB,    ///< descents over indices 0..n-1 with the sentinel pi_0 = 0
  ascB,    ///< ascents over indices 0..n-1 with the sentinel pi_0 = 0
  invB,    ///< window inversions + #{ i < j : -pi_i > pi_j } + |Negs|
  negs,    ///< #{ i : pi_i < 0 }
};

bool is_type_a(Statistic s);
bool is_type_b(Statistic s);

const char* statistic_name(Statistic s);
/// Inverse of statistic_name; throws ParseError on unknown names.
Statistic statistic_from_name(const std::string& name);

// Statistic kernels. Each takes the one-line window pi_1..pi_n (0-indexed
// storage) and assumes it is a valid element; validation lives in the
// PermutationA / SignedPermutation constructors. Kept as free functions so
// the enumeration loops can call them without re-validating.

long exc(std::span<const int> images);
long nexc(std::span<const int> images);
long des(std::span<const int> images);
long asc(std::span<const int> images);
long inv(std::span<const int> images);

long exc_b(std::span<const int> window);
long wkexc_b(std::span<const int> window);
long des_b(std::span<const int> window);
long asc_b(std::span<const int> window);
long inv_b(std::span<const int> window);
long negs(std::span<const int> window);

/// Largest value the statistic can take on an element of size n; distribution
/// rows are allocated as 0..max inclusive so rows of equal n align.
long statistic_max(Statistic s, long n);

}  // namespace permsync
