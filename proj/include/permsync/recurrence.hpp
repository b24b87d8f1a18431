#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "permsync/bigint.hpp"

namespace permsync {

/// The seven triangle families the library computes by recurrence.
///  eulerA            A_{n,k}: permutations of [n] with k descents
///  pqA               P/Q: excedances over even and odd permutations
///  eulerB            B_{n,k}: signed permutations with k Type-B descents
///  pqB               P^B/Q^B: Type-B excedances split by length parity
///  secondOrderEuler  H_{n,k}: Stirling permutations with k descents
///  gammaA            gamma coefficients of the descent polynomial of S_n
///  gammaB            gamma coefficients of the Type-B descent polynomial
enum class FamilyId { eulerA, pqA, eulerB, pqB, secondOrderEuler, gammaA, gammaB };

/// pqA and pqB produce two coupled triangles; the rest produce one.
constexpr bool is_pair_family(FamilyId f) {
  return f == FamilyId::pqA || f == FamilyId::pqB;
}

const char* family_name(FamilyId f);
std::optional<FamilyId> family_from_name(std::string_view name);

/// Rows n = 1..max_n of a triangle. Row n stores entries for consecutive k
/// starting at k_min(); reading any k outside the stored range yields 0,
/// matching the convention that out-of-range recurrence terms vanish.
class TriangularArray {
 public:
  TriangularArray(long k_offset, std::vector<Seq> rows);

  long max_n() const { return static_cast<long>(rows_.size()); }
  long k_min() const { return k_offset_; }
  long k_max(long n) const {
    return k_offset_ + static_cast<long>(row(n).size()) - 1;
  }
  /// Row n for 1 <= n <= max_n; throws std::out_of_range otherwise.
  const Seq& row(long n) const;
  /// Entry (n, k); requires 1 <= n <= max_n, returns 0 for out-of-range k.
  Int at(long n, long k) const;

 private:
  long k_offset_;
  std::vector<Seq> rows_;
};

/// Two triangles sharing row conventions (P with Q, or their Type-B forms).
struct PairTable {
  TriangularArray first;
  TriangularArray second;
};

/// Eulerian numbers: A_{n,k} = (k+1) A_{n-1,k} + (n-k) A_{n-1,k-1},
/// rows k = 0..n-1 from A_{1,0} = 1.
TriangularArray eulerian_a(long n_max);

/// Excedance counts over even (first) and odd (second) permutations:
/// P_{n,k} = k Q_{n-1,k} + (n-k) Q_{n-1,k-1} + P_{n-1,k} and the same with
/// P and Q swapped, rows k = 0..n-1 from P_1 = (1), Q_1 = (0).
PairTable pq_a(long n_max);

/// Type-B Eulerian numbers: B_{n,k} = (2k+1) B_{n-1,k} + (2(n-k)+1) B_{n-1,k-1},
/// rows k = 0..n from B_1 = (1,1).
TriangularArray eulerian_b(long n_max);

/// Type-B excedance counts split by length parity:
/// P^B_{n,k} = 2k Q^B_{n-1,k} + (2n-2k+1) Q^B_{n-1,k-1} + P^B_{n-1,k} and the
/// mirrored rule, rows k = 0..n from P^B_1 = (1,0), Q^B_1 = (0,1).
PairTable pq_b(long n_max);

/// Second-order Eulerian numbers: H_{n,k} = k H_{n-1,k} + (2n-k) H_{n-1,k-1},
/// rows k = 1..n from H_{1,1} = 1. Row sums are (2n-1)!!.
TriangularArray second_order_eulerian(long n_max);

/// Gamma coefficients of the S_n descent polynomial:
/// T_{n,k} = (k+1) T_{n-1,k} + (2n-4k) T_{n-1,k-1}, rows k = 0..(n-1)/2 from
/// T_{1,0} = 1. Reconstruction: sum_k T_{n,k} t^k (1+t)^(n-1-2k) = A_n(t).
TriangularArray gamma_a(long n_max);

/// Gamma coefficients of the B_n descent polynomial:
/// R_{n,k} = (2k+1) R_{n-1,k} + 4(n+1-2k) R_{n-1,k-1}, rows k = 0..n/2 from
/// R_{1,0} = 1. Reconstruction: sum_k R_{n,k} t^k (1+t)^(n-2k) = B_n(t).
TriangularArray gamma_b(long n_max);

/// Dispatch by family id; build_family rejects pair families and
/// build_pair_family rejects single families (std::invalid_argument).
TriangularArray build_family(FamilyId f, long n_max);
PairTable build_pair_family(FamilyId f, long n_max);

/// The log-concavity difference of a pair-table entry, split into the nine
/// previous-row products used in the inductive strong-synchronisation proof.
/// The split is an exact algebraic identity, so residual is always 0; tests
/// and the verifier recompute it rather than assume it.
struct NineTermSplit {
  long n = 0;
  long k = 0;
  std::array<Int, 9> term{};
  /// first_{n,k}^2 - first_{n,k+1} * first_{n,k-1}.
  Int difference;
  /// difference minus the term sum.
  Int residual;

  Int term_sum() const;
};

/// Valid for 1 <= k <= n-2 (throws std::out_of_range otherwise); pq must be a
/// pq_a table holding rows up to n.
NineTermSplit nine_term_split_a(const PairTable& pq, long n, long k);

/// Type-B version, valid for 1 <= k <= n-1; pq must be a pq_b table.
NineTermSplit nine_term_split_b(const PairTable& pq, long n, long k);

}  // namespace permsync
