#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "permsync/bigint.hpp"
#include "permsync/recurrence.hpp"

using namespace permsync;

namespace {

Int row_sum(const Seq& s) {
  Int t = 0;
  for (const Int& x : s) t += x;
  return t;
}

// All Stirling permutations of order n, built by inserting the block "nn"
// into every gap of each order n-1 permutation.
std::vector<std::vector<int>> stirling_permutations(int n) {
  std::vector<std::vector<int>> acc = {{}};
  for (int v = 1; v <= n; ++v) {
    std::vector<std::vector<int>> next;
    for (const auto& w : acc)
      for (std::size_t gap = 0; gap <= w.size(); ++gap) {
        std::vector<int> ext(w.begin(), w.begin() + gap);
        ext.push_back(v);
        ext.push_back(v);
        ext.insert(ext.end(), w.begin() + gap, w.end());
        next.push_back(std::move(ext));
      }
    acc = std::move(next);
  }
  return acc;
}

// Descents with a trailing sentinel 0, so the final position always counts.
long stirling_descents(const std::vector<int>& w) {
  long d = 1;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1];
  return d;
}

}  // namespace

TEST_CASE("eulerian triangle") {
  const TriangularArray a = eulerian_a(7);
  CHECK(a.row(1) == Seq{1});
  CHECK(a.row(4) == Seq{1, 11, 11, 1});
  CHECK(a.row(6) == Seq{1, 57, 302, 302, 57, 1});
  CHECK(a.row(7) == Seq{1, 120, 1191, 2416, 1191, 120, 1});
  for (long n = 1; n <= 7; ++n) {
    Int nf = 1;
    for (long i = 2; i <= n; ++i) nf *= i;
    CHECK(row_sum(a.row(n)) == nf);
  }
  // A_{n,1} = 2^n - n - 1 stays above n for n >= 3.
  for (long n = 3; n <= 7; ++n) CHECK(a.at(n, 1) >= n + 1);
}

TEST_CASE("excedance split triangles") {
  const PairTable pq = pq_a(30);
  CHECK(pq.first.row(5) == Seq{1, 11, 36, 11, 1});
  CHECK(pq.second.row(5) == Seq{0, 15, 30, 15, 0});
  const TriangularArray a = eulerian_a(30);
  for (long n = 1; n <= 30; ++n) {
    const Seq& p = pq.first.row(n);
    const Seq& q = pq.second.row(n);
    REQUIRE(p.size() == q.size());
    for (std::size_t k = 0; k < p.size(); ++k)
      CHECK(p[k] + q[k] == a.row(n)[k]);
    CHECK(p[0] == 1);
    CHECK(q[0] == 0);
  }
}

TEST_CASE("type B triangles") {
  const TriangularArray b = eulerian_b(10);
  CHECK(b.row(1) == Seq{1, 1});
  CHECK(b.row(2) == Seq{1, 6, 1});
  CHECK(b.row(3) == Seq{1, 23, 23, 1});
  for (long n = 1; n <= 10; ++n) {
    Int bn = 1;
    for (long i = 2; i <= n; ++i) bn *= i;
    bn <<= n;
    CHECK(row_sum(b.row(n)) == bn);
  }

  const PairTable pq = pq_b(30);
  CHECK(pq.first.row(1) == Seq{1, 0});
  CHECK(pq.second.row(1) == Seq{0, 1});
  CHECK(pq.first.row(2) == Seq{1, 2, 1});
  CHECK(pq.second.row(2) == Seq{0, 4, 0});
  const TriangularArray b30 = eulerian_b(30);
  for (long n = 1; n <= 30; ++n)
    for (std::size_t k = 0; k < pq.first.row(n).size(); ++k)
      CHECK(pq.first.row(n)[k] + pq.second.row(n)[k] == b30.row(n)[k]);
}

TEST_CASE("alternating binomial differences") {
  const PairTable a = pq_a(200);
  const PairTable b = pq_b(200);
  for (long n = 1; n <= 200; ++n) {
    for (long k = 0; k <= n - 1; ++k) {
      const Int want = (k % 2 == 0 ? 1 : -1) * binomial(n - 1, k);
      CHECK(a.first.at(n, k) - a.second.at(n, k) == want);
    }
    for (long k = 0; k <= n; ++k) {
      const Int want = (k % 2 == 0 ? 1 : -1) * binomial(n, k);
      CHECK(b.first.at(n, k) - b.second.at(n, k) == want);
    }
  }
}

TEST_CASE("second-order eulerian numbers count stirling descents") {
  const TriangularArray h = second_order_eulerian(10);
  CHECK(h.k_min() == 1);
  CHECK(h.row(1) == Seq{1});
  CHECK(h.row(2) == Seq{1, 2});
  CHECK(h.row(3) == Seq{1, 8, 6});
  CHECK(h.row(4) == Seq{1, 22, 58, 24});
  for (long n = 1; n <= 10; ++n) {
    Int dfact = 1;
    for (long i = 3; i <= 2 * n - 1; i += 2) dfact *= i;
    CHECK(row_sum(h.row(n)) == dfact);
  }
  for (int n = 1; n <= 5; ++n) {
    Seq hist(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& w : stirling_permutations(n))
      ++hist[static_cast<std::size_t>(stirling_descents(w))];
    for (long k = 1; k <= n; ++k)
      CHECK(h.at(n, k) == hist[static_cast<std::size_t>(k)]);
    CHECK(hist[0] == 0);
  }
}

TEST_CASE("gamma expansions reconstruct the descent polynomials") {
  const TriangularArray ga = gamma_a(20);
  const TriangularArray gb = gamma_b(20);
  CHECK(ga.row(3) == Seq{1, 2});
  CHECK(ga.row(4) == Seq{1, 8});
  CHECK(ga.row(5) == Seq{1, 22, 16});
  CHECK(gb.row(1) == Seq{1});
  CHECK(gb.row(2) == Seq{1, 4});

  const TriangularArray a = eulerian_a(20);
  const TriangularArray b = eulerian_b(20);
  for (long n = 1; n <= 20; ++n) {
    Seq accA;
    for (long k = 0; k <= ga.k_max(n); ++k) {
      Seq base = one_plus_t_pow(n - 1 - 2 * k);
      Seq term(static_cast<std::size_t>(k), 0);  // multiply by t^k
      term.insert(term.end(), base.begin(), base.end());
      for (Int& c : term) c *= ga.at(n, k);
      accA = poly_add(accA, term);
    }
    CHECK(accA == a.row(n));

    Seq accB;
    for (long k = 0; k <= gb.k_max(n); ++k) {
      Seq base = one_plus_t_pow(n - 2 * k);
      Seq term(static_cast<std::size_t>(k), 0);
      term.insert(term.end(), base.begin(), base.end());
      for (Int& c : term) c *= gb.at(n, k);
      accB = poly_add(accB, term);
    }
    CHECK(accB == b.row(n));
  }
}

TEST_CASE("triangular array bounds") {
  const TriangularArray a = eulerian_a(4);
  CHECK_THROWS_AS(a.row(0), std::out_of_range);
  CHECK_THROWS_AS(a.row(5), std::out_of_range);
  CHECK(a.at(4, -1) == 0);
  CHECK(a.at(4, 4) == 0);
  CHECK(a.k_max(4) == 3);
}

TEST_CASE("family dispatch") {
  for (FamilyId f : {FamilyId::eulerA, FamilyId::pqA, FamilyId::eulerB,
                     FamilyId::pqB, FamilyId::secondOrderEuler, FamilyId::gammaA,
                     FamilyId::gammaB})
    CHECK(family_from_name(family_name(f)) == f);
  CHECK_FALSE(family_from_name("euler").has_value());
  CHECK_THROWS_AS(build_family(FamilyId::pqA, 3), std::invalid_argument);
  CHECK_THROWS_AS(build_pair_family(FamilyId::eulerA, 3), std::invalid_argument);
  CHECK(build_family(FamilyId::gammaB, 2).row(2) == Seq{1, 4});
  CHECK(build_pair_family(FamilyId::pqB, 2).first.row(2) == Seq{1, 2, 1});
}

TEST_CASE("nine-term splits are exact") {
  const PairTable a = pq_a(12);
  for (long n = 2; n <= 12; ++n)
    for (long k = 1; k <= n - 2; ++k) {
      const NineTermSplit s = nine_term_split_a(a, n, k);
      CHECK(s.residual == 0);
      CHECK(s.term_sum() == s.difference);
      CHECK(s.term[5] == 0);
      CHECK(s.term[1] >= 0);
    }
  const PairTable b = pq_b(12);
  for (long n = 2; n <= 12; ++n)
    for (long k = 1; k <= n - 1; ++k) {
      const NineTermSplit s = nine_term_split_b(b, n, k);
      CHECK(s.residual == 0);
      CHECK(s.term[5] == 0);
      CHECK(s.term[1] >= 0);
    }

  // T_2 at (5,2) is the square (Q_{4,2} - Q_{4,1})^2 = (4 - 7)^2.
  CHECK(nine_term_split_a(a, 5, 2).term[1] == 9);

  CHECK_THROWS_AS(nine_term_split_a(a, 5, 0), std::out_of_range);
  CHECK_THROWS_AS(nine_term_split_a(a, 5, 4), std::out_of_range);
  CHECK_THROWS_AS(nine_term_split_b(b, 5, 5), std::out_of_range);
}
