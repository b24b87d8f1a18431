#include <doctest.h>

#include <random>
#include <vector>

#include "permsync/errors.hpp"
#include "permsync/properties.hpp"
#include "permsync/recurrence.hpp"

using namespace permsync;

TEST_CASE("log-concavity") {
  CHECK(is_log_concave({1, 4, 5}).verdict);
  CHECK(is_log_concave({1, 5, 10}).verdict);
  CHECK_THROWS_AS(is_log_concave({}), std::invalid_argument);
  CHECK(is_log_concave({3}).verdict);
  CHECK(is_log_concave({2, 9}).verdict);
  const PropertyReport bad = is_log_concave({7, 5, 4});
  CHECK_FALSE(bad.verdict);
  CHECK(bad.witnesses == std::vector<std::vector<long>>{{1}});
  // Internal zeros satisfy the inequality trivially.
  CHECK(is_log_concave({1, 0, 0, 1}).verdict);
}

TEST_CASE("unimodality") {
  CHECK(is_unimodal({1, 2, 2, 1}).verdict);
  CHECK(is_unimodal({1, 1, 1}).verdict);
  CHECK(is_unimodal({3, 2, 1}).verdict);
  CHECK(is_unimodal({1, 2, 3}).verdict);
  CHECK_FALSE(is_unimodal({1, 2, 1, 2}).verdict);
  // Log-concave but with an internal zero, hence not unimodal.
  CHECK_FALSE(is_unimodal({1, 0, 0, 1}).verdict);
}

TEST_CASE("even and odd log-concavity") {
  CHECK(is_even_log_concave({0, 1, 0}).verdict);  // no even interior index
  CHECK(is_odd_log_concave({0, 1, 0}).verdict);
  CHECK_FALSE(is_odd_log_concave({2, 1, 3}).verdict);
  CHECK(is_even_log_concave({2, 1, 3}).verdict);
  CHECK(is_even_log_concave({5, 1, 2, 1, 5}).verdict);
}

TEST_CASE("synchronised pairs") {
  const Seq A{1, 4, 5}, B{1, 5, 10}, C{1, 6, 25};
  CHECK(is_synchronised(A, B).verdict);
  CHECK(is_strongly_synchronised(A, B).verdict);
  CHECK(is_strongly_synchronised(B, C).verdict);
  CHECK_FALSE(is_synchronised(A, C).verdict);
  const PropertyReport ss = is_strongly_synchronised(A, C);
  CHECK_FALSE(ss.verdict);
  CHECK(ss.witnesses == std::vector<std::vector<long>>{{1}});
  CHECK_THROWS_AS(is_synchronised({1, 2}, {1, 2, 3}), LengthMismatchError);
  CHECK_THROWS_AS(is_strongly_synchronised({1}, {}), LengthMismatchError);
}

TEST_CASE("strong synchronisation implies synchronisation implies log-concavity") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const long len = 3 + static_cast<long>(rng() % 4);
    Seq a(len), b(len);
    for (long i = 0; i < len; ++i) {
      a[i] = static_cast<long>(rng() % 20);
      b[i] = static_cast<long>(rng() % 20);
    }
    if (is_strongly_synchronised(a, b).verdict) {
      CHECK(is_synchronised(a, b).verdict);
    }
    if (is_synchronised(a, b).verdict) {
      CHECK(is_log_concave(a).verdict);
      CHECK(is_log_concave(b).verdict);
    }
    // Reflexivity reduces to plain log-concavity.
    CHECK(is_strongly_synchronised(a, a).verdict == is_log_concave(a).verdict);
  }
}

TEST_CASE("ratio-alternating patterns") {
  const Seq A{1, 5, 7}, B{3, 4, 10}, C{2, 6, 8};
  const RatioAlternatingResult ab = is_ratio_alternating(A, B);
  CHECK(ab.report.verdict);
  CHECK(ab.pattern == RatioPattern::evenBelow);
  const RatioAlternatingResult bc = is_ratio_alternating(B, C);
  CHECK(bc.report.verdict);
  CHECK(bc.pattern == RatioPattern::evenAbove);
  const RatioAlternatingResult ac = is_ratio_alternating(A, C);
  CHECK_FALSE(ac.report.verdict);
  CHECK(ac.pattern == RatioPattern::neither);
  CHECK(is_ratio_alternating({2, 3, 2}, {2, 3, 2}).pattern == RatioPattern::both);
}

TEST_CASE("exhaustive mixed-sequence scan") {
  const Seq T1{1, 5, 3}, T2{7, 6, 3}, T3{6, 6, 4};
  CHECK(is_strongly_synchronised(T1, T2).verdict);
  CHECK(is_strongly_synchronised(T2, T3).verdict);
  CHECK(is_strongly_synchronised(T1, T3).verdict);
  const PropertyReport scan = s_family_all_log_concave({T1, T2, T3});
  CHECK_FALSE(scan.verdict);
  CHECK(scan.witness_seq == Seq{7, 5, 4});

  CHECK(s_family_all_log_concave({Seq{1, 4, 5}, Seq{1, 5, 10}}).verdict);
  CHECK_THROWS_AS(
      s_family_all_log_concave({Seq(21, 1), Seq(21, 1)}, kDefaultExhaustiveCap),
      CapExceededError);
}

TEST_CASE("min/max criterion matches the exhaustive scan") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    const long len = 3 + static_cast<long>(rng() % 6);
    Seq a(len), b(len);
    for (long i = 0; i < len; ++i) {
      a[i] = static_cast<long>(rng() % 30);
      b[i] = static_cast<long>(rng() % 30);
    }
    CHECK(minmax_vs_exhaustive_check(a, b).verdict);
  }
}

TEST_CASE("interlacing") {
  const PropertyReport fail = interlacing_check({1, 4, 5}, {1, 6, 25});
  CHECK_FALSE(fail.verdict);
  // The j = l, i = 1 instances are the strong-synchronisation inequalities.
  bool found = false;
  for (const auto& w : fail.witnesses)
    found = found || (w == std::vector<long>{1, 1, 1});
  CHECK(found);

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const long len = 3 + static_cast<long>(rng() % 4);
    Seq a(len), b(len);
    for (long i = 0; i < len; ++i) {
      a[i] = 1 + static_cast<long>(rng() % 15);
      b[i] = 1 + static_cast<long>(rng() % 15);
    }
    CHECK(interlacing_check(a, b).verdict ==
          is_strongly_synchronised(a, b).verdict);
  }
}

TEST_CASE("alternating equivalence") {
  // Neither side of the equivalence holds; the check still passes.
  CHECK(alternating_equivalence_check({0, 1, 0}, {1, 0, 2}).verdict);
  CHECK_THROWS_AS(alternating_equivalence_check({1, 5, 7}, {2, 6, 8}),
                  NotApplicableError);

  const PairTable a = pq_a(50);
  const PairTable b = pq_b(50);
  for (long n = 1; n <= 50; ++n) {
    CHECK(is_ratio_alternating(a.first.row(n), a.second.row(n)).report.verdict);
    CHECK(alternating_equivalence_check(a.first.row(n), a.second.row(n)).verdict);
    CHECK(alternating_equivalence_check(b.first.row(n), b.second.row(n)).verdict);
  }
  CHECK(is_ratio_alternating(a.first.row(6), a.second.row(6)).pattern ==
        RatioPattern::evenAbove);
}

TEST_CASE("excedance split rows are strongly synchronised and unimodal") {
  const PairTable a = pq_a(60);
  const PairTable b = pq_b(60);
  for (long n = 1; n <= 60; ++n) {
    CHECK(is_strongly_synchronised(a.first.row(n), a.second.row(n)).verdict);
    CHECK(is_strongly_synchronised(b.first.row(n), b.second.row(n)).verdict);
    CHECK(is_unimodal(a.first.row(n)).verdict);
    CHECK(is_unimodal(b.second.row(n)).verdict);
  }
}
