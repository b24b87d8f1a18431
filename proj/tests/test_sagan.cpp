#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "permsync/errors.hpp"
#include "permsync/properties.hpp"
#include "permsync/sagan.hpp"

using namespace permsync;

TEST_CASE("presets rebuild the recurrence families") {
  const std::vector<FamilyId> ids = preset_family_ids();
  REQUIRE(ids.size() == 5);
  for (FamilyId f : ids) {
    const TriangularArray built = build_triangle(preset_rule(f), 15);
    const TriangularArray ref = build_family(f, 15);
    CHECK(built.k_min() == ref.k_min());
    for (long n = 1; n <= 15; ++n) CHECK(built.row(n) == ref.row(n));
  }
  CHECK_THROWS_AS(preset_rule(FamilyId::pqA), std::invalid_argument);
  CHECK_THROWS_AS(preset_rule(FamilyId::pqB), std::invalid_argument);
  CHECK(build_triangle(preset_rule(FamilyId::eulerA), 6).row(6) ==
        Seq{1, 57, 302, 302, 57, 1});
}

TEST_CASE("original condition rejects the eulerian rule") {
  const Certificate cert = certify_sagan(preset_rule(FamilyId::eulerA), 10);
  CHECK_FALSE(cert.verdict);
  CHECK(cert.n_max_checked == 10);
  bool has31 = false;
  for (const auto& [n, k] : cert.witnesses) has31 = has31 || (n == 3 && k == 1);
  CHECK(has31);

  const ConditionPoint p = original_condition_point(preset_rule(FamilyId::eulerA), 3, 1);
  CHECK(p.lhs == 8);
  CHECK(p.rhs == 10);
  CHECK_FALSE(p.holds);
}

TEST_CASE("constant-coefficient rules satisfy the original condition") {
  CoeffRule rule;
  rule.name = "constant";
  rule.c = {0, 0, 2};
  rule.d = {0, 0, 3};
  rule.initial_row = {1};
  rule.k_range = KRange::zeroToN;
  const Certificate cert = certify_sagan(rule, 12);
  CHECK(cert.verdict);
  CHECK(cert.uniform);
  CHECK(original_implies_modified(rule, 12).verdict);
}

TEST_CASE("modified condition certifies the five applications") {
  struct Expected {
    FamilyId id;
    const char* tightness;
  };
  const Expected table[] = {
      {FamilyId::eulerA, "2 >= 2"},
      {FamilyId::eulerB, "8 >= 8"},
      {FamilyId::secondOrderEuler, "2 >= 2"},
      {FamilyId::gammaA, "8 >= 8"},
      {FamilyId::gammaB, "32 >= 32"},
  };
  for (const Expected& e : table) {
    const Certificate cert = certify_modified_sagan(preset_rule(e.id), 30);
    CHECK(cert.verdict);
    CHECK(cert.witnesses.empty());
    CHECK(cert.uniform);
    CHECK(cert.tightness == e.tightness);

    const TriangularArray t = build_triangle(preset_rule(e.id), 60);
    for (long n = 1; n <= 60; ++n) CHECK(is_log_concave(t.row(n)).verdict);
  }
}

TEST_CASE("original condition implies the modified one") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    CoeffRule rule;
    rule.name = "random";
    auto pick = [&] { return static_cast<long>(rng() % 5) - 1; };
    rule.c = {pick(), pick(), static_cast<long>(rng() % 6)};
    rule.d = {pick(), pick(), static_cast<long>(rng() % 6)};
    rule.initial_row = {1};
    rule.k_range = KRange::zeroToN;
    CHECK(original_implies_modified(rule, 8).verdict);
  }
}

TEST_CASE("negative coefficients are rejected when building") {
  CoeffRule rule;
  rule.name = "descending";
  rule.c = {1, 0, -2};  // c(n,k) = k - 2, negative at k < 2
  rule.d = {0, 1, 0};
  rule.initial_row = {1};
  rule.k_range = KRange::zeroToN;
  try {
    build_triangle(rule, 5);
    FAIL("expected RuleViolationError");
  } catch (const RuleViolationError& e) {
    CHECK(e.n == 2);
    CHECK(e.k >= 0);
  }
}

TEST_CASE("rule files parse and round-trip") {
  const std::string text =
      "# eulerian rule, written out\n"
      "name = euler-file\n"
      "c = 1 0 1\n"
      "d = -1 1 0\n"
      "pairing = c-unshifted\n"
      "initial = 1\n"
      "offset = 0\n"
      "krange = 0..n-1\n";
  const CoeffRule rule = parse_rule_text(text);
  CHECK(rule.name == "euler-file");
  CHECK(rule.c == Affine{1, 0, 1});
  CHECK(rule.d == Affine{-1, 1, 0});
  CHECK(rule.pairing == TermPairing::cOnUnshifted);
  const TriangularArray t = build_triangle(rule, 6);
  CHECK(t.row(6) == Seq{1, 57, 302, 302, 57, 1});

  CHECK_THROWS_AS(parse_rule_text("c = 1 0"), ParseError);
  CHECK_THROWS_AS(parse_rule_text("nonsense\n"), ParseError);
  CHECK_THROWS_AS(parse_rule_text("c = 1 0 1\n"), ParseError);  // missing d, initial
  CHECK_THROWS_AS(
      parse_rule_text("c = 1 0 1\nd = 0 1 0\ninitial = 1\noffset = 0\nkrange = 1..n\n"),
      ParseError);  // offset disagrees with the k-range
  std::istringstream in("c = 0 0 1\nd = 0 0 1\ninitial = 2 3\n");
  const CoeffRule from_stream = parse_rule(in);
  CHECK(from_stream.name == "custom");
  CHECK(from_stream.initial_row == Seq{2, 3});
}

TEST_CASE("integer square-root comparison agrees with floating point") {
  for (FamilyId f : preset_family_ids()) {
    const CoeffRule rule = preset_rule(f);
    for (long n = 1; n <= 12; ++n)
      for (long k = k_range_lo(rule.k_range); k <= k_range_hi(rule.k_range, n); ++k) {
        const ConditionPoint p = modified_condition_point(rule, n, k);
        const double c = static_cast<double>(rule.c.eval(n, k));
        const double cp = static_cast<double>(rule.c.eval(n, k + 1));
        const double cm = static_cast<double>(rule.c.eval(n, k - 1));
        const double d = static_cast<double>(rule.d.eval(n, k));
        const double dp = static_cast<double>(rule.d.eval(n, k + 1));
        const double dm = static_cast<double>(rule.d.eval(n, k - 1));
        const double ca = c * c - cp * cm;
        const double da = d * d - dp * dm;
        if (ca < 0 || da < 0) {
          CHECK_FALSE(p.holds);
          continue;
        }
        const double lhs = 2.0 * std::sqrt(ca * da);
        const double rhs = cm * dp + cp * dm - 2.0 * c * d;
        if (std::abs(lhs - rhs) > 1e-6) CHECK(p.holds == (lhs > rhs));
      }
  }
}
