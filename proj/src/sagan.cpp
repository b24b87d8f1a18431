#include "permsync/sagan.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

#include "permsync/errors.hpp"
#include "permsync/properties.hpp"

namespace permsync {

long k_range_lo(KRange r) { return r == KRange::oneToN ? 1 : 0; }

long k_range_hi(KRange r, long n) {
  switch (r) {
    case KRange::zeroToNminus1: return n - 1;
    case KRange::zeroToN:       return n;
    case KRange::oneToN:        return n;
    case KRange::zeroToHalfNm1: return (n - 1) / 2;
    case KRange::zeroToHalfN:   return n / 2;
  }
  return n;
}

const char* k_range_name(KRange r) {
  switch (r) {
    case KRange::zeroToNminus1: return "0..n-1";
    case KRange::zeroToN:       return "0..n";
    case KRange::oneToN:        return "1..n";
    case KRange::zeroToHalfNm1: return "0..(n-1)/2";
    case KRange::zeroToHalfN:   return "0..n/2";
  }
  return "?";
}

std::optional<KRange> k_range_from_name(std::string_view name) {
  for (KRange r : {KRange::zeroToNminus1, KRange::zeroToN, KRange::oneToN,
                   KRange::zeroToHalfNm1, KRange::zeroToHalfN})
    if (name == k_range_name(r)) return r;
  return std::nullopt;
}

const char* condition_name(SaganCondition c) {
  return c == SaganCondition::original ? "sagan" : "modified";
}

ConditionPoint original_condition_point(const CoeffRule& rule, long n, long k) {
  ConditionPoint p;
  p.n = n;
  p.k = k;
  const Int c0 = rule.c.eval(n, k), cm = rule.c.eval(n, k - 1), cp = rule.c.eval(n, k + 1);
  const Int d0 = rule.d.eval(n, k), dm = rule.d.eval(n, k - 1), dp = rule.d.eval(n, k + 1);
  p.lhs = 2 * c0 * d0;
  p.rhs = cm * dp + cp * dm;
  p.holds = p.lhs >= p.rhs;
  return p;
}

ConditionPoint modified_condition_point(const CoeffRule& rule, long n, long k) {
  ConditionPoint p;
  p.n = n;
  p.k = k;
  const Int c0 = rule.c.eval(n, k), cm = rule.c.eval(n, k - 1), cp = rule.c.eval(n, k + 1);
  const Int d0 = rule.d.eval(n, k), dm = rule.d.eval(n, k - 1), dp = rule.d.eval(n, k + 1);
  const Int a = c0 * c0 - cp * cm;
  const Int b = d0 * d0 - dp * dm;
  p.rhs = cm * dp + cp * dm - 2 * c0 * d0;
  if (a < 0 || b < 0) {
    // Coefficient rows not log-concave at this point; the square root is not
    // real, so the condition cannot hold.
    p.lhs = 0;
    p.lhs_exact = false;
    p.holds = false;
    return p;
  }
  const Int four_ab = 4 * a * b;
  p.lhs = isqrt(four_ab);
  p.lhs_exact = p.lhs * p.lhs == four_ab;
  p.holds = p.rhs <= 0 || four_ab >= p.rhs * p.rhs;
  return p;
}

TriangularArray build_triangle(const CoeffRule& rule, long n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  if (rule.initial_row.empty())
    throw std::invalid_argument("rule has an empty initial row");
  const long lo = k_range_lo(rule.k_range);
  if (rule.initial_offset != lo)
    throw std::invalid_argument("initial row offset must match the k-range start");
  std::vector<Seq> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  rows.push_back(rule.initial_row);
  for (long n = 2; n <= n_max; ++n) {
    const Seq& prev = rows.back();
    auto prev_at = [&](long k) -> Int {
      const long idx = k - lo;
      return (idx < 0 || idx >= static_cast<long>(prev.size()))
                 ? Int(0)
                 : prev[static_cast<std::size_t>(idx)];
    };
    const long hi = k_range_hi(rule.k_range, n);
    Seq r(static_cast<std::size_t>(hi - lo + 1));
    for (long k = lo; k <= hi; ++k) {
      const long cs = rule.on_shifted().eval(n, k);
      const long cu = rule.on_unshifted().eval(n, k);
      if (cs < 0 || cu < 0)
        throw RuleViolationError("negative coefficient at (n=" + std::to_string(n) +
                                     ", k=" + std::to_string(k) + ")",
                                 n, k);
      r[static_cast<std::size_t>(k - lo)] = Int(cs) * prev_at(k - 1) + Int(cu) * prev_at(k);
    }
    rows.push_back(std::move(r));
  }
  return TriangularArray(lo, std::move(rows));
}

namespace {

std::string int_str(const Int& v) { return v.str(); }

// Shared sweep: walks every (n, k) in range, collecting failures of the
// chosen condition plus the coefficient preconditions, the sharpest margin
// point, and whether the margin is constant across the sweep.
Certificate sweep(const CoeffRule& rule, long n_max, SaganCondition cond) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  Certificate cert;
  cert.rule_name = rule.name;
  cert.condition = cond;
  cert.n_max_checked = n_max;

  bool have_margin = false;
  bool margin_constant = true;
  Int ref_margin, min_margin;
  ConditionPoint tight;

  const long lo = k_range_lo(rule.k_range);
  for (long n = 1; n <= n_max; ++n) {
    const long hi = k_range_hi(rule.k_range, n);
    // Precondition: coefficients non-negative over the declared range.
    for (long k = lo; k <= hi; ++k) {
      if (rule.c.eval(n, k) < 0 || rule.d.eval(n, k) < 0) {
        cert.verdict = false;
        cert.witnesses.emplace_back(n, k);
        if (cert.detail.empty())
          cert.detail = "negative coefficient at (n=" + std::to_string(n) +
                        ", k=" + std::to_string(k) + ")";
      }
    }
    // Condition (i): coefficient rows log-concave in k.
    for (long k = lo + 1; k < hi; ++k) {
      const Int ck = rule.c.eval(n, k), dk = rule.d.eval(n, k);
      if (ck * ck < Int(rule.c.eval(n, k - 1)) * rule.c.eval(n, k + 1) ||
          dk * dk < Int(rule.d.eval(n, k - 1)) * rule.d.eval(n, k + 1)) {
        cert.verdict = false;
        cert.witnesses.emplace_back(n, k);
        if (cert.detail.empty())
          cert.detail = "coefficient row not log-concave at (n=" +
                        std::to_string(n) + ", k=" + std::to_string(k) + ")";
      }
    }
    // Condition (ii) at every point of the row range.
    for (long k = lo; k <= hi; ++k) {
      const ConditionPoint p = cond == SaganCondition::original
                                   ? original_condition_point(rule, n, k)
                                   : modified_condition_point(rule, n, k);
      if (!p.holds) {
        cert.verdict = false;
        cert.witnesses.emplace_back(n, k);
      }
      const Int margin = p.lhs - p.rhs;
      if (!have_margin) {
        have_margin = true;
        ref_margin = margin;
        min_margin = margin;
        tight = p;
      } else {
        if (margin != ref_margin) margin_constant = false;
        if (margin < min_margin) {
          min_margin = margin;
          tight = p;
        }
      }
    }
  }

  cert.uniform = have_margin && margin_constant;
  if (have_margin) {
    cert.tight_n = tight.n;
    cert.tight_k = tight.k;
    cert.tightness = int_str(tight.lhs) + (tight.holds ? " >= " : " < ") +
                     int_str(tight.rhs);
    if (cert.detail.empty()) {
      cert.detail = std::string(cond == SaganCondition::original
                                    ? "2 c d vs cross products"
                                    : "2 sqrt((c^2-c+c-)(d^2-d+d-)) vs cross excess") +
                    ": sharpest at (n=" + std::to_string(tight.n) +
                    ", k=" + std::to_string(tight.k) + "): " + cert.tightness;
    }
  }
  return cert;
}

}  // namespace

Certificate certify_sagan(const CoeffRule& rule, long n_max) {
  return sweep(rule, n_max, SaganCondition::original);
}

Certificate certify_modified_sagan(const CoeffRule& rule, long n_max) {
  return sweep(rule, n_max, SaganCondition::modified);
}

PropertyReport original_implies_modified(const CoeffRule& rule, long n_max) {
  PropertyReport r;
  r.property = "original-implies-modified";
  const long lo = k_range_lo(rule.k_range);
  for (long n = 1; n <= n_max; ++n) {
    const long hi = k_range_hi(rule.k_range, n);
    for (long k = lo; k <= hi; ++k) {
      if (original_condition_point(rule, n, k).holds &&
          !modified_condition_point(rule, n, k).holds)
        r.fail({n, k});
    }
  }
  return r;
}

CoeffRule preset_rule(FamilyId f) {
  CoeffRule r;
  r.name = family_name(f);
  r.pairing = TermPairing::cOnUnshifted;  // how the applications are written
  switch (f) {
    case FamilyId::eulerA:
      r.c = {1, 0, 1};             // k+1
      r.d = {-1, 1, 0};            // n-k
      r.initial_row = {1};
      r.k_range = KRange::zeroToNminus1;
      break;
    case FamilyId::eulerB:
      r.c = {2, 0, 1};             // 2k+1
      r.d = {-2, 2, 1};            // 2(n-k)+1
      r.initial_row = {1, 1};
      r.k_range = KRange::zeroToN;
      break;
    case FamilyId::secondOrderEuler:
      r.c = {1, 0, 0};             // k
      r.d = {-1, 2, 0};            // 2n-k
      r.initial_row = {1};
      r.initial_offset = 1;
      r.k_range = KRange::oneToN;
      break;
    case FamilyId::gammaA:
      r.c = {1, 0, 1};             // k+1
      r.d = {-4, 2, 0};            // 2n-4k
      r.initial_row = {1};
      r.k_range = KRange::zeroToHalfNm1;
      break;
    case FamilyId::gammaB:
      r.c = {2, 0, 1};             // 2k+1
      r.d = {-8, 4, 4};            // 4(n+1-2k)
      r.initial_row = {1};
      r.k_range = KRange::zeroToHalfN;
      break;
    case FamilyId::pqA:
    case FamilyId::pqB:
      throw std::invalid_argument(std::string(family_name(f)) +
                                  " has no two-term coefficient rule");
  }
  return r;
}

std::vector<FamilyId> preset_family_ids() {
  return {FamilyId::eulerA, FamilyId::eulerB, FamilyId::secondOrderEuler,
          FamilyId::gammaA, FamilyId::gammaB};
}

namespace {

std::vector<long> parse_ints(const std::string& value, const std::string& key,
                             long line_no) {
  std::istringstream iss(value);
  std::vector<long> out;
  long v;
  while (iss >> v) out.push_back(v);
  std::string rest;
  if (!(iss >> rest).eof() || out.empty())
    throw ParseError("line " + std::to_string(line_no) + ": '" + key +
                     "' expects whitespace-separated integers");
  return out;
}

std::string trim(std::string s) {
  const auto from = s.find_first_not_of(" \t\r");
  const auto to = s.find_last_not_of(" \t\r");
  if (from == std::string::npos) return "";
  return s.substr(from, to - from + 1);
}

}  // namespace

CoeffRule parse_rule(std::istream& in) {
  CoeffRule rule;
  rule.name = "custom";
  rule.k_range = KRange::zeroToN;
  bool have_c = false, have_d = false, have_initial = false, have_offset = false;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'key = value', got '" + line + "'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "name") {
      rule.name = value;
    } else if (key == "c" || key == "d") {
      const auto ints = parse_ints(value, key, line_no);
      if (ints.size() != 3)
        throw ParseError("line " + std::to_string(line_no) + ": '" + key +
                         "' expects three integers (alpha beta gamma)");
      Affine& a = key == "c" ? rule.c : rule.d;
      a = {ints[0], ints[1], ints[2]};
      (key == "c" ? have_c : have_d) = true;
    } else if (key == "pairing") {
      if (value == "c-shifted")
        rule.pairing = TermPairing::cOnShifted;
      else if (value == "c-unshifted")
        rule.pairing = TermPairing::cOnUnshifted;
      else
        throw ParseError("line " + std::to_string(line_no) +
                         ": pairing must be 'c-shifted' or 'c-unshifted'");
    } else if (key == "initial") {
      const auto ints = parse_ints(value, key, line_no);
      rule.initial_row.assign(ints.begin(), ints.end());
      have_initial = true;
    } else if (key == "offset") {
      const auto ints = parse_ints(value, key, line_no);
      if (ints.size() != 1)
        throw ParseError("line " + std::to_string(line_no) +
                         ": 'offset' expects one integer");
      rule.initial_offset = ints[0];
      have_offset = true;
    } else if (key == "krange") {
      const auto r = k_range_from_name(value);
      if (!r)
        throw ParseError("line " + std::to_string(line_no) +
                         ": unknown krange '" + value +
                         "' (expected 0..n-1, 0..n, 1..n, 0..(n-1)/2 or 0..n/2)");
      rule.k_range = *r;
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown key '" +
                       key + "'");
    }
  }
  if (!have_c || !have_d || !have_initial)
    throw ParseError("rule needs at least 'c', 'd' and 'initial'");
  if (!have_offset) rule.initial_offset = k_range_lo(rule.k_range);
  if (rule.initial_offset != k_range_lo(rule.k_range))
    throw ParseError("offset must equal the k-range start (" +
                     std::to_string(k_range_lo(rule.k_range)) + ")");
  for (const Int& v : rule.initial_row)
    if (v < 0) throw ParseError("initial row entries must be non-negative");
  return rule;
}

CoeffRule parse_rule_text(const std::string& text) {
  std::istringstream iss(text);
  return parse_rule(iss);
}

}  // namespace permsync
