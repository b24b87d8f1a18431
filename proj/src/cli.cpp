#include "permsync/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "permsync/enumerate.hpp"
#include "permsync/errors.hpp"
#include "permsync/recurrence.hpp"
#include "permsync/sagan.hpp"
#include "permsync/verify.hpp"

namespace permsync {
namespace {

using ordered_json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

bool env_force() {
  const char* v = std::getenv("PERMSYNC_FORCE");
  return v != nullptr && std::string(v) == "1";
}

ClassFilterA class_a_from(const std::string& s) {
  if (s == "all") return ClassFilterA::all;
  if (s == "even") return ClassFilterA::even;
  if (s == "odd") return ClassFilterA::odd;
  if (s == "derangement") return ClassFilterA::derangement;
  throw ParseError("unknown Type-A class '" + s +
                   "' (expected all, even, odd, or derangement)");
}

ClassFilterB class_b_from(const std::string& s) {
  if (s == "all") return ClassFilterB::all;
  if (s == "plus") return ClassFilterB::plus;
  if (s == "minus") return ClassFilterB::minus;
  throw ParseError("unknown Type-B class '" + s +
                   "' (expected all, plus, or minus)");
}

// Adds the trailing report fields shared by every JSON command and prints the
// document. Reports are assembled fully before a single write, so output
// never interleaves.
void emit_json(ordered_json& doc, bool no_timing, Clock::time_point t0,
               std::ostream& out) {
  doc["integers_as"] = "decimal-strings";
  doc["version"] = kVersion;
  if (!no_timing) {
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0);
    doc["timing_ms"] = static_cast<long long>(ms.count());
  }
  out << doc.dump(2) << '\n';
}

ordered_json results_json(const std::vector<VerifyResult>& results) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : results) {
    ordered_json o;
    o["target"] = r.target;
    o["n"] = r.n;
    o["verdict"] = r.verdict;
    o["witnesses"] = r.witnesses;
    if (!r.note.empty()) o["note"] = r.note;
    arr.push_back(std::move(o));
  }
  return arr;
}

void push_triangle_rows(std::vector<std::vector<std::string>>& rows,
                        const TriangularArray& t, long n_max,
                        const char* member) {
  for (long n = 1; n <= n_max; ++n) {
    const Seq& row = t.row(n);
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::vector<std::string> line;
      if (member != nullptr) line.push_back(member);
      line.push_back(std::to_string(n));
      line.push_back(std::to_string(t.k_min() + static_cast<long>(i)));
      line.push_back(row[i].str());
      rows.push_back(std::move(line));
    }
  }
}

int cmd_table(const std::string& spec, long n, const std::string& cls,
              bool class_given, const std::string& format, bool force,
              bool no_timing, Clock::time_point t0, std::ostream& out,
              std::ostream& err) {
  if (n < 1) {
    err << "error: --n must be at least 1\n";
    return 2;
  }
  EnumGuard guard;
  guard.override_limits = force;

  std::vector<std::vector<std::string>> rows;
  bool pair = false;
  const std::optional<FamilyId> fid = family_from_name(spec);
  if (fid) {
    if (class_given) {
      err << "error: --class applies to statistic tables, not recurrence families\n";
      return 2;
    }
    if (is_pair_family(*fid)) {
      pair = true;
      const PairTable t = build_pair_family(*fid, n);
      push_triangle_rows(rows, t.first, n, "P");
      push_triangle_rows(rows, t.second, n, "Q");
    } else {
      push_triangle_rows(rows, build_family(*fid, n), n, nullptr);
    }
  } else {
    const Statistic st = statistic_from_name(spec);
    const Seq row = is_type_a(st)
                        ? distribution_a(n, st, class_a_from(cls), guard)
                        : distribution_b(n, st, class_b_from(cls), guard);
    for (std::size_t k = 0; k < row.size(); ++k)
      rows.push_back({std::to_string(n), std::to_string(k), row[k].str()});
  }

  if (format == "csv") {
    out << (pair ? "member,n,k,value" : "n,k,value") << '\n';
    for (const auto& line : rows) {
      for (std::size_t i = 0; i < line.size(); ++i)
        out << (i ? "," : "") << line[i];
      out << '\n';
    }
  } else {
    ordered_json doc;
    doc["command"] = "table";
    ordered_json params;
    params["spec"] = spec;
    params["n"] = n;
    if (!fid) params["class"] = cls;
    params["format"] = format;
    doc["params"] = std::move(params);
    doc["rows"] = rows;
    emit_json(doc, no_timing, t0, out);
  }
  return 0;
}

int cmd_verify(const std::string& target, long max_n, std::uint64_t seed,
               bool force, bool no_timing, Clock::time_point t0,
               std::ostream& out, std::ostream& /*err*/) {
  VerifyOptions opts;
  opts.guard.override_limits = force;
  opts.seed = seed;
  const std::vector<VerifyResult> results = run_verify_target(target, max_n, opts);

  ordered_json doc;
  doc["command"] = "verify";
  ordered_json params;
  params["target"] = target;
  params["max_n"] = max_n;
  if (target == "thm-2.1") params["seed"] = seed;
  doc["params"] = std::move(params);
  doc["results"] = results_json(results);
  emit_json(doc, no_timing, t0, out);
  return all_passed(results) ? 0 : 1;
}

int cmd_conjecture(const std::string& which, long max_n, bool force,
                   bool no_timing, Clock::time_point t0, std::ostream& out,
                   std::ostream& err) {
  VerifyOptions opts;
  opts.guard.override_limits = force;
  const std::vector<VerifyResult> results = run_conjecture(which, max_n, opts);

  ordered_json doc;
  doc["command"] = "conjecture";
  ordered_json params;
  params["which"] = which;
  params["max_n"] = max_n;
  doc["params"] = std::move(params);
  doc["results"] = results_json(results);
  doc["note"] = "evidence, not proof";
  emit_json(doc, no_timing, t0, out);
  err << "note: a clean scan is evidence, not proof; the statement remains open\n";
  return all_passed(results) ? 0 : 1;
}

int cmd_certify(const std::string& preset, const std::string& rule_file,
                const std::string& condition, long max_n, bool no_timing,
                Clock::time_point t0, std::ostream& out, std::ostream& err) {
  CoeffRule rule;
  std::string rule_param;
  if (!preset.empty()) {
    const std::optional<FamilyId> fid = family_from_name(preset);
    if (!fid || is_pair_family(*fid)) {
      err << "error: unknown preset '" << preset << "'\n";
      return 2;
    }
    rule = preset_rule(*fid);
    rule_param = preset;
  } else {
    std::ifstream in(rule_file);
    if (!in) {
      err << "error: cannot open rule file '" << rule_file << "'\n";
      return 2;
    }
    rule = parse_rule(in);
    rule_param = rule_file;
  }

  const bool original = condition == "sagan";
  const Certificate cert = original ? certify_sagan(rule, max_n)
                                    : certify_modified_sagan(rule, max_n);

  ordered_json doc;
  doc["command"] = "certify";
  ordered_json params;
  params["rule"] = rule_param;
  params["condition"] = condition;
  params["max_n"] = max_n;
  doc["params"] = std::move(params);
  ordered_json c;
  c["rule_name"] = cert.rule_name;
  c["condition"] = condition_name(cert.condition);
  c["verdict"] = cert.verdict;
  c["witnesses"] = cert.witnesses;
  c["n_max_checked"] = cert.n_max_checked;
  c["uniform"] = cert.uniform;
  c["tightness"] = cert.tightness;
  c["tight_n"] = cert.tight_n;
  c["tight_k"] = cert.tight_k;
  c["detail"] = cert.detail;
  doc["certificate"] = std::move(c);
  emit_json(doc, no_timing, t0, out);
  return cert.verdict ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  const Clock::time_point t0 = Clock::now();

  CLI::App app{"exact excedance/descent tables over S_n and B_n with "
               "log-concavity and synchronisation checks"};
  app.name("permsync");
  app.set_version_flag("--version", std::string("permsync ") + kVersion);
  app.require_subcommand(1);

  bool force = false;
  bool no_timing = false;
  app.add_flag("--force", force,
               "override the enumeration size guards (hard caps still apply)");
  app.add_flag("--no-timing", no_timing, "omit the timing field from reports");

  auto* table = app.add_subcommand(
      "table", "print a recurrence triangle or a brute-force distribution");
  table->fallthrough();
  std::string table_spec;
  long table_n = 0;
  std::string table_class = "all";
  std::string table_format = "csv";
  table->add_option("spec", table_spec,
                    "family (eulerA, pqA, eulerB, pqB, secondOrderEuler, "
                    "gammaA, gammaB) or statistic (exc, nexc, des, asc, inv, "
                    "excB, wkexcB, desB, ascB, invB, negs)")
      ->required();
  table->add_option("--n", table_n, "row bound for families, element size for statistics")
      ->required();
  CLI::Option* class_opt = table->add_option(
      "--class", table_class,
      "subset: all|even|odd|derangement (Type A), all|plus|minus (Type B)");
  table->add_option("--format", table_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* verify = app.add_subcommand("verify", "run a named check and report witnesses");
  verify->fallthrough();
  std::string verify_target;
  long verify_max_n = 0;
  std::uint64_t verify_seed = VerifyOptions{}.seed;
  verify->add_option("target", verify_target, "check identifier (see README)")
      ->required();
  CLI::Option* verify_max_opt =
      verify->add_option("--max-n", verify_max_n,
                         "sweep bound (sample count for thm-2.1); per-target default");
  verify->add_option("--seed", verify_seed, "RNG seed for the randomised cross-check");

  auto* conjecture = app.add_subcommand(
      "conjecture", "scan an open conjecture for counterexamples (evidence only)");
  conjecture->fallthrough();
  std::string conjecture_which;
  long conjecture_max_n = 7;
  conjecture->add_option("which", conjecture_which, "c61 or c62")
      ->required()
      ->check(CLI::IsMember({"c61", "c62"}));
  conjecture->add_option("--max-n", conjecture_max_n, "scan bound (default 7)");

  auto* certify = app.add_subcommand(
      "certify", "certify a triangular recurrence for row log-concavity");
  certify->fallthrough();
  std::string certify_preset;
  std::string certify_rule_file;
  std::string certify_condition = "modified";
  long certify_max_n = 30;
  CLI::Option* preset_opt = certify->add_option(
      "--preset", certify_preset,
      "stock rule: eulerA, eulerB, secondOrderEuler, gammaA, gammaB");
  CLI::Option* rule_opt =
      certify->add_option("--rule", certify_rule_file, "rule description file");
  preset_opt->excludes(rule_opt);
  rule_opt->excludes(preset_opt);
  certify->add_option("--condition", certify_condition, "sagan or modified")
      ->check(CLI::IsMember({"sagan", "modified"}));
  certify->add_option("--max-n", certify_max_n, "certification bound (default 30)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return 2;
  }

  force = force || env_force();

  try {
    if (table->parsed())
      return cmd_table(table_spec, table_n, table_class, class_opt->count() > 0,
                       table_format, force, no_timing, t0, out, err);
    if (verify->parsed()) {
      const long max_n = verify_max_opt->count() > 0 ? verify_max_n
                                                     : default_max_n(verify_target);
      return cmd_verify(verify_target, max_n, verify_seed, force, no_timing, t0,
                        out, err);
    }
    if (conjecture->parsed())
      return cmd_conjecture(conjecture_which, conjecture_max_n, force, no_timing,
                            t0, out, err);
    if (certify->parsed()) {
      if (certify_preset.empty() == certify_rule_file.empty()) {
        err << "error: provide exactly one of --preset or --rule\n";
        return 2;
      }
      return cmd_certify(certify_preset, certify_rule_file, certify_condition,
                         certify_max_n, no_timing, t0, out, err);
    }
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const RuleViolationError& e) {
    err << "error: " << e.what() << " at n=" << e.n << ", k=" << e.k << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no subcommand given\n";
  return 2;
}

}  // namespace permsync
