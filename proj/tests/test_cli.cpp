#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "permsync/cli.hpp"

using permsync::run_cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("table csv shapes") {
  const Run r = cli({"table", "pqA", "--n", "5", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("member,n,k,value\n"));
  CHECK(r.out.find("P,5,4,1\n") != std::string::npos);
  CHECK(r.out.find("Q,5,4,0\n") != std::string::npos);
  CHECK(r.out.find("P,5,2,36\n") != std::string::npos);
  // P rows precede Q rows.
  CHECK(r.out.find("P,1,0,1") < r.out.find("Q,1,0,0"));

  const Run single = cli({"table", "eulerA", "--n", "1"});
  CHECK(single.code == 0);
  CHECK(single.out == "n,k,value\n1,0,1\n");

  const Run stat = cli({"table", "exc", "--class", "even", "--n", "5"});
  CHECK(stat.code == 0);
  CHECK(stat.out ==
        "n,k,value\n5,0,1\n5,1,11\n5,2,36\n5,3,11\n5,4,1\n");

  const Run offset = cli({"table", "secondOrderEuler", "--n", "2"});
  CHECK(offset.out == "n,k,value\n1,1,1\n2,1,1\n2,2,2\n");
}

TEST_CASE("table json shape") {
  const Run r = cli({"table", "desB", "--n", "2", "--format", "json", "--no-timing"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["command"] == "table");
  CHECK(doc["params"]["spec"] == "desB");
  CHECK(doc["params"]["class"] == "all");
  CHECK(doc["rows"].size() == 3);
  CHECK(doc["rows"][1] == nlohmann::ordered_json::array({"2", "1", "6"}));
  CHECK(doc["integers_as"] == "decimal-strings");
  CHECK(doc["version"] == "1.0.0");
  CHECK_FALSE(doc.contains("timing_ms"));
  CHECK(cli({"table", "desB", "--n", "2", "--format", "json"}).out.find("timing_ms") !=
        std::string::npos);
}

TEST_CASE("verify command") {
  const Run r = cli({"verify", "thm-1.5", "--max-n", "8", "--no-timing"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["command"] == "verify");
  CHECK(doc["params"]["target"] == "thm-1.5");
  CHECK(doc["params"]["max_n"] == 8);
  CHECK(doc["results"].size() == 8);
  for (const auto& res : doc["results"]) {
    CHECK(res["target"] == "thm-1.5");
    CHECK(res["verdict"] == true);
    CHECK(res["witnesses"].empty());
  }
  // Stable field order for deterministic reports.
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"command", "params", "results",
                                         "integers_as", "version"});

  const Run again = cli({"verify", "thm-1.5", "--max-n", "8", "--no-timing"});
  CHECK(again.out == r.out);

  CHECK(cli({"verify", "no-such-check"}).code == 2);
}

TEST_CASE("conjecture command is labeled as evidence") {
  const Run r = cli({"conjecture", "c61", "--max-n", "4", "--no-timing"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["note"] == "evidence, not proof");
  CHECK(doc["results"].size() == 4);
  CHECK(r.err.find("evidence, not proof") != std::string::npos);
  CHECK(cli({"conjecture", "c99", "--max-n", "4"}).code == 2);
}

TEST_CASE("certify command") {
  const Run reject = cli({"certify", "--preset", "eulerA", "--condition", "sagan",
                          "--no-timing"});
  CHECK(reject.code == 1);
  const auto doc = nlohmann::ordered_json::parse(reject.out);
  CHECK(doc["certificate"]["verdict"] == false);
  CHECK(doc["certificate"]["condition"] == "sagan");

  const Run accept = cli({"certify", "--preset", "eulerA", "--condition",
                          "modified", "--no-timing"});
  CHECK(accept.code == 0);
  const auto doc2 = nlohmann::ordered_json::parse(accept.out);
  CHECK(doc2["certificate"]["verdict"] == true);
  CHECK(doc2["certificate"]["tightness"] == "2 >= 2");
  CHECK(doc2["certificate"]["uniform"] == true);

  CHECK(cli({"certify", "--preset", "pqA", "--condition", "modified"}).code == 2);
  CHECK(cli({"certify", "--condition", "modified"}).code == 2);
  CHECK(cli({"certify", "--preset", "eulerA", "--rule", "x", "--condition",
             "modified"}).code == 2);
}

TEST_CASE("certify reads rule files") {
  const std::string path = "cli_rule_test.txt";
  {
    std::ofstream f(path);
    f << "name = from-file\nc = 0 0 1\nd = 0 0 1\ninitial = 1\n";
  }
  const Run r = cli({"certify", "--rule", path, "--condition", "sagan",
                     "--max-n", "6", "--no-timing"});
  CHECK(r.code == 0);
  CHECK(nlohmann::ordered_json::parse(r.out)["certificate"]["rule_name"] ==
        "from-file");
  {
    std::ofstream f(path);
    f << "c = 1 0 1\nwhat even is this line\n";
  }
  const Run bad = cli({"certify", "--rule", path, "--condition", "sagan"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("line 2") != std::string::npos);
  std::remove(path.c_str());
  CHECK(cli({"certify", "--rule", "no_such_file.txt", "--condition", "sagan"})
            .code == 2);
}

TEST_CASE("exit codes") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"table", "exc"}).code == 2);              // missing --n
  CHECK(cli({"table", "noSuchFamily", "--n", "3"}).code == 2);
  CHECK(cli({"table", "exc", "--n", "0"}).code == 2);
  CHECK(cli({"table", "exc", "--n", "13"}).code == 3);  // soft guard
  CHECK(cli({"table", "excB", "--n", "10"}).code == 3);
  CHECK(cli({"table", "exc", "--n", "25", "--force"}).code == 3);  // hard cap
  CHECK(cli({"table", "pqA", "--n", "4", "--class", "even"}).code == 2);
  CHECK(cli({"table", "exc", "--n", "4", "--class", "plus"}).code == 2);
  CHECK(cli({"table", "excB", "--n", "4", "--class", "odd"}).code == 2);

  const Run version = cli({"--version"});
  CHECK(version.code == 0);
  CHECK(version.out.find("1.0.0") != std::string::npos);
  CHECK(cli({"--help"}).code == 0);
}
