#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "billiards");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = billiards::cli::dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("classify") {
  const Run r = run({"classify", "--graph", "cycle:5", "--graph", "g6:Bw"});
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 2);
  const auto c5 = nlohmann::json::parse(ls[0]);
  CHECK(c5["kind"] == "ensnaring");
  CHECK(c5["revolutionary"] == true);
  CHECK(c5["orbits"] == 40);
  CHECK(c5["graph"] == "edges:5;1-2,1-5,2-3,3-4,4-5");
  CHECK(nlohmann::json::parse(ls[1])["graph"] == "edges:3;1-2,1-3,2-3");

  CHECK(nlohmann::json::parse(run({"classify", "--graph", "cycle:6"}).out)["kind"] == "expelling");
}

TEST_CASE("orbits and trace") {
  const Run o = run({"orbits", "--graph", "path:3"});
  CHECK(o.code == 0);
  const auto summary = nlohmann::json::parse(o.out)["summary"];
  CHECK(summary["orbits"] == 2);
  CHECK(summary["noncontractible"] == 2);

  const Run full = run({"orbits", "--graph", "path:3", "--full"});
  CHECK(lines(full.out).size() == 3);

  const Run t = run({"trace", "--graph", "cycle:5", "--start", "perm=1,2,3,4,5;i=1;eps=+1", "--steps", "4"});
  CHECK(t.code == 0);
  const auto ls = lines(t.out);
  REQUIRE(ls.size() == 4);
  CHECK(nlohmann::json::parse(ls[0])["event"]["kind"] == "refract");
  CHECK(nlohmann::json::parse(ls[3])["stoneSteps"] == -2);
}

TEST_CASE("verify and conjecture") {
  const Run v = run({"verify", "--check", "cycles", "--max-n", "5"});
  CHECK(v.code == 0);
  CHECK(v.out.find("cycles: pass") != std::string::npos);

  const Run c = run({"conjecture", "--id", "orbit-sizes", "--m", "3", "--n", "6"});
  CHECK(c.code == 0);
  CHECK(c.out.find("consistent") != std::string::npos);

  const Run l = run({"list"});
  CHECK(l.code == 0);
  CHECK(l.out.find("expelling-bipartite") != std::string::npos);
  CHECK(l.out.find("compl-parity") != std::string::npos);
}

TEST_CASE("scan") {
  const Run s = run({"scan", "--n", "3", "--format", "csv"});
  CHECK(s.code == 0);
  CHECK_FALSE(s.out.empty());
  const Run j = run({"scan", "--n", "4", "--iso-dedup"});
  CHECK(j.code == 0);
  CHECK(lines(j.out).size() == 12);  // 11 classes plus a summary
}

TEST_CASE("exit codes") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 1);
  CHECK(run({"classify"}).code == 1);
  CHECK(run({"classify", "--graph", "cycle:"}).code == 1);
  CHECK(run({"trace", "--graph", "cycle:5", "--start", "perm=1,1;i=1;eps=+1", "--steps", "1"}).code == 1);
  CHECK(run({"orbits", "--graph", "complete:11"}).code == 2);
  CHECK(run({"verify", "--check", "cycles", "--max-n", "50"}).code == 2);
  CHECK(run({"verify", "--check", "nope"}).code == 2);
  CHECK(run({"scan", "--n", "9"}).code == 2);
  const Run refuted = run({"conjecture", "--id", "compl-parity"});
  CHECK(refuted.code == 3);
  CHECK(refuted.out.find("refuted") != std::string::npos);
}
