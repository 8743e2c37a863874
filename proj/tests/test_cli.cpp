#include <doctest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

using namespace casimir;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("spectrum json for A1") {
  const auto r = run({"spectrum", "--type", "A1", "--format", "json"});
  REQUIRE(r.code == cli::kOk);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.size() == 1);
  const auto& rows = doc[0]["rows"];
  REQUIRE(rows.size() == 4);
  std::vector<std::string> m;
  for (const auto& row : rows) m.push_back(row["m"]);
  CHECK(m == std::vector<std::string>{"0", "1", "1", "0"});
}

TEST_CASE("spectrum markdown and csv") {
  const auto md = run({"spectrum", "--type", "a2"});
  CHECK(md.code == 0);
  CHECK(md.out.find("| 4 | 8/3 | 2 V[2,2] | 54 |") != std::string::npos);
  const auto csv = run({"spectrum", "--type", "A2", "--format", "csv"});
  CHECK(csv.out.rfind("type,i,m,components,dim,strategies\n", 0) == 0);
  CHECK(csv.out.find("A2,2,2,\"[0,3]x1;[3,0]x1\",20,") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  const auto bad = run({"spectrum", "--type", "Z9"});
  CHECK(bad.code == cli::kUsage);
  for (const char* s : {"A1", "B2", "C2", "D4", "E6", "F4", "G2"}) CHECK(bad.err.find(s) != std::string::npos);
  CHECK(run({"spectrum"}).code == cli::kUsage);
  CHECK(run({"spectrum", "--type", "A2", "--budget", "10"}).code == cli::kUsage);
  CHECK(run({"spectrum", "--type", "A2", "--jobs", "0"}).code == cli::kUsage);
  CHECK(run({"spectrum", "--type", "A2", "--format", "xml"}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"ideals", "--type", "A2", "--k", "7"}).code == cli::kUsage);
  CHECK(run({"krho", "--type", "A2"}).code == cli::kUsage);
  CHECK(run({"decompose-exterior", "--type", "A2", "--i", "9"}).code == cli::kUsage);
  CHECK(run({"decompose-exterior", "--type", "E8", "--i", "100", "--budget", "1000"}).code == cli::kUsage);
}

TEST_CASE("verify") {
  const auto r = run({"verify", "--type", "A2,B2", "--format", "json"});
  CHECK(r.code == cli::kOk);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["observed_p"] == 2);
  CHECK(doc[1]["observed_p"] == 3);
  CHECK(doc[1]["passed"] == true);
  const auto md = run({"verify", "--type", "G2"});
  CHECK(md.out.find("| G2 | 3 |") != std::string::npos);
}

TEST_CASE("ideals") {
  const auto counts = run({"ideals", "--type", "A3", "--format", "json"});
  CHECK(nlohmann::json::parse(counts.out)[0]["total"] == 14);
  const auto sized = run({"ideals", "--type", "A2", "--k", "2", "--format", "json", "--full"});
  const auto doc = nlohmann::json::parse(sized.out)[0];
  CHECK(doc["max_cas"] == "2");
  REQUIRE(doc["ideals"].size() == 2);
  for (const auto& e : doc["ideals"]) {
    CHECK(e["achieving"] == true);
    CHECK(e["members"].size() == 2);
  }
}

TEST_CASE("krho and decompose-exterior") {
  const auto k = run({"krho", "--type", "B2", "--k", "2", "--format", "json"});
  CHECK(k.code == 0);
  const auto kd = nlohmann::json::parse(k.out)[0];
  CHECK(kd["mass"] == 81);
  CHECK(kd["verdict"] == "EQUAL");
  const auto skipped = run({"krho", "--type", "D4", "--k", "3", "--format", "json", "--budget", "1000"});
  CHECK(nlohmann::json::parse(skipped.out)[0]["verdict"] == "SKIPPED");

  const auto d = run({"decompose-exterior", "--type", "A2", "--i", "3", "--format", "json"});
  const auto dd = nlohmann::json::parse(d.out)[0];
  CHECK(dd["m"] == "8/3");
  CHECK(dd["dim"] == 56);
}

TEST_CASE("output is independent of --jobs") {
  const auto a = run({"verify", "--type", "A2,B2,G2", "--format", "json", "--jobs", "1"});
  const auto b = run({"verify", "--type", "A2,B2,G2", "--format", "json", "--jobs", "8"});
  CHECK(a.out == b.out);
}
