#include "dinfty/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace dinfty::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("theorem1 csv") {
  const auto r = invoke({"theorem1", "--m", "2", "--n", "2", "--output", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out ==
        "t,t_star,lhs,rhs,match\n"
        "3,0,1,1,true\n"
        "4,1,4,4,true\n"
        "5,2,6,6,true\n"
        "6,3,4,4,true\n"
        "7,4,1,1,true\n");
}

TEST_CASE("theorem1 json") {
  const auto r = invoke({"theorem1", "--m", "2", "--n", "3", "--output", "json"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["all_match"] == true);
  CHECK(j["rows"].size() == 7);
  CHECK(j["rows"][3]["binomial"] == "20");
}

TEST_CASE("usage errors exit 2") {
  CHECK(invoke({"theorem1", "--m", "0", "--n", "2"}).code == kExitUsage);
  CHECK(invoke({"theorem1", "--m", "2"}).code == kExitUsage);
  CHECK(invoke({"theorem1", "--m", "8", "--n", "8"}).code == kExitUsage);
  CHECK(invoke({"corollary", "--m", "7"}).code == kExitUsage);
  CHECK(invoke({"rsk", "--matrix", "12"}).code == kExitUsage);
  CHECK(invoke({"frobnicate"}).code == kExitUsage);
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"hopf", "rank", "--r", "2", "--lambda", "-1"}).code == kExitUsage);
  CHECK(invoke({"hopf", "rank", "--r", "2", "--lambda", "0"}).code == kExitUsage);
  CHECK(invoke({"theorem1", "--m", "2", "--n", "2", "--output", "xml"}).code == kExitUsage);
  const auto r = invoke({"hopf", "rank", "--r", "2", "--lambda", "1"});
  CHECK(r.err.find("degenerate") != std::string::npos);
}

TEST_CASE("help exits 0") { CHECK(invoke({"--help"}).code == kExitOk); }

TEST_CASE("gamma symmetry table") {
  const auto r = invoke({"gamma", "--m", "2", "--n", "2", "--output", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("t,t_star,sum_vx_sq,reflected_t,symmetric\n", 0) == 0);
  CHECK(r.out.find("5,2,10,5,true") != std::string::npos);
}

TEST_CASE("corollary and rsk") {
  const auto c = invoke({"corollary", "--m", "2", "--output", "json"});
  CHECK(c.code == kExitOk);
  CHECK(nlohmann::json::parse(c.out)["match"] == true);
  const auto r = invoke({"rsk", "--matrix", "110/011", "--output", "json"});
  CHECK(r.code == kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["P"]["shape"] == nlohmann::json::array({2, 1, 1}));
  CHECK(j["Q"]["shape"] == nlohmann::json::array({3, 1}));
}

TEST_CASE("hopf verbs pass") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"hopf", "axioms"},
           {"hopf", "pairing", "--gen", "Phi", "--lambda", "5/7", "--window", "6"},
           {"hopf", "rank", "--r", "2", "--lambda", "3/2"},
           {"hopf", "stirling", "--t", "8"},
           {"hopf", "vanish", "--r", "2", "--lambda", "-2", "--kind", "Psi"},
           {"lemmas"}}) {
    const auto r = invoke(args);
    INFO(args.front(), " ", args.back());
    CHECK(r.code == kExitOk);
  }
}

TEST_CASE("failed check exits 1") {
  const auto r = invoke({"hopf", "vanish", "--r", "2", "--lambda", "2", "--s", "3", "--output", "json"});
  CHECK(r.code == kExitMismatch);
  CHECK(nlohmann::json::parse(r.out)["all_passed"] == false);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"hopf", "axioms", "--seed", "5", "--output", "json"};
  CHECK(invoke(args).out == invoke(args).out);
  CHECK(invoke({"demo"}).out == invoke({"demo"}).out);
}
