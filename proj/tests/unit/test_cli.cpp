#include "doctest.h"

#include "cli.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rankbound::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("rank of K4") {
    const Result r = run({"rank", "--graph6", "C~"});
    CHECK(r.code == 0);
    CHECK(r.out == "4\n");
  }

  TEST_CASE("named graphs and text output") {
    CHECK(run({"tau", "--named", "P4"}).out == "1\n");
    CHECK(run({"rho", "--named", "C5"}).out == "1\n");
    CHECK(run({"reduce", "--named", "C4"}).out.find("A_") != std::string::npos);
    const Result w = run({"witness", "--named", "P4", "--format", "json"});
    CHECK(w.code == 0);
    const auto j = nlohmann::json::parse(w.out);
    CHECK(j["schema"] == 1);
    CHECK(j["witness"]["t2"] == nlohmann::json::array({3}));
  }

  TEST_CASE("lemma5 reports every n as holding") {
    const Result r = run({"lemma5", "--from", "47", "--to", "118"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    REQUIRE(j["reports"].size() == 72);
    for (const auto& rep : j["reports"]) CHECK(rep["holds"] == true);
  }

  TEST_CASE("lemma5 below the range is a verification failure") {
    CHECK(run({"lemma5", "--from", "46", "--to", "46"}).code == 1);
  }

  TEST_CASE("conjecture to order 8 has no violations") {
    const Result r = run({"conjecture", "--max-order", "8", "--threads", "4"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["report"]["violation_count"] == 0);
    CHECK(j["report"]["per_rank_max_order"]["4"] == 6);
  }

  TEST_CASE("negative rationals parse as option values") {
    const Result r = run({"lev", "--n", "10", "--s", "-1/2"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["value"] == "3");
  }

  TEST_CASE("usage and format errors exit 2") {
    const Result bad = run({"rank", "--graph6", "C!"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line 1, column 2") != std::string::npos);
    CHECK(run({"rank", "--no-such-flag"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"conjecture", "--max-order", "11"}).code == 2);
    CHECK(run({"tau", "--named", "K4"}).code == 2);
    CHECK(run({"rank", "--format", "yaml", "--named", "K3"}).code == 2);
  }

  TEST_CASE("csv output") {
    const Result r = run({"extremal", "--r", "2", "--to", "4", "--format", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("graph6,", 0) == 0);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
  }

  TEST_CASE("repeated invocations are byte-identical") {
    const std::vector<std::vector<std::string>> cases = {
        {"lemma8", "--to", "40"},
        {"census", "--order", "6", "--reduced", "--list"},
        {"lemmas", "--max-order", "6", "--threads", "3"},
        {"bounds", "--n", "48", "--s", "s0", "--offset", "-4"},
        {"mineq", "--r-max", "20", "--format", "text"},
    };
    for (const auto& args : cases) {
      const Result a = run(args);
      const Result b = run(args);
      CHECK(a.code == b.code);
      CHECK(a.out == b.out);
    }
    auto threads = [](const char* t) {
      return run({"census", "--order", "7", "--threads", t}).out;
    };
    CHECK(threads("1") == threads("5"));
  }
}
