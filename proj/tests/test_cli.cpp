#include <doctest.h>

#include <cstdlib>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = permlab::tools::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("enumerate emits the count") {
  const auto r = run({"enumerate", "--mode", "class-avoid", "--pattern", "231", "--relation", "knuth", "--n", "6"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 32);
  CHECK(j["relation"] == "knuth");
  CHECK(j["mode"] == "class-avoid");
  CHECK(j["patterns"][0] == "231;x=;y=");
  CHECK_FALSE(j.contains("members"));
}

TEST_CASE("enumerate ranges, members and csv") {
  const auto csv = run({"enumerate", "--pattern", "1;x=0;y=0", "--relation", "conjugacy", "--n", "1..5", "--emit", "csv"});
  CHECK(csv.out == "n,count\n1,0\n2,1\n3,2\n4,9\n5,44\n");
  const auto members = run({"enumerate", "--mode", "avoid", "--pattern", "123", "--relation", "none", "--n", "3", "--members"});
  const auto j = nlohmann::json::parse(members.out);
  CHECK(j["members"] == nlohmann::json({"132", "213", "231", "312", "321"}));
  const auto range = nlohmann::json::parse(
      run({"enumerate", "--pattern", "231", "--relation", "knuth", "--n", "1..3"}).out);
  CHECK(range.is_array());
  CHECK(range.size() == 3);
  const auto text = run({"enumerate", "--mode", "match", "--pattern", "123", "--n", "3", "--emit", "text", "--members"});
  CHECK(text.out == "n=3 count=1\n123\n");
}

TEST_CASE("classes") {
  const auto zero = nlohmann::json::parse(run({"classes", "--relation", "toric", "--n", "0"}).out);
  CHECK(zero["by_size"] == nlohmann::json::parse(R"({"1":1})"));
  const auto five = run({"classes", "--relation", "toric", "--n", "5", "--sizes"});
  CHECK(five.out.starts_with("1 2\n2 2\n3 2\n6 18\n{"));
  CHECK(five.out.find(R"("by_size":{"1":2,"2":2,"3":2,"6":18})") != std::string::npos);
}

TEST_CASE("arithmetic verbs") {
  CHECK(run({"sigma", "--n", "6"}).out == "12\n");
  CHECK(run({"sigma", "--n", "6", "--via", "avoiders"}).out == "12\n");
  const auto natural = run({"natural", "--n", "10"});
  CHECK(natural.out.find("nu_{2,10} = 61728394(10)5 = delta_{2|10}\n") != std::string::npos);
  CHECK(natural.out.find("nu_{10,10} = (10)987654321 = delta_{10|10}\n") != std::string::npos);
  const auto robin = run({"robin", "--from", "5039", "--to", "5041"});
  CHECK(robin.out.starts_with("n,sigma,bound,holds,inconclusive\n"));
  CHECK(robin.out.find("\n5040,19344,") != std::string::npos);
  CHECK(robin.out.find(",false,false\n5041,") != std::string::npos);
}

TEST_CASE("rsk, stable, survey, seq-check") {
  CHECK(run({"rsk", "--perm", "241635"}).out == "1 3 5\n2 4 6\n\n1 2 4\n3 5 6\n");
  const auto stable = nlohmann::json::parse(run({"stable", "--relation", "knuth", "--pattern", "231", "--n-max", "6"}).out);
  CHECK(stable["stable"] == true);
  const auto unstable =
      nlohmann::json::parse(run({"stable", "--relation", "knuth", "--pattern", "123;x=1,2", "--n-max", "6"}).out);
  CHECK(unstable["stable"] == false);
  CHECK(unstable.contains("witness"));
  const auto s = nlohmann::json::parse(run({"survey", "--relation", "toric", "--length", "3", "--n", "1..4"}).out);
  CHECK(s["total_patterns"] == 1536);
  CHECK(s["representatives"] == 212);
  const auto seq = nlohmann::json::parse(run({"seq-check", "--id", "A000085", "--values", "1,2,4,10"}).out);
  CHECK(seq["ok"] == true);
  const auto recomputed = nlohmann::json::parse(run({"seq-check", "--id", "A000124", "--budget-n", "7"}).out);
  CHECK(recomputed["ok"] == true);
  CHECK(recomputed["entries"].size() == 7);
}

TEST_CASE("exit codes") {
  CHECK(run({"enumerate", "--pattern", "2x1", "--relation", "knuth", "--n", "3"}).code == 2);
  CHECK(run({"rsk", "--perm", "1123"}).code == 2);
  CHECK(run({"enumerate", "--pattern", "12", "--relation", "knuth", "--n", "10"}).code == 3);
  CHECK(run({"enumerate", "--pattern", "12", "--relation", "knuth", "--n", "10", "--budget-n", "10"}).code == 0);
  CHECK(run({"stable", "--relation", "conjugacy", "--pattern", "12"}).code == 2);
  CHECK(run({"seq-check", "--id", "A999999"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"enumerate", "--n", "3", "--mode", "class-avoid", "--pattern", "12"}).code == 2);
}

TEST_CASE("output is identical across thread counts") {
  const std::vector<std::vector<std::string>> commands{
      {"enumerate", "--pattern", "231;y=0", "--relation", "knuth", "--n", "1..7", "--members"},
      {"enumerate", "--mode", "avoid", "--pattern", "132", "--pattern", "1;x=0", "--n", "7", "--members"},
      {"classes", "--relation", "order", "--n", "0..7"},
      {"survey", "--relation", "knuth", "--length", "2", "--n", "1..6"},
      {"robin", "--from", "3", "--to", "3000"},
  };
  for (const auto& cmd : commands) {
    std::vector<std::string> reference;
    for (const char* threads : {"1", "2", "8"}) {
      auto args = cmd;
      args.insert(args.begin(), {"--threads", threads});
      const auto r = run(args);
      REQUIRE(r.code == 0);
      reference.push_back(r.out);
    }
    CHECK(reference[0] == reference[1]);
    CHECK(reference[0] == reference[2]);
    CHECK(run(cmd).out == reference[0]);
  }
}
