#include <doctest.h>

#include <json.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = splitcount::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("splitting counts from the command line") {
  const CliRun at2 = cli({"sigma", "--q", "2", "--m", "2", "--d", "2", "--type", "4:1"});
  CHECK(at2.code == 0);
  CHECK(at2.out == "20\n");

  const CliRun poly = cli({"sigma-poly", "--m", "2", "--d", "2", "--type", "1:4"});
  CHECK(poly.code == 0);
  CHECK(poly.out == "q^4\n");
}

TEST_CASE("infeasible requests exit with code 3") {
  const CliRun mismatch = cli({"sigma-poly", "--m", "2", "--d", "2", "--type", "1:3"});
  CHECK(mismatch.code == 3);
  CHECK(mismatch.out.empty());
  CHECK_FALSE(mismatch.err.empty());

  const CliRun small =
      cli({"sigma", "--q", "2", "--m", "2", "--d", "2", "--type", "1:1;1:1;1:1;1:1"});
  CHECK(small.code == 3);

  const CliRun capped = cli({"flags", "--type", "4:1", "--tuple", "2,0", "--q", "2",
                             "--method", "brute", "--scale-limit", "1"});
  CHECK(capped.code == 3);
}

TEST_CASE("invalid input exits with code 2") {
  CHECK(cli({"sigma", "--q", "two", "--m", "2", "--d", "2", "--type", "4:1"}).code == 2);
  CHECK(cli({"no-such-command"}).code == 2);
  CHECK(cli({}).code == 2);
  CHECK(cli({"sigma", "--q", "2", "--m", "2", "--d", "2", "--type", "nope"}).code == 2);
  CHECK(cli({"sigma", "--q", "6", "--m", "2", "--d", "2", "--type", "4:1"}).code == 2);
  CHECK(cli({"flags", "--type", "1:3", "--tuple", "1,0", "--method", "concrete"}).code == 2);
  CHECK(cli({"identities", "--params", "1,1,1"}).code == 2);  // needs a specific --which
}

TEST_CASE("machine-readable output round-trips") {
  const CliRun sigma =
      cli({"sigma", "--q", "2", "--m", "2", "--d", "2", "--type", "4:1", "--json"});
  CHECK(sigma.code == 0);
  const auto sj = nlohmann::json::parse(sigma.out);
  CHECK(sj["query"]["op"] == "sigma");
  CHECK(sj["query"]["q"] == 2);
  CHECK(sj["result"]["int"] == "20");

  const CliRun poly =
      cli({"sigma-poly", "--m", "2", "--d", "2", "--type", "1:4", "--json"});
  const auto pj = nlohmann::json::parse(poly.out);
  CHECK(pj["result"]["poly"] == nlohmann::json({"0", "0", "0", "0", "1"}));

  const CliRun kap = cli({"kappa", "--q", "2", "--m", "1", "--d", "2", "--type", "2:1", "--json"});
  const auto kj = nlohmann::json::parse(kap.out);
  CHECK(kj["result"]["rational"] == nlohmann::json({"3", "4"}));
}

TEST_CASE("probability output in plain form") {
  const CliRun kap = cli({"kappa", "--q", "2", "--m", "1", "--d", "2", "--type", "2:1"});
  CHECK(kap.code == 0);
  CHECK(kap.out == "3/4\n");
}

TEST_CASE("flag and invariant queries") {
  CHECK(cli({"flags", "--type", "1:3", "--tuple", "1,0"}).out == "q^2 + q\n");
  CHECK(cli({"flags", "--type", "1:3", "--tuple", "1,0", "--q", "2"}).out == "6\n");
  CHECK(cli({"flags", "--type", "1:3", "--tuple", "1,0", "--q", "2", "--method", "concrete"}).out ==
        "6\n");
  CHECK(cli({"flags", "--type", "1:3", "--tuple", "1,0", "--q", "2", "--method", "brute"}).out ==
        "6\n");
  CHECK(cli({"invariants", "--type", "1:2,2", "--dims", "2"}).out == "q^2 + q + 1\n");
  CHECK(cli({"invariants", "--type", "1:2,2", "--dims", "2", "--q", "2", "--method", "concrete"})
            .out == "7\n");
}

TEST_CASE("identity checks from the command line") {
  const CliRun one = cli({"identities", "--which", "product", "--params", "3,1,1"});
  CHECK(one.code == 0);
  CHECK(one.out == "holds\n");

  const CliRun sweep = cli({"identities", "--max", "3"});
  CHECK(sweep.code == 0);
  CHECK(sweep.out.find("product:") != std::string::npos);
  CHECK(sweep.out.find("total:") != std::string::npos);
  CHECK(sweep.out.find(" 0 failures") != std::string::npos);
  CHECK(sweep.err.empty());

  const CliRun json_sweep = cli({"identities", "--max", "2", "--json"});
  const auto j = nlohmann::json::parse(json_sweep.out);
  CHECK(std::stol(j["result"]["int"].get<std::string>()) > 0);
}

TEST_CASE("self-check sweep from the command line") {
  const CliRun run = cli({"verify", "--max-size", "2", "--max-q", "3"});
  CHECK(run.code == 0);
  CHECK(run.out.find("verify:") != std::string::npos);
  CHECK(run.out.find(" 0 failures") != std::string::npos);
  CHECK(run.err.empty());
}

TEST_CASE("block-shifted matrix counts from the command line") {
  CHECK(cli({"toeplitz", "--q", "2", "--m", "2", "--d", "2"}).out == "96\n");
  CHECK(cli({"toeplitz", "--q", "2", "--m", "2", "--d", "2", "--brute"}).out == "96\n");
}

TEST_CASE("environment variable caps brute-force work") {
  setenv("SPLITCOUNT_SCALE_LIMIT", "1", 1);
  const CliRun capped =
      cli({"flags", "--type", "4:1", "--tuple", "2,0", "--q", "2", "--method", "brute"});
  unsetenv("SPLITCOUNT_SCALE_LIMIT");
  CHECK(capped.code == 3);
}
