#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"

using namespace greenforge::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("decompose") {
  auto r = run({"decompose", "--cyclic", "6", "--q", "1", "0,2", "0,3"});
  CHECK(r.code == kOk);
  CHECK(r.out == "V(0,5) + V(1,3) + V(2,1)\n");

  r = run({"decompose", "--cyclic", "3", "--q", "zeta:3:1", "0,1", "0,3", "--oracle"});
  CHECK(r.code == kOk);
  CHECK(r.out == "oracle: V(0,4) + V(1,2)\nclosed: V(0,4) + V(1,2)\nmatch\n");

  r = run({"decompose", "--infinite", "--q", "2", "0,0", "5,7", "--format", "json"});
  CHECK(r.code == kOk);
  CHECK(r.out == R"({"summands":[{"length":7,"multiplicity":1,"vertex":5}]})"
                 "\n");

  r = run({"decompose", "--infinite", "--q", "-1", "-2,1", "(3,0)"});
  CHECK(r.code == kOk);
  CHECK(r.out == "V(1,1)\n");

  r = run({"decompose", "--cyclic", "2", "--q", "-1", "0,1", "0,1", "--oracle", "--format", "json"});
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "match");
  CHECK(j["summands"].size() == 2);
}

TEST_CASE("invalid configurations exit with 2") {
  CHECK(run({"decompose", "--cyclic", "3", "--q", "zeta:2:1", "0,1", "0,1"}).code == kInvalidConfig);
  CHECK(run({"decompose", "--cyclic", "1", "--q", "-1", "0,1", "0,1"}).code == kInvalidConfig);
  CHECK(run({"decompose", "--cyclic", "0", "0,1", "0,1"}).code == kInvalidConfig);
  CHECK(run({"decompose", "--q", "1", "0,1", "0,1"}).code == kInvalidConfig);
  CHECK(run({"decompose", "--cyclic", "2", "--infinite", "0,1", "0,1"}).code == kInvalidConfig);
  CHECK(run({"decompose", "--cyclic", "2", "0,1", "x"}).code == kInvalidConfig);
  CHECK(run({"decompose", "--cyclic", "2", "0,1"}).code == kInvalidConfig);
  CHECK(run({"decompose", "--cyclic", "2", "--q", "zeta:2", "0,1", "0,1"}).code == kInvalidConfig);
  CHECK(run({"decompose", "--cyclic", "2", "0,1", "0,1", "--format", "xml"}).code == kInvalidConfig);
  CHECK(run({"frobnicate"}).code == kInvalidConfig);
  CHECK(run({}).code == kInvalidConfig);
  CHECK(run({"convert", "--cyclic", "2", "--q", "-1", "from-poly", "w^2"}).code == kInvalidConfig);
  const Run r = run({"decompose", "--cyclic", "3", "--q", "zeta:2:1", "0,1", "0,1"});
  CHECK(r.out.empty());
  CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("help") {
  const Run r = run({"--help"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("decompose") != std::string::npos);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--cyclic", "1", "--q", "1", "--max-len", "12"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("169 pairs, 0 mismatches") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);

  r = run({"verify", "--infinite", "--q", "zeta:2:1", "--max-len", "8", "--window", "3", "--battery", "40"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("3969 pairs, 0 mismatches") != std::string::npos);

  r = run({"verify", "--cyclic", "4", "--q", "zeta:4:1", "--max-len", "6", "--battery", "40"});
  CHECK(r.code == kOk);
  CHECK(r.out.find("784 pairs, 0 mismatches") != std::string::npos);
  CHECK(r.out.find("pass  path algebra: a_0^4 = 0") != std::string::npos);
  CHECK(r.out.find("pass  green ring: (y - x - 1)*f_3 maps to 0") != std::string::npos);
}

TEST_CASE("table") {
  const Run r = run({"table", "--cyclic", "2", "--q", "-1", "--max-len", "3"});
  CHECK(r.code == kOk);
  const auto rows = lines(r.out);
  CHECK(rows.size() == 4 * 4 * 2 * 2);
  bool found = false;
  std::vector<std::array<long long, 4>> keys;
  for (const auto& line : rows) {
    const auto j = nlohmann::json::parse(line);
    keys.push_back({j["left"]["length"], j["right"]["length"], j["left"]["vertex"], j["right"]["vertex"]});
    if (j["left"] == nlohmann::json{{"vertex", 0}, {"length", 1}} &&
        j["right"] == nlohmann::json{{"vertex", 0}, {"length", 1}}) {
      found = true;
      CHECK(j["summands"] == nlohmann::json::parse(R"([{"vertex":0,"length":1,"multiplicity":1},
                                                       {"vertex":1,"length":1,"multiplicity":1}])"));
    }
  }
  CHECK(found);
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(run({"table", "--cyclic", "2", "--q", "-1", "--max-len", "3"}).out == r.out);

  const Run inf = run({"table", "--infinite", "--q", "2", "--max-len", "2", "--window", "1"});
  CHECK(lines(inf.out).size() == 3 * 3 * 3 * 3);
}

TEST_CASE("green ring commands") {
  auto r = run({"mul", "--cyclic", "2", "--q", "-1", "0,1", "0,1"});
  CHECK(r.code == kOk);
  CHECK(r.out == "[V(0,1)] + [V(1,1)]\n");

  r = run({"convert", "--cyclic", "6", "--q", "1", "to-poly", "2,3"});
  CHECK(r.out == "x^2*y^3 - 2*x^3*y\n");
  r = run({"convert", "--cyclic", "3", "--q", "1", "from-poly", "y^2"});
  CHECK(r.out == "[V(0,2)] + [V(1,0)]\n");
  r = run({"convert", "--cyclic", "2", "--q", "-1", "from-poly", "x^2"});
  CHECK(r.out == "[V(0,0)]\n");
  r = run({"convert", "--cyclic", "2", "--q", "-1", "to-poly",
           R"({"summands":[{"vertex":1,"length":2,"multiplicity":-1}]})"});
  CHECK(r.code == kOk);
  CHECK(r.out == "-x*z\n");
}
