#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "schlicht/json_io.hpp"
#include "schlicht/spec_parse.hpp"

namespace {

using schlicht::cli::run;
namespace fs = std::filesystem;

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  Result r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::path(SCHLICHT_TEST_TMP) / "cli_scratch";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("classify the identity") {
  const Result r = call({"classify", "--fn", "identity", "--class", "starlike:lambda=0.5"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "Member");
  CHECK(j["margin"] == 0.5);
  CHECK(r.err.empty());
}

TEST_CASE("classify with assert-member") {
  CHECK(call({"classify", "--fn", "koebe:lambda=0,x=1", "--class", "convex:lambda=0", "--assert-member"}).code == 1);
  CHECK(call({"classify", "--fn", "koebe:lambda=0,x=1", "--class", "convex:lambda=0"}).code == 0);
  const Result ok = call({"classify", "--fn", "koebe:lambda=0,x=1", "--class", "starlike:lambda=0", "--assert-member",
                          "--format", "pretty"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("status     Member") != std::string::npos);
}

TEST_CASE("classify formats") {
  const Result csv = call({"classify", "--fn", "half-plane", "--class", "starlike", "--format", "csv", "--grid",
                           "radii=0.5/0.9,angles=64"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("radius,margin\n0.5,", 0) == 0);
  const Result lifted = call({"classify", "--fn", "koebe:lambda=0,x=1", "--class", "strongly-convex:eta=1,lambda=0,c=1",
                              "--format", "pretty"});
  CHECK(lifted.code == 0);
  CHECK(lifted.out.find("nondegen.  ok") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"classify", "--fn", "identity"}).code == 2);
  CHECK(call({"classify", "--fn", "identity", "--class", "starlike:lambda=2"}).code == 2);
  CHECK(call({"classify", "--fn", "wobbly", "--class", "starlike"}).code == 2);
  CHECK(call({"classify", "--fn", "identity", "--class", "close-to-convex"}).code == 2);
  CHECK(call({"classify", "--fn", "identity", "--class", "starlike", "--format", "xml"}).code == 2);
  CHECK(call({"apply", "--op", "bernardi:c=-3", "--fn", "identity"}).code == 2);
  CHECK(call({"verify-theorem", "--samples", "1"}).code == 2);
  CHECK(call({"verify-theorem", "--id", "T9_9", "--samples", "1"}).code == 2);
  CHECK(call({"verify-theorem", "--id", "T2_10", "--point", "lambda=0.25,c=0.9", "--samples", "1"}).code == 2);
  const Result r = call({"classify", "--fn", "identity", "--class", "nope"});
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("strict companion check") {
  const std::vector<std::string> base = {"classify", "--fn", "identity", "--class", "close-to-convex:beta=0,lambda=0",
                                         "--companion", "poly:a2=0.9"};
  CHECK(call(base).code == 0);
  std::vector<std::string> strict = base;
  strict.push_back("--strict");
  CHECK(call(strict).code == 2);
}

TEST_CASE("malformed series files report the line") {
  const fs::path bad = scratch("bad_series.json");
  std::ofstream(bad) << "{\n  \"coeffs\": [\n    [0, 0],\n    [1, 0],\n    [1, 0, 5]\n  ]\n}\n";
  const Result r = call({"classify", "--fn", "series:path=" + bad.string(), "--class", "starlike"});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 5") != std::string::npos);
}

TEST_CASE("apply output re-parses to identical coefficients") {
  const fs::path path = scratch("libera_koebe.json");
  const Result r = call({"apply", "--op", "bernardi:c=1.0", "--fn", "koebe:lambda=0,x=1", "--order", "64", "--out",
                         path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  const schlicht::Series s = schlicht::load_series_file(path.string());
  CHECK(s.order() == 64);
  CHECK(s[2] == schlicht::Complex(4.0 / 3.0));
  const Result again = call({"apply", "--op", "libera", "--fn", "koebe:lambda=0,x=1", "--order", "64"});
  CHECK(again.out == slurp(path));
  CHECK(schlicht::series_from_json(again.out) == s);
  // the written series is usable as a function
  const Result c = call({"classify", "--fn", "series:path=" + path.string(), "--class", "starlike"});
  CHECK(c.code == 0);
}

TEST_CASE("identities csv") {
  const Result r = call({"identities", "--all", "--trials", "10", "--seed", "1"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "identity,c,sigma,order,trials,max_residual,max_relative_residual");
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    const double rel = std::stod(line.substr(line.rfind(',') + 1));
    CHECK(rel <= 1e-12);
  }
  CHECK(rows == 7 * 4 * 3);
  const Result one = call({"identities", "--id", "Commute", "--trials", "3", "--c", "2", "--sigma", "0.7"});
  CHECK(one.out.find("Commute,2,0.7,64,3,") != std::string::npos);
  CHECK(call({"identities", "--id", "Id_0", "--trials", "1"}).code == 2);
}

TEST_CASE("verify-theorem on the strongly convex inclusion") {
  const Result r = call({"verify-theorem", "--id", "T2_7", "--samples", "5", "--seed", "1", "--threads", "1"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["theorem"] == "T2_7");
  CHECK(j["counts"]["counterexample_flagged"] == 0);
  CHECK(j["counts"]["confirmed"].get<int>() > 0);
}

TEST_CASE("seed determines the report") {
  const std::vector<std::string> args = {"verify-theorem", "--id", "T2_3", "--samples", "2", "--point", "lambda=0.25,c=0"};
  std::vector<std::string> s1 = args, s2 = args;
  s1.insert(s1.end(), {"--seed", "5"});
  s2.insert(s2.end(), {"--seed", "6"});
  CHECK(call(s1).out == call(s1).out);
  CHECK(call(s1).out != call(s2).out);
}

TEST_CASE("verify-theorem writes json and prints a summary") {
  const fs::path path = scratch("t23.json");
  const Result r = call({"verify-theorem", "--id", "T2_3", "--id", "C2_4", "--samples", "1", "--json", path.string(),
                         "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("theorem,points,samples,confirmed", 0) == 0);
  const auto j = nlohmann::json::parse(slurp(path));
  CHECK(j["theorems"].size() == 2);

  const Result rep = call({"report", "--in", path.string(), "--format", "csv"});
  CHECK(rep.code == 0);
  CHECK(rep.out.find("\nT2_3,11,11,0,0,0,1\n") != std::string::npos);
  CHECK(call({"report", "--in", scratch("missing.json").string()}).code == 2);
}

TEST_CASE("config files") {
  const fs::path cfg = scratch("classify.json");
  std::ofstream(cfg) << R"({"command": "classify", "fn": "identity", "class": "starlike:lambda=0.25", "format": "pretty"})";
  const Result r = call({"--config", cfg.string()});
  CHECK(r.code == 0);
  CHECK(r.out.find("margin     0.75") != std::string::npos);

  // command-line flags win over the file
  const Result o = call({"--config", cfg.string(), "classify", "--class", "starlike:lambda=0.5"});
  CHECK(o.code == 0);
  CHECK(o.out.find("margin     0.5") != std::string::npos);

  const fs::path unknown = scratch("unknown.json");
  std::ofstream(unknown) << R"({"command": "classify", "fn": "identity", "class": "starlike", "colour": "red"})";
  const Result u = call({"--config", unknown.string()});
  CHECK(u.code == 2);
  CHECK(u.err.find("colour") != std::string::npos);

  const fs::path verify = scratch("verify.json");
  std::ofstream(verify) << R"({"command": "verify-theorem", "id": ["T2_3"], "samples": 1, "point": ["lambda=0,c=1"], "max_order": 2048})";
  const Result v = call({"--config", verify.string()});
  CHECK(v.code == 0);
  CHECK(nlohmann::json::parse(v.out)["config"]["max_series_order"] == 2048);

  const fs::path nocmd = scratch("nocmd.json");
  std::ofstream(nocmd) << R"({"fn": "identity"})";
  CHECK(call({"--config", nocmd.string()}).code == 2);
}

TEST_CASE("help exits 0") {
  const Result r = call({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("verify-theorem") != std::string::npos);
}
