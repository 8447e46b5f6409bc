#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

#include "cli_app.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using planarity::cli::run;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Golden {
  const char* file;
  std::vector<std::string> args;
};

const std::vector<Golden> kGolden = {
    {"strata_g5_d3.json", {"strata", "--genus", "5", "--degree", "3", "--json"}},
    {"strata_g0_d4.json", {"strata", "--genus", "0", "--degree", "4", "--json"}},
    {"strata_g4_d4.json", {"strata", "--genus", "4", "--degree", "4", "--json"}},
    {"strata_g2_mu31.json", {"strata", "--genus", "2", "--partition", "3,1", "--json"}},
    {"strata_g1_d1.json", {"strata", "--genus", "1", "--degree", "1", "--json"}},
    {"hurwitz_g0_d3_brute_tuples.json",
     {"hurwitz", "--genus", "0", "--degree", "3", "--engine", "brute", "--convention", "tuples", "--json"}},
    {"hurwitz_g1_d3_verify.json", {"hurwitz", "--genus", "1", "--degree", "3", "--verify", "--json"}},
    {"hurwitz_g0_mu3.json", {"hurwitz", "--genus", "0", "--partition", "3", "--convention", "labeled-poles", "--json"}},
    {"hirzebruch_n1_class30_genus.json", {"hirzebruch", "--n", "1", "--class", "3,0", "--genus", "--json"}},
    {"hirzebruch_n2_linf_linf.json", {"hirzebruch", "--n", "2", "--intersect", "Linf", "Linf", "--json"}},
    {"delta_tacnode.json", {"delta", "--tree", "2[2]", "--json"}},
    {"delta_quintuple.json", {"delta", "--tree", "5", "--json"}},
    {"delta_degree4_triple.json", {"delta", "--degree", "4", "--trees", "3", "--json"}},
    {"delta_proximity.json", {"delta", "--tree", "2[2,2]", "--json"}},
};

struct TempPath {
  fs::path path;
  explicit TempPath(const std::string& tag)
      : path(fs::temp_directory_path() / ("planarity_cli_" + tag + "_" + std::to_string(::getpid()) + ".jsonl")) {
    fs::remove(path);
  }
  ~TempPath() { fs::remove(path); }
};

}  // namespace

TEST_CASE("golden JSON outputs") {
  for (const auto& g : kGolden) {
    INFO(g.file);
    const auto r = invoke(g.args);
    const auto expected = slurp(fs::path(PLANARITY_GOLDEN_DIR) / g.file);
    REQUIRE_FALSE(expected.empty());
    CHECK(r.out == expected);
  }
}

TEST_CASE("documented example values") {
  auto value_of = [](const std::vector<std::string>& args) { return json::parse(invoke(args).out); };

  const auto s = value_of({"strata", "--genus", "5", "--degree", "3", "--json"});
  CHECK(s["m"] == 2);
  CHECK(s["M"] == 2);
  CHECK(s["single_stratum"] == true);

  const auto s0 = value_of({"strata", "--genus", "0", "--degree", "4", "--json"});
  CHECK(s0["strata"].size() == 1);
  CHECK(s0["strata"][0]["l"] == 0);
  CHECK(s0["strata"][0]["dim"] == 6);

  CHECK(value_of({"hurwitz", "-g", "0", "-d", "3", "-e", "brute", "-c", "tuples", "--json"})["value"] == "24");
  const auto h3 = value_of({"hurwitz", "--genus", "1", "--degree", "3", "--verify", "--json"});
  CHECK(h3["raw_transitive_tuples"] == "240");
  CHECK(h3["tuples_over_d_factorial"] == "40");
  CHECK(h3["verify"]["agree"] == true);
  CHECK(value_of({"hurwitz", "--genus", "0", "--partition", "3", "--json"})["value"] == "1");

  CHECK(value_of({"hirzebruch", "--n", "1", "--class", "3,0", "--genus", "--json"})["genus"] == "1");
  CHECK(value_of({"hirzebruch", "--n", "2", "--intersect", "Linf", "Linf", "--json"})["intersection"]["value"] == -2);
  CHECK(value_of({"delta", "--tree", "2[2]", "--json"})["delta"] == "2");
  CHECK(value_of({"delta", "--tree", "5", "--json"})["delta"] == "10");
  CHECK(value_of({"delta", "--degree", "4", "--trees", "3", "--json"})["genus"] == "0");
}

TEST_CASE("text output") {
  CHECK(invoke({"hirzebruch", "--n", "2", "--intersect", "Linf", "Linf"}).out == "intersection: -2\n");
  CHECK(invoke({"delta", "--tree", "5"}).out == "delta: 10\n");
  CHECK(invoke({"hirzebruch", "--n", "1", "--class", "3,0", "--genus"}).out == "genus: 1\n");
  CHECK(invoke({"hurwitz", "--genus", "0", "--partition", "3"}).out.rfind("h = 1\n", 0) == 0);
}

TEST_CASE("exit codes") {
  const auto bad_degree = invoke({"strata", "--genus", "1", "--degree", "1", "--json"});
  CHECK(bad_degree.code == 2);
  const auto err = json::parse(bad_degree.out);
  CHECK(err["error"]["kind"] == "domain");
  CHECK(err["error"]["message"].get<std::string>().find("degree must be >= 2") != std::string::npos);

  CHECK(invoke({"delta", "--tree", "2[2,2]"}).code == 2);
  CHECK(invoke({"delta", "--tree", "2[2,2]"}).err.find("proximity") != std::string::npos);
  CHECK(invoke({"hurwitz", "--genus", "1", "--degree", "3", "--engine", "closed-form"}).code == 2);
  CHECK(invoke({"hurwitz", "--genus", "0", "--partition", "1,2"}).code == 2);
  CHECK(invoke({"hurwitz", "--genus", "0", "--degree", "3", "--engine", "elsv"}).code == 2);
  CHECK(invoke({"hirzebruch", "--n", "1", "--expr", "3Q", "--genus"}).code == 2);
  CHECK(invoke({"frobnicate"}).code == 2);
  CHECK(invoke({"strata", "--degree", "3"}).code == 2);

  const auto budget = invoke({"hurwitz", "--genus", "0", "--degree", "5", "--engine", "brute", "--budget", "100",
                              "--json"});
  CHECK(budget.code == 4);
  const auto b = json::parse(budget.out);
  CHECK(b["error"]["kind"] == "budget");
  CHECK(b["error"]["budget"] == 100);
  CHECK(b["error"]["visited"].get<std::uint64_t>() > 100);
}

TEST_CASE("warm cache reproduces output byte for byte") {
  TempPath cache("warm");
  const std::vector<std::string> args{"hurwitz", "--genus", "1",     "--degree", "4",
                                      "--engine", "brute", "--cache", cache.path.string(), "--json"};
  const auto cold = invoke(args);
  REQUIRE(cold.code == 0);
  const auto after_cold = slurp(cache.path);
  CHECK_FALSE(after_cold.empty());
  const auto warm = invoke(args);
  CHECK(warm.code == 0);
  CHECK(warm.out == cold.out);
  CHECK(slurp(cache.path) == after_cold);

  // A budget too small to compute anything still succeeds from the cache.
  auto tiny = args;
  tiny.insert(tiny.end() - 1, {"--budget", "1"});
  const auto cached = invoke(tiny);
  CHECK(cached.code == 0);
  CHECK(cached.out == cold.out);
}

TEST_CASE("HURWITZ_CACHE is the default cache location") {
  TempPath cache("env");
  ::setenv("HURWITZ_CACHE", cache.path.c_str(), 1);
  const auto r = invoke({"hurwitz", "--genus", "0", "--degree", "3"});
  ::unsetenv("HURWITZ_CACHE");
  CHECK(r.code == 0);
  CHECK(slurp(cache.path).find("\"value\":\"24\"") != std::string::npos);
}

TEST_CASE("corrupted cache exits with 5") {
  TempPath cache("corrupt");
  {
    std::ofstream out(cache.path);
    out << R"({"key":{"d":3,"r":4,"mu":"1,1,1","kind":"n_trans"},"value":"24","engine":"brute"})" << "\n"
        << R"({"key":{"d":3,"r":4,"mu":"1,1,1","kind":"n_trans"},"value":"25","engine":"brute"})" << "\n";
  }
  const auto r = invoke({"hurwitz", "--genus", "0", "--degree", "3", "--cache", cache.path.string(), "--json"});
  CHECK(r.code == 5);
  CHECK(json::parse(r.out)["error"]["kind"] == "cache-integrity");

  // A single wrong seeded value is caught when verification recomputes it.
  {
    std::ofstream out(cache.path);
    out << R"({"key":{"d":3,"r":4,"mu":"1,1,1","kind":"n_trans"},"value":"25","engine":"brute"})" << "\n";
  }
  CHECK(invoke({"hurwitz", "--genus", "0", "--degree", "3", "--verify", "--cache", cache.path.string()}).code == 5);
}

TEST_CASE("verify agrees over the shipped matrix") {
  for (int g = 0; g <= 2; ++g)
    for (int d = 1; d <= 5; ++d) {
      if (d + d + 2 * g - 2 > 8) continue;  // brute force stays fast
      const auto r = invoke({"hurwitz", "--genus", std::to_string(g), "--degree", std::to_string(d), "--verify"});
      INFO("g=" << g << " d=" << d << "\n" << r.out << r.err);
      CHECK(r.code == 0);
    }
}

TEST_CASE("binary smoke test") {
  const std::string cmd = std::string(PLANARITY_BINARY) + " delta --tree 5 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::string out;
  char buf[256];
  while (std::fgets(buf, sizeof buf, pipe)) out += buf;
  const int status = ::pclose(pipe);
  CHECK(status == 0);
  CHECK(out == "delta: 10\n");

  FILE* bad = ::popen((std::string(PLANARITY_BINARY) + " strata --genus 1 --degree 1 2>/dev/null").c_str(), "r");
  REQUIRE(bad);
  while (std::fgets(buf, sizeof buf, bad)) {
  }
  const int bad_status = ::pclose(bad);
  CHECK(WEXITSTATUS(bad_status) == 2);
}
