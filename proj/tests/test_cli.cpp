#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef BIPGIRTH_CLI_PATH
#error "BIPGIRTH_CLI_PATH must point at the built CLI"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  auto tmp = std::filesystem::temp_directory_path() / ("bipgirth_cli_" + std::to_string(::getpid()) + ".out");
  std::string cmd = std::string(BIPGIRTH_CLI_PATH) + " " + args + " > " + tmp.string() + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  std::filesystem::remove(tmp);
  return r;
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bipgirth_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Cli, ConstructCirculant) {
  auto r = run("construct circulant --k 2 --s 1 --t 1 --out -");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "bipartite 3 3\nA0 B0\nA1 B1\nA2 B2\nB0 A1\nB1 A2\nB2 A0\n");
}

TEST(Cli, Classify) {
  auto r = run("classify --k 2 --alpha 1/3 --beta 1/3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "BAD witness=(t=1)\n");
  EXPECT_EQ(run("classify --k 2 --alpha 2/5 --beta 3/10").out, "GOOD k'=2 2a+b>1 (11/10>1/1)\n");
}

TEST(Cli, DecimalsAndUnknownFlagsAreUsageErrors) {
  EXPECT_EQ(run("classify --k 2 --alpha 0.3 --beta 1/3").code, 1);
  EXPECT_EQ(run("classify --k 2 --alpha 1/3 --beta 1/3 --bogus").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("girth /nonexistent/file").code, 1);
}

TEST(Cli, RoundTripThroughFile) {
  auto path = scratch("c.txt");
  ASSERT_EQ(run("construct circulant --k 3 --s 2 --t 1 --out " + path.string()).code, 0);
  auto g = run("girth " + path.string());
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(g.out.substr(0, 8), "girth 8\n");
  auto c = run("comply " + path.string() + " --alpha 1/7 --beta 2/7");
  EXPECT_EQ(c.out, "compliant profile=(1/7,2/7)\n");
  auto l = run("layers " + path.string() + " --vertex A0 --max 2");
  EXPECT_EQ(l.out, "N0 A 1 : A0\nN1 B 2 : B0 B1\nN2 A 2 : A1 A2\n");
  std::filesystem::remove(path);

  auto single = scratch("e.txt");
  std::ofstream(single) << "bipartite 1 1\nA0 B0\n";
  EXPECT_EQ(run("girth " + single.string()).out, "acyclic\n");
  std::filesystem::remove(single);
}

TEST(Cli, ChReduceFromGeneralDigraph) {
  auto h = scratch("h.txt");
  std::ofstream(h) << "digraph 3\n0 1\n1 2\n2 0\n";
  auto r = run("construct ch-reduce " + h.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 14), "bipartite 3 3\n");
  auto out = scratch("hb.txt");
  run("construct ch-reduce " + h.string() + " --out " + out.string());
  EXPECT_EQ(run("girth " + out.string()).out.substr(0, 8), "girth 6\n");
  std::filesystem::remove(h);
  std::filesystem::remove(out);
}

TEST(Cli, SearchExitCodesAndWitnessFile) {
  auto w = scratch("w.txt");
  auto found = run("search --k 2 --na 3 --nb 3 --alpha 1/3 --beta 1/3 --threads 1 --witness-out " + w.string());
  EXPECT_EQ(found.code, 2);
  auto j = nlohmann::json::parse(found.out);
  EXPECT_EQ(j["status"], "FoundCounterexample");
  std::ifstream in(w);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), j["witness"].get<std::string>());
  std::filesystem::remove(w);

  auto none = run("search --k 2 --na 3 --nb 3 --alpha 2/3 --beta 2/3");
  EXPECT_EQ(none.code, 0);
  EXPECT_EQ(nlohmann::json::parse(none.out)["status"], "Exhausted");
  EXPECT_EQ(run("search --k 2 --na 3 --nb 3 --alpha 4/3 --beta 2/3").code, 1);
}

TEST(Cli, LemmasFact) {
  auto r = run("lemmas --fact F1");
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j[0]["fact_id"], "F1");
  EXPECT_EQ(j[0]["holds"], true);
  for (const char* key : {"margin_min", "grid_step", "wall_time_ms"}) EXPECT_TRUE(j[0].contains(key)) << key;
  EXPECT_EQ(run("lemmas --fact F99").code, 1);
  EXPECT_EQ(run("lemmas --fact F1 --all").code, 1);
}

TEST(Cli, LemmasStress) {
  auto r = run("lemmas --stress newineq --count 200 --seed 7 --threads 1");
  EXPECT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 3u);
  for (const auto& e : j) EXPECT_EQ(e["violations"], 0);
}

TEST(Cli, RegionHasOneStatusPerRow) {
  auto r = run("region --k 2 --resolution 120 --out csv --file -");
  EXPECT_EQ(r.code, 0);
  std::istringstream is(r.out);
  std::string line;
  std::getline(is, line);
  EXPECT_EQ(line, "alpha,beta,status,provenance");
  std::size_t rows = 0;
  while (std::getline(is, line)) {
    ++rows;
    std::istringstream fields(line);
    std::string alpha, beta, status;
    std::getline(fields, alpha, ',');
    std::getline(fields, beta, ',');
    std::getline(fields, status, ',');
    EXPECT_TRUE(status == "GOOD" || status == "BAD" || status == "UNKNOWN") << line;
  }
  EXPECT_EQ(rows, 121u * 121u);
  EXPECT_NE(run("region --k 2 --resolution 10 --out svg").out.find("<svg"), std::string::npos);
}

TEST(Cli, Audits) {
  auto path = scratch("a.txt");
  run("construct circulant --k 2 --s 2 --t 1 --out " + path.string());
  auto big = run("audit bigindeg " + path.string() + " --alpha 1/5 --beta 2/5");
  EXPECT_EQ(big.code, 0);
  EXPECT_NE(big.out.find("ok"), std::string::npos);
  auto set = run("audit bigset " + path.string() + " --k 2 --alpha 1/5 --beta 2/5 --vertex all");
  EXPECT_EQ(set.code, 0);
  EXPECT_NE(set.out.find("violations=0"), std::string::npos);
  auto bells = run("audit bells " + path.string());
  EXPECT_EQ(bells.code, 0);
  EXPECT_NE(bells.out.find("conclusion"), std::string::npos);
  EXPECT_EQ(run("audit bigset " + path.string() + " --k 3 --alpha 1/5 --beta 2/5").code, 1);
  std::filesystem::remove(path);
}
