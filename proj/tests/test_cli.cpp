#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "sevo/report.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(SEVO_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), {}};
}

fs::path scratch_dir(const std::string& name) {
  const fs::path d = fs::temp_directory_path() / ("sevo_cli_" + name);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST_CASE("roots table") {
  const Run r = run_cli("roots --sigma 1 --delta1 0.25 --a 1 --b 0 --rmin 1e-3 --rmax 10 --points 50");
  CHECK(r.code == 0);
  const auto ls = lines(r.out);
  REQUIRE(ls.size() == 51);
  CHECK(ls[0] == "r,re_lambda1,im_lambda1,re_lambda2,im_lambda2,discriminant");
  double prev = 0.0;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const double rv = std::stod(ls[i].substr(0, ls[i].find(',')));
    CHECK(rv > prev);
    prev = rv;
  }
  const auto at = lines(run_cli("roots --r 0.25").out);
  REQUIRE(at.size() == 2);
  CHECK(std::abs(std::stod(at[1].substr(at[1].rfind(',') + 1))) < 1e-12);
}

TEST_CASE("invalid parameters and malformed flags exit with 2") {
  CHECK(run_cli("roots --sigma 0.5").code == 2);
  CHECK(run_cli("roots --sigma").code == 2);
  CHECK(run_cli("roots --bogus 1").code == 2);
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("norm --data1 nothing").code == 2);
  CHECK(run_cli("bounds --lemma 9.9").code == 2);
  CHECK(run_cli("norm --format xml").code == 2);
}

TEST_CASE("norm command") {
  const Run z = run_cli("norm --data0 zero --data1 zero --format json");
  CHECK(z.code == 0);
  CHECK(sevo::json::parse(z.out).at("result").at("value") == 0.0);

  const Run p = run_cli("norm --sigma 2 --delta1 0.5 --target profile --s 1 --t 100 --format json");
  CHECK(p.code == 0);
  const auto doc = sevo::json::parse(p.out);
  CHECK(doc.at("result").at("value").get<double>() ==
        doctest::Approx(doc.at("closed_form").get<double>()).epsilon(1e-8));

  CHECK(run_cli("norm --tol 1e-16 --t 1").code == 3);
}

TEST_CASE("rates command prints the exact exponent") {
  const Run r = run_cli("rates --a 0 --b 1 --delta2 0.75 --j 1");
  CHECK(r.code == 0);
  CHECK(lines(r.out).at(1) == "A0B1,1,0,1,3,-1,-1");
}

TEST_CASE("theorem command") {
  const fs::path dir = scratch_dir("theorem");
  std::ofstream(dir / "cfg.json") << R"({"theorem": "1.1", "grid": {"k_min": 6, "k_max": 9}, "fit_points": 3})";
  const Run r = run_cli("theorem --config " + (dir / "cfg.json").string() + " --out " + (dir / "out").string() +
                     " --svg " + (dir / "plot.svg").string() + " --format json");
  CHECK((r.code == 0 || r.code == 4));
  const auto doc = sevo::json::parse(r.out);
  CHECK(doc.at("kind") == "theorem_suite");
  CHECK(sevo::json::parse(slurp(dir / "out" / "report.json")) == doc);
  CHECK(slurp(dir / "out" / "series.csv").rfind("t,s,j,target,value,abs_error,nodes\n", 0) == 0);
  CHECK(fs::exists(dir / "plot.svg"));

  std::ofstream(dir / "bad.json") << R"({"theorem": "1.1", "model": {"sigma": 2, "delta1": 0.5, "n": 2}})";
  CHECK(run_cli("theorem --config " + (dir / "bad.json").string()).code == 2);
  std::ofstream(dir / "broken.json") << "{not json";
  CHECK(run_cli("theorem --config " + (dir / "broken.json").string()).code == 2);
  CHECK(run_cli("theorem").code == 2);
  CHECK(run_cli("theorem --id 1.2 --a 1 --b 0").code == 2);
}

TEST_CASE("failing suite still writes its report and exits with 4") {
  const fs::path dir = scratch_dir("fail");
  std::ofstream(dir / "cfg.json")
      << R"({"theorem": "1.1", "grid": {"k_min": 6, "k_max": 9}, "fit_points": 3, "thresholds": {"rate_tolerance": 0}})";
  const Run r = run_cli("theorem --config " + (dir / "cfg.json").string() + " --out " + dir.string());
  CHECK(r.code == 4);
  CHECK(fs::exists(dir / "report.json"));
}

TEST_CASE("bounds command") {
  CHECK(run_cli("bounds --lemma A1 --alpha 2 --beta 0 --c 1 --n 1").code == 0);
  CHECK(run_cli("bounds --lemma 2.1").code == 0);
  CHECK(run_cli("bounds --lemma 2.1 --corrupt 1").code == 4);
  const Run j = run_cli("bounds --lemma A3 --weight 0 --decay 1.5 --format json");
  CHECK(j.code == 0);
  CHECK(sevo::json::parse(j.out).at("kind") == "riemann_lebesgue");
}

TEST_CASE("oracle check") {
  const Run r = run_cli("oracle-check");
  CHECK(r.code == 0);
  CHECK(lines(r.out).size() == 3);
  CHECK(run_cli("oracle-check --tol 1e-20").code == 4);
}

TEST_CASE("emitted JSON documents follow the published schemas") {
  const auto schema = [](const std::string& name) {
    std::ifstream f(std::string(SEVO_SCHEMA_DIR) + "/" + name);
    return sevo::json::parse(f);
  };
  const auto norm = run_cli("norm --sigma 2 --delta1 0.5 --target profile --format json");
  CHECK(sevo::schema_violations(sevo::json::parse(norm.out), schema("norm_result.schema.json")).empty());
  for (const std::string lemma : {"2.2", "expansions", "A1", "A2", "A3"}) {
    INFO(lemma);
    const auto b = run_cli("bounds --lemma " + lemma + " --format json");
    CHECK(sevo::schema_violations(sevo::json::parse(b.out), schema("bounds_report.schema.json")).empty());
  }
}
