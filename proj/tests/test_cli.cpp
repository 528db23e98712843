#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "chowtower/report.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch_dir() {
  static const std::filesystem::path dir = [] {
    auto d = std::filesystem::temp_directory_path() / ("chowtower_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string& args, const std::string& stdin_text = "") {
  const auto dir = scratch_dir();
  const auto in = dir / "stdin.txt", out = dir / "stdout.txt", err = dir / "stderr.txt";
  std::ofstream(in) << stdin_text;
  const std::string cmd = std::string("\"") + CHOWTOWER_CLI + "\" " + args + " < \"" + in.string() +
                          "\" > \"" + out.string() + "\" 2> \"" + err.string() + "\"";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto p = scratch_dir() / name;
  std::ofstream(p) << text;
  return p.string();
}

bool contains(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

}  // namespace

TEST_CASE("intersect") {
  const Run r = run("intersect E1 E1 E1 --stage X1");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "value: 3n + 1"));
}

TEST_CASE("euler-divisor") {
  const Run r = run("euler-divisor \"-2*K_X - 2*E1 - 4*E2\"");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "euler: 28n + 78"));
  CHECK(contains(run("euler-divisor \"-2*K - 2*E2\" --stage X2").out, "euler: 28n + 78"));
}

TEST_CASE("chern, h0, baselocus, filtration, cover") {
  CHECK(contains(run("chern").out, "c1: 2*tau + 4*C0 + (n+1)*F"));
  CHECK(contains(run("h0 \"-2*K\" --n 6").out, "h0: 145"));
  CHECK(contains(run("baselocus --n 10").out, "curve: (tau + 2*C0 - F) . (C0)"));
  CHECK(contains(run("filtration --n 10").out, "multiplicity: 3"));
  const Run c = run("cover");
  CHECK(c.code == 0);
  CHECK(contains(c.out, "euler: -28n - 54"));
}

TEST_CASE("reproduce-paper is deterministic") {
  const Run a = run("reproduce-paper --n-range 1..60 --json");
  const Run b = run("reproduce-paper --n-range 1..60 --json");
  CHECK(a.code == 1);
  CHECK(a.out == b.out);
  const auto j = chowtower::json::parse(a.out);
  CHECK(j["summary"]["all_pass"] == false);
  CHECK(j["summary"]["checks"].get<int>() - j["summary"]["passed"].get<int>() == 2);
  CHECK(j["data"]["filtration"]["n0"] == 5);
  const chowtower::Report back = chowtower::report_from_json(j);
  CHECK(back.to_json().dump(2) + "\n" == a.out);
  const Run text = run("reproduce-paper");
  CHECK(text.code == 1);
  CHECK(contains(text.out, "[FAIL] cover.branch_euler"));
  CHECK(contains(text.out, "[FAIL] cover.euler"));
  CHECK(contains(text.out, "result: FAIL"));
  CHECK(contains(text.out, "[assumed per paper]"));
}

TEST_CASE("tower from stdin") {
  const std::string tower = slurp(std::string(CHOWTOWER_DATA_DIR) + "/paper.tower");
  const Run r = run("cover --tower -", tower);
  CHECK(r.code == 0);
  CHECK(contains(r.out, "euler: -28n - 54"));
  const Run two = run("chern --tower -", "[bundle]\nx = 2\ny = -1\n[[blowup]]\ncenter = [\"tau+A\", \"C0\"]\n");
  CHECK(two.code == 0);
  CHECK(contains(two.out, "euler: 10"));
}

TEST_CASE("expectations file decides the exit code") {
  std::string e = slurp(std::string(CHOWTOWER_DATA_DIR) + "/paper_expectations.json");
  const auto replace = [&](const std::string& from, const std::string& to) {
    const auto pos = e.find(from);
    REQUIRE(pos != std::string::npos);
    e.replace(pos, from.size(), to);
  };
  replace("\"48n+70\"", "\"28n+78\"");
  replace("\"-48n-46\"", "\"-28n-54\"");
  const Run ok = run("reproduce-paper --expectations \"" + write_temp("fixed.json", e) + "\"");
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "result: PASS"));
  replace("\"-28n-54\"", "\"-28n-53\"");
  const Run r = run("reproduce-paper --expectations \"" + write_temp("wrong.json", e) + "\"");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "[FAIL] cover.euler"));
  CHECK_FALSE(contains(r.out, "[FAIL] cover.branch_euler"));
  CHECK(contains(r.out, "result: FAIL"));
}

TEST_CASE("input errors exit with 2") {
  const Run bad_tower = run("chern --tower -", "[base]\nindex = \"n\"\n[[blowup]]\ncenter = [\"tau+A\", \"C0\"]\n");
  CHECK(bad_tower.code == 2);
  CHECK(contains(bad_tower.err, "4:"));
  CHECK(run("chern --tower /nonexistent/file.tower").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("h0 tau").code == 2);
  CHECK(run("h0 tau --n 0").code == 2);
  CHECK(run("intersect E1 E1").code == 2);
  CHECK(run("intersect E3 E1 E1").code == 2);
  CHECK(run("intersect E1 E1 E1 --stage X7").code == 2);
  CHECK(run("reproduce-paper --n-range 5..1").code == 2);
  CHECK(run("reproduce-paper --expectations \"" + write_temp("bad.json", "{") + "\"").code == 2);
}

TEST_CASE("math errors exit with 1 and name the stage") {
  const Run odd = run("cover --tower -", "[bundle]\nx = 2\ny = -1\n[cover]\nbranch = \"K\"\n");
  CHECK(odd.code == 1);
  CHECK(contains(odd.err, "not 2-divisible"));
  const Run deg = run("euler-divisor \"-2*K\" --n-range 1..3 --tower -",
                      "[bundle]\nx = 2\ny = -1\n[[blowup]]\ncenter = [\"tau+A\", \"C0\"]\n"
                      "[[blowup]]\ncenter = [\"E1\", \"tau\"]\n");
  CHECK(deg.code == 1);
  CHECK(contains(deg.err, "unsupported center"));
  const Run h = run("h0 E1 --n 3");
  CHECK(h.code == 2);
  CHECK(contains(h.err, "on X"));
}

TEST_CASE("help exits cleanly") {
  const Run r = run("--help");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "reproduce-paper"));
}
