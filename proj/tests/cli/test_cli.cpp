// Drives the lps binary as a subprocess.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string("\"") + LPS_CLI_PATH + "\" " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

fs::path scratch() {
  fs::path d = fs::temp_directory_path() / ("lps_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

std::string write(const std::string& name, const std::string& body) {
  fs::path p = scratch() / name;
  std::ofstream(p) << body;
  return "\"" + p.string() + "\"";
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("build and export") {
  std::string spec = write("circle.spec.json", R"({"builder": "directed_circle", "n": 2})");
  Run b = run("-i " + spec + " build");
  CHECK(b.code == 0);
  CHECK(b.out.find("\"lps-stream\"") != std::string::npos);
  Run d = run("-i " + spec + " export --format dot");
  CHECK(d.code == 0);
  CHECK(d.out.rfind("digraph stream {", 0) == 0);
  fs::path out = scratch() / "circle.json";
  CHECK(run("-i " + spec + " -o \"" + out.string() + "\" export --format json").code == 0);
  CHECK(slurp(out) == b.out);
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 2);
  CHECK(run("-i /nonexistent/file.json build").code == 2);
  std::string broken = write("broken.json", "{ \"builder\": ");
  Run r = run("-i " + broken + " build");
  CHECK(r.code == 2);
  CHECK(r.out.find("error:") != std::string::npos);
  std::string pb = write("pb.spec.json", R"({"builder": "pathology_pullback"})");
  Run c = run("-i " + pb + " --witness check --which circulation");
  CHECK(c.code == 1);
  CHECK(c.out.find("\"collection\"") != std::string::npos);
  Run e = run("-i " + pb + " export --format dot");
  CHECK(e.code == 2);
  CHECK(run("combine --op nonsense").code == 2);
}

TEST_CASE("empty stream passes every check") {
  std::string empty = write("empty.json",
                            R"({"format": "lps-stream", "version": 1, "space": {"points": [], "min_open": {}}, "generators": {}})");
  Run r = run("-i " + empty + " --mode exhaustive check");
  CHECK(r.code == 0);
}

TEST_CASE("combine") {
  std::string i1 = write("i1.spec.json", R"({"builder": "directed_interval", "n": 1})");
  std::string i2 = write("i2.spec.json", R"({"builder": "directed_interval", "n": 2})");
  fs::path sq_out = scratch() / "square.json";
  Run sq = run("-i " + i1 + " -i " + i1 + " -o \"" + sq_out.string() + "\" combine --op product --verify");
  CHECK(sq.code == 0);
  CHECK(sq.out == "verify: passed\n");
  std::string sq_ref = write("sq.spec.json", R"({"builder": "directed_square", "n": 1, "m": 1})");
  CHECK(run("-i " + sq_ref + " build").out == slurp(sq_out));

  fs::path args = scratch() / "partition.json";
  std::ofstream(args) << R"({"partition": [["v0", "v2"], ["v1"], ["e1"], ["e2"]]})";
  Run q = run("-i " + i2 + " combine --op quotient --args-file \"" + args.string() + "\"");
  CHECK(q.code == 0);
  std::string c_ref = write("c.spec.json", R"({"builder": "directed_circle", "n": 2})");
  CHECK(q.out == run("-i " + c_ref + " build").out);

  Run bad = run("-i " + i1 + " combine --op substream --args '{\"subset\": [\"v0\", \"x\"]}'");
  CHECK(bad.code == 2);
  CHECK(bad.out.find("InvalidSubset") != std::string::npos);
}

TEST_CASE("query") {
  std::string c = write("c2.spec.json", R"({"builder": "directed_circle", "n": 2})");
  Run g = run("-i " + c + " query --x e1 --y v1");
  CHECK(g.code == 0);
  CHECK(g.out == "related\n");
  Run local = run("-i " + c + " query --open e1,e2,v0 --x e1 --y e2");
  CHECK(local.code == 0);
  CHECK(local.out == "not related\n");
  CHECK(run("-i " + c + " query --open e1,e2,v0 --x v0 --y v0").out == "related\n");
  Run alt = run("-i " + c + " --witness query --open e1,e2,v0 --open2 e1,e2,v1 --x e1 --y v0");
  CHECK(alt.code == 0);
  CHECK(alt.out.find("\"alternating\"") != std::string::npos);
  CHECK(run("-i " + c + " query --open v0 --x v0 --y v0").code == 2);
}

TEST_CASE("stdin and selfcheck") {
  Run s = run("-i - build < " + write("p.spec.json", R"({"builder": "directed_interval", "n": 1})"));
  CHECK(s.code == 0);
  CHECK(s.out.find("\"v1\"") != std::string::npos);
  Run self = run("--seed 3 selfcheck --count 40 --max-points 4");
  CHECK(self.code == 0);
}
