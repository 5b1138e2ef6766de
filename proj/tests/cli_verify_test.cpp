#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "c2lab/error.hpp"
#include "c2lab/graph_families.hpp"
#include "verify.hpp"

using namespace c2lab;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / "c2lab_cli_test";
  fs::create_directories(dir);
  return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
  const auto path = scratch_dir() / name;
  std::ofstream(path) << text;
  return path;
}

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  const auto out = scratch_dir() / "stdout.txt";
  const std::string cmd = std::string(C2LAB_CLI) + " " + args + " > " + out.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  return r;
}

std::string data(const std::string& name) { return std::string(C2LAB_TEST_DATA) + "/" + name; }

}  // namespace

TEST_SUITE("cli_verify") {
  TEST_CASE("graph6 corpus skips malformed lines") {
    const auto path = write_file("mixed.g6", ">>graph6<<D~{\n# comment\n!!!\nE}lw\n\n");
    const auto corpus = verify::load_corpus(path);
    REQUIRE(corpus.graphs.size() == 2);
    CHECK(corpus.graphs[0].graph.num_vertices() == 5);
    CHECK(corpus.graphs[1].graph.num_vertices() == 6);
    CHECK(corpus.warnings.size() == 1);
  }

  TEST_CASE("JSON directory corpus") {
    const auto dir = scratch_dir() / "json_corpus";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::ofstream(dir / "b.json") << emit_edge_list(families::octahedron()).dump();
    std::ofstream(dir / "a.json") << emit_edge_list(families::complete(5)).dump();
    std::ofstream(dir / "c.json") << "{\"n\": 2, \"edges\": [[0, 5]]}";
    std::ofstream(dir / "notes.txt") << "ignored";
    const auto corpus = verify::load_corpus(dir);
    REQUIRE(corpus.graphs.size() == 2);
    CHECK(corpus.graphs[0].id == "a");
    CHECK(corpus.graphs[1].id == "b");
    CHECK(corpus.warnings.size() == 1);
  }

  TEST_CASE("single graph loading") {
    const auto json = write_file("k5.json", emit_edge_list(families::complete(5)).dump());
    CHECK(verify::load_graph(json).num_edges() == 10);
    CHECK(verify::load_graph(data("quartic_6.g6")).num_edges() == 12);
    CHECK_THROWS_AS(verify::load_graph(scratch_dir() / "missing.g6"), InvalidInput);
  }

  TEST_CASE("library compute") {
    CountOptions opts;
    const auto r = verify::compute("K5", families::complete(5), {2, 3}, {}, std::nullopt, true, false, opts);
    CHECK(r.ok());
    CHECK(r.results.size() == 10);
    for (const auto& v : r.results) CHECK(*v.report.value() == v.prime - 1);
    const auto j = verify::to_json(r);
    CHECK(j["ok"] == true);
    CHECK(j["results"].size() == 10);
  }

  TEST_CASE("completion verdicts on the quartic corpus") {
    const auto corpus = verify::load_corpus(data("quartic_7.g6"));
    const auto rep = verify::verify_completion(corpus, {2}, {}, {});
    CHECK_FALSE(rep.violations());
    CHECK_FALSE(rep.budget_refusals());
    for (const auto& e : rep.entries) {
      CHECK(e.verdict);
      CHECK(e.tag == "theorem-backed");
      CHECK(e.vertices.size() == 7);
    }
  }

  TEST_CASE("non-completion entries are skipped") {
    verify::Corpus corpus;
    corpus.graphs.push_back({"C5", families::cycle(5)});
    const auto rep = verify::verify_completion(corpus, {2}, {}, {});
    REQUIRE(rep.entries.size() == 1);
    CHECK(rep.entries[0].skipped);
    CHECK_FALSE(rep.violations());
  }

  TEST_CASE("identity suite") {
    const auto rep = verify::check_identities(3, 20);
    CHECK(rep.ok());
    CHECK(rep.checks.size() == 5);
    for (const auto& c : rep.checks) CHECK(c.cases > 0);
  }

  TEST_CASE("exit codes") {
    const auto c3 = write_file("c3.json", emit_edge_list(families::cycle(3)).dump());
    CHECK(run_cli("compute --graph " + c3.string() + " --prime 2,3 --route direct").code == 0);
    CHECK(run_cli("compute --graph " + (scratch_dir() / "missing.json").string()).code == 2);
    CHECK(run_cli("compute --graph " + c3.string() + " --prime 4").code == 2);
    CHECK(run_cli("compute --graph " + c3.string() + " --mode decompletion").code == 2);
    CHECK(run_cli("compute --graph " + c3.string() + " --route partition").code == 2);
    CHECK(run_cli("compute --graph " + data("quartic_7.g6") + " --prime 3 --budget 100").code == 3);
    CHECK(run_cli("verify-completion --corpus " + data("quartic_6.g6") + " --budget 10").code == 3);
    CHECK(run_cli("frobnicate").code == 2);
  }

  TEST_CASE("JSON output parses") {
    const auto r = run_cli("--json compute --graph " + data("quartic_5.g6") + " --prime 2");
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["mode"] == "decompletion");
    CHECK(j["results"].size() == 5);
    const auto s = run_cli("--json sweep-involutions --corpus " + data("quartic_6.g6") + " --prime 3");
    CHECK(s.code == 0);
    CHECK(nlohmann::json::parse(s.out)["ok"] == true);
    const auto id = run_cli("--json check-identities --seed 5 --rounds 10");
    CHECK(id.code == 0);
    CHECK(nlohmann::json::parse(id.out)["checks"].size() == 5);
  }
}
