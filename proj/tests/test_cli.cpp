#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "d2hopf/catalog.hpp"

using namespace d2hopf;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(D2HOPF_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string text;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) text.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text};
}

std::filesystem::path temp_file(const std::string& stem) {
  return std::filesystem::temp_directory_path() /
         (stem + "-" + std::to_string(::getpid()) + ".json");
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("list prints every entry in stable order") {
  auto first = run_cli("list");
  CHECK(first.exit_code == 0);
  for (const auto& e : catalog())
    CHECK(first.output.find(e.id) != std::string::npos);
  CHECK(first.output.find("trivial-B-equals-A") <
        first.output.find("matn-upper(2)"));
  CHECK(first.output.find("sweedler-h4") <
        first.output.find("group-normal(5)"));
  auto second = run_cli("list");
  CHECK(first.output == second.output);
}

TEST_CASE("the full suite accepts the reducible textbook entry") {
  auto r = run_cli("'verify' 'sweedler-h4' --checks all --jobs 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("verdict: all selected checks pass") !=
        std::string::npos);
}

TEST_CASE("explicitly requesting the antipode on a reducible entry fails") {
  auto r = run_cli("verify sweedler-h4 --checks hopf");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("NotIrreducible") != std::string::npos);
  CHECK(r.output.find("verdict: failures present") != std::string::npos);
}

TEST_CASE("input and flag errors exit with code 2") {
  CHECK(run_cli("verify no-such-entry").exit_code == 2);
  CHECK(run_cli("verify 'quaternion-complex' --field gfp:5").exit_code == 2);
  CHECK(run_cli("verify 'group-normal(5)' --field gfp:7").exit_code == 2);
  CHECK(run_cli("verify sweedler-h4 --checks bogus").exit_code == 2);
  CHECK(run_cli("verify sweedler-h4 --format yaml").exit_code == 2);
  CHECK(run_cli("verify sweedler-h4 --field gf7").exit_code == 2);
  CHECK(run_cli("frobnicate").exit_code == 2);

  auto bad = temp_file("d2hopf-bad");
  std::ofstream(bad) << "{ this is not json";
  auto r = run_cli("verify " + bad.string());
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("error:") != std::string::npos);
  std::filesystem::remove(bad);
}

TEST_CASE("json reports are byte-identical apart from timings") {
  auto f1 = temp_file("d2hopf-det1"), f2 = temp_file("d2hopf-det2");
  auto r1 = run_cli("verify 'matn-upper(2)' --checks all --format json --out " +
                    f1.string());
  auto r2 = run_cli("verify 'matn-upper(2)' --checks all --format json --out " +
                    f2.string());
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);
  CHECK(r1.output.empty());

  Json a = Json::parse(slurp(f1)), b = Json::parse(slurp(f2));
  REQUIRE(a.contains("timings"));
  a.erase("timings");
  b.erase("timings");
  CHECK(a.dump(2) == b.dump(2));
  std::filesystem::remove(f1);
  std::filesystem::remove(f2);
}

TEST_CASE("show dumps the canonical structure") {
  auto tau = run_cli("show trivial-B-equals-A --what tau,delta");
  CHECK(tau.exit_code == 0);
  CHECK(tau.output.find("(the identity matrix)") != std::string::npos);
  CHECK(tau.output.find("= id (x) id") != std::string::npos);
  CHECK(tau.output.find("= 1 (x) 1") != std::string::npos);

  auto pair = run_cli("show 'matn-upper(2)' --what pairings,quasibases");
  CHECK(pair.exit_code == 0);
  CHECK(pair.output.find("alpha_1") != std::string::npos);
  CHECK(pair.output.find("t_1") != std::string::npos);

  auto red = run_cli("show sweedler-h4 --what tau");
  CHECK(red.exit_code == 0);
  CHECK(red.output.find("antipode") != std::string::npos);

  CHECK(run_cli("show sweedler-h4 --what bogus").exit_code == 2);
}

TEST_CASE("documents load from disk and pin their own field") {
  RationalField f;
  auto path = temp_file("d2hopf-doc");
  std::ofstream(path) << extension_to_json(build_entry("sweedler-h4", f))
                             .dump(2);

  CHECK(run_cli("verify " + path.string() + " --checks d2").exit_code == 0);
  CHECK(run_cli("verify " + path.string() + " --checks d2 --field q")
            .exit_code == 0);
  auto clash =
      run_cli("verify " + path.string() + " --checks d2 --field gfp:7");
  CHECK(clash.exit_code == 2);
  CHECK(clash.output.find("restate") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("the pinned prime field entry runs on its default field") {
  auto r = run_cli("verify group-normal --checks d2,bialgebroid");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("field: gfp:5") != std::string::npos);
}
