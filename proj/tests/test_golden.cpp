#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "d2hopf/catalog.hpp"
#include "d2hopf/runner.hpp"

using namespace d2hopf;

namespace {

struct GoldenCase {
  std::string id;
  std::string file;
  std::string checks;
};

// The stress entry freezes the suites that run comfortably in rational
// arithmetic; its cochain spaces are large enough that the transform and
// cohomology suites are exercised on the smaller entries instead.
const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"trivial-B-equals-A", "trivial-B-equals-A.json", "all"},
      {"matn-upper(2)", "matn-upper-2.json", "all"},
      {"matn-diag(2)", "matn-diag-2.json", "all"},
      {"quaternion-complex", "quaternion-complex.json", "all"},
      {"sweedler-h4", "sweedler-h4.json", "all"},
      {"matn-upper(3)", "matn-upper-3.json", "d2,bialgebroid,hopf,skew,lu"},
      {"group-normal(5)", "group-normal-5.json", "all"},
  };
  return cases;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class F>
void compare_against_golden(const GoldenCase& gc, F f) {
  auto e = find_entry(gc.id);
  auto E = build_entry(e, f);
  std::optional<Bimodule<F>> none;
  auto rep = run_verify(e.id, E, none, parse_check_selection(gc.checks), 4);
  Json fresh = report_to_golden_json(rep);
  const std::string frozen =
      slurp(std::filesystem::path(D2HOPF_GOLDEN_DIR) / gc.file);
  CHECK(fresh.dump(2) + "\n" == frozen);
}

}  // namespace

TEST_CASE("the golden directory holds exactly the frozen reports") {
  std::set<std::string> expected, present;
  for (const auto& gc : golden_cases()) expected.insert(gc.file);
  for (const auto& entry :
       std::filesystem::directory_iterator(D2HOPF_GOLDEN_DIR))
    present.insert(entry.path().filename().string());
  CHECK(expected == present);
}

TEST_CASE("fresh reports reproduce the frozen goldens byte for byte") {
  for (const auto& gc : golden_cases()) {
    INFO(gc.id);
    auto e = find_entry(gc.id);
    if (e.default_field.kind == FieldSpec::Kind::rational)
      compare_against_golden(gc, RationalField{});
    else
      compare_against_golden(gc, PrimeField(e.default_field.p));
  }
}
