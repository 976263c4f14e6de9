#include <algorithm>

#include "doctest.h"
#include "mica/counterexample.hpp"
#include "test_support.hpp"

using namespace mica;

namespace {

const CheckResult& find(const std::vector<CheckResult>& results,
                        const std::string& name) {
  auto it = std::find_if(results.begin(), results.end(),
                         [&](const CheckResult& r) { return r.name == name; });
  REQUIRE(it != results.end());
  return *it;
}

}  // namespace

TEST_CASE("default fixture: every check except the published generator list") {
  auto results = verify_counterexample(default_counterexample());
  REQUIRE(results.size() == 9);
  CHECK(find(results, "substitution").pass);
  CHECK(find(results, "groebner").pass);
  // the published list omits y*a^2, so the exact-match check fails; the
  // fixture's own decomposition intersects to the computed ideal, which is
  // the ground truth the remaining checks agree with
  CHECK(!find(results, "initial-ideal").pass);
  CHECK(find(results, "initial-ideal").detail.find("y*a^2") !=
        std::string::npos);
  CHECK(find(results, "ass").pass);
  CHECK(find(results, "decomposition-intersection").pass);
  CHECK(find(results, "chain-fails").pass);
  CHECK(find(results, "not-borel").pass);
  CHECK(find(results, "nzd-last-var").pass);
  CHECK(find(results, "equidimensional").pass);
}

TEST_CASE("corrected generator list makes all nine checks pass") {
  auto fixture = default_counterexample();
  fixture.published_initial.push_back("y*a^2");
  auto results = verify_counterexample(fixture);
  CHECK(std::all_of(results.begin(), results.end(),
                    [](const CheckResult& r) { return r.pass; }));
}

TEST_CASE("mutated fixture is caught by the harness") {
  auto fixture = default_counterexample();
  // dropping a generator from the published list must trip the exact match
  std::erase(fixture.published_initial, std::string("x*t*a^2"));
  auto results = verify_counterexample(fixture);
  CHECK(!find(results, "initial-ideal").pass);

  // perturbing the expected Ass set must trip the ass check
  auto fixture2 = default_counterexample();
  fixture2.ass.pop_back();
  CHECK(!find(verify_counterexample(fixture2), "ass").pass);
}

TEST_CASE("the verifier is deterministic") {
  auto a = verify_counterexample(default_counterexample());
  auto b = verify_counterexample(default_counterexample());
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].name == b[i].name);
    CHECK(a[i].pass == b[i].pass);
    CHECK(a[i].detail == b[i].detail);
  }
}
