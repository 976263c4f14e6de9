#ifndef MICA_COUNTEREXAMPLE_HPP
#define MICA_COUNTEREXAMPLE_HPP

#include <string>
#include <vector>

#include "mica/monoideal.hpp"

namespace mica {

/// Built-in fixture: the known counterexample to the saturated chain
/// property for initial ideals of primes. A toric ideal in
/// k[x>y>z>t>a>b>c] whose image under t -> z-t is prime with grevlex
/// initial ideal J, together with the published target values.
struct CounterexampleFixture {
  std::vector<std::string> vars;
  std::vector<std::string> toric_gens;       // before the substitution
  std::vector<std::string> prime_gens;       // expected after t -> z-t
  std::vector<std::string> published_initial;  // published generator list for J
  std::vector<std::vector<std::string>> components;  // five primary components
  std::vector<std::vector<std::string>> ass;         // published Ass(R/J)
  std::vector<std::string> chain_witness;    // violating prime
  std::string nzd_var;
};

CounterexampleFixture default_counterexample();

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the nine end-to-end checks against the fixture:
///   substitution, groebner, initial-ideal, ass, decomposition-intersection,
///   chain-fails, not-borel, nzd-last-var, equidimensional.
std::vector<CheckResult> verify_counterexample(
    const CounterexampleFixture& fixture);

}  // namespace mica

#endif
