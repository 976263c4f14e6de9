#include "mica/counterexample.hpp"

#include <algorithm>
#include <set>

#include "mica/groebner.hpp"
#include "mica/textio.hpp"

namespace mica {

CounterexampleFixture default_counterexample() {
  CounterexampleFixture f;
  f.vars = {"x", "y", "z", "t", "a", "b", "c"};
  f.toric_gens = {"x*z - a^2", "y*z - b^2", "t*z - c^2"};
  f.prime_gens = {"x*z - a^2", "y*z - b^2", "z^2 - t*z - c^2"};
  f.published_initial = {"z^2",   "y*z",     "x*z",     "z*b^2",
                         "z*a^2", "y*t*b^2", "x*t*b^2", "x*t*a^2"};
  f.components = {{"x", "y", "z"},
                  {"y", "t", "z"},
                  {"t", "z", "a^2"},
                  {"z", "a^2", "b^2"},
                  {"x", "y", "z^2", "a^2", "b^2"}};
  f.ass = {{"x", "y", "z"},
           {"y", "t", "z"},
           {"t", "a", "z"},
           {"z", "a", "b"},
           {"x", "y", "z", "a", "b"}};
  f.chain_witness = {"x", "y", "z", "a", "b"};
  f.nzd_var = "c";
  return f;
}

namespace {

MonomialIdeal parse_monomials(const ContextPtr& ctx, Field field,
                              const std::vector<std::string>& texts) {
  std::vector<Exponents> monos;
  for (const auto& s : texts) {
    monos.push_back(parse_polynomial(s, ctx, field).leading_monomial());
  }
  return MonomialIdeal::from_monomials(ctx, std::move(monos));
}

VarPrime parse_prime(const ContextPtr& ctx, const std::vector<std::string>& vars) {
  VarPrime p;
  for (const auto& v : vars) p.vars.insert(*ctx->index_of(v));
  return p;
}

}  // namespace

std::vector<CheckResult> verify_counterexample(
    const CounterexampleFixture& fixture) {
  std::vector<CheckResult> results;
  auto add = [&](const std::string& name, bool pass, std::string detail = "") {
    results.push_back(CheckResult{name, pass, std::move(detail)});
  };

  const Field field = Field::rationals();
  const auto ctx = make_context(fixture.vars);
  const auto order = MonomialOrder::GrevLex;
  const std::size_t r = ctx->size();

  // (a) substitution t -> z - t carries the toric generators to the prime's
  std::vector<Polynomial> toric;
  for (const auto& s : fixture.toric_gens) {
    toric.push_back(parse_polynomial(s, ctx, field, order));
  }
  auto t_pos = ctx->index_of("t");
  std::vector<std::vector<Scalar>> m(
      r, std::vector<Scalar>(r, Scalar::zero(field)));
  for (std::size_t i = 0; i < r; ++i) m[i][i] = Scalar::one(field);
  m[*t_pos][*t_pos] = -Scalar::one(field);
  m[*t_pos][*ctx->index_of("z")] = Scalar::one(field);
  LinearChange subst(field, std::move(m));

  std::set<std::string> got, want;
  for (const auto& g : toric) got.insert(print(subst.apply(g)));
  for (const auto& s : fixture.prime_gens) {
    want.insert(print(parse_polynomial(s, ctx, field, order)));
  }
  add("substitution", got == want);

  // (b) grevlex reduced GB of the substituted ideal
  std::vector<Polynomial> prime_gens;
  for (const auto& s : fixture.prime_gens) {
    prime_gens.push_back(parse_polynomial(s, ctx, field, order));
  }
  IdealGens P(ctx, field, prime_gens);
  GroebnerBasis gb = buchberger(P, order);
  bool gb_ok = !gb.gens.empty();
  for (const auto& g : gb.gens) {
    for (const auto& h : gb.gens) {
      if (&g == &h) continue;
      if (!reduce(s_polynomial(g, h, order), gb.gens, order).is_zero()) {
        gb_ok = false;
      }
    }
  }
  add("groebner", gb_ok, std::to_string(gb.gens.size()) + " basis elements");

  // (c) initial ideal matches the published generator list exactly
  MonomialIdeal J = initial_ideal(gb);
  MonomialIdeal published = parse_monomials(ctx, field, fixture.published_initial);
  {
    std::string detail;
    if (!(J == published)) {
      detail = "computed {" + print(J) + "} vs published {" + print(published) +
               "}";
    }
    add("initial-ideal", J == published, detail);
  }

  // (d) Ass(R/J) of the computed initial ideal matches the published set
  AssReport ass = associated_primes(J);
  std::set<VarPrime> got_ass, want_ass;
  for (const auto& ap : ass.primes) got_ass.insert(ap.prime);
  for (const auto& p : fixture.ass) want_ass.insert(parse_prime(ctx, p));
  add("ass", got_ass == want_ass);

  // (e) the five published components intersect to the computed J
  MonomialIdeal inter = MonomialIdeal::unit(ctx);
  for (const auto& comp : fixture.components) {
    inter = intersect(inter, parse_monomials(ctx, field, comp));
  }
  add("decomposition-intersection", inter == J);

  // (f) saturated chain property fails with the published witness
  ChainReport chain = saturated_chain_property(ass);
  VarPrime witness = parse_prime(ctx, fixture.chain_witness);
  add("chain-fails",
      !chain.holds && chain.violator && *chain.violator == witness,
      chain.violator ? "violator " + print(ctx, *chain.violator) : "");

  // (g) J is not Borel-fixed
  BorelResult borel = is_borel_fixed(J);
  add("not-borel", !borel.fixed,
      borel.witness ? "witness e_" + std::to_string(borel.witness->move + 1) +
                          "(" + print_monomial(ctx, borel.witness->generator) +
                          ") = " + print_monomial(ctx, borel.witness->escaped)
                    : "");

  // (h) the last variable is a non-zero divisor on R/J
  add("nzd-last-var", is_nzd(J, *ctx->index_of(fixture.nzd_var)));

  // (i) J is equidimensional
  add("equidimensional", is_equidimensional(J));

  return results;
}

}  // namespace mica
