#include "mica/monoideal.hpp"

#include <algorithm>
#include <functional>

namespace mica {

namespace {

// ascending (total degree, grevlex)
bool canonical_less(const Exponents& a, const Exponents& b) {
  return compare(MonomialOrder::GrevLex, a, b) == std::strong_ordering::less;
}

std::vector<Exponents> minimalize(const ContextPtr& ctx,
                                  std::vector<Exponents> monomials) {
  std::sort(monomials.begin(), monomials.end(), canonical_less);
  monomials.erase(std::unique(monomials.begin(), monomials.end()),
                  monomials.end());
  std::vector<Exponents> out;
  for (const auto& m : monomials) {
    // earlier kept monomials have degree <= deg(m); only they can divide m
    bool redundant = false;
    for (const auto& g : out) {
      if (divides(g, m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(m);
  }
  (void)ctx;
  return out;
}

}  // namespace

MonomialIdeal MonomialIdeal::from_monomials(ContextPtr ctx,
                                            std::vector<Exponents> monomials) {
  for (const auto& m : monomials) {
    if (m.size() != ctx->size()) {
      throw InputError("monomial length does not match context");
    }
    for (int e : m) {
      if (e < 0) throw InputError("negative exponent in monomial");
    }
  }
  auto gens = minimalize(ctx, std::move(monomials));
  return MonomialIdeal(std::move(ctx), std::move(gens));
}

bool MonomialIdeal::contains(const Exponents& m) const {
  if (m.size() != ctx_->size()) {
    throw InputError("monomial length does not match context");
  }
  for (const auto& g : gens_) {
    if (divides(g, m)) return true;
  }
  return false;
}

std::optional<Exponents> elementary_move(std::size_t k, const Exponents& m) {
  if (k + 1 >= m.size()) throw InputError("elementary move index out of range");
  if (m[k + 1] == 0) return std::nullopt;
  Exponents out(m);
  ++out[k];
  --out[k + 1];
  return out;
}

BorelResult is_borel_fixed(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw InputError("borel test requires a proper ideal");
  for (const auto& g : ideal.generators()) {
    for (std::size_t k = 0; k + 1 < g.size(); ++k) {
      auto moved = elementary_move(k, g);
      if (moved && !ideal.contains(*moved)) {
        return BorelResult{false, BorelWitness{g, k, std::move(*moved)}};
      }
    }
  }
  return BorelResult{true, std::nullopt};
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Exponents& m) {
  std::vector<Exponents> gens;
  gens.reserve(ideal.generators().size());
  for (const auto& g : ideal.generators()) {
    gens.push_back(mono_div(g, mono_gcd(g, m)));
  }
  return MonomialIdeal::from_monomials(ideal.context(), std::move(gens));
}

bool is_socle(const MonomialIdeal& ideal, const Exponents& m) {
  if (ideal.contains(m)) return false;
  for (std::size_t v = 0; v < ideal.num_vars(); ++v) {
    Exponents vm(m);
    ++vm[v];
    if (!ideal.contains(vm)) return false;
  }
  return true;
}

bool is_nzd(const MonomialIdeal& ideal, std::size_t v) {
  if (v >= ideal.num_vars()) throw InputError("variable index out of range");
  if (ideal.is_unit()) throw InputError("nzd test requires a proper ideal");
  for (const auto& g : ideal.generators()) {
    if (g[v] > 0) return false;
  }
  return true;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_context(a.context(), b.context());
  std::vector<Exponents> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& x : a.generators()) {
    for (const auto& y : b.generators()) {
      gens.push_back(mono_lcm(x, y));
    }
  }
  return MonomialIdeal::from_monomials(a.context(), std::move(gens));
}

bool VarPrime::is_prefix() const {
  std::size_t expect = 0;
  for (std::size_t v : vars) {
    if (v != expect++) return false;
  }
  return true;
}

bool VarPrime::contains(const VarPrime& o) const {
  return std::includes(vars.begin(), vars.end(), o.vars.begin(), o.vars.end());
}

VarPrime IrreducibleComponent::radical() const {
  VarPrime p;
  for (const auto& [v, _] : powers) p.vars.insert(v);
  return p;
}

MonomialIdeal IrreducibleComponent::as_ideal(const ContextPtr& ctx) const {
  std::vector<Exponents> gens;
  for (const auto& [v, a] : powers) {
    Exponents e(ctx->size(), 0);
    e[v] = a;
    gens.push_back(std::move(e));
  }
  return MonomialIdeal::from_monomials(ctx, std::move(gens));
}

bool IrreducibleComponent::contains(const Exponents& m) const {
  for (const auto& [v, a] : powers) {
    if (m[v] >= a) return true;
  }
  return false;
}

namespace {

// Splits on the canonically-first generator with >= 2 support variables,
// recursing on I + (x_i^a) and I + (rest); memoized on generator sets.
void decompose_rec(const ContextPtr& ctx, const std::vector<Exponents>& gens,
                   std::map<std::vector<Exponents>,
                            std::set<IrreducibleComponent>>& memo,
                   std::set<IrreducibleComponent>& out) {
  if (auto it = memo.find(gens); it != memo.end()) {
    out.insert(it->second.begin(), it->second.end());
    return;
  }
  for (const auto& g : gens) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] > 0) support.push_back(i);
    }
    if (support.size() < 2) continue;
    std::size_t v = support.front();
    Exponents pure(g.size(), 0), rest(g);
    pure[v] = g[v];
    rest[v] = 0;
    std::set<IrreducibleComponent> acc;
    for (const Exponents& extra : {pure, rest}) {
      auto sub = gens;
      sub.push_back(extra);
      auto I = MonomialIdeal::from_monomials(ctx, std::move(sub));
      decompose_rec(ctx, I.generators(), memo, acc);
    }
    memo.emplace(gens, acc);
    out.insert(acc.begin(), acc.end());
    return;
  }
  // every generator is a pure variable power: irreducible
  IrreducibleComponent comp;
  for (const auto& g : gens) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] > 0) comp.powers[i] = g[i];
    }
  }
  memo.emplace(gens, std::set<IrreducibleComponent>{comp});
  out.insert(std::move(comp));
}

MonomialIdeal intersect_components(
    const ContextPtr& ctx, const std::vector<IrreducibleComponent>& comps) {
  MonomialIdeal acc = MonomialIdeal::unit(ctx);
  for (const auto& c : comps) acc = intersect(acc, c.as_ideal(ctx));
  return acc;
}

}  // namespace

std::vector<IrreducibleComponent> irreducible_decomposition(
    const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw InputError("decomposition requires a proper nonzero ideal");
  }
  const auto& ctx = ideal.context();
  std::map<std::vector<Exponents>, std::set<IrreducibleComponent>> memo;
  std::set<IrreducibleComponent> raw;
  decompose_rec(ctx, ideal.generators(), memo, raw);

  // drop any component containing another (contributes nothing)
  std::vector<IrreducibleComponent> comps;
  for (const auto& c : raw) {
    bool redundant = false;
    for (const auto& d : raw) {
      if (!(d == c) && intersect(c.as_ideal(ctx), d.as_ideal(ctx)) ==
                           d.as_ideal(ctx)) {
        redundant = true;  // d subseteq c
        break;
      }
    }
    if (!redundant) comps.push_back(c);
  }

  // full irredundance: drop c while the rest still intersect to the ideal
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      std::vector<IrreducibleComponent> rest;
      for (std::size_t j = 0; j < comps.size(); ++j) {
        if (j != i) rest.push_back(comps[j]);
      }
      if (!rest.empty() && intersect_components(ctx, rest) == ideal) {
        comps = std::move(rest);
        changed = true;
        break;
      }
    }
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

std::vector<MonomialIdeal> primary_components(const MonomialIdeal& ideal,
                                              bool group_by_radical) {
  auto comps = irreducible_decomposition(ideal);
  std::vector<MonomialIdeal> out;
  if (!group_by_radical) {
    for (const auto& c : comps) out.push_back(c.as_ideal(ideal.context()));
    return out;
  }
  std::map<VarPrime, MonomialIdeal> grouped;
  for (const auto& c : comps) {
    auto [it, inserted] =
        grouped.emplace(c.radical(), c.as_ideal(ideal.context()));
    if (!inserted) it->second = intersect(it->second, c.as_ideal(ideal.context()));
  }
  for (auto& [_, I] : grouped) out.push_back(std::move(I));
  return out;
}

bool AssReport::contains(const VarPrime& p) const {
  for (const auto& ap : primes) {
    if (ap.prime == p) return true;
  }
  return false;
}

AssReport associated_primes(const MonomialIdeal& ideal) {
  auto comps = irreducible_decomposition(ideal);
  std::set<VarPrime> primes;
  for (const auto& c : comps) primes.insert(c.radical());

  AssReport report;
  report.num_vars = ideal.num_vars();
  for (const auto& p : primes) {
    bool minimal = true;
    for (const auto& q : primes) {
      if (!(q == p) && p.contains(q)) {
        minimal = false;
        break;
      }
    }
    report.primes.push_back(AssPrime{p, minimal});
  }
  std::sort(report.primes.begin(), report.primes.end(),
            [](const AssPrime& a, const AssPrime& b) {
              return std::tie(a.prime.vars) < std::tie(b.prime.vars);
            });
  std::stable_sort(report.primes.begin(), report.primes.end(),
                   [](const AssPrime& a, const AssPrime& b) {
                     return a.prime.codim() < b.prime.codim();
                   });
  report.codim = report.num_vars;
  for (const auto& ap : report.primes) {
    if (ap.minimal) report.codim = std::min(report.codim, ap.prime.codim());
  }
  report.dim = report.num_vars - report.codim;
  return report;
}

std::size_t codim(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw InputError("codim of the unit ideal is undefined");
  if (ideal.is_zero()) return 0;
  return associated_primes(ideal).codim;
}

std::size_t dim(const MonomialIdeal& ideal) {
  return ideal.num_vars() - codim(ideal);
}

bool is_equidimensional(const MonomialIdeal& ideal) {
  auto ass = associated_primes(ideal);
  std::optional<std::size_t> c;
  for (const auto& ap : ass.primes) {
    if (!ap.minimal) continue;
    if (c && *c != ap.prime.codim()) return false;
    c = ap.prime.codim();
  }
  return true;
}

namespace {

// Chain from a minimal prime up to q, stepping codim by exactly 1 through
// Ass; DFS with backtracking.
bool build_chain(const AssReport& ass, const VarPrime& q,
                 std::vector<VarPrime>& chain) {
  bool minimal = false;
  for (const auto& ap : ass.primes) {
    if (ap.prime == q) minimal = ap.minimal;
  }
  chain.push_back(q);
  if (minimal) return true;
  for (const auto& ap : ass.primes) {
    if (ap.prime.codim() + 1 == q.codim() && q.contains(ap.prime)) {
      if (build_chain(ass, ap.prime, chain)) return true;
    }
  }
  chain.pop_back();
  return false;
}

}  // namespace

ChainReport saturated_chain_property(const AssReport& ass) {
  if (ass.primes.empty()) throw InputError("empty associated-prime set");
  ChainReport report;
  report.holds = true;
  for (const auto& ap : ass.primes) {
    if (ap.minimal) continue;
    ChainEntry entry;
    entry.q = ap.prime;
    for (const auto& other : ass.primes) {
      if (other.prime.codim() + 1 == ap.prime.codim() &&
          ap.prime.contains(other.prime)) {
        entry.step = other.prime;
        break;
      }
    }
    std::vector<VarPrime> chain;
    if (entry.step && build_chain(ass, ap.prime, chain)) {
      std::reverse(chain.begin(), chain.end());
      entry.chain = std::move(chain);
    } else {
      entry.step.reset();
      report.holds = false;
      if (!report.violator) report.violator = ap.prime;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

TheoremReport check_theorem(const MonomialIdeal& ideal) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw InputError("theorem check requires a proper nonzero ideal");
  }
  TheoremReport report;
  const std::size_t r = ideal.num_vars();

  auto borel = is_borel_fixed(ideal);
  report.borel = borel.fixed;
  report.borel_witness = borel.witness;

  report.ass = associated_primes(ideal);
  report.codim_r_minus_2 = report.ass.codim == r - 2;
  report.equidimensional = is_equidimensional(ideal);

  report.prefix_primes = true;
  for (const auto& ap : report.ass.primes) {
    if (!ap.prime.is_prefix()) report.prefix_primes = false;
  }
  report.chain = saturated_chain_property(report.ass);

  VarPrime maximal, all_but_last;
  for (std::size_t i = 0; i < r; ++i) {
    maximal.vars.insert(i);
    if (i + 1 < r) all_but_last.vars.insert(i);
  }
  report.embedded_implies_r_minus_1 =
      !report.ass.contains(maximal) || report.ass.contains(all_but_last);
  return report;
}

}  // namespace mica
