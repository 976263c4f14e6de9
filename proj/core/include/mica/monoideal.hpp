#ifndef MICA_MONOIDEAL_HPP
#define MICA_MONOIDEAL_HPP

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "mica/context.hpp"
#include "mica/order.hpp"

namespace mica {

/// Monomial ideal held by its minimal monomial generators, sorted ascending
/// by (total degree, grevlex). The empty list is the zero ideal; {1} is the
/// unit ideal.
class MonomialIdeal {
 public:
  /// Minimalizes: divisibility-minimal, deduplicated, sorted.
  static MonomialIdeal from_monomials(ContextPtr ctx,
                                      std::vector<Exponents> monomials);
  static MonomialIdeal zero(ContextPtr ctx) { return from_monomials(ctx, {}); }
  static MonomialIdeal unit(ContextPtr ctx) {
    return from_monomials(ctx, {Exponents(ctx->size(), 0)});
  }

  const ContextPtr& context() const { return ctx_; }
  const std::vector<Exponents>& generators() const { return gens_; }
  std::size_t num_vars() const { return ctx_->size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const {
    return gens_.size() == 1 && is_constant(gens_.front());
  }
  bool is_proper() const { return !is_unit(); }

  /// Divisibility membership: true iff some generator divides m.
  bool contains(const Exponents& m) const;

  bool operator==(const MonomialIdeal& o) const {
    return *ctx_ == *o.ctx_ && gens_ == o.gens_;
  }

 private:
  MonomialIdeal(ContextPtr ctx, std::vector<Exponents> gens)
      : ctx_(std::move(ctx)), gens_(std::move(gens)) {}

  ContextPtr ctx_;
  std::vector<Exponents> gens_;
};

/// Shift one unit of exponent from variable k+1 to variable k (0-based k in
/// [0, r-2]). Returns nullopt when the result would have a negative entry
/// (the "monomial is zero" convention).
std::optional<Exponents> elementary_move(std::size_t k, const Exponents& m);

struct BorelWitness {
  Exponents generator;
  std::size_t move;    // 0-based k
  Exponents escaped;   // e_k(generator), not in the ideal
};

struct BorelResult {
  bool fixed = false;
  std::optional<BorelWitness> witness;  // present iff !fixed
};

/// Elementary-move criterion on minimal generators (characteristic-0
/// Borel-fixedness); closure on all members follows by divisibility and
/// composition of moves.
BorelResult is_borel_fixed(const MonomialIdeal& ideal);

/// (I : m), the annihilator of the image of m in R/I.
MonomialIdeal colon(const MonomialIdeal& ideal, const Exponents& m);

/// m not in I and x_i * m in I for every variable.
bool is_socle(const MonomialIdeal& ideal, const Exponents& m);

/// Variable v (0-based) is a non-zero divisor on R/I: divides no minimal
/// generator.
bool is_nzd(const MonomialIdeal& ideal, std::size_t v);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// Prime generated by a subset of the variables.
struct VarPrime {
  std::set<std::size_t> vars;

  std::size_t codim() const { return vars.size(); }
  bool is_prefix() const;  // vars == {0,...,j-1}
  bool contains(const VarPrime& o) const;  // o subseteq this

  auto operator<=>(const VarPrime&) const = default;
};

/// Ideal generated by pure variable powers <x_i^{a_i} : i in support>.
struct IrreducibleComponent {
  std::map<std::size_t, int> powers;  // var position -> exponent >= 1

  VarPrime radical() const;
  MonomialIdeal as_ideal(const ContextPtr& ctx) const;
  bool contains(const Exponents& m) const;

  auto operator<=>(const IrreducibleComponent&) const = default;
};

/// Irredundant irreducible decomposition: intersection of the components
/// equals the ideal, each component is generated by pure variable powers,
/// and dropping any component strictly enlarges the intersection.
std::vector<IrreducibleComponent> irreducible_decomposition(
    const MonomialIdeal& ideal);

/// Components grouped by radical and intersected into primary ideals.
std::vector<MonomialIdeal> primary_components(const MonomialIdeal& ideal,
                                              bool group_by_radical);

struct AssPrime {
  VarPrime prime;
  bool minimal = false;
};

struct AssReport {
  std::size_t num_vars = 0;
  std::vector<AssPrime> primes;  // sorted by (codim, vars)
  std::size_t codim = 0;         // min codim over minimal primes
  std::size_t dim = 0;           // num_vars - codim

  bool contains(const VarPrime& p) const;
};

AssReport associated_primes(const MonomialIdeal& ideal);

/// codim of the zero ideal is 0 (dim = r); unit ideal rejected.
std::size_t codim(const MonomialIdeal& ideal);
std::size_t dim(const MonomialIdeal& ideal);

/// All minimal primes share one codimension.
bool is_equidimensional(const MonomialIdeal& ideal);

struct ChainEntry {
  VarPrime q;                    // a non-minimal associated prime
  std::optional<VarPrime> step;  // P subset q with dim(R/P) = dim(R/q)+1
  std::vector<VarPrime> chain;   // minimal = front, ..., q = back; each link
                                 // drops codim by exactly 1
};

struct ChainReport {
  bool holds = false;
  std::vector<ChainEntry> entries;   // one per non-minimal prime
  std::optional<VarPrime> violator;  // first Q without a one-step witness
};

/// Saturated chain property over an associated-prime set: every non-minimal
/// Q contains an associated prime one dimension larger, giving stepwise
/// chains down to a minimal prime.
ChainReport saturated_chain_property(const AssReport& ass);

struct TheoremReport {
  // hypotheses
  bool borel = false;
  bool codim_r_minus_2 = false;
  bool equidimensional = false;
  std::optional<BorelWitness> borel_witness;
  // conclusion clauses, each evaluated independently
  bool prefix_primes = false;
  ChainReport chain;
  bool embedded_implies_r_minus_1 = false;

  AssReport ass;

  bool hypotheses_hold() const {
    return borel && codim_r_minus_2 && equidimensional;
  }
  bool conclusion_holds() const {
    return prefix_primes && chain.holds && embedded_implies_r_minus_1;
  }
  enum class Status { Holds, NotCovered, Violated };
  /// A hypothesis failure downgrades a conclusion failure to NotCovered.
  Status status() const {
    if (!hypotheses_hold()) return Status::NotCovered;
    return conclusion_holds() ? Status::Holds : Status::Violated;
  }
};

/// Evaluates hypotheses (Borel-fixed, codim r-2, equidimensional) and
/// conclusion clauses (prefix associated primes, saturated chain property,
/// and maximal-ideal-embedded implies (x_1,...,x_{r-1}) associated).
TheoremReport check_theorem(const MonomialIdeal& ideal);

}  // namespace mica

#endif
