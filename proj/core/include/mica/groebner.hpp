#ifndef MICA_GROEBNER_HPP
#define MICA_GROEBNER_HPP

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "mica/monoideal.hpp"
#include "mica/polynomial.hpp"

namespace mica {

/// Generating set of a polynomial ideal.
class IdealGens {
 public:
  IdealGens(ContextPtr ctx, Field field, std::vector<Polynomial> gens);

  const ContextPtr& context() const { return ctx_; }
  const Field& field() const { return field_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool homogeneous() const { return homogeneous_; }

 private:
  ContextPtr ctx_;
  Field field_;
  std::vector<Polynomial> gens_;
  bool homogeneous_;
};

struct GroebnerBasis {
  std::vector<Polynomial> gens;
  MonomialOrder order;
  bool reduced = false;
};

/// Safety caps; 0 means unlimited. Exceeding a cap raises ResourceError.
struct BuchbergerLimits {
  std::size_t max_pairs = 0;
  int max_degree = 0;
};

/// Full normal form of f against basis: no term of the result is divisible
/// by any leading monomial of the basis, and f - result lies in <basis>.
Polynomial reduce(const Polynomial& f, std::span<const Polynomial> basis,
                  MonomialOrder order);

/// (L/lt(f))·f - (L/lt(g))·g with L = lcm of the leading monomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        MonomialOrder order);

/// The unique reduced Groebner basis of <I> under `order`. Normal pair
/// strategy (minimal lcm degree first) with the coprime and chain criteria.
GroebnerBasis buchberger(const IdealGens& ideal, MonomialOrder order,
                         const BuchbergerLimits& limits = {});

/// Minimal monomial generators of the initial ideal of <G>.
MonomialIdeal initial_ideal(const GroebnerBasis& basis);

/// Normal-form membership test: f in <G>.
bool membership(const Polynomial& f, const GroebnerBasis& basis);

/// Invertible linear coordinate change x_i -> sum_j g_ij x_j.
class LinearChange {
 public:
  /// Throws InputError if the matrix is singular.
  LinearChange(Field field, std::vector<std::vector<Scalar>> matrix);

  static LinearChange identity(Field field, std::size_t n);
  /// Dense entries uniform in [-height, height] \ {0} over Q, or uniform
  /// nonzero residues over F_p; rejection-sampled to invertibility.
  static LinearChange random(Field field, std::size_t n, std::mt19937_64& rng,
                             long height = 101);

  std::size_t size() const { return matrix_.size(); }
  const Scalar& entry(std::size_t i, std::size_t j) const {
    return matrix_[i][j];
  }
  bool lower_triangular() const;  // Borel subgroup membership

  Polynomial apply(const Polynomial& f) const;
  IdealGens apply(const IdealGens& ideal) const;
  LinearChange compose(const LinearChange& o) const;  // this after o

 private:
  Field field_;
  std::vector<std::vector<Scalar>> matrix_;
};

/// Generic initial ideal: in(g(I)) for `trials` independent seeded random
/// changes; returns the common value, or throws UnstableError when trials
/// disagree.
MonomialIdeal gin(const IdealGens& ideal, MonomialOrder order,
                  std::uint64_t seed, int trials,
                  const BuchbergerLimits& limits = {});

}  // namespace mica

#endif
