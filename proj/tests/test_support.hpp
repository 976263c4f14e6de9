#ifndef MICA_TEST_SUPPORT_HPP
#define MICA_TEST_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "mica/groebner.hpp"
#include "mica/monoideal.hpp"
#include "mica/polynomial.hpp"
#include "mica/textio.hpp"

namespace mica_test {

using namespace mica;

inline ContextPtr ctx7() {
  return make_context({"x", "y", "z", "t", "a", "b", "c"});
}

inline ContextPtr ctx_xy() { return make_context({"x", "y"}); }

inline Polynomial P(const std::string& text, const ContextPtr& ctx,
                    MonomialOrder order = MonomialOrder::GrevLex,
                    Field field = Field::rationals()) {
  return parse_polynomial(text, ctx, field, order);
}

inline Exponents M(const std::string& text, const ContextPtr& ctx) {
  return parse_polynomial(text, ctx, Field::rationals()).leading_monomial();
}

inline MonomialIdeal MI(const std::vector<std::string>& monos,
                        const ContextPtr& ctx) {
  std::vector<Exponents> es;
  for (const auto& m : monos) es.push_back(M(m, ctx));
  return MonomialIdeal::from_monomials(ctx, es);
}

inline Exponents random_exponents(std::mt19937_64& rng, std::size_t nvars,
                                  int max_exp) {
  std::uniform_int_distribution<int> d(0, max_exp);
  Exponents e(nvars);
  for (auto& x : e) x = d(rng);
  return e;
}

inline Polynomial random_polynomial(std::mt19937_64& rng, const ContextPtr& ctx,
                                    Field field, MonomialOrder order,
                                    int max_terms, int max_deg,
                                    long coeff_range = 9) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<long> coeff(-coeff_range, coeff_range);
  std::vector<Term> terms;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Exponents e = random_exponents(rng, ctx->size(), max_deg);
    if (total_degree(e) > max_deg) continue;
    terms.push_back(
        Term{Scalar::from_int(field, coeff(rng)), std::move(e)});
  }
  return Polynomial::from_terms(ctx, field, order, std::move(terms));
}

inline MonomialIdeal random_monomial_ideal(std::mt19937_64& rng,
                                           const ContextPtr& ctx, int max_gens,
                                           int max_exp) {
  std::uniform_int_distribution<int> ngens(1, max_gens);
  std::vector<Exponents> gens;
  int n = ngens(rng);
  for (int i = 0; i < n; ++i) {
    Exponents e = random_exponents(rng, ctx->size(), max_exp);
    if (!is_constant(e)) gens.push_back(std::move(e));
  }
  return MonomialIdeal::from_monomials(ctx, std::move(gens));
}

/// All divisors of the given exponent vector (the standard witness search
/// space for monomial-ideal associated primes).
inline std::vector<Exponents> divisors(const Exponents& e) {
  std::vector<Exponents> out{Exponents(e.size(), 0)};
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::vector<Exponents> next;
    for (const auto& d : out) {
      for (int k = 0; k <= e[i]; ++k) {
        Exponents x(d);
        x[i] = k;
        next.push_back(std::move(x));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace mica_test

#endif
