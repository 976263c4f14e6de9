#ifndef MICA_POLYNOMIAL_HPP
#define MICA_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "mica/context.hpp"
#include "mica/order.hpp"
#include "mica/scalar.hpp"

namespace mica {

struct Term {
  Scalar coeff;
  Exponents mono;

  bool operator==(const Term& o) const {
    return coeff == o.coeff && mono == o.mono;
  }
};

/// Multivariate polynomial in canonical form: term list strictly decreasing
/// under the active order, no zero coefficients, no repeated monomials.
/// The empty term list is the zero polynomial. Immutable after construction.
class Polynomial {
 public:
  static Polynomial zero(ContextPtr ctx, Field field, MonomialOrder order) {
    return Polynomial(std::move(ctx), field, order, {});
  }
  static Polynomial constant(ContextPtr ctx, Scalar c, MonomialOrder order);
  static Polynomial monomial(ContextPtr ctx, Scalar c, Exponents e,
                             MonomialOrder order);
  /// Variable x_i (0-based position), coefficient 1.
  static Polynomial variable(ContextPtr ctx, Field field, std::size_t i,
                             MonomialOrder order);
  /// Canonicalizes an arbitrary term list: merges duplicates, drops zeros,
  /// sorts decreasing under `order`.
  static Polynomial from_terms(ContextPtr ctx, Field field, MonomialOrder order,
                               std::vector<Term> terms);

  const ContextPtr& context() const { return ctx_; }
  const Field& field() const { return field_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Order-maximal term; throws on the zero polynomial.
  const Term& leading_term() const;
  const Exponents& leading_monomial() const { return leading_term().mono; }
  int degree() const;  // max total degree; -1 for zero
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }

  /// Same polynomial re-sorted under a different order.
  Polynomial with_order(MonomialOrder order) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Scalar& c) const;
  Polynomial monic() const;
  Polynomial pow(unsigned n) const;

  bool operator==(const Polynomial& o) const;

 private:
  Polynomial(ContextPtr ctx, Field field, MonomialOrder order,
             std::vector<Term> terms)
      : ctx_(std::move(ctx)), field_(field), order_(order),
        terms_(std::move(terms)) {}

  void check_compatible(const Polynomial& o) const;

  ContextPtr ctx_;
  Field field_;
  MonomialOrder order_;
  std::vector<Term> terms_;
};

}  // namespace mica

#endif
