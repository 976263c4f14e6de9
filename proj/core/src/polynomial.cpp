#include "mica/polynomial.hpp"

#include <map>

namespace mica {

Polynomial Polynomial::constant(ContextPtr ctx, Scalar c, MonomialOrder order) {
  Exponents e(ctx->size(), 0);
  return monomial(std::move(ctx), std::move(c), std::move(e), order);
}

Polynomial Polynomial::monomial(ContextPtr ctx, Scalar c, Exponents e,
                                MonomialOrder order) {
  if (e.size() != ctx->size()) {
    throw InputError("exponent vector length does not match context");
  }
  for (int x : e) {
    if (x < 0) throw InputError("negative exponent");
  }
  Field f = c.field();
  std::vector<Term> terms;
  if (!c.is_zero()) terms.push_back(Term{std::move(c), std::move(e)});
  return Polynomial(std::move(ctx), f, order, std::move(terms));
}

Polynomial Polynomial::variable(ContextPtr ctx, Field field, std::size_t i,
                                MonomialOrder order) {
  if (i >= ctx->size()) throw InputError("variable index out of range");
  Exponents e(ctx->size(), 0);
  e[i] = 1;
  return monomial(std::move(ctx), Scalar::one(field), std::move(e), order);
}

Polynomial Polynomial::from_terms(ContextPtr ctx, Field field,
                                  MonomialOrder order,
                                  std::vector<Term> terms) {
  std::map<Exponents, Scalar, DescendingOrder> acc{DescendingOrder{order}};
  for (auto& t : terms) {
    if (t.mono.size() != ctx->size()) {
      throw InputError("exponent vector length does not match context");
    }
    if (!(t.coeff.field() == field)) throw InputError("term field mismatch");
    auto [it, inserted] = acc.emplace(std::move(t.mono), t.coeff);
    if (!inserted) it->second = it->second + t.coeff;
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [mono, c] : acc) {
    if (!c.is_zero()) out.push_back(Term{std::move(c), mono});
  }
  return Polynomial(std::move(ctx), field, order, std::move(out));
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw InputError("zero polynomial has no leading term");
  return terms_.front();
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, total_degree(t.mono));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree(terms_.front().mono);
  for (const auto& t : terms_) {
    if (total_degree(t.mono) != d) return false;
  }
  return true;
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  if (order == order_) return *this;
  return from_terms(ctx_, field_, order, terms_);
}

void Polynomial::check_compatible(const Polynomial& o) const {
  check_same_context(ctx_, o.ctx_);
  if (!(field_ == o.field_)) throw InputError("polynomial field mismatch");
  if (order_ != o.order_) throw InputError("polynomial order mismatch");
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> terms;
  terms.reserve(terms_.size());
  for (const auto& t : terms_) terms.push_back(Term{-t.coeff, t.mono});
  return Polynomial(ctx_, field_, order_, std::move(terms));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_compatible(o);
  // merge two sorted term lists
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    auto c = compare(order_, terms_[i].mono, o.terms_[j].mono);
    if (c == std::strong_ordering::greater) {
      out.push_back(terms_[i++]);
    } else if (c == std::strong_ordering::less) {
      out.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) out.push_back(Term{std::move(s), terms_[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return Polynomial(ctx_, field_, order_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_compatible(o);
  std::map<Exponents, Scalar, DescendingOrder> acc{DescendingOrder{order_}};
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Exponents m = mono_mul(a.mono, b.mono);
      Scalar c = a.coeff * b.coeff;
      auto [it, inserted] = acc.emplace(std::move(m), std::move(c));
      if (!inserted) it->second = it->second + a.coeff * b.coeff;
    }
  }
  std::vector<Term> out;
  for (auto& [mono, c] : acc) {
    if (!c.is_zero()) out.push_back(Term{std::move(c), mono});
  }
  return Polynomial(ctx_, field_, order_, std::move(out));
}

Polynomial Polynomial::operator*(const Scalar& c) const {
  if (!(c.field() == field_)) throw InputError("scalar field mismatch");
  if (c.is_zero()) return zero(ctx_, field_, order_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(Term{t.coeff * c, t.mono});
  return Polynomial(ctx_, field_, order_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return *this * leading_term().coeff.inverse();
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(ctx_, Scalar::one(field_), order_);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    base = (n >>= 1) ? base * base : base;
  }
  return result;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return *ctx_ == *o.ctx_ && field_ == o.field_ &&
         with_order(order_).terms_ == o.with_order(order_).terms_;
}

}  // namespace mica
