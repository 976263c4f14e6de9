#include "mica/order.hpp"

namespace mica {

namespace {

std::strong_ordering lex_compare(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering grevlex_tie(const Exponents& a, const Exponents& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];  // smaller tail entry wins
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare(MonomialOrder order, const Exponents& a,
                             const Exponents& b) {
  if (a.size() != b.size()) throw InputError("exponent vector length mismatch");
  switch (order) {
    case MonomialOrder::Lex:
      return lex_compare(a, b);
    case MonomialOrder::GrLex:
      if (auto c = total_degree(a) <=> total_degree(b); c != 0) return c;
      return lex_compare(a, b);
    case MonomialOrder::GrevLex:
      if (auto c = total_degree(a) <=> total_degree(b); c != 0) return c;
      return grevlex_tie(a, b);
  }
  throw InputError("unknown monomial order");
}

std::string order_name(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::Lex:
      return "lex";
    case MonomialOrder::GrLex:
      return "grlex";
    case MonomialOrder::GrevLex:
      return "grevlex";
  }
  return "?";
}

std::optional<MonomialOrder> order_from_name(const std::string& name) {
  if (name == "lex") return MonomialOrder::Lex;
  if (name == "grlex") return MonomialOrder::GrLex;
  if (name == "grevlex") return MonomialOrder::GrevLex;
  return std::nullopt;
}

}  // namespace mica
