#ifndef MICA_ORDER_HPP
#define MICA_ORDER_HPP

#include <compare>
#include <optional>
#include <string>

#include "mica/context.hpp"

namespace mica {

enum class MonomialOrder { Lex, GrLex, GrevLex };

/// Total order on exponent vectors of a shared context.
///   lex:     sign of the first nonzero entry of a - b
///   grlex:   total degree first, lex tiebreak
///   grevlex: total degree first, then a > b iff the rightmost nonzero
///            entry of a - b is negative
std::strong_ordering compare(MonomialOrder order, const Exponents& a,
                             const Exponents& b);

std::string order_name(MonomialOrder order);
std::optional<MonomialOrder> order_from_name(const std::string& name);

/// Strict descending comparator for sorted term lists and ordered maps.
struct DescendingOrder {
  MonomialOrder order;
  bool operator()(const Exponents& a, const Exponents& b) const {
    return compare(order, a, b) == std::strong_ordering::greater;
  }
};

}  // namespace mica

#endif
