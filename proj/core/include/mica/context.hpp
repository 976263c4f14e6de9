#ifndef MICA_CONTEXT_HPP
#define MICA_CONTEXT_HPP

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mica/errors.hpp"

namespace mica {

/// Exponent vector (j_1,...,j_r); position 0 is the largest variable.
using Exponents = std::vector<int>;

/// Ordered variable names; declaration order IS the variable order
/// x_1 > x_2 > ... > x_r.
class VarContext {
 public:
  explicit VarContext(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw InputError("variable context must be nonempty");
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != names_.size()) {
      throw InputError("variable names must be distinct");
    }
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> index_of(const std::string& v) const {
    auto it = std::find(names_.begin(), names_.end(), v);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
  }

  bool operator==(const VarContext& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

inline ContextPtr make_context(std::vector<std::string> names) {
  return std::make_shared<const VarContext>(std::move(names));
}

inline void check_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw InputError("variable context mismatch");
}

inline int total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

inline bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Exponents mono_mul(const Exponents& a, const Exponents& b) {
  Exponents r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

/// Exact quotient a / b; requires divides(b, a).
inline Exponents mono_div(const Exponents& a, const Exponents& b) {
  Exponents r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

inline Exponents mono_lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(r[i], b[i]);
  return r;
}

inline Exponents mono_gcd(const Exponents& a, const Exponents& b) {
  Exponents r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::min(r[i], b[i]);
  return r;
}

inline bool is_constant(const Exponents& e) { return total_degree(e) == 0; }

}  // namespace mica

#endif
