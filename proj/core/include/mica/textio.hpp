#ifndef MICA_TEXTIO_HPP
#define MICA_TEXTIO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "nlohmann/json.hpp"

#include "mica/groebner.hpp"
#include "mica/monoideal.hpp"
#include "mica/polynomial.hpp"

namespace mica {

inline constexpr int kJsonFormatVersion = 1;

/// Grammar: integer/rational coefficients, variables from ctx, '^' with a
/// positive integer power, explicit '*', '+'/'-', parentheses. Implicit
/// multiplication is rejected ("xy" is an unknown variable). Throws
/// ParseError with a character position.
Polynomial parse_polynomial(const std::string& text, const ContextPtr& ctx,
                            Field field,
                            MonomialOrder order = MonomialOrder::GrevLex);

/// Line-oriented ideal description:
///   # comment lines
///   vars: x y z
///   order: grevlex
///   field: Q            (or Fp:<p>)
///   gens:
///   x*z - a^2
///   ...
struct IdealFile {
  std::vector<std::string> vars;
  MonomialOrder order = MonomialOrder::GrevLex;
  Field field = Field::rationals();
  std::vector<std::string> gens;

  ContextPtr context() const { return make_context(vars); }
  IdealGens parse() const;
  /// True iff every generator is a single monomial with coefficient 1.
  bool all_monomial() const;
  MonomialIdeal parse_monomial_ideal() const;
};

IdealFile load_ideal_file(std::istream& in);
IdealFile load_ideal_file_text(const std::string& text);

// -- canonical text rendering ------------------------------------------------

std::string print(const Polynomial& f);
std::string print_monomial(const ContextPtr& ctx, const Exponents& e);
/// Comma-separated minimal generators in canonical (ascending degree,
/// grevlex) order; "0" for the zero ideal.
std::string print(const MonomialIdeal& ideal);
std::string print(const ContextPtr& ctx, const VarPrime& p);
std::string print(const GroebnerBasis& basis);

// -- JSON schemas (all carry "format-version") -------------------------------

nlohmann::json to_json(const Polynomial& f);
nlohmann::json to_json(const MonomialIdeal& ideal);
nlohmann::json to_json(const GroebnerBasis& basis);
nlohmann::json to_json(const ContextPtr& ctx, const AssReport& report);
nlohmann::json to_json(const ContextPtr& ctx, const ChainReport& report);
nlohmann::json to_json(const ContextPtr& ctx, const BorelResult& result);
nlohmann::json to_json(const ContextPtr& ctx, const TheoremReport& report);

}  // namespace mica

#endif
