#include "mica/textio.hpp"

#include <cctype>
#include <istream>
#include <sstream>

namespace mica {

namespace {

// Recursive-descent parser over the raw string; positions are 0-based
// character offsets.
class Parser {
 public:
  Parser(const std::string& text, ContextPtr ctx, Field field,
         MonomialOrder order)
      : text_(text), ctx_(std::move(ctx)), field_(field), order_(order) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return p;
  }

 private:
  // expression := ['+'|'-'] term (('+'|'-') term)*
  Polynomial expression() {
    bool negate = false;
    skip_ws();
    if (peek() == '+' || peek() == '-') negate = (get() == '-');
    Polynomial p = term();
    if (negate) p = -p;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') return p;
      get();
      Polynomial t = term();
      p = (c == '+') ? p + t : p - t;
    }
  }

  // term := factor ('*' factor)*
  Polynomial term() {
    Polynomial p = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') return p;
      get();
      p = p * factor();
    }
  }

  // factor := primary ['^' posint]
  Polynomial factor() {
    Polynomial p = primary();
    skip_ws();
    if (peek() != '^') return p;
    get();
    skip_ws();
    std::size_t at = pos_;
    long e = integer();
    if (e <= 0) throw ParseError("exponent must be a positive integer", at);
    return p.pow(static_cast<unsigned>(e));
  }

  // primary := number | variable | '(' expression ')'
  Polynomial primary() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      get();
      Polynomial p = expression();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      get();
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      return variable();
    }
    throw ParseError("expected a number, variable, or '('", pos_);
  }

  Polynomial number() {
    std::size_t at = pos_;
    mpz_class num(digits());
    mpz_class den(1);
    skip_ws();
    if (peek() == '/') {
      get();
      skip_ws();
      std::size_t dat = pos_;
      den = mpz_class(digits());
      if (den == 0) throw ParseError("zero denominator", dat);
    }
    (void)at;
    return Polynomial::constant(ctx_, Scalar(field_, mpq_class(num, den)),
                                order_);
  }

  Polynomial variable() {
    std::size_t at = pos_;
    std::string name;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      name.push_back(text_[pos_++]);
    }
    auto idx = ctx_->index_of(name);
    if (!idx) throw ParseError("unknown variable '" + name + "'", at);
    return Polynomial::variable(ctx_, field_, *idx, order_);
  }

  long integer() {
    std::string d = digits();
    try {
      return std::stol(d);
    } catch (const std::out_of_range&) {
      throw ParseError("integer out of range", pos_);
    }
  }

  std::string digits() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected digits", pos_);
    }
    std::string d;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      d.push_back(text_[pos_++]);
    }
    return d;
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  char get() { return text_[pos_++]; }

  const std::string& text_;
  ContextPtr ctx_;
  Field field_;
  MonomialOrder order_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split_names(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

Field parse_field_name(const std::string& name) {
  if (name == "Q") return Field::rationals();
  if (name.rfind("Fp:", 0) == 0) {
    unsigned long p = 0;
    try {
      p = std::stoul(name.substr(3));
    } catch (...) {
      throw InputError("bad field spec '" + name + "'");
    }
    return Field::prime(p);
  }
  throw InputError("unknown field '" + name + "' (expected Q or Fp:<p>)");
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const ContextPtr& ctx,
                            Field field, MonomialOrder order) {
  return Parser(text, ctx, field, order).parse();
}

IdealGens IdealFile::parse() const {
  auto ctx = context();
  std::vector<Polynomial> polys;
  for (const auto& g : gens) {
    polys.push_back(parse_polynomial(g, ctx, field, order));
  }
  return IdealGens(ctx, field, std::move(polys));
}

bool IdealFile::all_monomial() const {
  auto ctx = context();
  for (const auto& g : gens) {
    Polynomial p = parse_polynomial(g, ctx, field, order);
    if (!p.is_monomial() || !p.leading_term().coeff.is_one()) return false;
  }
  return true;
}

MonomialIdeal IdealFile::parse_monomial_ideal() const {
  auto ctx = context();
  std::vector<Exponents> monos;
  for (const auto& g : gens) {
    Polynomial p = parse_polynomial(g, ctx, field, order);
    if (!p.is_monomial()) {
      throw InputError("generator '" + g + "' is not a monomial");
    }
    monos.push_back(p.leading_monomial());
  }
  return MonomialIdeal::from_monomials(ctx, std::move(monos));
}

IdealFile load_ideal_file(std::istream& in) {
  IdealFile file;
  bool in_gens = false;
  bool have_vars = false;
  std::string line;
  while (std::getline(in, line)) {
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (in_gens) {
      file.gens.push_back(t);
      continue;
    }
    auto colon = t.find(':');
    if (colon == std::string::npos) {
      throw InputError("expected 'key:' header line, got '" + t + "'");
    }
    std::string key = trim(t.substr(0, colon));
    std::string value = trim(t.substr(colon + 1));
    if (key == "vars") {
      file.vars = split_names(value);
      have_vars = true;
    } else if (key == "order") {
      auto o = order_from_name(value);
      if (!o) throw InputError("unknown order '" + value + "'");
      file.order = *o;
    } else if (key == "field") {
      file.field = parse_field_name(value);
    } else if (key == "gens") {
      in_gens = true;
      if (!value.empty()) file.gens.push_back(value);
    } else {
      throw InputError("unknown header key '" + key + "'");
    }
  }
  if (!have_vars) throw InputError("missing 'vars:' header");
  if (file.gens.empty()) throw InputError("missing generators");
  // validate eagerly: distinct vars, every generator parses
  auto ctx = file.context();
  for (const auto& g : file.gens) {
    parse_polynomial(g, ctx, file.field, file.order);
  }
  return file;
}

IdealFile load_ideal_file_text(const std::string& text) {
  std::istringstream in(text);
  return load_ideal_file(in);
}

std::string print_monomial(const ContextPtr& ctx, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ctx->name(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string print(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    mpq_class v = t.coeff.value();
    bool negative = v < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    mpq_class a = abs(v);
    std::string mono = print_monomial(f.context(), t.mono);
    if (a == 1 && mono != "1") {
      out += mono;
    } else if (mono == "1") {
      out += a.get_str();
    } else {
      out += a.get_str() + "*" + mono;
    }
  }
  return out;
}

std::string print(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string out;
  for (const auto& g : ideal.generators()) {
    if (!out.empty()) out += ", ";
    out += print_monomial(ideal.context(), g);
  }
  return out;
}

std::string print(const ContextPtr& ctx, const VarPrime& p) {
  std::string out = "(";
  bool first = true;
  for (std::size_t v : p.vars) {
    if (!first) out += ",";
    out += ctx->name(v);
    first = false;
  }
  return out + ")";
}

std::string print(const GroebnerBasis& basis) {
  std::string out;
  for (const auto& g : basis.gens) {
    if (!out.empty()) out += "\n";
    out += print(g);
  }
  return out;
}

namespace {

nlohmann::json json_base(const std::string& type) {
  return {{"format-version", kJsonFormatVersion}, {"type", type}};
}

nlohmann::json vars_of(const ContextPtr& ctx, const VarPrime& p) {
  nlohmann::json names = nlohmann::json::array();
  for (std::size_t v : p.vars) names.push_back(ctx->name(v));
  return names;
}

}  // namespace

nlohmann::json to_json(const Polynomial& f) {
  auto j = json_base("polynomial");
  j["order"] = order_name(f.order());
  j["field"] = f.field().str();
  j["text"] = print(f);
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : f.terms()) {
    terms.push_back({{"coeff", t.coeff.str()}, {"exponents", t.mono}});
  }
  j["terms"] = std::move(terms);
  return j;
}

nlohmann::json to_json(const MonomialIdeal& ideal) {
  auto j = json_base("monomial-ideal");
  j["vars"] = ideal.context()->names();
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : ideal.generators()) {
    gens.push_back({{"text", print_monomial(ideal.context(), g)},
                    {"exponents", g}});
  }
  j["generators"] = std::move(gens);
  return j;
}

nlohmann::json to_json(const GroebnerBasis& basis) {
  auto j = json_base("groebner-basis");
  j["order"] = order_name(basis.order);
  j["reduced"] = basis.reduced;
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : basis.gens) gens.push_back(print(g));
  j["generators"] = std::move(gens);
  return j;
}

nlohmann::json to_json(const ContextPtr& ctx, const AssReport& report) {
  auto j = json_base("ass-report");
  j["codim"] = report.codim;
  j["dim"] = report.dim;
  nlohmann::json primes = nlohmann::json::array();
  for (const auto& ap : report.primes) {
    primes.push_back({{"vars", vars_of(ctx, ap.prime)},
                      {"codim", ap.prime.codim()},
                      {"minimal", ap.minimal}});
  }
  j["primes"] = std::move(primes);
  return j;
}

nlohmann::json to_json(const ContextPtr& ctx, const ChainReport& report) {
  auto j = json_base("chain-report");
  j["verdict"] = report.holds ? "holds" : "fails";
  if (report.violator) j["violator"] = vars_of(ctx, *report.violator);
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    nlohmann::json entry = {{"prime", vars_of(ctx, e.q)}};
    if (e.step) entry["step"] = vars_of(ctx, *e.step);
    nlohmann::json chain = nlohmann::json::array();
    for (const auto& p : e.chain) chain.push_back(vars_of(ctx, p));
    entry["chain"] = std::move(chain);
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  return j;
}

nlohmann::json to_json(const ContextPtr& ctx, const BorelResult& result) {
  auto j = json_base("borel-report");
  j["borel-fixed"] = result.fixed;
  j["criterion"] = "char-0";
  if (result.witness) {
    j["witness"] = {
        {"generator", print_monomial(ctx, result.witness->generator)},
        {"move", result.witness->move + 1},
        {"escaped", print_monomial(ctx, result.witness->escaped)}};
  }
  return j;
}

nlohmann::json to_json(const ContextPtr& ctx, const TheoremReport& report) {
  auto j = json_base("theorem-report");
  j["hypotheses"] = {{"borel", report.borel},
                     {"codim-r-minus-2", report.codim_r_minus_2},
                     {"equidimensional", report.equidimensional}};
  j["conclusion"] = {
      {"prefix-primes", report.prefix_primes},
      {"chain", to_json(ctx, report.chain)},
      {"embedded-implies-r-minus-1", report.embedded_implies_r_minus_1}};
  switch (report.status()) {
    case TheoremReport::Status::Holds:
      j["status"] = "holds";
      break;
    case TheoremReport::Status::NotCovered:
      j["status"] = "not-covered";
      break;
    case TheoremReport::Status::Violated:
      j["status"] = "violated";
      break;
  }
  j["ass"] = to_json(ctx, report.ass);
  if (report.borel_witness) {
    j["borel-witness"] = {
        {"generator", print_monomial(ctx, report.borel_witness->generator)},
        {"move", report.borel_witness->move + 1},
        {"escaped", print_monomial(ctx, report.borel_witness->escaped)}};
  }
  return j;
}

}  // namespace mica
