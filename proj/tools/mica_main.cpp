// mica: Groebner bases, initial ideals, and monomial-ideal chain analysis.
//
// Exit codes: 0 success, 1 property-check failure (e.g. a failing chain
// verdict or a non-Borel-fixed ideal), 2 input error, 3 resource-cap error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "mica/counterexample.hpp"
#include "mica/groebner.hpp"
#include "mica/textio.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

struct Options {
  std::string input;
  std::optional<std::string> order;
  std::optional<std::string> field;
  bool json = false;
  std::uint64_t seed = 0;
  int trials = 2;
  std::size_t max_pairs = 0;
  int max_degree = 0;
  bool via_gin = false;
  bool group_primary = false;
};

mica::IdealFile load_input(const Options& opt) {
  mica::IdealFile file;
  if (opt.input == "-") {
    file = mica::load_ideal_file(std::cin);
  } else {
    std::ifstream in(opt.input);
    if (!in) throw mica::InputError("cannot open '" + opt.input + "'");
    file = mica::load_ideal_file(in);
  }
  // flags override file headers
  if (opt.order) {
    auto o = mica::order_from_name(*opt.order);
    if (!o) throw mica::InputError("unknown order '" + *opt.order + "'");
    file.order = *o;
  }
  if (opt.field) {
    if (*opt.field == "Q") {
      file.field = mica::Field::rationals();
    } else if (opt.field->rfind("Fp:", 0) == 0) {
      file.field = mica::Field::prime(std::stoul(opt.field->substr(3)));
    } else {
      throw mica::InputError("unknown field '" + *opt.field + "'");
    }
  }
  return file;
}

mica::BuchbergerLimits limits_of(const Options& opt) {
  return mica::BuchbergerLimits{opt.max_pairs, opt.max_degree};
}

// A monomial-generator file is taken as the monomial ideal itself;
// otherwise the grevlex/requested-order initial ideal is computed first.
mica::MonomialIdeal monomial_ideal_of(const mica::IdealFile& file,
                                      const Options& opt) {
  if (file.all_monomial()) return file.parse_monomial_ideal();
  auto gb = mica::buchberger(file.parse(), file.order, limits_of(opt));
  return mica::initial_ideal(gb);
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_gb(const Options& opt) {
  auto file = load_input(opt);
  auto gb = mica::buchberger(file.parse(), file.order, limits_of(opt));
  if (opt.json) {
    emit(mica::to_json(gb));
  } else {
    std::cout << mica::print(gb) << "\n";
  }
  return kExitOk;
}

int cmd_initial(const Options& opt) {
  auto file = load_input(opt);
  auto gb = mica::buchberger(file.parse(), file.order, limits_of(opt));
  auto in = mica::initial_ideal(gb);
  if (opt.json) {
    emit(mica::to_json(in));
  } else {
    std::cout << mica::print(in) << "\n";
  }
  return kExitOk;
}

int cmd_borel(const Options& opt) {
  auto file = load_input(opt);
  auto ideal = monomial_ideal_of(file, opt);
  auto result = mica::is_borel_fixed(ideal);
  auto ctx = ideal.context();
  if (opt.json) {
    emit(mica::to_json(ctx, result));
  } else {
    std::cout << "borel-fixed: " << (result.fixed ? "true" : "false")
              << " (char-0 criterion)\n";
    if (result.witness) {
      std::cout << "witness: e_" << (result.witness->move + 1) << "("
                << mica::print_monomial(ctx, result.witness->generator)
                << ") = "
                << mica::print_monomial(ctx, result.witness->escaped)
                << " not in the ideal\n";
    }
  }
  return result.fixed ? kExitOk : kExitPropertyFail;
}

int cmd_decomp(const Options& opt) {
  auto file = load_input(opt);
  auto ideal = monomial_ideal_of(file, opt);
  if (opt.group_primary) {
    auto comps = mica::primary_components(ideal, true);
    if (opt.json) {
      nlohmann::json j = {{"format-version", mica::kJsonFormatVersion},
                          {"type", "primary-decomposition"}};
      for (const auto& c : comps) j["components"].push_back(mica::to_json(c));
      emit(j);
    } else {
      for (const auto& c : comps) std::cout << mica::print(c) << "\n";
    }
    return kExitOk;
  }
  auto comps = mica::irreducible_decomposition(ideal);
  if (opt.json) {
    nlohmann::json j = {{"format-version", mica::kJsonFormatVersion},
                        {"type", "irreducible-decomposition"}};
    for (const auto& c : comps) {
      j["components"].push_back(mica::to_json(c.as_ideal(ideal.context())));
    }
    emit(j);
  } else {
    for (const auto& c : comps) {
      std::cout << mica::print(c.as_ideal(ideal.context())) << "\n";
    }
  }
  return kExitOk;
}

int cmd_ass(const Options& opt) {
  auto file = load_input(opt);
  auto ideal = monomial_ideal_of(file, opt);
  auto ass = mica::associated_primes(ideal);
  auto ctx = ideal.context();
  if (opt.json) {
    emit(mica::to_json(ctx, ass));
  } else {
    std::cout << "codim: " << ass.codim << "  dim: " << ass.dim << "\n";
    for (const auto& ap : ass.primes) {
      std::cout << mica::print(ctx, ap.prime)
                << (ap.minimal ? "  minimal" : "  embedded") << "\n";
    }
  }
  return kExitOk;
}

int cmd_chains(const Options& opt) {
  auto file = load_input(opt);
  auto ideal = monomial_ideal_of(file, opt);
  auto ctx = ideal.context();
  auto chain = mica::saturated_chain_property(mica::associated_primes(ideal));
  if (opt.json) {
    emit(mica::to_json(ctx, chain));
  } else {
    std::cout << "saturated-chain-property: "
              << (chain.holds ? "holds" : "fails") << "\n";
    if (chain.violator) {
      std::cout << "witness: " << mica::print(ctx, *chain.violator)
                << " has no associated prime one dimension larger inside it\n";
    }
    for (const auto& e : chain.entries) {
      if (e.chain.empty()) continue;
      std::cout << "chain to " << mica::print(ctx, e.q) << ":";
      for (const auto& p : e.chain) std::cout << " " << mica::print(ctx, p);
      std::cout << "\n";
    }
  }
  return chain.holds ? kExitOk : kExitPropertyFail;
}

void warn_if_not_grevlex(mica::MonomialOrder order) {
  if (order != mica::MonomialOrder::GrevLex) {
    std::cerr << "warning: last-variable regularity arguments are specific to "
                 "grevlex; requested order is "
              << mica::order_name(order) << "\n";
  }
}

int cmd_gin(const Options& opt) {
  auto file = load_input(opt);
  warn_if_not_grevlex(file.order);
  auto result =
      mica::gin(file.parse(), file.order, opt.seed, opt.trials, limits_of(opt));
  if (opt.json) {
    emit(mica::to_json(result));
  } else {
    std::cout << mica::print(result) << "\n";
  }
  return kExitOk;
}

int cmd_check_theorem(const Options& opt) {
  auto file = load_input(opt);
  mica::MonomialIdeal ideal = [&] {
    if (opt.via_gin) {
      warn_if_not_grevlex(file.order);
      return mica::gin(file.parse(), file.order, opt.seed, opt.trials,
                       limits_of(opt));
    }
    if (!file.all_monomial()) {
      throw mica::InputError(
          "check-theorem needs a monomial-ideal file, or --via-gin for a "
          "polynomial ideal");
    }
    return file.parse_monomial_ideal();
  }();
  auto ctx = ideal.context();
  auto report = mica::check_theorem(ideal);
  if (opt.json) {
    emit(mica::to_json(ctx, report));
  } else {
    auto yn = [](bool b) { return b ? "true" : "false"; };
    std::cout << "hypotheses: borel-fixed (char-0 criterion)="
              << yn(report.borel)
              << " codim-r-minus-2=" << yn(report.codim_r_minus_2)
              << " equidimensional=" << yn(report.equidimensional) << "\n";
    std::cout << "conclusion: prefix-primes=" << yn(report.prefix_primes)
              << " chain=" << (report.chain.holds ? "holds" : "fails")
              << " embedded-implies-r-minus-1="
              << yn(report.embedded_implies_r_minus_1) << "\n";
    switch (report.status()) {
      case mica::TheoremReport::Status::Holds:
        std::cout << "status: holds\n";
        break;
      case mica::TheoremReport::Status::NotCovered:
        std::cout << "status: not covered by the theorem\n";
        break;
      case mica::TheoremReport::Status::Violated:
        std::cout << "status: theorem violated\n";
        break;
    }
  }
  return report.conclusion_holds() ? kExitOk : kExitPropertyFail;
}

int cmd_verify_paper(const Options& opt) {
  auto results = mica::verify_counterexample(mica::default_counterexample());
  bool all = true;
  if (opt.json) {
    nlohmann::json j = {{"format-version", mica::kJsonFormatVersion},
                        {"type", "verify-paper"}};
    for (const auto& r : results) {
      all = all && r.pass;
      j["checks"].push_back(
          {{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    j["pass"] = all;
    emit(j);
  } else {
    for (const auto& r : results) {
      all = all && r.pass;
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
      if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
      std::cout << "\n";
    }
  }
  return all ? kExitOk : kExitPropertyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Groebner bases, initial ideals, and monomial-ideal analysis"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool needs_input = true) {
    if (needs_input) {
      sub->add_option("input", opt.input, "ideal file path, or - for stdin")
          ->required();
    }
    sub->add_option("--order", opt.order, "monomial order (lex|grlex|grevlex)");
    sub->add_option("--field", opt.field, "coefficient field (Q|Fp:<p>)");
    sub->add_flag("--json", opt.json, "machine-readable JSON output");
    sub->add_option("--seed", opt.seed, "RNG seed for randomized commands");
    sub->add_option("--trials", opt.trials, "agreement trials for gin (>= 2)");
    sub->add_option("--max-pairs", opt.max_pairs,
                    "pair-queue safety cap (0 = unlimited)");
    sub->add_option("--max-degree", opt.max_degree,
                    "S-pair degree safety cap (0 = unlimited)");
    return sub;
  };

  auto* gb = add_common(app.add_subcommand("gb", "reduced Groebner basis"));
  auto* initial =
      add_common(app.add_subcommand("initial", "initial ideal of the input"));
  auto* borel =
      add_common(app.add_subcommand("borel", "Borel-fixedness check"));
  auto* decomp = add_common(
      app.add_subcommand("decomp", "irreducible decomposition"));
  decomp->add_flag("--primary", opt.group_primary,
                   "group components by radical into primary ideals");
  auto* ass =
      add_common(app.add_subcommand("ass", "associated primes report"));
  auto* chains = add_common(
      app.add_subcommand("chains", "saturated chain property check"));
  auto* gin_cmd =
      add_common(app.add_subcommand("gin", "generic initial ideal"));
  auto* check = add_common(
      app.add_subcommand("check-theorem",
                         "hypothesis/conclusion report for the dimension-two "
                         "Borel-fixed chain theorem"));
  check->add_flag("--via-gin", opt.via_gin,
                  "compute the generic initial ideal first");
  auto* verify = add_common(
      app.add_subcommand("verify-paper",
                         "run the built-in counterexample fixture checks"),
      /*needs_input=*/false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (gb->parsed()) return cmd_gb(opt);
    if (initial->parsed()) return cmd_initial(opt);
    if (borel->parsed()) return cmd_borel(opt);
    if (decomp->parsed()) return cmd_decomp(opt);
    if (ass->parsed()) return cmd_ass(opt);
    if (chains->parsed()) return cmd_chains(opt);
    if (gin_cmd->parsed()) return cmd_gin(opt);
    if (check->parsed()) return cmd_check_theorem(opt);
    if (verify->parsed()) return cmd_verify_paper(opt);
  } catch (const mica::ResourceError& e) {
    std::cerr << "error[resource]: " << e.what() << "\n";
    return kExitResource;
  } catch (const mica::UnstableError& e) {
    std::cerr << "error[unstable]: " << e.what() << "\n";
    return kExitInput;
  } catch (const mica::InputError& e) {
    std::cerr << "error[input]: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error[input]: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
