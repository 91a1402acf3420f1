#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pea/pea.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 20240901;

struct Failure {
  int code;
  std::string message;
};

int exit_code(pea_status s) {
  switch (s) {
    case PEA_OK: return 0;
    case PEA_ERR_INCONSISTENCY: return 1;
    default: return 2;
  }
}

void check(pea_status s) {
  if (s != PEA_OK) throw Failure{exit_code(s), std::string(pea_last_error_type()) + ": " + pea_last_error()};
}

using TablePtr = std::unique_ptr<pea_table, decltype(&pea_table_free)>;

TablePtr load(const std::string& path) {
  pea_table* t = nullptr;
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    check(pea_table_parse(ss.str().c_str(), &t));
  } else {
    check(pea_table_load(path.c_str(), &t));
  }
  return TablePtr(t, pea_table_free);
}

Json take(char* s) {
  Json j = Json::parse(s);
  pea_string_free(s);
  return j;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("PEA_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw Failure{2, std::string("PEA_SEED is not an integer: ") + env};
    }
  }
  return kDefaultSeed;
}

void render(std::ostream& os, const Json& j, int indent) {
  const std::string pad(indent, ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto flat = [](const Json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
      if (x.is_object() || (x.is_array() && !x.empty() && x.front().is_object())) return false;
    return true;
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !flat(v))) {
        os << pad << k << ":\n";
        render(os, v, indent + 2);
      } else if (v.is_array()) {
        os << pad << k << ": " << v.dump() << "\n";
      } else {
        os << pad << k << ": " << scalar(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_object()) {
        os << pad << "-\n";
        render(os, v, indent + 2);
      } else {
        os << pad << "- " << (v.is_array() ? v.dump() : scalar(v)) << "\n";
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite and symbolic pseudo-effect algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  std::string output;
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("-o,--output", output, "Write the report here instead of stdout");

  std::string file, kind = "pea", ideal, document;
  auto add_file = [&](CLI::App* c) { c->add_option("file", file, "Algebra document, or - for stdin")->required(); };
  auto add_document = [&](CLI::App* c) { c->add_option("--document", document, "Also write the resulting algebra document here"); };

  auto* verify = app.add_subcommand("verify", "Check axioms and describe order, complements and symmetry");
  add_file(verify);
  verify->add_option("--kind", kind)->check(CLI::IsMember({"pea", "gpea"}));

  auto* states = app.add_subcommand("states", "State space, discrete states and extremality");
  add_file(states);
  std::optional<std::size_t> discrete;
  bool extremal = false;
  std::optional<std::string> state;
  states->add_option("--discrete", discrete, "Enumerate (N+1)-valued discrete states");
  states->add_flag("--extremal", extremal, "Check extremality of every vertex");
  states->add_option("--state", state, "Validate and classify a state, e.g. a=2/5,b=3/5");

  auto* decompose = app.add_subcommand("decompose", "n-decompositions, comparability and perfectness");
  add_file(decompose);
  std::size_t n = 1;
  decompose->add_option("n", n)->required()->check(CLI::PositiveNumber);

  auto* ideals = app.add_subcommand("ideals", "Ideals, radicals, Riesz properties and splitting ideals");
  add_file(ideals);

  auto* quotient = app.add_subcommand("quotient", "Quotient by a Riesz ideal");
  add_file(quotient);
  quotient->add_option("--ideal", ideal, "Comma-separated members")->required();
  add_document(quotient);

  auto* unitize = app.add_subcommand("unitize", "Unitization of a symmetric GPEA");
  add_file(unitize);
  add_document(unitize);

  auto* construct = app.add_subcommand("construct", "Builtin tables and interval constructions");
  std::optional<std::string> builtin, gamma, h, group_spec;
  std::optional<std::size_t> lex;
  std::string order = "pointwise";
  long bound = 16;
  std::size_t samples = 10000;
  std::optional<std::uint64_t> seed;
  construct->add_option("--builtin", builtin, "diamond, boolean4, chain:N, example46, example47[:GROUP], twisted_gamma");
  construct->add_option("--gamma", gamma, "Unit u of a finite interval [0,u]");
  construct->add_option("--lex", lex, "n of the interval [0,(n,h)] in Z lex G");
  construct->add_option("--group", group_spec, "z:K, twisted-z3 or lex:<group>");
  construct->add_option("--order", order)->check(CLI::IsMember({"pointwise", "lex"}));
  construct->add_option("--tail", h, "Group part h of the unit (n,h) for --lex");
  construct->add_option("--bound", bound, "Coordinate bound for --gamma");
  construct->add_option("--samples", samples);
  construct->add_option("--seed", seed);
  add_document(construct);

  auto* suite = app.add_subcommand("suite", "Property suite over all small PEAs and the symbolic fixtures");
  std::size_t max_size = 5, gpea_max_size = 5;
  suite->add_option("--max-size", max_size, "Largest PEA in the corpus");
  suite->add_option("--gpea-max-size", gpea_max_size, "Largest GPEA in the corpus");
  suite->add_option("--samples", samples);
  suite->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    char* raw = nullptr;
    if (*verify) {
      check(pea_report_verify(load(file).get(), kind == "gpea" ? PEA_KIND_GPEA : PEA_KIND_PEA, &raw));
    } else if (*states) {
      check(pea_report_states(load(file).get(), discrete ? static_cast<int>(*discrete) : -1, extremal,
                              state ? state->c_str() : nullptr, &raw));
    } else if (*decompose) {
      check(pea_report_decompose(load(file).get(), n, &raw));
    } else if (*ideals) {
      check(pea_report_ideals(load(file).get(), &raw));
    } else if (*quotient) {
      check(pea_report_quotient(load(file).get(), ideal.c_str(), &raw));
    } else if (*unitize) {
      check(pea_report_unitize(load(file).get(), &raw));
    } else if (*construct) {
      Json o;
      if (builtin) o["builtin"] = *builtin;
      if (gamma) o["gamma"] = *gamma;
      if (lex) o["lex"] = *lex;
      if (group_spec) o["group"] = *group_spec;
      o["order"] = order;
      if (h) o["h"] = *h;
      o["bound"] = bound;
      o["samples"] = samples;
      o["seed"] = seed ? *seed : default_seed();
      check(pea_report_construct(o.dump().c_str(), &raw));
    } else if (*suite) {
      check(pea_report_suite(max_size, gpea_max_size, samples, seed ? *seed : default_seed(), &raw));
    }
    const Json report = take(raw);

    if (!document.empty() && report.contains("document")) {
      std::ofstream d(document);
      if (!d) throw Failure{2, "cannot write " + document};
      pea_table* t = nullptr;
      check(pea_table_parse(report["document"].dump().c_str(), &t));
      TablePtr owned(t, pea_table_free);
      char* text = nullptr;
      check(pea_table_write(t, &text));
      d << text;
      pea_string_free(text);
    }
    std::ofstream file_out;
    if (!output.empty()) {
      file_out.open(output);
      if (!file_out) throw Failure{2, "cannot write " + output};
    }
    std::ostream& os = output.empty() ? std::cout : file_out;
    if (format == "json") {
      os << report.dump(2) << "\n";
    } else {
      render(os, report, 0);
    }
    return report.value("passed", false) ? 0 : 1;
  } catch (const Failure& f) {
    std::cerr << "pea: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "pea: " << e.what() << "\n";
    return 2;
  }
}
