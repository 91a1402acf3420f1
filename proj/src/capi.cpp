#include "pea/pea.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "pea/builtins.hpp"
#include "pea/core_algebra.hpp"
#include "pea/document.hpp"
#include "pea/errors.hpp"
#include "pea/report.hpp"

struct pea_table {
  pea::PartialAdditionTable t;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_error_type;

pea_status fail(pea_status s, const char* type, const char* what) {
  last_error = what;
  last_error_type = type;
  return s;
}

template <class F>
pea_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    last_error_type.clear();
    return PEA_OK;
  } catch (const pea::InputError& e) {
    return fail(PEA_ERR_INPUT, "InputError", e.what());
  } catch (const pea::NonSymmetric& e) {
    return fail(PEA_ERR_REFUSED, "NonSymmetric", e.what());
  } catch (const pea::UndefinedDifference& e) {
    return fail(PEA_ERR_REFUSED, "UndefinedDifference", e.what());
  } catch (const pea::NotCyclic& e) {
    return fail(PEA_ERR_REFUSED, "NotCyclic", e.what());
  } catch (const pea::NotStrong& e) {
    return fail(PEA_ERR_REFUSED, "NotStrong", e.what());
  } catch (const pea::WellDefinednessFailure& e) {
    return fail(PEA_ERR_REFUSED, "WellDefinednessFailure", e.what());
  } catch (const pea::Refused& e) {
    return fail(PEA_ERR_REFUSED, "Refused", e.what());
  } catch (const pea::TooLarge& e) {
    return fail(PEA_ERR_TOO_LARGE, "TooLarge", e.what());
  } catch (const pea::Inconsistency& e) {
    return fail(PEA_ERR_INCONSISTENCY, "Inconsistency", e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(PEA_ERR_INPUT, "InputError", e.what());
  } catch (const std::exception& e) {
    return fail(PEA_ERR_INTERNAL, "Internal", e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

pea_status emit(char** out, const pea::Json& j) {
  *out = dup(j.dump(2));
  return PEA_OK;
}

pea::Kind kind_of(pea_kind k) { return k == PEA_KIND_GPEA ? pea::Kind::Gpea : pea::Kind::Pea; }

bool bad(const void* p) {
  if (p) return false;
  fail(PEA_ERR_INPUT, "InputError", "null argument");
  return true;
}

}  // namespace

extern "C" {

const char* pea_last_error(void) { return last_error.c_str(); }
const char* pea_last_error_type(void) { return last_error_type.c_str(); }

pea_status pea_table_parse(const char* text, pea_table** out) {
  if (bad(text) || bad(out)) return PEA_ERR_INPUT;
  return guard([&] { *out = new pea_table{pea::parse_document(text)}; });
}

pea_status pea_table_load(const char* path, pea_table** out) {
  if (bad(path) || bad(out)) return PEA_ERR_INPUT;
  return guard([&] { *out = new pea_table{pea::load_document(path)}; });
}

pea_status pea_table_builtin(const char* name, pea_table** out) {
  if (bad(name) || bad(out)) return PEA_ERR_INPUT;
  return guard([&] {
    const std::string n = name;
    if (n == "diamond") {
      *out = new pea_table{pea::diamond()};
    } else if (n == "boolean4") {
      *out = new pea_table{pea::boolean4()};
    } else if (n.rfind("chain:", 0) == 0) {
      std::size_t k = 0;
      try {
        k = std::stoul(n.substr(6));
      } catch (const std::exception&) {
        throw pea::InputError("bad chain length in " + n);
      }
      *out = new pea_table{pea::chain(k)};
    } else {
      throw pea::InputError("unknown builtin table " + n);
    }
  });
}

void pea_table_free(pea_table* t) { delete t; }

pea_status pea_table_write(const pea_table* t, char** out) {
  if (bad(t) || bad(out)) return PEA_ERR_INPUT;
  return guard([&] { *out = dup(pea::write_document(t->t)); });
}

size_t pea_table_size(const pea_table* t) { return t ? t->t.size() : 0; }

const char* pea_table_name(const pea_table* t, size_t index) {
  if (!t || index >= t->t.size()) return nullptr;
  return t->t.name(pea::Elem{static_cast<std::uint16_t>(index)}).c_str();
}

pea_status pea_table_add(const pea_table* t, size_t a, size_t b, int* out) {
  if (bad(t) || bad(out)) return PEA_ERR_INPUT;
  if (a >= t->t.size() || b >= t->t.size()) return fail(PEA_ERR_INPUT, "InputError", "element index out of range");
  return guard([&] {
    const auto s = t->t.add(pea::Elem{static_cast<std::uint16_t>(a)}, pea::Elem{static_cast<std::uint16_t>(b)});
    *out = s ? static_cast<int>(s->id) : -1;
  });
}

pea_status pea_table_check_axioms(const pea_table* t, pea_kind kind, int* passed) {
  if (bad(t) || bad(passed)) return PEA_ERR_INPUT;
  return guard([&] { *passed = pea::check_axioms(t->t, kind_of(kind)).passed() ? 1 : 0; });
}

pea_status pea_report_verify(const pea_table* t, pea_kind kind, char** out) {
  if (bad(t) || bad(out)) return PEA_ERR_INPUT;
  return guard([&] { emit(out, pea::verify_report(t->t, kind_of(kind))); });
}

pea_status pea_report_states(const pea_table* t, int discrete, int extremal, const char* state, char** out) {
  if (bad(t) || bad(out)) return PEA_ERR_INPUT;
  return guard([&] {
    pea::StatesOptions o;
    if (discrete >= 0) o.discrete = static_cast<std::size_t>(discrete);
    o.extremal = extremal != 0;
    if (state) o.state = state;
    emit(out, pea::states_report(t->t, o));
  });
}

pea_status pea_report_decompose(const pea_table* t, size_t n, char** out) {
  if (bad(t) || bad(out)) return PEA_ERR_INPUT;
  return guard([&] { emit(out, pea::decompose_report(t->t, n)); });
}

pea_status pea_report_ideals(const pea_table* t, char** out) {
  if (bad(t) || bad(out)) return PEA_ERR_INPUT;
  return guard([&] { emit(out, pea::ideals_report(t->t)); });
}

pea_status pea_report_quotient(const pea_table* t, const char* ideal, char** out) {
  if (bad(t) || bad(ideal) || bad(out)) return PEA_ERR_INPUT;
  return guard([&] { emit(out, pea::quotient_report(t->t, ideal)); });
}

pea_status pea_report_unitize(const pea_table* t, char** out) {
  if (bad(t) || bad(out)) return PEA_ERR_INPUT;
  return guard([&] { emit(out, pea::unitize_report(t->t)); });
}

pea_status pea_report_construct(const char* options, char** out) {
  if (bad(options) || bad(out)) return PEA_ERR_INPUT;
  return guard([&] {
    const auto j = nlohmann::json::parse(options);
    pea::ConstructOptions o;
    if (j.contains("builtin")) o.builtin = j.at("builtin").get<std::string>();
    if (j.contains("gamma")) o.gamma = j.at("gamma").get<std::string>();
    if (j.contains("lex")) o.lex = j.at("lex").get<std::size_t>();
    if (j.contains("group")) o.group = j.at("group").get<std::string>();
    if (j.contains("order")) o.order = j.at("order").get<std::string>();
    if (j.contains("h")) o.h = j.at("h").get<std::string>();
    if (j.contains("bound")) o.bound = j.at("bound").get<long>();
    if (j.contains("samples")) o.samples = j.at("samples").get<std::size_t>();
    if (j.contains("seed")) o.seed = j.at("seed").get<std::uint64_t>();
    emit(out, pea::construct_report(o));
  });
}

pea_status pea_report_suite(size_t max_size, size_t gpea_max_size, size_t samples, uint64_t seed, char** out) {
  if (bad(out)) return PEA_ERR_INPUT;
  return guard([&] {
    pea::SuiteOptions o;
    o.max_size = max_size;
    o.gpea_max_size = gpea_max_size;
    o.samples = samples;
    o.seed = seed;
    emit(out, pea::suite_report(pea::run_suite(o)));
  });
}

void pea_string_free(char* s) { std::free(s); }

}  // extern "C"
