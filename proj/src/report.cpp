#include "pea/report.hpp"

#include <sstream>

#include "pea/constructions.hpp"
#include "pea/decompositions.hpp"
#include "pea/document.hpp"
#include "pea/elemset.hpp"
#include "pea/errors.hpp"
#include "pea/ideals.hpp"
#include "pea/rdp.hpp"
#include "pea/states.hpp"
#include "pea/symbolic.hpp"

namespace pea {

namespace {

Json envelope(const std::string& command, const PartialAdditionTable* t, std::optional<std::uint64_t> seed) {
  Json r;
  r["command"] = command;
  r["input_digest"] = t ? Json(digest(*t)) : Json(nullptr);
  r["seed"] = seed ? Json(*seed) : Json(nullptr);
  r["results"] = Json::object();
  r["passed"] = true;
  return r;
}

Json names(const PartialAdditionTable& t, const std::vector<Elem>& s) {
  Json a = Json::array();
  for (Elem e : s) a.push_back(t.name(e));
  return a;
}

Json state_json(const PartialAdditionTable& t, const StateVector& s) {
  Json o = Json::object();
  for (Elem e : t.elements()) o[t.name(e)] = to_string(s[e]);
  return o;
}

Json check_json(const PartialAdditionTable& t, const Check& c) {
  Json o;
  o["holds"] = c.holds;
  if (!c.holds) {
    o["witness"] = names(t, c.witness);
    o["reason"] = c.reason;
  }
  return o;
}

Json class_json(const StateClass& c) {
  Json o;
  Json img = Json::array();
  for (const auto& v : c.image) img.push_back(to_string(v));
  o["image"] = img;
  o["discrete"] = c.discrete;
  o["values"] = c.n + 1;
  o["common_denominator"] = c.common_denominator.str();
  o["image_is_uniform_grid"] = c.cond_i;
  o["image_is_sub_effect_algebra"] = c.cond_ii;
  o["image_closed_under_differences"] = c.cond_iii;
  if (c.gap) o["gap"] = {to_string((*c.gap)[0]), to_string((*c.gap)[1]), to_string((*c.gap)[2])};
  return o;
}

Json sampled_json(const SampledCheck& c) {
  Json o;
  o["name"] = c.name;
  o["samples"] = c.samples;
  o["instances"] = c.instances;
  o["passed"] = c.passed;
  if (!c.passed) o["failure"] = c.failure;
  return o;
}

Json sampled_json(const SampledReport& r) {
  Json o;
  o["subject"] = r.subject;
  o["seed"] = r.seed;
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(sampled_json(c));
  o["checks"] = checks;
  o["passed"] = r.passed();
  return o;
}

Json document_json(const PartialAdditionTable& t) { return Json::parse(write_document(t)); }

ElemSet parse_names(const PartialAdditionTable& t, const std::string& csv) {
  ElemSet s;
  std::stringstream ss(csv);
  std::string part;
  while (std::getline(ss, part, ','))
    if (!part.empty()) s.push_back(t.at(part));
  return make_set(s);
}

}  // namespace

Json verify_report(const PartialAdditionTable& t, Kind kind) {
  Json r = envelope(std::string("verify --kind ") + (kind == Kind::Pea ? "pea" : "gpea"), &t, std::nullopt);
  Json& res = r["results"];
  const AxiomReport ax = check_axioms(t, kind);
  Json viol = Json::array();
  for (const auto& v : ax.violations) viol.push_back({{"axiom", to_string(v.axiom)}, {"witness", names(t, v.witness)}});
  res["axioms"] = {{"kind", to_string(kind)}, {"passed", ax.passed()}, {"violations", viol}};
  r["passed"] = ax.passed();
  if (!ax.passed()) return r;

  const OrderRelation ord = induced_order(t);
  Json covers = Json::array();
  for (const auto& [a, b] : ord.covers()) covers.push_back({t.name(a), t.name(b)});
  res["order"] = {{"covers", covers}, {"total", ord.is_total()}};

  const IsotropicData iso = isotropic_data(t);
  Json elems = Json::array();
  for (const auto& info : iso.info) {
    Json e;
    e["element"] = t.name(info.element);
    if (info.complements) {
      e["minus"] = t.name(info.complements->minus);
      e["tilde"] = t.name(info.complements->tilde);
    }
    e["iota"] = info.iota.str();
    elems.push_back(e);
  }
  res["elements"] = elems;
  res["infinit"] = names(t, iso.infinit);

  std::pair<Elem, Elem> w;
  const bool weak = is_weakly_commutative(t, &w);
  if (kind == Kind::Pea) {
    const SymmetryReport s = is_symmetric(t);
    res["symmetric"] = s.symmetric;
    if (s.witness) res["symmetry_witness"] = t.name(*s.witness);
  }
  res["weakly_commutative"] = weak;
  if (!weak) res["commutativity_witness"] = {t.name(w.first), t.name(w.second)};
  return r;
}

Json states_report(const PartialAdditionTable& t, const StatesOptions& o) {
  std::string cmd = "states";
  if (o.discrete) cmd += " --discrete " + std::to_string(*o.discrete);
  if (o.extremal) cmd += " --extremal";
  if (o.state) cmd += " --state " + *o.state;
  Json r = envelope(cmd, &t, std::nullopt);
  Json& res = r["results"];
  const StateSpace space = solve_state_space(t);
  res["has_states"] = !space.extremal.empty();
  res["dimension"] = space.extremal.empty() ? Json(nullptr) : Json(space.dimension());
  Json ext = Json::array();
  for (const auto& v : space.extremal) ext.push_back(state_json(t, v));
  res["extremal_states"] = ext;
  if (space.extremal.size() == 1) res["unique_state"] = state_json(t, space.extremal[0]);

  if (o.extremal) {
    Json checked = Json::array();
    for (const auto& v : space.extremal) {
      const auto e = is_extremal(t, v);
      checked.push_back({{"state", state_json(t, v)}, {"extremal", e.extremal}, {"class", class_json(classify_state(t, v))}});
      if (!e.extremal) r["passed"] = false;
    }
    res["extremal_check"] = checked;
  }
  if (o.discrete) {
    Json ds = Json::array();
    for (const auto& s : enumerate_discrete_states(t, *o.discrete))
      ds.push_back({{"state", state_json(t, s)}, {"class", class_json(classify_state(t, s))}});
    res["discrete"] = {{"n", *o.discrete}, {"count", ds.size()}, {"states", ds}};
  }
  if (o.state) {
    StateVector s{std::vector<Rational>(t.size(), Rational(0))};
    std::vector<bool> given(t.size(), false);
    std::stringstream ss(*o.state);
    std::string part;
    while (std::getline(ss, part, ',')) {
      const auto eq = part.find('=');
      if (eq == std::string::npos) throw InputError("state entries look like name=value");
      const Elem e = t.at(part.substr(0, eq));
      s.values[e.id] = parse_rational(part.substr(eq + 1));
      given[e.id] = true;
    }
    if (t.has_one() && !given[t.unit().id]) s.values[t.unit().id] = 1, given[t.unit().id] = true;
    given[t.zero().id] = true;
    require_axioms(t, Kind::Pea);
    for (bool grew = true; grew;) {
      grew = false;
      for (Elem e : t.elements()) {
        if (given[e.id]) continue;
        const Complements c = complements(t, e);
        for (Elem d : {c.minus, c.tilde})
          if (given[d.id] && !given[e.id]) {
            s.values[e.id] = 1 - s.values[d.id];
            given[e.id] = grew = true;
          }
      }
    }
    for (Elem e : t.elements())
      if (!given[e.id]) throw InputError("no value given for " + t.name(e));
    Json q;
    q["state"] = state_json(t, s);
    const std::string err = state_error(t, s);
    q["is_state"] = err.empty();
    if (!err.empty()) {
      q["reason"] = err;
      r["passed"] = false;
    } else {
      q["class"] = class_json(classify_state(t, s));
      const auto e = is_extremal(t, s);
      q["extremal"] = e.extremal;
      if (e.witness) q["witness"] = {state_json(t, e.witness->first), state_json(t, e.witness->second)};
    }
    res["query"] = q;
  }
  return r;
}

Json decompose_report(const PartialAdditionTable& t, std::size_t n) {
  Json r = envelope("decompose " + std::to_string(n), &t, std::nullopt);
  Json& res = r["results"];
  const auto pairing = decomposition_state_bijection(t, n);
  Json ds = Json::array();
  for (const auto& [d, s] : pairing.pairs) {
    Json parts = Json::array();
    for (const auto& p : d.parts) parts.push_back(names(t, p));
    const auto c = check_comparability(t, d);
    Json comp;
    comp["chain"] = c.chain;
    if (c.chain_witness) comp["chain_witness"] = {t.name(c.chain_witness->first), t.name(c.chain_witness->second)};
    comp["sums_exist"] = c.sums_exist;
    if (c.sums_witness) comp["sums_witness"] = {t.name(c.sums_witness->first), t.name(c.sums_witness->second)};
    comp["agree"] = c.agree();
    if (c.consequences_checked)
      comp["consequences"] = {{"bottom_is_infinit", c.e0_is_infinit},
                              {"bottom_is_normal", c.e0_is_normal},
                              {"low_sums_fill", c.low_sums_fill},
                              {"high_sums_absent", c.high_sums_absent}};
    if (!c.agree() || !c.consequences_hold()) r["passed"] = false;
    ds.push_back({{"parts", parts},
                  {"state", state_json(t, s)},
                  {"comparability", comp},
                  {"directed_parts", check_json(t, check_condition_e(t, d))}});
  }
  res["n"] = n;
  res["count"] = ds.size();
  res["decompositions"] = ds;
  res["discrete_states"] = pairing.states;
  res["pairing_bijective"] = pairing.bijective();
  if (!pairing.bijective()) r["passed"] = false;

  const auto p = is_n_perfect(t, n);
  Json perf;
  perf["perfect"] = p.perfect;
  if (!p.reason.empty()) perf["reason"] = p.reason;
  Json maxi = Json::array();
  for (const auto& m : p.maximal_ideals) maxi.push_back(names(t, m));
  perf["maximal_ideals"] = maxi;
  if (p.perfect) {
    try {
      const auto c = canonical_chain_report(t, n);
      perf["chain"] = {{"c", t.name(c.c)}, {"multiples", names(t, c.multiples)}, {"quotient_is_chain", c.quotient_is_chain}};
    } catch (const Refused& e) {
      perf["chain"] = {{"refused", e.what()}};
    }
  }
  res["perfect"] = perf;
  return r;
}

Json ideals_report(const PartialAdditionTable& t) {
  Json r = envelope("ideals", &t, std::nullopt);
  Json& res = r["results"];
  require_axioms(t, Kind::Pea);
  Json list = Json::array();
  for (const auto& i : enumerate_ideals(t)) {
    const auto rz = is_riesz_ideal(t, i);
    Json o;
    o["members"] = names(t, i);
    o["normal"] = is_normal(t, i).holds;
    o["maximal"] = is_maximal(t, i).holds;
    o["r1"] = rz.r1;
    o["r2"] = rz.r2 ? Json(*rz.r2) : Json(nullptr);
    o["riesz"] = rz.riesz;
    list.push_back(o);
  }
  res["ideals"] = list;
  Json maxi = Json::array();
  for (const auto& m : maximal_ideals(t)) maxi.push_back(names(t, m));
  res["maximal_ideals"] = maxi;
  const auto rad = radicals(t);
  res["radical"] = names(t, rad.rad);
  res["normal_radical"] = names(t, rad.rad_n);
  res["upward_directed"] = is_upward_directed(t);
  const auto rdp = check_all_rdp(t);
  auto verdict = [&](const RdpVerdict& v) {
    Json o{{"holds", v.holds}};
    if (!v.holds) o["witness"] = names(t, v.witness);
    return o;
  };
  res["rdp0"] = verdict(rdp.rdp0);
  res["rdp"] = verdict(rdp.rdp);
  res["rdp1"] = verdict(rdp.rdp1);
  Json tv = Json::array();
  for (const auto& p : two_valued_partition(t))
    tv.push_back({{"ideal", names(t, p.ideal)}, {"state", state_json(t, p.state)}, {"unitization_verified", p.unitization_verified}});
  res["two_valued"] = tv;
  return r;
}

Json quotient_report(const PartialAdditionTable& t, const std::string& ideal) {
  Json r = envelope("quotient --ideal " + ideal, &t, std::nullopt);
  Json& res = r["results"];
  require_axioms(t, Kind::Pea);
  const ElemSet i = parse_names(t, ideal);
  if (const Check c = is_ideal(t, i); !c.holds) throw Refused(t.names_of(i) + " is not an ideal: " + c.reason);
  const Quotient q = quotient(t, i);
  Json classes = Json::array();
  for (const auto& c : q.congruence.classes) classes.push_back(names(t, c));
  res["classes"] = classes;
  res["condition_l"] = q.condition_l;
  res["linear"] = q.linear;
  r["document"] = document_json(q.table);
  return r;
}

Json unitize_report(const PartialAdditionTable& t) {
  Json r = envelope("unitize", &t, std::nullopt);
  const auto hat = unitize(t);
  r["results"] = {{"size", hat.size()}, {"pea_axioms", true}, {"symmetric", true}, {"order_ideal", true}};
  r["document"] = document_json(hat);
  return r;
}

Json construct_report(const ConstructOptions& o) {
  const VectorOrder order = o.order == "lex" ? VectorOrder::Lex : VectorOrder::Pointwise;
  if (o.order != "lex" && o.order != "pointwise") throw InputError("order must be pointwise or lex");
  const int modes = o.builtin.has_value() + o.gamma.has_value() + o.lex.has_value();
  if (modes != 1) throw InputError("give exactly one of --builtin, --gamma, --lex");

  std::optional<PartialAdditionTable> table;
  SymbolicPtr sym;
  std::string cmd;
  bool claim_symmetric = true;
  if (o.builtin) {
    cmd = "construct --builtin " + *o.builtin;
    auto b = builtin_pea(*o.builtin);
    table = std::move(b.table);
    sym = std::move(b.symbolic);
    if (*o.builtin == "twisted_gamma") claim_symmetric = false;
  } else if (o.gamma) {
    cmd = "construct --gamma " + *o.gamma + " --group " + o.group + " --order " + o.order;
    const auto g = parse_group(o.group, order);
    table = gamma_interval_finite(*g, parse_group_elem(*o.gamma, g->arity()), o.bound);
  } else {
    const auto g = parse_group(o.group, order);
    const GroupElem h = o.h ? parse_group_elem(*o.h, g->arity()) : g->zero();
    cmd = "construct --lex " + std::to_string(*o.lex) + " --group " + o.group + " --tail " + to_string(h);
    auto e = lex_product_pea(*o.lex, g, h);
    claim_symmetric = is_commutator(*g, h, 1000, o.seed).passed;
    sym = e;
  }

  if (table) {
    Json r = envelope(cmd, &*table, std::nullopt);
    r["results"] = {{"size", table->size()}, {"pea_axioms", check_axioms(*table, Kind::Pea).passed()}};
    r["document"] = document_json(*table);
    return r;
  }
  Json r = envelope(cmd, nullptr, o.seed);
  Json& res = r["results"];
  res["description"] = sym->describe();
  res["levels"] = sym->levels();
  res["predicates"] = sym->predicates();
  res["symmetric_claimed"] = claim_symmetric;
  Json checks = Json::array();
  const SampledReport suite = symbolic_suite(*sym, o.samples, o.seed, 6, claim_symmetric);
  bool ok = suite.passed();
  res["sampled"] = sampled_json(suite);
  if (!claim_symmetric) {
    const auto s = symbolic_suite(*sym, std::min<std::size_t>(o.samples, 1000), o.seed + 1, 6, true);
    res["symmetry_sample"] = sampled_json(s.checks.back());
  }
  for (const auto& p : sym->predicates())
    if (p[0] != 'E') {
      const auto c = check_predicate_ideal(*sym, p, o.samples, o.seed + 2, 6);
      ok = ok && c.passed;
      checks.push_back(sampled_json(c));
    }
  if (sym->holds_any("I_a") && sym->holds_any("I_b")) {
    const auto c = check_predicate_intersection(*sym, "E0", {"I_a", "I_b"}, o.samples, o.seed + 3, 6);
    ok = ok && c.passed;
    checks.push_back(sampled_json(c));
  }
  if (sym->holds_any("kernel")) {
    const auto c = check_predicate_intersection(*sym, "kernel", {"E0"}, o.samples, o.seed + 3, 6);
    ok = ok && c.passed;
    checks.push_back(sampled_json(c));
  }
  if (const auto* iv = dynamic_cast<const IntervalPea*>(sym.get())) {
    const auto c = check_condition_star(*iv, o.samples, o.seed + 4, 4);
    ok = ok && c.passed;
    checks.push_back(sampled_json(c));
  }
  res["predicate_checks"] = checks;
  r["passed"] = ok;
  return r;
}

Json suite_report(const SuiteReport& s) {
  Json r = envelope("suite --max-size " + std::to_string(s.options.max_size), nullptr, s.options.seed);
  Json& res = r["results"];
  Json counts = Json::array();
  for (const auto& [size, n] : s.pea_counts) counts.push_back({{"size", size}, {"peas", n}});
  res["pea_corpus"] = counts;
  Json gcounts = Json::array();
  for (const auto& [size, n] : s.gpea_counts) gcounts.push_back({{"size", size}, {"gpeas", n}});
  res["gpea_corpus"] = gcounts;
  Json props = Json::array();
  for (const auto& p : s.properties) {
    Json o{{"name", p.name}, {"checked", p.checked}, {"violations", p.violations}, {"passed", p.passed()}};
    if (!p.passed()) {
      o["first_failure"] = p.first_failure;
      if (p.witness_document) o["witness_document"] = Json::parse(*p.witness_document);
    }
    props.push_back(o);
  }
  res["properties"] = props;
  r["passed"] = s.passed();
  return r;
}

}  // namespace pea
