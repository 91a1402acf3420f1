#include "pea/suite.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "pea/builtins.hpp"
#include "pea/constructions.hpp"
#include "pea/core_algebra.hpp"
#include "pea/corpus.hpp"
#include "pea/decompositions.hpp"
#include "pea/document.hpp"
#include "pea/elemset.hpp"
#include "pea/errors.hpp"
#include "pea/ideals.hpp"
#include "pea/rdp.hpp"
#include "pea/representation.hpp"
#include "pea/states.hpp"
#include "pea/symbolic.hpp"

namespace pea {

bool SuiteReport::passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyTally& p) { return p.passed(); });
}

const PropertyTally& SuiteReport::property(const std::string& name) const {
  for (const auto& p : properties)
    if (p.name == name) return p;
  throw InputError("no property named " + name);
}

std::vector<std::string> finite_property_names() {
  return {"pea-axioms",
          "symmetry-criteria-agree",
          "riesz-decomposition-chain",
          "finite-image-state-conditions-agree",
          "extremal-states-are-vertices",
          "state-kernels-are-normal-ideals",
          "two-valued-state-iff-splitting-ideal",
          "symmetric-splitting-ideal-unitizes-back",
          "decompositions-match-discrete-states",
          "decomposition-bottom-is-normal-ideal",
          "comparability-biconditional",
          "comparability-consequences",
          "directed-r1-ideals-satisfy-r2",
          "quotients-well-defined",
          "generated-ideals",
          "perfect-bottom-is-infinit-and-radicals",
          "perfect-bottom-is-riesz",
          "perfect-rdp0-gives-directed-parts",
          "perfect-directed-parts-give-chain",
          "perfect-is-chain"};
}

std::vector<std::string> gpea_property_names() {
  return {"gpea-axioms", "symmetric-gpea-unitizes", "non-symmetric-gpea-rejected"};
}

std::vector<std::string> symbolic_property_names() {
  return {"twisted-group-probes",
          "twisted-gamma-pea-laws",
          "twisted-gamma-not-symmetric",
          "twisted-gamma-kernel-is-level-zero",
          "example46-pea-laws",
          "example47-pea-laws",
          "example47-bottom-is-intersection",
          "lex-z2-level3-pea-laws",
          "lex-twisted-central-offset-symmetric",
          "condition-star",
          "cyclic-element-unique",
          "representation-roundtrip",
          "universal-extension",
          "lifted-homomorphism"};
}

namespace {

// nullopt: not applicable; empty: holds; otherwise the failure.
using Outcome = std::optional<std::string>;

class Battery {
 public:
  explicit Battery(const std::vector<std::string>& names) {
    for (const auto& n : names) tallies_.push_back({n});
  }

  void check(const std::string& name, const PartialAdditionTable* t, const std::function<Outcome()>& f) {
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o = std::string("exception: ") + e.what();
    }
    if (!o) return;
    PropertyTally& p = tally(name);
    ++p.checked;
    if (o->empty()) return;
    if (p.violations++ == 0) {
      p.first_failure = *o;
      if (t) p.witness_document = write_document(*t);
    }
  }

  std::vector<PropertyTally> take() { return std::move(tallies_); }

 private:
  PropertyTally& tally(const std::string& name) {
    for (auto& p : tallies_)
      if (p.name == name) return p;
    throw Inconsistency("unregistered property " + name);
  }
  std::vector<PropertyTally> tallies_;
};

std::string show(const PartialAdditionTable& t, const ElemSet& s) { return t.names_of(s); }

std::string show(const StateVector& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.values.size(); ++i) out += (i ? "," : "") + to_string(s.values[i]);
  return out + ")";
}

void audit_pea(const PartialAdditionTable& t, const SuiteOptions& o, Battery& b) {
  const auto* tp = &t;
  b.check("pea-axioms", tp, [&]() -> Outcome {
    const auto r = check_axioms(t, Kind::Pea);
    return r.passed() ? "" : "axiom " + to_string(r.violations[0].axiom) + " fails";
  });
  b.check("symmetry-criteria-agree", tp, [&]() -> Outcome {
    is_symmetric(t);
    return "";
  });
  b.check("riesz-decomposition-chain", tp, [&]() -> Outcome {
    check_all_rdp(t);
    return "";
  });

  // states with finite image: discrete states, vertices, midpoints
  std::vector<StateVector> states;
  for (std::size_t n = 1; n <= o.max_n; ++n)
    for (auto& s : enumerate_discrete_states(t, n)) states.push_back(std::move(s));
  const StateSpace space = solve_state_space(t);
  for (const auto& v : space.extremal) states.push_back(v);
  std::optional<StateVector> centroid;
  if (space.extremal.size() >= 2) {
    StateVector c{std::vector<Rational>(t.size(), Rational(0))};
    for (const auto& v : space.extremal)
      for (std::size_t i = 0; i < t.size(); ++i) c.values[i] += v.values[i] / Integer(space.extremal.size());
    centroid = c;
    states.push_back(c);
  }
  for (const auto& s : states)
    b.check("finite-image-state-conditions-agree", tp, [&]() -> Outcome {
      const StateClass c = classify_state(t, s);
      if (c.cond_i != c.cond_ii || c.cond_ii != c.cond_iii) return "conditions disagree on " + show(s);
      return "";
    });
  b.check("extremal-states-are-vertices", tp, [&]() -> Outcome {
    for (const auto& v : space.extremal)
      if (!is_extremal(t, v).extremal) return "vertex " + show(v) + " reported as non-extremal";
    if (centroid) {
      const auto e = is_extremal(t, *centroid);
      if (e.extremal) return "centroid " + show(*centroid) + " reported as extremal";
      const auto& [s1, s2] = *e.witness;
      for (std::size_t i = 0; i < t.size(); ++i)
        if ((s1.values[i] + s2.values[i]) / 2 != centroid->values[i]) return "witness pair does not average";
    }
    return "";
  });
  for (const auto& s : states)
    b.check("state-kernels-are-normal-ideals", tp, [&]() -> Outcome {
      const ElemSet k = kernel(t, s);
      return is_normal(t, k).holds ? "" : "kernel of " + show(s) + " is not a normal ideal";
    });

  // two-valued states and splitting ideals
  const auto two_valued = enumerate_discrete_states(t, 1);
  b.check("two-valued-state-iff-splitting-ideal", tp, [&]() -> Outcome {
    std::vector<ElemSet> kernels, splitting;
    for (const auto& s : two_valued) kernels.push_back(kernel(t, s));
    for (const auto& m : maximal_ideals(t))
      if (is_normal(t, m).holds && splits_by_complements(t, m)) splitting.push_back(m);
    std::sort(kernels.begin(), kernels.end());
    std::sort(splitting.begin(), splitting.end());
    if (kernels != splitting) return std::string("two-valued kernels differ from splitting maximal normal ideals");
    if (two_valued_partition(t).size() != two_valued.size()) return std::string("partition count differs");
    return "";
  });
  if (is_symmetric(t).symmetric)
    for (const auto& p : two_valued_partition(t))
      b.check("symmetric-splitting-ideal-unitizes-back", tp, [&]() -> Outcome {
        return p.unitization_verified ? "" : "unitization of " + show(t, p.ideal) + " is not isomorphic to E";
      });

  // decompositions
  for (std::size_t n = 1; n <= o.max_n; ++n) {
    b.check("decompositions-match-discrete-states", tp, [&]() -> Outcome {
      const auto p = decomposition_state_bijection(t, n);
      if (!p.bijective())
        return "n=" + std::to_string(n) + ": " + std::to_string(p.decompositions) + " decompositions vs " +
               std::to_string(p.states) + " states";
      return "";
    });
    for (const auto& d : find_decompositions(t, n)) {
      b.check("decomposition-bottom-is-normal-ideal", tp, [&]() -> Outcome {
        return is_normal(t, d.parts[0]).holds ? "" : "E0 = " + show(t, d.parts[0]) + " is not a normal ideal";
      });
      const auto c = check_comparability(t, d);
      b.check("comparability-biconditional", tp, [&]() -> Outcome {
        return c.agree() ? "" : "chain and sum conditions disagree, n=" + std::to_string(n);
      });
      b.check("comparability-consequences", tp, [&]() -> Outcome {
        if (!c.consequences_checked) return std::nullopt;
        return c.consequences_hold() ? "" : "consequence fails, n=" + std::to_string(n);
      });
    }
  }

  // ideals
  const auto ideals = enumerate_ideals(t);
  const bool directed = is_upward_directed(t);
  const bool rdp0 = check_rdp0(t).holds;
  for (const auto& i : ideals) {
    const auto riesz = is_riesz_ideal(t, i);
    b.check("directed-r1-ideals-satisfy-r2", tp, [&]() -> Outcome {
      if (!directed || !riesz.r1) return std::nullopt;
      return check_r2(t, i).holds ? "" : "R1 ideal " + show(t, i) + " fails R2";
    });
    b.check("quotients-well-defined", tp, [&]() -> Outcome {
      if (!riesz.riesz || !is_normal(t, i).holds) return std::nullopt;
      quotient(t, i);
      return "";
    });
    b.check("generated-ideals", tp, [&]() -> Outcome {
      if (!rdp0) return std::nullopt;
      for (Elem a : t.elements()) {
        const ElemSet g = ideal_generated(t, i, a);
        if (!is_subset(i, g) || !contains(g, a)) return "ideal generated by " + show(t, i) + " and " + t.name(a);
      }
      return "";
    });
  }

  // n-perfect
  for (std::size_t n = 1; n <= o.max_n; ++n) {
    const auto p = is_n_perfect(t, n);
    if (!p.perfect) continue;
    const Decomposition& d = *p.certificate;
    b.check("perfect-bottom-is-infinit-and-radicals", tp, [&]() -> Outcome {
      const auto r = radicals(t);
      const auto inf = isotropic_data(t).infinit;
      if (d.parts[0] != inf || d.parts[0] != r.rad || d.parts[0] != r.rad_n) return "E0, Infinit, Rad, Rad_n differ";
      return "";
    });
    b.check("perfect-bottom-is-riesz", tp, [&]() -> Outcome {
      return is_riesz_ideal(t, d.parts[0]).riesz ? "" : "E0 is not a Riesz ideal";
    });
    const bool cond_e = check_condition_e(t, d).holds;
    b.check("perfect-rdp0-gives-directed-parts", tp, [&]() -> Outcome {
      if (!rdp0) return std::nullopt;
      return cond_e ? "" : std::to_string(n) + "-perfect with (RDP)0 but a part is not directed";
    });
    b.check("perfect-directed-parts-give-chain", tp, [&]() -> Outcome {
      if (!cond_e) return std::nullopt;
      canonical_chain_report(t, n);
      return "";
    });
    b.check("perfect-is-chain", tp, [&]() -> Outcome {
      const bool iso = canonical_form(t) == canonical_form(chain(n));
      const Quotient q = quotient(t, d.parts[0]);
      const bool qchain = canonical_form(q.table) == canonical_form(chain(n));
      if (iso && qchain) return "";
      return std::to_string(n) + "-perfect table with " + std::to_string(t.size()) + " elements is not C_" +
             std::to_string(n) + (qchain ? "" : " and E/E0 is not C_" + std::to_string(n));
    });
  }
}

void audit_gpea(const PartialAdditionTable& t, Battery& b) {
  const auto* tp = &t;
  b.check("gpea-axioms", tp, [&]() -> Outcome {
    return check_axioms(t, Kind::Gpea).passed() ? "" : "GPEA axioms fail";
  });
  if (is_weakly_commutative(t)) {
    b.check("symmetric-gpea-unitizes", tp, [&]() -> Outcome {
      const auto hat = unitize(t);
      if (hat.size() != 2 * t.size()) return std::string("unitization has the wrong size");
      return "";
    });
  } else {
    b.check("non-symmetric-gpea-rejected", tp, [&]() -> Outcome {
      try {
        unitize(t);
        return std::string("non-symmetric GPEA was unitized");
      } catch (const NonSymmetric&) {
      }
      const auto raw = detail::unitize_rules(t);
      if (raw.has_one() && check_axioms(raw, Kind::Pea).passed()) return std::string("rules alone give a PEA");
      return "";
    });
  }
}

Outcome from_report(const SampledReport& r, std::size_t min_instances = 1) {
  for (const auto& c : r.checks) {
    if (!c.passed) return r.subject + ": " + c.name + ": " + c.failure;
    if (c.instances < min_instances) return r.subject + ": " + c.name + " never applied";
  }
  return "";
}

Outcome from_check(const SampledCheck& c) {
  if (!c.passed) return c.name + ": " + c.failure;
  if (c.instances == 0) return c.name + " never applied";
  return "";
}

Outcome from_probe(const std::string& what, const ProbeReport& r) {
  if (!r.passed) return what + ": " + r.failure;
  if (r.inconclusive) return what + " inconclusive";
  return "";
}

void audit_symbolic(const SuiteOptions& o, Battery& b) {
  const std::size_t k = o.samples;
  std::uint64_t seed = o.seed;
  const long bound = 6;
  auto next = [&]() { return seed++; };

  const auto tw = twisted_z3();
  b.check("twisted-group-probes", nullptr, [&]() -> Outcome {
    if (auto r = from_probe("po-group", probe_pogroup(*tw, k, next())); !r->empty()) return r;
    if (auto r = from_probe("torsion-free", probe_torsion_free(*tw, k, next())); !r->empty()) return r;
    if (auto r = from_probe("directed", probe_directed(*tw, k, next())); !r->empty()) return r;
    if (auto r = from_probe("strong unit", probe_strong_unit(*tw, {1, 0, 0}, k, next())); !r->empty()) return r;
    if (is_commutator(*tw, {1, 0, 0}, k, next()).passed) return std::string("(1,0,0) should not be central");
    return "";
  });
  const auto tg = twisted_gamma();
  b.check("twisted-gamma-pea-laws", nullptr, [&]() { return from_report(symbolic_suite(*tg, k, next(), bound, false)); });
  b.check("twisted-gamma-not-symmetric", nullptr, [&]() -> Outcome {
    const auto r = symbolic_suite(*tg, k, next(), bound, true);
    if (r.checks.back().passed) return std::string("no element with x^- != x^~ sampled");
    // the witness pattern: (0,b,c)^- = (1,-b,-c), (0,b,c)^~ = (1,-c,-b)
    const GroupElem x{0, 2, 5};
    if (tg->minus(x) != GroupElem{1, -2, -5} || tg->tilde(x) != GroupElem{1, -5, -2})
      return "complements of (0,2,5) are " + to_string(tg->minus(x)) + ", " + to_string(tg->tilde(x));
    return "";
  });
  b.check("twisted-gamma-kernel-is-level-zero", nullptr, [&]() -> Outcome {
    if (auto r = from_check(check_predicate_intersection(*tg, "kernel", {"E0"}, k, next(), bound)); !r->empty()) return r;
    if (auto r = from_check(check_predicate_ideal(*tg, "kernel", k, next(), bound)); !r->empty()) return r;
    std::mt19937_64 rng(next());
    for (std::size_t i = 0; i < k; ++i) {
      const GroupElem x = tg->sample(rng, bound);
      const bool in_kernel = tg->holds("kernel", x);
      if (in_kernel == tg->holds("kernel", tg->minus(x)) || in_kernel == tg->holds("kernel", tg->tilde(x)))
        return "kernel and its complements overlap or miss " + to_string(x);
    }
    return "";
  });
  const auto e46 = example46();
  b.check("example46-pea-laws", nullptr, [&]() { return from_report(symbolic_suite(*e46, k, next(), bound, true)); });
  const auto e47 = example47(int_vector(1, VectorOrder::Pointwise));
  b.check("example47-pea-laws", nullptr, [&]() { return from_report(symbolic_suite(*e47, k, next(), bound, true)); });
  b.check("example47-bottom-is-intersection", nullptr, [&]() -> Outcome {
    if (auto r = from_check(check_predicate_intersection(*e47, "E0", {"I_a", "I_b"}, k, next(), bound)); !r->empty()) return r;
    if (auto r = from_check(check_predicate_ideal(*e47, "I_a", k, next(), bound)); !r->empty()) return r;
    return from_check(check_predicate_ideal(*e47, "I_b", k, next(), bound));
  });
  const auto lex3 = lex_product_pea(3, int_vector(2, VectorOrder::Pointwise), {0, 0});
  b.check("lex-z2-level3-pea-laws", nullptr, [&]() { return from_report(symbolic_suite(*lex3, k, next(), bound, true)); });
  b.check("lex-twisted-central-offset-symmetric", nullptr, [&]() -> Outcome {
    if (auto r = from_probe("centrality", is_commutator(*tw, {0, 1, 1}, k, next())); !r->empty()) return r;
    const auto e = lex_product_pea(2, tw, {0, 1, 1});
    return from_report(symbolic_suite(*e, k, next(), bound, true));
  });
  b.check("condition-star", nullptr, [&]() -> Outcome {
    const auto lex2 = lex_product_pea(2, int_vector(1, VectorOrder::Pointwise), {0});
    for (const IntervalPea* e : {lex3.get(), lex2.get(), tg.get()})
      if (auto r = from_check(check_condition_star(*e, k, next(), 4)); !r->empty()) return e->describe() + ": " + *r;
    return "";
  });
  b.check("cyclic-element-unique", nullptr, [&]() -> Outcome {
    const auto lex2 = lex_product_pea(2, int_vector(1, VectorOrder::Pointwise), {0});
    if (auto r = from_check(check_cyclic_uniqueness(*lex2, {1, 0}, k, next(), 2)); !r->empty()) return r;
    return from_check(check_cyclic_uniqueness(*lex3, {1, 0, 0}, k, next(), 1));
  });

  const auto h = obfuscated_lex_z();
  const auto obf = std::make_shared<IntervalPea>(h, obfuscate({2, 0}), "alpha(Gamma(Z lex Z,(2,0)))");
  const StrongRepresentation rep(obf, obfuscate({1, 0}), 1000, next());
  b.check("representation-roundtrip", nullptr, [&]() { return from_report(rep.verify(k, next(), bound)); });
  b.check("universal-extension", nullptr, [&]() -> Outcome {
    const Measure m{rep.target(), h, [&](const GroupElem& y) { return rep.preimage(y); }};
    const auto ext = universal_group_extension(m, 1000, next());
    if (auto r = from_report(ext.verify(std::max<std::size_t>(k / 10, 100), next(), bound)); !r->empty()) return r;
    const auto z = int_vector(1, VectorOrder::Pointwise);
    const auto plain = lex_product_pea(2, z, {0});
    const Measure level{plain, z, [](const GroupElem& x) { return GroupElem{x[0]}; }};
    return from_report(universal_group_extension(level, 1000, next()).verify(k / 10, next(), bound));
  });
  b.check("lifted-homomorphism", nullptr, [&]() -> Outcome {
    const auto z = int_vector(1, VectorOrder::Pointwise);
    const auto f = lift_group_hom(z, z, [](const GroupElem& g) { return GroupElem{2 * g[0]}; }, 2, 1000, next());
    if (f.apply({1, 3}) != GroupElem{1, 6}) return "f(1,3) = " + to_string(f.apply({1, 3}));
    return from_report(f.verify(k, next(), bound));
  });
}

}  // namespace

SuiteReport run_suite(const SuiteOptions& options) {
  if (options.max_size > 8) throw TooLarge("suite corpus is capped at 8 elements");
  if (options.gpea_max_size > 7) throw TooLarge("GPEA corpus is capped at 7 elements");
  SuiteReport report;
  report.options = options;
  std::vector<std::string> names;
  if (options.finite) {
    names = finite_property_names();
    for (auto& n : gpea_property_names()) names.push_back(n);
  }
  if (options.symbolic)
    for (auto& n : symbolic_property_names()) names.push_back(n);
  Battery b(names);

  if (options.finite) {
    for (std::size_t size = 2; size <= options.max_size; ++size) {
      const auto peas = generate_peas(size);
      report.pea_counts.emplace_back(size, peas.size());
      for (const auto& t : peas) audit_pea(t, options, b);
    }
    for (std::size_t size = 1; size <= options.gpea_max_size; ++size) {
      const auto gpeas = generate_gpeas(size);
      report.gpea_counts.emplace_back(size, gpeas.size());
      for (const auto& t : gpeas) audit_gpea(t, b);
    }
  }
  if (options.symbolic) audit_symbolic(options, b);
  report.properties = b.take();
  return report;
}

}  // namespace pea
