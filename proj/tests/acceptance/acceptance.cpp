// Prints one PASS/FAIL line per acceptance criterion; exits 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "pea/builtins.hpp"
#include "pea/constructions.hpp"
#include "pea/core_algebra.hpp"
#include "pea/corpus.hpp"
#include "pea/decompositions.hpp"
#include "pea/document.hpp"
#include "pea/elemset.hpp"
#include "pea/errors.hpp"
#include "pea/groups.hpp"
#include "pea/ideals.hpp"
#include "pea/rdp.hpp"
#include "pea/representation.hpp"
#include "pea/states.hpp"
#include "pea/symbolic.hpp"

using namespace pea;

namespace {

constexpr std::size_t kMaxSize = 7;
constexpr std::size_t kMaxN = 6;
constexpr std::size_t kSamples = 10000;
constexpr std::uint64_t kSeed = 20240901;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

const std::vector<PartialAdditionTable>& corpus() {
  static const auto c = pea_corpus(kMaxSize);
  return c;
}

std::string show(const PartialAdditionTable& t) { return std::to_string(t.size()) + "-element table " + digest(t); }

StateVector boolean4_state(const PartialAdditionTable& b, Rational a) {
  StateVector s{std::vector<Rational>(b.size(), 0)};
  s.values[b.at("a").id] = a;
  s.values[b.at("a'").id] = 1 - a;
  s.values[b.unit().id] = 1;
  return s;
}

ElemSet names(const PartialAdditionTable& t, std::initializer_list<const char*> ns) {
  ElemSet s;
  for (auto n : ns) s.push_back(t.at(n));
  return make_set(s);
}

Outcome diamond_case() {
  Outcome o;
  const auto d = diamond();
  if (!check_axioms(d, Kind::Pea).passed()) o.fail("axioms fail");
  const auto sp = solve_state_space(d);
  if (sp.extremal.size() != 1 || sp.dimension() != 0) o.fail("state space is not a single point");
  else {
    const auto& s = sp.extremal[0];
    if (s[d.at("a")] != Rational(1, 2) || s[d.at("b")] != Rational(1, 2)) o.fail("s(a), s(b) != 1/2");
    const auto c = classify_state(d, s);
    if (!c.discrete || c.n != 2) o.fail("state not classified discrete(2)");
  }
  const auto r = check_rdp0(d);
  if (r.holds || r.witness.empty()) o.fail("RDP0 should fail with a witness");
  if (enumerate_ideals(d) != std::vector<ElemSet>{{d.zero()}, all_elements(d)}) o.fail("ideal lattice is not {{0},E}");
  if (o.pass) o.detail = "unique state 1/2, discrete(2), RDP0 witness " + d.names_of(r.witness) + ", ideals {0},E";
  return o;
}

Outcome boolean4_case() {
  Outcome o;
  const auto b = boolean4();
  const auto two = enumerate_discrete_states(b, 1);
  if (two.size() != 2) o.fail(std::to_string(two.size()) + " two-valued states");
  for (const auto& s : two)
    if (classify_state(b, s).n != 1) o.fail("a 2-valued state is not two-valued");

  const auto half = boolean4_state(b, Rational(1, 2));
  if (!state_error(b, half).empty()) o.fail("s(a)=1/2 rejected");
  const auto e = is_extremal(b, half);
  if (e.extremal || !e.witness) o.fail("s(a)=1/2 reported extremal");
  else if (e.witness->first[b.at("a")] != 0 || e.witness->second[b.at("a")] != 1) o.fail("witness is not s1(a)=0, s2(a)=1");

  const auto odd = boolean4_state(b, Rational(2, 5));
  if (!state_error(b, odd).empty()) o.fail("s(a)=2/5 rejected");
  const auto c = classify_state(b, odd);
  if (c.discrete || !c.gap || (*c.gap)[2] != Rational(1, 5)) o.fail("s(a)=2/5 not non-discrete with gap 1/5");

  bool found = false;
  for (const auto& d : find_decompositions(b, 1))
    if (d.parts[0] == names(b, {"0", "a"}) && d.parts[1] == names(b, {"a'", "1"})) {
      found = true;
      if (check_comparability(b, d).chain) o.fail("({0,a},{a',1}) reported comparable");
    }
  if (!found) o.fail("1-decomposition ({0,a},{a',1}) missing");
  if (o.pass) o.detail = "2 two-valued states, 1/2 not extremal, 2/5 gap 1/5, E0 not <= E1";
  return o;
}

Outcome bijection_case() {
  Outcome o;
  std::size_t checked = 0, pairs = 0;
  for (const auto& t : corpus())
    for (std::size_t n = 1; n <= kMaxN; ++n) {
      const auto p = decomposition_state_bijection(t, n);
      ++checked;
      pairs += p.pairs.size();
      if (!p.bijective()) o.fail(show(t) + ", n=" + std::to_string(n) + ": " + std::to_string(p.decompositions) +
                                 " decompositions vs " + std::to_string(p.states) + " states");
    }
  if (o.pass) o.detail = std::to_string(checked) + " (table, n) cases, " + std::to_string(pairs) + " pairs";
  return o;
}

// (i), (ii), (iii) recomputed from the image alone
std::array<bool, 3> image_conditions(const std::vector<Rational>& image) {
  const std::set<Rational> in(image.begin(), image.end());
  const std::size_t n = image.size() - 1;
  bool grid = n > 0;
  for (std::size_t k = 0; k <= n && grid; ++k) grid = in.count(Rational(k, n)) == 1;
  bool sub = true, diff = true;
  for (const auto& p : in) {
    if (!in.count(1 - p)) sub = false;
    for (const auto& q : in) {
      if (p + q <= 1 && !in.count(p + q)) sub = false;
      if (p <= q && !in.count(q - p)) diff = false;
    }
  }
  return {grid, sub, diff};
}

Outcome finite_image_case() {
  Outcome o;
  std::size_t states = 0;
  for (const auto& t : corpus()) {
    std::vector<StateVector> seen;
    const auto sp = solve_state_space(t);
    seen = sp.extremal;
    for (std::size_t i = 0; i < sp.extremal.size(); ++i)
      for (std::size_t j = i + 1; j < sp.extremal.size(); ++j) {
        StateVector m = sp.extremal[i];
        for (std::size_t k = 0; k < m.values.size(); ++k) m.values[k] = (m.values[k] + sp.extremal[j].values[k]) / 2;
        seen.push_back(m);
      }
    for (std::size_t n = 1; n <= kMaxN; ++n)
      for (auto& s : enumerate_discrete_states(t, n)) seen.push_back(s);
    for (const auto& s : seen) {
      ++states;
      const auto c = classify_state(t, s);
      const auto ref = image_conditions(c.image);
      if (ref[0] != ref[1] || ref[1] != ref[2]) o.fail(show(t) + ": conditions disagree on the image");
      if (c.discrete != ref[0] || c.cond_ii != ref[1] || c.cond_iii != ref[2]) o.fail(show(t) + ": classifier disagrees with the image");
    }
  }
  if (o.pass) o.detail = std::to_string(states) + " finite-image states";
  return o;
}

Outcome two_valued_case() {
  Outcome o;
  std::size_t with = 0, symmetric = 0;
  for (const auto& t : corpus()) {
    const auto states = enumerate_discrete_states(t, 1);
    std::set<ElemSet> kernels;
    for (const auto& s : states) kernels.insert(kernel(t, s));
    std::set<ElemSet> splitting;
    for (const auto& i : oracle::ideals(t)) {
      if (!is_maximal(t, i).holds || !is_normal(t, i).holds) continue;
      ElemSet minus, tilde;
      for (Elem x : i) {
        minus.push_back(complements(t, x).minus);
        tilde.push_back(complements(t, x).tilde);
      }
      minus = make_set(minus);
      tilde = make_set(tilde);
      const bool split = set_intersection(i, minus).empty() && set_intersection(i, tilde).empty() &&
                         i.size() + minus.size() == t.size() && i.size() + tilde.size() == t.size();
      if (split) splitting.insert(i);
    }
    if (states.empty() != splitting.empty()) o.fail(show(t) + ": two-valued states and splitting ideals disagree");
    if (kernels != splitting) o.fail(show(t) + ": kernels of two-valued states are not the splitting ideals");
    if (!states.empty()) ++with;
    if (!is_symmetric(t).symmetric) continue;
    for (const auto& i : splitting) {
      ++symmetric;
      try {
        if (!oracle::isomorphic(unitize(restrict_to(t, i)), t)) o.fail(show(t) + ": unitization of the ideal is not E");
      } catch (const std::exception& e) {
        o.fail(show(t) + ": " + e.what());
      }
    }
  }
  if (o.pass)
    o.detail = std::to_string(with) + " tables with two-valued states, " + std::to_string(symmetric) + " unitizations";
  return o;
}

Outcome comparability_case() {
  Outcome o;
  std::size_t decs = 0, comparable = 0;
  for (const auto& t : corpus()) {
    const auto infinit = isotropic_data(t).infinit;
    for (std::size_t n = 1; n <= kMaxN; ++n)
      for (const auto& d : find_decompositions(t, n)) {
        ++decs;
        bool chain = true, sums = true;
        for (Elem x : t.elements())
          for (Elem y : t.elements()) {
            const auto i = d.labels[x.id], j = d.labels[y.id];
            if (i < j && !oracle::leq(t, x.id, y.id)) chain = false;
            if (i + j < n && !t.defined(x, y)) sums = false;
          }
        const auto c = check_comparability(t, d);
        if (chain != sums) o.fail(show(t) + ": (A) and (B) disagree");
        if (c.chain != chain || c.sums_exist != sums) o.fail(show(t) + ": comparability report disagrees with the scan");
        if (!chain) continue;
        ++comparable;
        if (d.parts[0] != infinit) o.fail(show(t) + ": E0 != Infinit(E)");
        if (!c.consequences_hold()) o.fail(show(t) + ": a consequence fails");
      }
  }
  if (o.pass) o.detail = std::to_string(decs) + " decompositions, " + std::to_string(comparable) + " comparable";
  return o;
}

Outcome perfect_case() {
  Outcome o;
  std::size_t perfect = 0, bad = 0, bad_undirected = 0, directed_bad = 0;
  for (const auto& t : corpus())
    for (std::size_t n = 1; n <= kMaxN; ++n) {
      const auto p = is_n_perfect(t, n);
      if (!p.perfect) continue;
      ++perfect;
      const bool iso = oracle::isomorphic(t, chain(n));
      const bool q = oracle::isomorphic(quotient(t, p.certificate->parts[0]).table, chain(n));
      const bool directed = check_condition_e(t, *p.certificate).holds;
      if (!iso || !q) {
        ++bad;
        if (directed) ++directed_bad;
        else ++bad_undirected;
        o.fail(show(t) + " is " + std::to_string(n) + "-perfect but" + (iso ? "" : " not C_" + std::to_string(n)) +
               (q ? "" : ", E/E0 not C_" + std::to_string(n)));
      }
    }
  o.detail += (o.pass ? "" : "; ") + std::to_string(perfect) + " n-perfect cases, " + std::to_string(bad) +
              " not chains (" + std::to_string(bad_undirected) + " with undirected parts, " +
              std::to_string(directed_bad) + " with directed parts)";
  return o;
}

std::string report_failure(const SampledReport& r) {
  for (const auto& c : r.checks)
    if (!c.passed) return r.subject + ": " + c.name + ": " + c.failure;
  return "";
}

Outcome symbolic_case() {
  Outcome o;
  std::uint64_t seed = kSeed;
  const auto tw = twisted_z3();
  for (const auto& p : {probe_pogroup(*tw, kSamples, ++seed), probe_torsion_free(*tw, kSamples, ++seed),
                        probe_directed(*tw, kSamples, ++seed), probe_strong_unit(*tw, {1, 0, 0}, kSamples, ++seed)})
    if (!p.passed) o.fail("twisted probe: " + p.failure);
  const auto tg = twisted_gamma();
  if (const auto r = symbolic_suite(*tg, kSamples, ++seed, 6, false); !r.passed()) o.fail(report_failure(r));
  if (const auto c = check_predicate_intersection(*tg, "kernel", {"E0"}, kSamples, ++seed, 6); !c.passed) o.fail(c.failure);
  const auto e47 = example47(int_vector(1, VectorOrder::Pointwise));
  if (const auto c = check_predicate_intersection(*e47, "E0", {"I_a", "I_b"}, kSamples, ++seed, 6); !c.passed) o.fail(c.failure);
  const auto lex = lex_product_pea(3, int_vector(2, VectorOrder::Pointwise), {0, 0});
  if (const auto r = symbolic_suite(*lex, kSamples, ++seed, 6, true); !r.passed()) o.fail(report_failure(r));
  std::size_t star = 0;
  for (const IntervalPea* e : {lex.get(), tg.get()}) {
    const auto c = check_condition_star(*e, kSamples, ++seed, 4);
    star += c.instances;
    if (!c.passed) o.fail(e->describe() + ": " + c.failure);
  }
  if (o.pass) o.detail = std::to_string(kSamples) + " samples per fixture, " + std::to_string(star) + " (*) instances";
  return o;
}

Outcome representation_case() {
  Outcome o;
  const auto h = obfuscated_lex_z();
  const auto e = std::make_shared<IntervalPea>(h, obfuscate({2, 0}), "obfuscated");
  const StrongRepresentation rep(e, obfuscate({1, 0}), 1000, kSeed);
  const auto r = rep.verify(1000, kSeed + 1, 8);
  if (!r.passed()) o.fail(report_failure(r));
  const Measure m{rep.target(), h, [&](const GroupElem& y) { return rep.preimage(y); }};
  const auto ext = universal_group_extension(m, 1000, kSeed + 2);
  const auto x = ext.verify(1000, kSeed + 3, 8);
  if (!x.passed()) o.fail(report_failure(x));
  std::size_t presentations = 0;
  for (const auto& c : x.checks)
    if (c.name == "presentations agree") presentations = c.instances;
  if (presentations < 100) o.fail("only " + std::to_string(presentations) + " presentation pairs");
  if (o.pass) o.detail = "1000 samples, " + std::to_string(presentations) + " presentation pairs";
  return o;
}

Outcome unitization_case() {
  Outcome o;
  std::size_t sym = 0, rejected = 0;
  for (const auto& g : gpea_corpus(5)) {
    if (!is_weakly_commutative(g)) {
      try {
        unitize(g);
        o.fail(std::to_string(g.size()) + "-element non-symmetric GPEA accepted");
      } catch (const NonSymmetric&) {
        ++rejected;
      }
      continue;
    }
    ++sym;
    const auto u = unitize(g);
    ElemSet inner;
    for (Elem x : g.elements()) inner.push_back(x);
    if (!check_axioms(u, Kind::Pea).passed() || !oracle::is_pea(u)) o.fail("unitization fails the axioms");
    if (!is_order_ideal_embedding(u, inner, g)) o.fail("not an order ideal embedding");
  }
  if (o.pass) o.detail = std::to_string(sym) + " symmetric unitized, " + std::to_string(rejected) + " rejected";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"diamond", diamond_case},
      {"boolean4", boolean4_case},
      {"decompositions and discrete states in bijection", bijection_case},
      {"finite-image state conditions agree", finite_image_case},
      {"two-valued states and splitting ideals", two_valued_case},
      {"comparability biconditional and consequences", comparability_case},
      {"finite n-perfect tables are chains", perfect_case},
      {"symbolic fixtures", symbolic_case},
      {"representation and universal extension", representation_case},
      {"unitization of small GPEAs", unitization_case},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    char time[32];
    std::snprintf(time, sizeof time, "%.2fs", secs);
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << " [" << time << "] "
              << o.detail << "\n";
    failed += !o.pass;
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria pass\n";
  return failed ? 1 : 0;
}
