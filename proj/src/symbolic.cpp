#include "pea/symbolic.hpp"

#include <algorithm>

#include "pea/builtins.hpp"
#include "pea/core_algebra.hpp"
#include "pea/elemset.hpp"
#include "pea/errors.hpp"

namespace pea {

bool SampledReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SampledCheck& c) { return c.passed; });
}

std::vector<std::string> SymbolicPea::predicates() const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i <= levels(); ++i) out.push_back("E" + std::to_string(i));
  for (const auto& [name, p] : extra_) out.push_back(name);
  return out;
}

bool SymbolicPea::holds(const std::string& predicate, const GroupElem& x) const {
  for (const auto& [name, p] : extra_)
    if (name == predicate) return member(x) && p(x);
  for (std::size_t i = 0; i <= levels(); ++i)
    if (predicate == "E" + std::to_string(i)) return member(x) && level(x) == i;
  throw InputError("unknown predicate " + predicate);
}

bool SymbolicPea::holds_any(const std::string& predicate) const {
  const auto all = predicates();
  return std::find(all.begin(), all.end(), predicate) != all.end();
}

void SymbolicPea::add_predicate(std::string name, std::function<bool(const GroupElem&)> p) {
  extra_.emplace_back(std::move(name), std::move(p));
}

GroupElem SymbolicPea::sample(std::mt19937_64& rng, long bound) const {
  std::uniform_int_distribution<std::size_t> d(0, levels());
  return sample_level(d(rng), rng, bound);
}

std::optional<GroupElem> SymbolicPea::times(std::size_t k, const GroupElem& x) const {
  GroupElem acc = zero();
  for (std::size_t i = 0; i < k; ++i) {
    auto s = add(acc, x);
    if (!s) return std::nullopt;
    acc = std::move(*s);
  }
  return acc;
}

// ---------------------------------------------------------------------------

IntervalPea::IntervalPea(GroupPtr h, GroupElem u, std::string label)
    : h_(std::move(h)), u_(std::move(u)), label_(std::move(label)) {
  if (u_.size() != h_->arity()) throw InputError("unit has the wrong number of coordinates");
  if (u_[0] < 1) throw InputError("the unit must have level at least 1");
  if (!h_->is_positive(u_)) throw InputError("unit " + to_string(u_) + " is not positive");
  n_ = u_[0].convert_to<std::size_t>();
}

bool IntervalPea::member(const GroupElem& x) const {
  return x.size() == u_.size() && h_->is_positive(x) && h_->leq(x, u_);
}

std::optional<GroupElem> IntervalPea::add(const GroupElem& a, const GroupElem& b) const {
  auto s = h_->add(a, b);
  if (!h_->leq(s, u_)) return std::nullopt;
  return s;
}

std::optional<GroupElem> IntervalPea::left_diff(const GroupElem& b, const GroupElem& a) const {
  auto d = h_->add(b, h_->neg(a));
  if (!member(d)) return std::nullopt;
  return d;
}

std::optional<GroupElem> IntervalPea::right_diff(const GroupElem& a, const GroupElem& b) const {
  auto d = h_->add(h_->neg(a), b);
  if (!member(d)) return std::nullopt;
  return d;
}

std::size_t IntervalPea::level(const GroupElem& x) const {
  if (x[0] < 0 || x[0] > n_) throw InputError(to_string(x) + " is not in the interval");
  return x[0].convert_to<std::size_t>();
}

GroupElem IntervalPea::sample_level(std::size_t i, std::mt19937_64& rng, long bound) const {
  for (int attempt = 0; attempt < 4096; ++attempt) {
    GroupElem x = h_->sample(rng, bound);
    x[0] = static_cast<long>(i);
    if (member(x)) return x;
  }
  if (i == 0) return zero();
  if (i == n_) return u_;
  throw Inconsistency("no member of level " + std::to_string(i) + " found in " + label_);
}

// ---------------------------------------------------------------------------

LexTablePea::LexTablePea(PartialAdditionTable base, std::vector<std::size_t> labels, GroupPtr g,
                         GroupElem h, std::string label)
    : base_(std::move(base)), labels_(std::move(labels)), g_(std::move(g)), h_(std::move(h)),
      label_(std::move(label)) {
  require_axioms(base_, Kind::Pea);
  if (labels_.size() != base_.size()) throw InputError("one level per base element is required");
  n_ = labels_[base_.unit().id];
  if (labels_[base_.zero().id] != 0 || n_ == 0) throw InputError("levels must run from 0 at zero to n at one");
  if (h_.size() != g_->arity()) throw InputError("offset has the wrong number of coordinates");
}

void LexTablePea::add_ideal_predicate(std::string name, const ElemSet& elems) {
  add_predicate(std::move(name), [this, elems](const GroupElem& x) {
    return head(x) == base_.zero() || contains(elems, head(x));
  });
}

Elem LexTablePea::head(const GroupElem& x) const {
  if (x.empty() || x[0] < 0 || x[0] >= base_.size()) throw InputError(to_string(x) + " has no base element");
  return Elem{x[0].convert_to<std::uint16_t>()};
}

GroupElem LexTablePea::join(Elem e, const GroupElem& g) const {
  GroupElem x{Integer(e.id)};
  x.insert(x.end(), g.begin(), g.end());
  return x;
}

bool LexTablePea::member(const GroupElem& x) const {
  if (x.size() != 1 + g_->arity() || x[0] < 0 || x[0] >= base_.size()) return false;
  const Elem a = head(x);
  if (a == base_.zero()) return g_->is_positive(tail(x));
  if (a == base_.unit()) return g_->leq(tail(x), h_);
  return true;
}

std::optional<GroupElem> LexTablePea::add(const GroupElem& a, const GroupElem& b) const {
  const auto c = base_.add(head(a), head(b));
  if (!c) return std::nullopt;
  GroupElem s = join(*c, g_->add(tail(a), tail(b)));
  if (!member(s)) return std::nullopt;
  return s;
}

GroupElem LexTablePea::zero() const { return join(base_.zero(), g_->zero()); }
GroupElem LexTablePea::one() const { return join(base_.unit(), h_); }

GroupElem LexTablePea::minus(const GroupElem& x) const {
  return join(detail::complements_of(base_, head(x)).minus, g_->add(h_, g_->neg(tail(x))));
}

GroupElem LexTablePea::tilde(const GroupElem& x) const {
  return join(detail::complements_of(base_, head(x)).tilde, g_->add(g_->neg(tail(x)), h_));
}

std::optional<GroupElem> LexTablePea::left_diff(const GroupElem& b, const GroupElem& a) const {
  const auto d = detail::left_diff(base_, head(b), head(a));
  if (!d) return std::nullopt;
  GroupElem x = join(*d, g_->add(tail(b), g_->neg(tail(a))));
  if (!member(x)) return std::nullopt;
  return x;
}

std::optional<GroupElem> LexTablePea::right_diff(const GroupElem& a, const GroupElem& b) const {
  const auto d = detail::right_diff(base_, head(a), head(b));
  if (!d) return std::nullopt;
  GroupElem x = join(*d, g_->add(g_->neg(tail(a)), tail(b)));
  if (!member(x)) return std::nullopt;
  return x;
}

std::size_t LexTablePea::level(const GroupElem& x) const { return labels_[head(x).id]; }

GroupElem LexTablePea::sample_level(std::size_t i, std::mt19937_64& rng, long bound) const {
  std::vector<Elem> heads;
  for (Elem e : base_.elements())
    if (labels_[e.id] == i) heads.push_back(e);
  if (heads.empty()) throw InputError("level " + std::to_string(i) + " is empty");
  std::uniform_int_distribution<std::size_t> pick(0, heads.size() - 1);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    GroupElem x = join(heads[pick(rng)], g_->sample(rng, bound));
    if (member(x)) return x;
  }
  throw Inconsistency("no member of level " + std::to_string(i) + " found in " + label_);
}

std::string LexTablePea::format(const GroupElem& x) const {
  std::string s = "(" + base_.name(head(x));
  for (const auto& c : tail(x)) s += "," + c.str();
  return s + ")";
}

// ---------------------------------------------------------------------------

std::shared_ptr<IntervalPea> lex_product_pea(std::size_t n, GroupPtr g, GroupElem h) {
  if (n == 0) throw InputError("n must be at least 1");
  if (h.size() != g->arity()) throw InputError("offset has the wrong number of coordinates");
  const std::string label = "Gamma(Z lex " + g->name() + ",(" + std::to_string(n) + "," + to_string(h) + "))";
  GroupElem u{Integer(n)};
  u.insert(u.end(), h.begin(), h.end());
  return std::make_shared<IntervalPea>(lex_extension(std::move(g)), std::move(u), label);
}

std::shared_ptr<LexTablePea> example46() {
  const auto d = diamond();
  std::vector<std::size_t> labels(d.size(), 1);
  labels[d.zero().id] = 0;
  labels[d.unit().id] = 2;
  return std::make_shared<LexTablePea>(d, labels, int_vector(1, VectorOrder::Pointwise), GroupElem{0},
                                       "example46 = diamond lex Z");
}

std::shared_ptr<LexTablePea> example47(GroupPtr g) {
  const auto b = boolean4();
  std::vector<std::size_t> labels(b.size(), 1);
  labels[b.zero().id] = 0;
  labels[b.unit().id] = 2;
  const GroupElem h = g->zero();
  auto e = std::make_shared<LexTablePea>(b, labels, g, h, "example47 = boolean4 lex " + g->name());
  const Elem a = b.at("a");
  e->add_ideal_predicate("I_a", {a});
  e->add_ideal_predicate("I_b", {detail::complements_of(b, a).minus});
  return e;
}

std::shared_ptr<IntervalPea> twisted_gamma() {
  auto e = std::make_shared<IntervalPea>(twisted_z3(), GroupElem{1, 0, 0}, "Gamma(twisted Z^3,(1,0,0))");
  e->add_predicate("kernel", [](const GroupElem& x) { return x[0] == 0; });
  return e;
}

BuiltinPea builtin_pea(const std::string& name) {
  if (name == "diamond") return {diamond(), nullptr};
  if (name == "boolean4") return {boolean4(), nullptr};
  if (name.rfind("chain:", 0) == 0) {
    std::size_t n = 0;
    try {
      n = std::stoul(name.substr(6));
    } catch (const std::exception&) {
      throw InputError("chain:N needs a positive integer");
    }
    if (n == 0 || n > 4000) throw InputError("chain:N needs 1 <= N <= 4000");
    return {chain(n), nullptr};
  }
  if (name == "example46") return {std::nullopt, example46()};
  if (name == "example47") return {std::nullopt, example47(int_vector(1, VectorOrder::Pointwise))};
  if (name.rfind("example47:", 0) == 0) return {std::nullopt, example47(parse_group(name.substr(10)))};
  if (name == "twisted_gamma") return {std::nullopt, twisted_gamma()};
  throw InputError("unknown builtin '" + name + "'");
}

// ---------------------------------------------------------------------------

std::pair<GroupElem, GroupElem> sample_pair(const SymbolicPea& e, std::mt19937_64& rng, long bound) {
  const std::size_t n = e.levels();
  if (rng() % 2) return {e.sample(rng, bound), e.sample(rng, bound)};
  std::uniform_int_distribution<std::size_t> di(0, n);
  const std::size_t i = di(rng);
  std::uniform_int_distribution<std::size_t> dj(0, n - i);
  return {e.sample_level(i, rng, bound), e.sample_level(dj(rng), rng, bound)};
}

SampledReport symbolic_suite(const SymbolicPea& e, std::size_t samples, std::uint64_t seed,
                             long bound, bool symmetric) {
  SampledReport report{e.describe(), seed, {}};
  std::mt19937_64 rng(seed);
  const std::size_t n = e.levels();
  auto fmt = [&](const GroupElem& x) { return e.format(x); };

  SampledCheck members{"zero and one are members; samples are members"};
  SampledCheck pe1{"PE1 associativity"}, pe2{"PE2 complements"}, pe3{"PE3 shifts"}, pe4{"PE4 one annihilates"};
  SampledCheck state{"canonical state level/n is additive"};
  SampledCheck clevels{"complements of E_i lie in E_(n-i)"};
  SampledCheck infinit{"Infinit equals E0 (cap n+1)"};
  SampledCheck chain{"E_i <= E_(i+1)"};
  SampledCheck symm{"x^- = x^~"};

  if (!e.member(e.zero()) || !e.member(e.one())) members.fail("zero or one is not a member");
  if (e.level(e.zero()) != 0 || e.level(e.one()) != n) state.fail("zero or one has the wrong level");

  for (std::size_t k = 0; k < samples; ++k) {
    auto [x, y] = sample_pair(e, rng, bound);
    const GroupElem z = e.sample_level(std::uniform_int_distribution<std::size_t>(0, n)(rng), rng, bound);
    ++members.samples;
    if (!e.member(x) || !e.member(y) || !e.member(z)) members.fail("sampled non-member " + fmt(x));

    // PE1
    ++pe1.samples;
    {
      const auto xy = e.add(x, y), yz = e.add(y, z);
      const auto l = xy ? e.add(*xy, z) : std::nullopt;
      const auto r = yz ? e.add(x, *yz) : std::nullopt;
      if (l || r) ++pe1.instances;
      if (l.has_value() != r.has_value() || (l && *l != *r))
        pe1.fail("(x+y)+z != x+(y+z) at " + fmt(x) + "," + fmt(y) + "," + fmt(z));
    }

    // PE2
    ++pe2.samples;
    {
      const auto m = e.minus(x), t = e.tilde(x);
      const auto l = e.add(m, x), r = e.add(x, t);
      ++pe2.instances;
      if (!e.member(m) || !e.member(t) || !l || *l != e.one() || !r || *r != e.one())
        pe2.fail("complement formulas fail at " + fmt(x));
      const GroupElem w = e.sample_level(n - e.level(x), rng, bound);
      if (auto s = e.add(w, x); s && *s == e.one()) {
        ++pe2.instances;
        if (w != m) pe2.fail("two left complements of " + fmt(x));
      }
      if (auto s = e.add(x, w); s && *s == e.one()) {
        ++pe2.instances;
        if (w != t) pe2.fail("two right complements of " + fmt(x));
      }
      ++clevels.samples;
      if (e.level(m) != n - e.level(x) || e.level(t) != n - e.level(x))
        clevels.fail("complement of " + fmt(x) + " has the wrong level");
      ++symm.samples;
      if (m != t) symm.fail(fmt(x) + "^- = " + fmt(m) + " but " + fmt(x) + "^~ = " + fmt(t));
    }

    // PE3 and the canonical state
    ++pe3.samples;
    ++state.samples;
    if (const auto s = e.add(x, y)) {
      ++pe3.instances;
      ++state.instances;
      const auto d = e.left_diff(*s, x);
      const auto f = e.right_diff(y, *s);
      const auto dx = d ? e.add(*d, x) : std::nullopt;
      const auto yf = f ? e.add(y, *f) : std::nullopt;
      if (!dx || *dx != *s || !yf || *yf != *s) pe3.fail("no shift witnesses for " + fmt(x) + "+" + fmt(y));
      if (e.level(*s) != e.level(x) + e.level(y))
        state.fail("s(" + fmt(x) + "+" + fmt(y) + ") != s(" + fmt(x) + ")+s(" + fmt(y) + ")");
    }

    // PE4
    ++pe4.samples;
    if (x != e.zero()) {
      ++pe4.instances;
      if (e.add(e.one(), x) || e.add(x, e.one())) pe4.fail("1 + " + fmt(x) + " is defined");
    }

    // Infinit
    ++infinit.samples;
    {
      const bool unbounded = e.times(n + 1, x).has_value();
      if (unbounded != (e.level(x) == 0)) infinit.fail(fmt(x) + " at level " + std::to_string(e.level(x)) +
                                                       (unbounded ? " has " : " lacks ") + "(n+1)x");
    }

    // chain
    if (n >= 1) {
      ++chain.samples;
      const std::size_t i = std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
      const GroupElem lo = e.sample_level(i, rng, bound), hi = e.sample_level(i + 1, rng, bound);
      ++chain.instances;
      if (!e.leq(lo, hi)) chain.fail(fmt(lo) + " in E" + std::to_string(i) + " is not below " + fmt(hi));
    }
  }
  for (auto* c : {&members, &clevels, &infinit, &symm}) c->instances = c->samples;
  report.checks = {members, pe1, pe2, pe3, pe4, state, clevels, infinit, chain};
  if (symmetric) report.checks.push_back(symm);
  return report;
}

SampledCheck check_predicate_ideal(const SymbolicPea& e, const std::string& name, std::size_t samples,
                                   std::uint64_t seed, long bound) {
  SampledCheck c{"ideal laws for " + name};
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    ++c.samples;
    auto [a, b] = sample_pair(e, rng, bound);
    const auto s = e.add(a, b);
    if (!s) continue;
    ++c.instances;
    const bool in_a = e.holds(name, a), in_b = e.holds(name, b), in_s = e.holds(name, *s);
    if (in_s != (in_a && in_b))
      c.fail(e.format(a) + "+" + e.format(b) + " breaks downward or sum closure of " + name);
    // normality: b vs (a+b)\a
    const auto j = e.left_diff(*s, a);
    if (!j) {
      c.fail("(a+b)\\a undefined at " + e.format(a) + "," + e.format(b));
      continue;
    }
    if (in_b != e.holds(name, *j)) c.fail(name + " is not normal at " + e.format(a) + "," + e.format(b));
  }
  return c;
}

SampledCheck check_predicate_intersection(const SymbolicPea& e, const std::string& whole,
                                          const std::vector<std::string>& parts, std::size_t samples,
                                          std::uint64_t seed, long bound) {
  std::string joined;
  for (const auto& p : parts) joined += (joined.empty() ? "" : " & ") + p;
  SampledCheck c{whole + " = " + joined};
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    ++c.samples;
    const GroupElem x = e.sample(rng, bound);
    const bool all = std::all_of(parts.begin(), parts.end(), [&](const std::string& p) { return e.holds(p, x); });
    if (all) ++c.instances;
    if (all != e.holds(whole, x)) c.fail("disagreement at " + e.format(x));
  }
  return c;
}

SampledCheck check_condition_star(const IntervalPea& e, std::size_t samples, std::uint64_t seed, long bound) {
  SampledCheck c{"condition (*)"};
  const PoGroup& h = e.group();
  const std::size_t n = e.levels();
  std::mt19937_64 rng(seed);
  auto fmt = [&](const GroupElem& x) { return e.format(x); };
  auto in_e0 = [&](const GroupElem& x) { return e.member(x) && e.level(x) == 0; };
  for (std::size_t k = 0; k < samples; ++k) {
    ++c.samples;
    const GroupElem x = e.sample_level(std::uniform_int_distribution<std::size_t>(1, n)(rng), rng, bound);
    const GroupElem a = e.sample_level(0, rng, bound), b = e.sample_level(0, rng, bound);
    const GroupElem p = e.sample_level(0, rng, bound), q = e.sample_level(0, rng, bound);
    if (rng() % 2) {
      // x\a = y\b and x\p = y\q
      const auto xa = e.left_diff(x, a), xp = e.left_diff(x, p);
      if (!xa || !xp) continue;
      const auto y = e.add(*xa, b);
      if (!y || e.level(*y) == 0) continue;
      const GroupElem q2 = h.add(h.neg(*xp), *y);  // forced by x\p = y\q
      if (!in_e0(q2)) continue;
      const auto yq = e.left_diff(*y, q2);
      if (!yq || *yq != *xp) continue;
      ++c.instances;
      if (h.add(h.neg(b), a) != h.add(h.neg(q2), p) || h.add(h.neg(a), b) != h.add(h.neg(p), q2))
        c.fail("x=" + fmt(x) + " a=" + fmt(a) + " b=" + fmt(b) + " c=" + fmt(p) + " d=" + fmt(q2));
    } else {
      // e/x = f/y and g/x = h/y
      const auto ex = e.right_diff(a, x), gx = e.right_diff(p, x);
      if (!ex || !gx) continue;
      const auto y = e.add(b, *ex);
      if (!y || e.level(*y) == 0) continue;
      const GroupElem h2 = h.add(*y, h.neg(*gx));  // forced by g/x = h/y
      if (!in_e0(h2)) continue;
      const auto hy = e.right_diff(h2, *y);
      if (!hy || *hy != *gx) continue;
      ++c.instances;
      if (h.add(a, h.neg(b)) != h.add(p, h.neg(h2)) || h.add(b, h.neg(a)) != h.add(h2, h.neg(p)))
        c.fail("x=" + fmt(x) + " e=" + fmt(a) + " f=" + fmt(b) + " g=" + fmt(p) + " h=" + fmt(h2));
    }
  }
  return c;
}

SampledCheck check_cyclic_uniqueness(const IntervalPea& e, const GroupElem& c, std::size_t samples,
                                     std::uint64_t seed, long bound) {
  SampledCheck r{"nd = u implies d = c"};
  std::mt19937_64 rng(seed);
  const std::size_t n = e.levels();
  if (e.times(n, c) != std::optional<GroupElem>(e.one())) {
    r.fail(e.format(c) + " is not cyclic of order " + std::to_string(n));
    return r;
  }
  for (std::size_t k = 0; k < samples; ++k) {
    ++r.samples;
    const GroupElem d = e.sample_level(1, rng, bound);
    const auto nd = e.times(n, d);
    if (!nd || *nd != e.one()) continue;
    ++r.instances;
    if (d != c) r.fail(std::to_string(n) + e.format(d) + " = u but " + e.format(d) + " != " + e.format(c));
  }
  return r;
}

}  // namespace pea
