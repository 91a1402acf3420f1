#include "pea/groups.hpp"

#include <algorithm>
#include <sstream>

#include "pea/errors.hpp"

namespace pea {

std::string to_string(const GroupElem& g) {
  std::string s = "(";
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) s += ",";
    s += g[i].str();
  }
  return s + ")";
}

bool PoGroup::leq(const GroupElem& a, const GroupElem& b) const { return is_positive(add(neg(a), b)); }

GroupElem PoGroup::sample(std::mt19937_64& rng, long bound) const {
  std::uniform_int_distribution<long> d(-bound, bound);
  GroupElem g(arity());
  for (auto& x : g) x = d(rng);
  return g;
}

GroupElem PoGroup::times(long n, const GroupElem& g) const {
  const GroupElem base = n < 0 ? neg(g) : g;
  GroupElem acc = zero();
  for (long k = 0; k < (n < 0 ? -n : n); ++k) acc = add(acc, base);
  return acc;
}

namespace {

void check_arity(const GroupElem& g, std::size_t k) {
  if (g.size() != k) throw InputError("group element " + to_string(g) + " needs " + std::to_string(k) + " coordinates");
}

class IntVector final : public PoGroup {
 public:
  IntVector(std::size_t k, VectorOrder order) : k_(k), order_(order) {}
  std::string name() const override {
    return "z:" + std::to_string(k_) + (order_ == VectorOrder::Lex ? "/lex" : "/pointwise");
  }
  std::size_t arity() const override { return k_; }
  GroupElem add(const GroupElem& a, const GroupElem& b) const override {
    check_arity(a, k_);
    check_arity(b, k_);
    GroupElem r(k_);
    for (std::size_t i = 0; i < k_; ++i) r[i] = a[i] + b[i];
    return r;
  }
  GroupElem neg(const GroupElem& a) const override {
    check_arity(a, k_);
    GroupElem r(k_);
    for (std::size_t i = 0; i < k_; ++i) r[i] = -a[i];
    return r;
  }
  bool is_positive(const GroupElem& g) const override {
    check_arity(g, k_);
    if (order_ == VectorOrder::Pointwise)
      return std::all_of(g.begin(), g.end(), [](const Integer& x) { return x >= 0; });
    for (const auto& x : g)
      if (x != 0) return x > 0;
    return true;
  }
  bool abelian() const override { return true; }
  std::optional<GroupElem> upper_bound_hint(const GroupElem& a, const GroupElem& b) const override {
    if (order_ == VectorOrder::Lex) return leq(a, b) ? b : a;
    GroupElem r(k_);
    for (std::size_t i = 0; i < k_; ++i) r[i] = std::max(a[i], b[i]);
    return r;
  }

 private:
  std::size_t k_;
  VectorOrder order_;
};

bool odd(const Integer& x) { return (x % 2) != 0; }

class TwistedZ3 final : public PoGroup {
 public:
  std::string name() const override { return "twisted-z3"; }
  std::size_t arity() const override { return 3; }
  GroupElem add(const GroupElem& a, const GroupElem& b) const override {
    check_arity(a, 3);
    check_arity(b, 3);
    if (odd(b[0])) return {a[0] + b[0], a[2] + b[1], a[1] + b[2]};
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
  }
  GroupElem neg(const GroupElem& a) const override {
    check_arity(a, 3);
    if (odd(a[0])) return {-a[0], -a[2], -a[1]};
    return {-a[0], -a[1], -a[2]};
  }
  bool is_positive(const GroupElem& g) const override {
    check_arity(g, 3);
    return g[0] > 0 || (g[0] == 0 && g[1] >= 0 && g[2] >= 0);
  }
  bool leq(const GroupElem& a, const GroupElem& b) const override {
    check_arity(a, 3);
    check_arity(b, 3);
    return a[0] < b[0] || (a[0] == b[0] && a[1] <= b[1] && a[2] <= b[2]);
  }
  std::optional<GroupElem> upper_bound_hint(const GroupElem& a, const GroupElem& b) const override {
    if (a[0] == b[0]) return GroupElem{a[0], std::max(a[1], b[1]), std::max(a[2], b[2])};
    return GroupElem{std::max(a[0], b[0]) + 1, 0, 0};
  }
};

class LexExtension final : public PoGroup {
 public:
  explicit LexExtension(GroupPtr g) : g_(std::move(g)) {}
  std::string name() const override { return "lex:" + g_->name(); }
  std::size_t arity() const override { return 1 + g_->arity(); }
  GroupElem add(const GroupElem& a, const GroupElem& b) const override {
    check_arity(a, arity());
    check_arity(b, arity());
    return join(a[0] + b[0], g_->add(tail(a), tail(b)));
  }
  GroupElem neg(const GroupElem& a) const override {
    check_arity(a, arity());
    return join(-a[0], g_->neg(tail(a)));
  }
  bool is_positive(const GroupElem& x) const override {
    check_arity(x, arity());
    return x[0] > 0 || (x[0] == 0 && g_->is_positive(tail(x)));
  }
  bool abelian() const override { return g_->abelian(); }
  std::optional<GroupElem> upper_bound_hint(const GroupElem& a, const GroupElem& b) const override {
    if (a[0] != b[0]) return a[0] > b[0] ? a : b;
    if (auto t = g_->upper_bound_hint(tail(a), tail(b))) return join(a[0], *t);
    return join(a[0] + 1, g_->zero());
  }

 private:
  static GroupElem tail(const GroupElem& x) { return GroupElem(x.begin() + 1, x.end()); }
  static GroupElem join(Integer m, GroupElem g) {
    g.insert(g.begin(), std::move(m));
    return g;
  }
  GroupPtr g_;
};

class Transported final : public PoGroup {
 public:
  Transported(GroupPtr base, GroupHom alpha, GroupHom alpha_inv, std::string name)
      : base_(std::move(base)), to_(std::move(alpha)), from_(std::move(alpha_inv)), name_(std::move(name)) {}
  std::string name() const override { return name_; }
  std::size_t arity() const override { return base_->arity(); }
  GroupElem add(const GroupElem& a, const GroupElem& b) const override {
    return to_(base_->add(from_(a), from_(b)));
  }
  GroupElem neg(const GroupElem& a) const override { return to_(base_->neg(from_(a))); }
  bool is_positive(const GroupElem& g) const override { return base_->is_positive(from_(g)); }
  bool leq(const GroupElem& a, const GroupElem& b) const override { return base_->leq(from_(a), from_(b)); }
  bool abelian() const override { return base_->abelian(); }
  std::optional<GroupElem> upper_bound_hint(const GroupElem& a, const GroupElem& b) const override {
    if (auto c = base_->upper_bound_hint(from_(a), from_(b))) return to_(*c);
    return std::nullopt;
  }

 private:
  GroupPtr base_;
  GroupHom to_, from_;
  std::string name_;
};

class LevelKernel final : public PoGroup {
 public:
  explicit LevelKernel(GroupPtr h) : h_(std::move(h)) {
    if (h_->arity() < 2) throw InputError("level kernel needs a group with at least two coordinates");
  }
  std::string name() const override { return "ker(" + h_->name() + ")"; }
  std::size_t arity() const override { return h_->arity() - 1; }
  GroupElem add(const GroupElem& a, const GroupElem& b) const override { return down(h_->add(up(a), up(b))); }
  GroupElem neg(const GroupElem& a) const override { return down(h_->neg(up(a))); }
  bool is_positive(const GroupElem& g) const override { return h_->is_positive(up(g)); }
  bool leq(const GroupElem& a, const GroupElem& b) const override { return h_->leq(up(a), up(b)); }
  bool abelian() const override { return h_->abelian(); }
  std::optional<GroupElem> upper_bound_hint(const GroupElem& a, const GroupElem& b) const override {
    if (auto c = h_->upper_bound_hint(up(a), up(b)); c && (*c)[0] == 0) return down(*c);
    return std::nullopt;
  }

 private:
  GroupElem up(const GroupElem& g) const {
    check_arity(g, arity());
    GroupElem x{Integer(0)};
    x.insert(x.end(), g.begin(), g.end());
    return x;
  }
  static GroupElem down(const GroupElem& x) {
    if (x[0] != 0) throw Inconsistency("level kernel left level 0");
    return GroupElem(x.begin() + 1, x.end());
  }
  GroupPtr h_;
};

}  // namespace

GroupPtr int_vector(std::size_t k, VectorOrder order) {
  if (k == 0) throw InputError("z:K needs K >= 1");
  return std::make_shared<IntVector>(k, order);
}

GroupPtr twisted_z3() { return std::make_shared<TwistedZ3>(); }

GroupPtr lex_extension(GroupPtr g) { return std::make_shared<LexExtension>(std::move(g)); }

GroupPtr transported(GroupPtr base, GroupHom alpha, GroupHom alpha_inv, std::string name) {
  return std::make_shared<Transported>(std::move(base), std::move(alpha), std::move(alpha_inv), std::move(name));
}

GroupPtr level_kernel(GroupPtr h) { return std::make_shared<LevelKernel>(std::move(h)); }

GroupPtr parse_group(const std::string& spec, VectorOrder order) {
  if (spec == "twisted-z3") return twisted_z3();
  if (spec.rfind("lex:", 0) == 0) return lex_extension(parse_group(spec.substr(4), order));
  if (spec.rfind("z:", 0) == 0) {
    const std::string k = spec.substr(2);
    if (k.empty() || k.size() > 3 || !std::all_of(k.begin(), k.end(), ::isdigit))
      throw InputError("bad group spec '" + spec + "'");
    return int_vector(std::stoul(k), order);
  }
  throw InputError("unknown group spec '" + spec + "'");
}

GroupElem parse_group_elem(const std::string& text, std::size_t arity) {
  GroupElem g;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      const Rational r = parse_rational(part);
      if (denominator(r) != 1) throw InputError("");
      g.push_back(numerator(r));
    } catch (const InputError&) {
      throw InputError("bad group element '" + text + "'");
    }
  }
  if (g.size() != arity)
    throw InputError("group element '" + text + "' needs " + std::to_string(arity) + " coordinates");
  return g;
}

namespace {

ProbeReport start(std::size_t samples, std::uint64_t seed) {
  ProbeReport r;
  r.samples = samples;
  r.seed = seed;
  return r;
}

void fail(ProbeReport& r, std::string what) {
  if (!r.passed) return;
  r.passed = false;
  r.failure = std::move(what);
}

GroupElem positive_sample(const PoGroup& g, std::mt19937_64& rng, long bound) {
  for (int tries = 0; tries < 1000; ++tries) {
    auto p = g.sample(rng, bound);
    if (g.is_positive(p)) return p;
  }
  return g.zero();
}

}  // namespace

ProbeReport probe_pogroup(const PoGroup& g, std::size_t samples, std::uint64_t seed, long bound) {
  ProbeReport r = start(samples, seed);
  std::mt19937_64 rng(seed);
  const GroupElem z = g.zero();
  if (!g.is_positive(z)) fail(r, "0 is not positive");
  for (std::size_t k = 0; k < samples && r.passed; ++k) {
    const auto a = g.sample(rng, bound), b = g.sample(rng, bound), c = g.sample(rng, bound),
               d = g.sample(rng, bound);
    const auto p = positive_sample(g, rng, bound);
    const auto ws = to_string(a) + " " + to_string(b) + " " + to_string(c);
    if (g.add(g.add(a, b), c) != g.add(a, g.add(b, c))) fail(r, "associativity at " + ws);
    if (g.add(a, z) != a || g.add(z, a) != a) fail(r, "zero law at " + to_string(a));
    if (g.add(a, g.neg(a)) != z || g.add(g.neg(a), a) != z) fail(r, "inverse at " + to_string(a));
    if (g.is_positive(a) && g.is_positive(g.neg(a)) && a != z) fail(r, "antisymmetry at " + to_string(a));
    if (g.is_positive(a) && g.is_positive(b) && !g.is_positive(g.add(a, b)))
      fail(r, "positive cone not closed at " + to_string(a) + " " + to_string(b));
    if (g.leq(a, b) != g.is_positive(g.add(g.neg(a), b)) || g.leq(a, b) != g.is_positive(g.sub(b, a)))
      fail(r, "order disagrees with the positive cone at " + to_string(a) + " " + to_string(b));
    // a <= a+p, so c+a+d <= c+(a+p)+d
    const auto ap = g.add(a, p);
    if (!g.leq(a, ap)) fail(r, "a <= a+p fails for positive p at " + to_string(a) + " " + to_string(p));
    if (!g.leq(g.add(g.add(c, a), d), g.add(g.add(c, ap), d)))
      fail(r, "translation invariance at " + ws + " " + to_string(d) + " p=" + to_string(p));
    if (g.leq(a, b) && !g.leq(g.add(g.add(c, a), d), g.add(g.add(c, b), d)))
      fail(r, "translation invariance at " + ws + " " + to_string(d));
  }
  return r;
}

ProbeReport is_commutator(const PoGroup& g, const GroupElem& c, std::size_t samples,
                          std::uint64_t seed, long bound) {
  if (g.abelian()) return start(0, seed);
  ProbeReport r = start(samples, seed);
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples && r.passed; ++k) {
    const auto x = g.sample(rng, bound);
    if (g.add(x, c) != g.add(c, x)) fail(r, "x + c != c + x at x=" + to_string(x));
  }
  return r;
}

ProbeReport probe_torsion_free(const PoGroup& g, std::size_t samples, std::uint64_t seed, long cap,
                               long bound) {
  ProbeReport r = start(samples, seed);
  std::mt19937_64 rng(seed);
  const auto z = g.zero();
  for (std::size_t k = 0; k < samples && r.passed; ++k) {
    const auto x = g.sample(rng, bound);
    if (x == z) continue;
    GroupElem m = x;
    for (long n = 1; n <= cap; ++n) {
      if (m == z) {
        fail(r, std::to_string(n) + "*" + to_string(x) + " = 0");
        break;
      }
      m = g.add(m, x);
    }
  }
  return r;
}

ProbeReport probe_strong_unit(const PoGroup& g, const GroupElem& u, std::size_t samples,
                              std::uint64_t seed, long cap, long bound) {
  ProbeReport r = start(samples, seed);
  if (!g.is_positive(u)) {
    fail(r, "u is not positive");
    return r;
  }
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples; ++k) {
    const auto x = g.sample(rng, bound);
    GroupElem nu = u;
    bool found = false;
    for (long n = 1; n <= cap && !found; ++n) {
      found = g.leq(x, nu);
      nu = g.add(nu, u);
    }
    if (!found && !r.inconclusive) {
      r.inconclusive = true;
      r.failure = "no n <= " + std::to_string(cap) + " with " + to_string(x) + " <= n*u";
    }
  }
  return r;
}

ProbeReport probe_directed(const PoGroup& g, std::size_t samples, std::uint64_t seed, long bound) {
  ProbeReport r = start(samples, seed);
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples && r.passed; ++k) {
    const auto a = g.sample(rng, bound), b = g.sample(rng, bound);
    const auto c = g.upper_bound_hint(a, b);
    if (!c) {
      r.inconclusive = true;
      r.failure = "no upper bound candidate for " + to_string(a) + " " + to_string(b);
      break;
    }
    if (!g.leq(a, *c) || !g.leq(b, *c))
      fail(r, "hint " + to_string(*c) + " is not above " + to_string(a) + " " + to_string(b));
  }
  return r;
}

ProbeReport probe_additive(const PoGroup& from, const PoGroup& to, const GroupHom& h,
                           std::size_t samples, std::uint64_t seed, long bound) {
  ProbeReport r = start(samples, seed);
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < samples && r.passed; ++k) {
    const auto a = from.sample(rng, bound), b = from.sample(rng, bound);
    if (h(from.add(a, b)) != to.add(h(a), h(b)))
      fail(r, "h(a+b) != h(a)+h(b) at " + to_string(a) + " " + to_string(b));
  }
  return r;
}

}  // namespace pea
