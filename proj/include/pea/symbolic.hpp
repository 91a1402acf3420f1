#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pea/groups.hpp"
#include "pea/table.hpp"

namespace pea {

/// Outcome of one sampled property.
struct SampledCheck {
  std::string name;
  std::size_t samples = 0;    // draws
  std::size_t instances = 0;  // draws on which the hypothesis held
  bool passed = true;
  std::string failure;

  void fail(std::string what) {
    if (passed) failure = std::move(what);
    passed = false;
  }
};

struct SampledReport {
  std::string subject;
  std::uint64_t seed = 0;
  std::vector<SampledCheck> checks;
  bool passed() const;
};

/// An infinite PEA given by a membership predicate and formulas on
/// coordinate vectors. Every claim about one is verified on samples only.
class SymbolicPea {
 public:
  virtual ~SymbolicPea() = default;

  virtual std::string describe() const = 0;
  /// n, the level of the unit.
  virtual std::size_t levels() const = 0;
  virtual bool member(const GroupElem& x) const = 0;
  virtual std::optional<GroupElem> add(const GroupElem& a, const GroupElem& b) const = 0;
  virtual GroupElem zero() const = 0;
  virtual GroupElem one() const = 0;
  virtual GroupElem minus(const GroupElem& x) const = 0;
  virtual GroupElem tilde(const GroupElem& x) const = 0;
  /// b\a with (b\a) + a = b.
  virtual std::optional<GroupElem> left_diff(const GroupElem& b, const GroupElem& a) const = 0;
  /// a/b with a + (a/b) = b.
  virtual std::optional<GroupElem> right_diff(const GroupElem& a, const GroupElem& b) const = 0;
  /// The i with x in E_i.
  virtual std::size_t level(const GroupElem& x) const = 0;
  /// A member of E_i whose free coordinates lie in [-bound, bound].
  virtual GroupElem sample_level(std::size_t i, std::mt19937_64& rng, long bound) const = 0;
  virtual std::string format(const GroupElem& x) const { return to_string(x); }

  /// Names accepted by holds(): "E0".."En" and any extra sets.
  std::vector<std::string> predicates() const;
  bool holds(const std::string& predicate, const GroupElem& x) const;
  /// True when `predicate` is one of predicates().
  bool holds_any(const std::string& predicate) const;
  void add_predicate(std::string name, std::function<bool(const GroupElem&)> p);

  bool leq(const GroupElem& a, const GroupElem& b) const { return right_diff(a, b).has_value(); }
  GroupElem sample(std::mt19937_64& rng, long bound) const;
  /// kx, or nullopt once a partial sum is undefined.
  std::optional<GroupElem> times(std::size_t k, const GroupElem& x) const;

 private:
  std::vector<std::pair<std::string, std::function<bool(const GroupElem&)>>> extra_;
};

using SymbolicPtr = std::shared_ptr<SymbolicPea>;

/// Gamma(H, u) for a po-group whose first coordinate is the level.
class IntervalPea final : public SymbolicPea {
 public:
  IntervalPea(GroupPtr h, GroupElem u, std::string label);

  const PoGroup& group() const { return *h_; }
  const GroupPtr& group_ptr() const { return h_; }
  const GroupElem& unit() const { return u_; }

  std::string describe() const override { return label_; }
  std::size_t levels() const override { return n_; }
  bool member(const GroupElem& x) const override;
  std::optional<GroupElem> add(const GroupElem& a, const GroupElem& b) const override;
  GroupElem zero() const override { return h_->zero(); }
  GroupElem one() const override { return u_; }
  GroupElem minus(const GroupElem& x) const override { return h_->add(u_, h_->neg(x)); }
  GroupElem tilde(const GroupElem& x) const override { return h_->add(h_->neg(x), u_); }
  std::optional<GroupElem> left_diff(const GroupElem& b, const GroupElem& a) const override;
  std::optional<GroupElem> right_diff(const GroupElem& a, const GroupElem& b) const override;
  std::size_t level(const GroupElem& x) const override;
  GroupElem sample_level(std::size_t i, std::mt19937_64& rng, long bound) const override;

 private:
  GroupPtr h_;
  GroupElem u_;
  std::size_t n_;
  std::string label_;
};

/// E lex G for a finite PEA E with a level labeling: pairs (x, g) with
/// g >= 0 when x = 0 and g <= h when x = 1, added componentwise.
class LexTablePea final : public SymbolicPea {
 public:
  LexTablePea(PartialAdditionTable base, std::vector<std::size_t> labels, GroupPtr g, GroupElem h,
              std::string label);

  /// E0 together with every (x, g) for x in `elems`.
  void add_ideal_predicate(std::string name, const ElemSet& elems);

  std::string describe() const override { return label_; }
  std::size_t levels() const override { return n_; }
  bool member(const GroupElem& x) const override;
  std::optional<GroupElem> add(const GroupElem& a, const GroupElem& b) const override;
  GroupElem zero() const override;
  GroupElem one() const override;
  GroupElem minus(const GroupElem& x) const override;
  GroupElem tilde(const GroupElem& x) const override;
  std::optional<GroupElem> left_diff(const GroupElem& b, const GroupElem& a) const override;
  std::optional<GroupElem> right_diff(const GroupElem& a, const GroupElem& b) const override;
  std::size_t level(const GroupElem& x) const override;
  GroupElem sample_level(std::size_t i, std::mt19937_64& rng, long bound) const override;
  std::string format(const GroupElem& x) const override;

 private:
  Elem head(const GroupElem& x) const;
  GroupElem tail(const GroupElem& x) const { return GroupElem(x.begin() + 1, x.end()); }
  GroupElem join(Elem e, const GroupElem& g) const;

  PartialAdditionTable base_;
  std::vector<std::size_t> labels_;
  GroupPtr g_;
  GroupElem h_;
  std::size_t n_;
  std::string label_;
};

/// Gamma(Z lex G, (n, h)).
std::shared_ptr<IntervalPea> lex_product_pea(std::size_t n, GroupPtr g, GroupElem h);
/// diamond lex Z with unit (1, 0).
std::shared_ptr<LexTablePea> example46();
/// boolean4 lex G with unit (1, 0) and the ideals I_a, I_b.
std::shared_ptr<LexTablePea> example47(GroupPtr g);
/// Gamma(twisted Z^3, (1,0,0)) with the predicate "kernel" = {(0,b,c)}.
std::shared_ptr<IntervalPea> twisted_gamma();

struct BuiltinPea {
  std::optional<PartialAdditionTable> table;
  SymbolicPtr symbolic;
};

/// diamond, boolean4, chain:N, example46, example47[:GROUP], twisted_gamma.
/// InputError for other names.
BuiltinPea builtin_pea(const std::string& name);

/// Two members whose levels sum to at most n half of the time, so that
/// their sum is often defined.
std::pair<GroupElem, GroupElem> sample_pair(const SymbolicPea& e, std::mt19937_64& rng, long bound);

/// Membership of 0 and 1, PE1-PE4, the complement formulas, additivity of
/// the canonical state level/n, complement levels, Infinit = E0, the chain
/// E0 <= E1 <= ... <= En and, when `symmetric`, x^- = x^~.
SampledReport symbolic_suite(const SymbolicPea& e, std::size_t samples, std::uint64_t seed,
                             long bound, bool symmetric);

/// Sampled ideal laws for a predicate: a+b in I iff a, b in I, and
/// normality (a+i)\a in I iff i in I.
SampledCheck check_predicate_ideal(const SymbolicPea& e, const std::string& name,
                                   std::size_t samples, std::uint64_t seed, long bound);

/// Sampled equality of `whole` with the intersection of `parts`.
SampledCheck check_predicate_intersection(const SymbolicPea& e, const std::string& whole,
                                          const std::vector<std::string>& parts,
                                          std::size_t samples, std::uint64_t seed, long bound);

/// Condition (*) on quadruples built from samples; differences of
/// level-0 elements are taken in the ambient group.
SampledCheck check_condition_star(const IntervalPea& e, std::size_t samples, std::uint64_t seed,
                                  long bound);

/// nd = u implies d = c for sampled d in E1.
SampledCheck check_cyclic_uniqueness(const IntervalPea& e, const GroupElem& c, std::size_t samples,
                                     std::uint64_t seed, long bound);

}  // namespace pea
