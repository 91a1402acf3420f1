#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pea/numeric.hpp"

namespace pea {

/// Group elements are fixed-length integer vectors; the group decides what
/// the coordinates mean.
using GroupElem = std::vector<Integer>;

std::string to_string(const GroupElem& g);  // "(1,-2,3)"

class PoGroup {
 public:
  virtual ~PoGroup() = default;

  virtual std::string name() const = 0;
  virtual std::size_t arity() const = 0;
  virtual GroupElem add(const GroupElem& a, const GroupElem& b) const = 0;
  virtual GroupElem neg(const GroupElem& a) const = 0;
  /// g >= 0
  virtual bool is_positive(const GroupElem& g) const = 0;
  /// Defaults to is_positive(-a + b).
  virtual bool leq(const GroupElem& a, const GroupElem& b) const;
  virtual bool abelian() const { return false; }
  /// An element above both, when the group knows one cheaply.
  virtual std::optional<GroupElem> upper_bound_hint(const GroupElem&, const GroupElem&) const {
    return std::nullopt;
  }
  /// Coordinates uniform in [-bound, bound].
  virtual GroupElem sample(std::mt19937_64& rng, long bound) const;

  GroupElem zero() const { return GroupElem(arity(), 0); }
  GroupElem sub(const GroupElem& a, const GroupElem& b) const { return add(a, neg(b)); }
  /// n*g, with negative n meaning |n| * (-g).
  GroupElem times(long n, const GroupElem& g) const;
  bool less(const GroupElem& a, const GroupElem& b) const { return a != b && leq(a, b); }
};

using GroupPtr = std::shared_ptr<const PoGroup>;
using GroupHom = std::function<GroupElem(const GroupElem&)>;

enum class VectorOrder { Pointwise, Lex };

GroupPtr int_vector(std::size_t k, VectorOrder order);
/// Z^3 with (a,b,c)+(x,y,z) = (a+x, b+y, c+z) for even x and
/// (a+x, c+y, b+z) for odd x; (a,b,c) <= (x,y,z) iff a < x, or a = x,
/// b <= y and c <= z.
GroupPtr twisted_z3();
/// Z lex G: pairs (m, g) added coordinatewise, ordered by m first.
GroupPtr lex_extension(GroupPtr g);

/// The group structure of `base` carried along the bijection alpha:
/// a + b = alpha(alpha^-1 a + alpha^-1 b), a >= 0 iff alpha^-1 a >= 0.
GroupPtr transported(GroupPtr base, GroupHom alpha, GroupHom alpha_inv, std::string name);
/// {g : (0, g) in h} for a group whose first coordinate is a level.
GroupPtr level_kernel(GroupPtr h);

/// "z:K" (with `order`), "twisted-z3", or "lex:<spec>".
GroupPtr parse_group(const std::string& spec, VectorOrder order = VectorOrder::Pointwise);

/// Parses "1,0,-2" into an element of the given arity.
GroupElem parse_group_elem(const std::string& text, std::size_t arity);

struct ProbeReport {
  bool passed = true;
  bool inconclusive = false;  // a search ran out of its cap
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::string failure;  // first violation, with its witness
};

/// Sampled associativity, inverses, zero, antisymmetry, cone closure,
/// consistency of leq with the cone, translation invariance.
ProbeReport probe_pogroup(const PoGroup& g, std::size_t samples, std::uint64_t seed, long bound = 20);

/// x + c = c + x. Exact (no sampling) for abelian groups.
ProbeReport is_commutator(const PoGroup& g, const GroupElem& c, std::size_t samples,
                          std::uint64_t seed, long bound = 20);

/// n*g != 0 for sampled g != 0 and 1 <= n <= cap.
ProbeReport probe_torsion_free(const PoGroup& g, std::size_t samples, std::uint64_t seed,
                               long cap = 16, long bound = 20);

/// u >= 0 and, per sample, g <= n*u for some n <= cap. Running out of the
/// cap is inconclusive, not a failure.
ProbeReport probe_strong_unit(const PoGroup& g, const GroupElem& u, std::size_t samples,
                              std::uint64_t seed, long cap = 64, long bound = 20);

/// Per sampled pair an upper bound from the group's hint, checked exactly.
ProbeReport probe_directed(const PoGroup& g, std::size_t samples, std::uint64_t seed, long bound = 20);

/// h(a+b) = h(a)+h(b) on samples.
ProbeReport probe_additive(const PoGroup& from, const PoGroup& to, const GroupHom& h,
                           std::size_t samples, std::uint64_t seed, long bound = 20);

}  // namespace pea
