#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pea/table.hpp"

namespace pea {

enum class Kind { Gpea, Pea };

enum class Axiom { GP1, GP2, GP3, GP4, GP5, PE1, PE2, PE3, PE4 };

std::string to_string(Axiom a);
std::string to_string(Kind k);

struct Violation {
  Axiom axiom;
  std::vector<Elem> witness;  // lexicographically smallest failing tuple
};

struct AxiomReport {
  std::vector<Violation> violations;
  bool passed() const { return violations.empty(); }
  bool violates(Axiom a) const;
};

/// Exhaustive axiom scan. For Kind::Pea associativity is tagged PE1 and the
/// shift property PE3; cancellation and positivity are still reported under
/// their GP tags. Throws InputError when a PEA check is asked of a table
/// without a unit.
AxiomReport check_axioms(const PartialAdditionTable& t, Kind kind);

/// Throws Refused unless t passes the axioms of `kind`.
void require_axioms(const PartialAdditionTable& t, Kind kind);

/// a <= b iff a + c = b for some c.
class OrderRelation {
 public:
  explicit OrderRelation(std::size_t n) : n_(n), leq_(n * n, false) {}

  bool leq(Elem a, Elem b) const { return leq_[std::size_t{a.id} * n_ + b.id]; }
  bool less(Elem a, Elem b) const { return a != b && leq(a, b); }
  bool comparable(Elem a, Elem b) const { return leq(a, b) || leq(b, a); }
  std::size_t size() const { return n_; }

  std::vector<std::pair<Elem, Elem>> pairs() const;
  /// Pairs a < b with nothing strictly between.
  std::vector<std::pair<Elem, Elem>> covers() const;
  bool is_total() const;

  /// Set when the right-witness and left-witness forms disagree on a pair.
  std::optional<std::pair<Elem, Elem>> left_form_mismatch;

  void set(Elem a, Elem b) { leq_[std::size_t{a.id} * n_ + b.id] = true; }

 private:
  std::size_t n_;
  std::vector<bool> leq_;
};

/// Requires the GPEA axioms (throws Refused otherwise).
OrderRelation induced_order(const PartialAdditionTable& t);

struct Complements {
  Elem minus;  // a^- : a^- + a = 1
  Elem tilde;  // a^~ : a + a^~ = 1
};

/// Requires the PEA axioms.
Complements complements(const PartialAdditionTable& t, Elem a);

struct SymmetryReport {
  bool symmetric = true;           // a^- == a^~ for all a
  std::optional<Elem> witness;     // first a with a^- != a^~
  bool weakly_commutative = true;  // condition (C)
  std::optional<std::pair<Elem, Elem>> commutativity_witness;
};

/// Requires the PEA axioms. Throws Inconsistency if the two criteria disagree.
SymmetryReport is_symmetric(const PartialAdditionTable& t);

/// Condition (C) alone; meaningful for GPEAs too.
bool is_weakly_commutative(const PartialAdditionTable& t,
                           std::pair<Elem, Elem>* witness = nullptr);

/// Largest n with na defined; std::nullopt encodes +infinity.
struct IsotropicIndex {
  std::optional<std::size_t> value;
  bool infinite() const { return !value.has_value(); }
  std::string str() const { return value ? std::to_string(*value) : "inf"; }
};

struct ElementInfo {
  Elem element;
  std::optional<Complements> complements;  // PEA only
  IsotropicIndex iota;
};

struct IsotropicData {
  std::vector<ElementInfo> info;
  ElemSet infinit;
};

/// Requires the GPEA axioms. Complements are filled for PEAs.
IsotropicData isotropic_data(const PartialAdditionTable& t);

enum class Side { Left, Right };

/// Left: b\a with (b\a) + a = b. Right: a/b with a + (a/b) = b.
/// Throws UndefinedDifference when a is not below b.
Elem difference(const PartialAdditionTable& t, Elem a, Elem b, Side side);

namespace detail {
// Unchecked helpers for callers that already validated the axioms.
OrderRelation order_of(const PartialAdditionTable& t);
Complements complements_of(const PartialAdditionTable& t, Elem a);
std::optional<Elem> left_diff(const PartialAdditionTable& t, Elem b, Elem a);   // b\a
std::optional<Elem> right_diff(const PartialAdditionTable& t, Elem a, Elem b);  // a/b
IsotropicIndex iota_of(const PartialAdditionTable& t, Elem a);
}  // namespace detail

}  // namespace pea
