#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pea/states.hpp"
#include "pea/table.hpp"

namespace pea {

struct Check {
  bool holds = true;
  std::vector<Elem> witness;
  std::string reason;
};

/// Nonempty, downward closed, closed under defined sums.
Check is_ideal(const PartialAdditionTable& t, const ElemSet& s);

/// a+i = j+a implies (i in S iff j in S). Fails on non-ideals.
Check is_normal(const PartialAdditionTable& t, const ElemSet& s);

/// Proper and contained in no larger proper ideal.
Check is_maximal(const PartialAdditionTable& t, const ElemSet& s);

/// Every ideal, ordered by size then members.
std::vector<ElemSet> enumerate_ideals(const PartialAdditionTable& t);

std::vector<ElemSet> maximal_ideals(const PartialAdditionTable& t);

struct RieszReport {
  bool riesz = false;
  bool r1 = false;
  std::optional<bool> r2;  // evaluated only when t is not upwards directed
  bool upward_directed = false;
  std::vector<Elem> witness;
  std::string reason;
};

RieszReport is_riesz_ideal(const PartialAdditionTable& t, const ElemSet& ideal);

/// The (R2) condition, evaluated as quantified: i <= a, (a\i)+b defined
/// gives j <= b in I with a+(j/b) defined; i <= a, b+(i/a) defined gives
/// j <= b in I with (b\j)+a defined.
Check check_r2(const PartialAdditionTable& t, const ElemSet& ideal);

bool is_upward_directed(const PartialAdditionTable& t, std::vector<Elem>* witness = nullptr);

struct Congruence {
  std::vector<ElemSet> classes;       // ordered by smallest member
  std::vector<std::size_t> class_of;  // element id -> class index
};

/// a ~ b iff a\i = b\j for some i <= a, j <= b in I. Refused unless I is a
/// normal Riesz ideal; Inconsistency if ~ is not an equivalence.
Congruence congruence_classes(const PartialAdditionTable& t, const ElemSet& ideal);

struct Quotient {
  PartialAdditionTable table;  // class names "{x,y}"; unit [1] when t has one and I is proper
  Congruence congruence;
  bool condition_l = false;
  bool linear = false;  // quotient order is total
};

/// E/~_I. Inconsistency when [a]+[b] is not well defined or (L) disagrees
/// with linearity.
Quotient quotient(const PartialAdditionTable& t, const ElemSet& ideal);

/// Ideal generated by I and a through the sums x1+a1+...+xn+an. Refused
/// when (RDP)0 fails.
ElemSet ideal_generated(const PartialAdditionTable& t, const ElemSet& ideal, Elem a);

struct Radicals {
  ElemSet rad;    // intersection of maximal ideals
  ElemSet rad_n;  // intersection of maximal normal ideals
};

Radicals radicals(const PartialAdditionTable& t);

struct TwoValuedPair {
  ElemSet ideal;
  StateVector state;
  bool unitization_verified = false;  // symmetric tables only
};

/// Maximal normal ideals I with E = I u I^- = I u I^~ disjointly, each with
/// its two-valued state. Requires the PEA axioms.
std::vector<TwoValuedPair> two_valued_partition(const PartialAdditionTable& t);

/// True when E = I u I^- = I u I^~ with both unions disjoint.
bool splits_by_complements(const PartialAdditionTable& t, const ElemSet& ideal);

}  // namespace pea
