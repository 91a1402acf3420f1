#pragma once

#include "pea/groups.hpp"
#include "pea/table.hpp"

namespace pea {

/// The unitization E u E#: rules (i)-(iii), sharp copies named "x#", unit
/// 0#. Throws NonSymmetric unless the GPEA satisfies condition (C), and
/// Inconsistency if the result is not a symmetric PEA containing E as an
/// order ideal.
PartialAdditionTable unitize(const PartialAdditionTable& gpea);

namespace detail {
/// The three rules applied without any precondition or post-check.
PartialAdditionTable unitize_rules(const PartialAdditionTable& gpea);
}  // namespace detail

/// True when `s` is downward closed and closed under + in t, and the order
/// of t restricted to s equals the order of restrict_to(t, s).
bool is_order_ideal_embedding(const PartialAdditionTable& t, const ElemSet& s,
                              const PartialAdditionTable& inner);

/// Gamma(G, u) = [0, u] enumerated inside the box [-bound, bound]^k.
/// Refused when an interval element touches the box (the interval may be
/// infinite); TooLarge when the box exceeds one million points.
PartialAdditionTable gamma_interval_finite(const PoGroup& g, const GroupElem& u, long bound = 16);

}  // namespace pea
