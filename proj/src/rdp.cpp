#include "pea/rdp.hpp"

#include "pea/core_algebra.hpp"
#include "pea/errors.hpp"

namespace pea {

namespace {

bool commute_below(const PartialAdditionTable& t, const OrderRelation& ord, Elem c12, Elem c21) {
  for (Elem x : t.elements()) {
    if (!ord.leq(x, c12)) continue;
    for (Elem y : t.elements()) {
      if (!ord.leq(y, c21)) continue;
      const auto xy = t.add(x, y), yx = t.add(y, x);
      if (!xy || !yx || *xy != *yx) return false;
    }
  }
  return true;
}

// Searches a refinement of a1+a2 = b1+b2. c11 fixes the rest of the matrix.
bool refines(const PartialAdditionTable& t, const OrderRelation& ord, Elem a1, Elem a2, Elem b1,
             Elem b2, bool strong) {
  for (Elem c11 : t.elements()) {
    if (!ord.leq(c11, a1) || !ord.leq(c11, b1)) continue;
    const auto c12 = detail::right_diff(t, c11, a1);
    const auto c21 = detail::right_diff(t, c11, b1);
    if (!c12 || !c21 || !ord.leq(*c21, a2)) continue;
    const auto c22 = detail::right_diff(t, *c21, a2);
    if (!c22 || t.add(*c12, *c22) != b2) continue;
    if (!strong || commute_below(t, ord, *c12, *c21)) return true;
  }
  return false;
}

RdpVerdict check_refinement(const PartialAdditionTable& t, bool strong) {
  require_axioms(t, Kind::Gpea);
  const OrderRelation ord = detail::order_of(t);
  for (Elem a1 : t.elements())
    for (Elem a2 : t.elements()) {
      const auto s = t.add(a1, a2);
      if (!s) continue;
      for (Elem b1 : t.elements()) {
        const auto b2 = detail::right_diff(t, b1, *s);
        if (!b2) continue;
        if (!refines(t, ord, a1, a2, b1, *b2, strong)) return {false, {a1, a2, b1, *b2}};
      }
    }
  return {};
}

}  // namespace

RdpVerdict check_rdp0(const PartialAdditionTable& t) {
  require_axioms(t, Kind::Gpea);
  const OrderRelation ord = detail::order_of(t);
  for (Elem b1 : t.elements())
    for (Elem b2 : t.elements()) {
      const auto s = t.add(b1, b2);
      if (!s) continue;
      for (Elem a : t.elements()) {
        if (!ord.leq(a, *s)) continue;
        bool found = false;
        for (Elem d1 : t.elements()) {
          if (!ord.leq(d1, b1)) continue;
          const auto d2 = detail::right_diff(t, d1, a);
          if (d2 && ord.leq(*d2, b2)) {
            found = true;
            break;
          }
        }
        if (!found) return {false, {a, b1, b2}};
      }
    }
  return {};
}

RdpVerdict check_rdp(const PartialAdditionTable& t) { return check_refinement(t, false); }

RdpVerdict check_rdp1(const PartialAdditionTable& t) { return check_refinement(t, true); }

RdpReport check_all_rdp(const PartialAdditionTable& t) {
  RdpReport r{check_rdp0(t), check_rdp(t), check_rdp1(t)};
  if ((r.rdp1.holds && !r.rdp.holds) || (r.rdp.holds && !r.rdp0.holds))
    throw Inconsistency("Riesz decomposition verdicts contradict rdp1 => rdp => rdp0");
  return r;
}

}  // namespace pea
