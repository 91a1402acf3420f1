#pragma once

#include <algorithm>
#include <iterator>

#include "pea/table.hpp"

namespace pea {

inline ElemSet make_set(ElemSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline bool contains(const ElemSet& s, Elem e) { return std::binary_search(s.begin(), s.end(), e); }

inline bool is_subset(const ElemSet& a, const ElemSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline ElemSet set_intersection(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline ElemSet all_elements(const PartialAdditionTable& t) {
  ElemSet out;
  for (Elem e : t.elements()) out.push_back(e);
  return out;
}

}  // namespace pea
