#pragma once

#include <algorithm>
#include <string>

#include "pea/document.hpp"
#include "pea/elemset.hpp"
#include "pea/table.hpp"

inline pea::Elem E(std::size_t i) { return pea::Elem{static_cast<std::uint16_t>(i)}; }

inline pea::ElemSet by_name(const pea::PartialAdditionTable& t, std::initializer_list<const char*> names) {
  pea::ElemSet s;
  for (const char* n : names) s.push_back(t.at(n));
  std::sort(s.begin(), s.end());
  return s;
}

inline pea::PartialAdditionTable doc(const std::string& text) { return pea::parse_document(text); }
