#include "pea/table.hpp"

#include <algorithm>

#include "pea/errors.hpp"

namespace pea {

PartialAdditionTable::PartialAdditionTable(std::vector<std::string> names, Elem zero,
                                           std::optional<Elem> one,
                                           std::vector<std::int16_t> cells)
    : names_(std::move(names)), zero_(zero), one_(one), cells_(std::move(cells)) {
  const std::size_t n = names_.size();
  if (n == 0) throw InputError("an algebra needs at least the zero element");
  if (n > 4096) throw InputError("table too large");
  if (cells_.size() != n * n) throw InputError("cell count does not match element count");
  if (zero_.id >= n) throw InputError("zero is not an element");
  if (one_ && one_->id >= n) throw InputError("one is not an element");
  if (one_ && *one_ == zero_) throw InputError("zero and one must differ");
  for (std::size_t i = 0; i < n; ++i) {
    if (names_[i].empty()) throw InputError("empty element name");
    if (!index_.emplace(names_[i], static_cast<std::uint16_t>(i)).second)
      throw InputError("duplicate element name '" + names_[i] + "'");
  }
  for (auto v : cells_)
    if (v != kUndefined && (v < 0 || static_cast<std::size_t>(v) >= n))
      throw InputError("sum references an unknown element");
  // unit laws
  for (std::size_t i = 0; i < n; ++i) {
    for (auto idx : {zero_.id * n + i, i * n + zero_.id}) {
      auto& v = cells_[idx];
      if (v == kUndefined) v = static_cast<std::int16_t>(i);
      if (static_cast<std::size_t>(v) != i)
        throw InputError("unit law violated: '" + names_[i] + "' plus zero is '" +
                         names_[static_cast<std::size_t>(v)] + "'");
    }
  }
}

PartialAdditionTable PartialAdditionTable::from_triples(
    std::vector<std::string> names, const std::string& zero,
    const std::optional<std::string>& one,
    const std::vector<std::array<std::string, 3>>& sums) {
  std::unordered_map<std::string, std::uint16_t> idx;
  for (std::size_t i = 0; i < names.size(); ++i) idx.emplace(names[i], static_cast<std::uint16_t>(i));
  auto lookup = [&](const std::string& s) {
    auto it = idx.find(s);
    if (it == idx.end()) throw InputError("unknown element '" + s + "'");
    return it->second;
  };
  const std::size_t n = names.size();
  std::vector<std::int16_t> cells(n * n, kUndefined);
  for (const auto& [a, b, c] : sums) {
    const auto ia = lookup(a), ib = lookup(b), ic = lookup(c);
    auto& cell = cells[std::size_t{ia} * n + ib];
    if (cell != kUndefined && cell != static_cast<std::int16_t>(ic))
      throw InputError("conflicting sums for '" + a + "' + '" + b + "'");
    cell = static_cast<std::int16_t>(ic);
  }
  const Elem z{lookup(zero)};
  std::optional<Elem> o;
  if (one) o = Elem{lookup(*one)};
  return PartialAdditionTable(std::move(names), z, o, std::move(cells));
}

Elem PartialAdditionTable::unit() const {
  if (!one_) throw Refused("the algebra has no unit (GPEA)");
  return *one_;
}

std::optional<Elem> PartialAdditionTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return Elem{it->second};
}

Elem PartialAdditionTable::at(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw InputError("unknown element '" + std::string(name) + "'");
}

std::string PartialAdditionTable::names_of(const ElemSet& s) const {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += name(s[i]);
  }
  return out + "}";
}

PartialAdditionTable TableBuilder::build(std::vector<std::string> names, std::size_t zero,
                                         std::optional<std::size_t> one) const {
  std::optional<Elem> o;
  if (one) o = Elem{static_cast<std::uint16_t>(*one)};
  return PartialAdditionTable(std::move(names), Elem{static_cast<std::uint16_t>(zero)}, o, cells_);
}

PartialAdditionTable relabel(const PartialAdditionTable& t, const std::vector<Elem>& perm,
                             std::vector<std::string> new_names) {
  const std::size_t n = t.size();
  std::vector<std::int16_t> cells(n * n, PartialAdditionTable::kUndefined);
  for (Elem a : t.elements())
    for (Elem b : t.elements())
      if (auto s = t.add(a, b))
        cells[std::size_t{perm[a.id].id} * n + perm[b.id].id] = static_cast<std::int16_t>(perm[s->id].id);
  std::optional<Elem> one;
  if (t.one()) one = perm[t.one()->id];
  return PartialAdditionTable(std::move(new_names), perm[t.zero().id], one, std::move(cells));
}

PartialAdditionTable restrict_to(const PartialAdditionTable& t, const ElemSet& s) {
  std::vector<std::int16_t> pos(t.size(), -1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < s.size(); ++i) {
    pos[s[i].id] = static_cast<std::int16_t>(i);
    names.push_back(t.name(s[i]));
  }
  if (pos[t.zero().id] < 0) throw InputError("restriction must contain zero");
  const std::size_t m = s.size();
  std::vector<std::int16_t> cells(m * m, PartialAdditionTable::kUndefined);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (auto c = t.add(s[i], s[j]); c && pos[c->id] >= 0) cells[i * m + j] = pos[c->id];
  return PartialAdditionTable(std::move(names), Elem{static_cast<std::uint16_t>(pos[t.zero().id])},
                              std::nullopt, std::move(cells));
}

bool is_isomorphism(const PartialAdditionTable& a, const PartialAdditionTable& b,
                    const std::vector<Elem>& map) {
  if (a.size() != b.size() || map.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (Elem m : map) {
    if (m.id >= b.size() || hit[m.id]) return false;
    hit[m.id] = true;
  }
  if (map[a.zero().id] != b.zero()) return false;
  if (a.has_one() != b.has_one()) return false;
  if (a.has_one() && map[a.one()->id] != *b.one()) return false;
  for (Elem x : a.elements())
    for (Elem y : a.elements()) {
      const auto s = a.add(x, y);
      const auto t = b.add(map[x.id], map[y.id]);
      if (s.has_value() != t.has_value()) return false;
      if (s && map[s->id] != *t) return false;
    }
  return true;
}

}  // namespace pea
