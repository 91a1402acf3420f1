#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <ranges>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pea {

/// Dense index of an element inside one PartialAdditionTable.
struct Elem {
  std::uint16_t id = 0;
  constexpr auto operator<=>(const Elem&) const = default;
};

using ElemSet = std::vector<Elem>;  // sorted by index, no duplicates

/// A finite GPEA or PEA given as an explicit partial binary operation.
///
/// Immutable after construction. Construction enforces the structural
/// invariants: known references, distinct names, 0 != 1 when a unit is
/// present, and the unit laws a+0 = 0+a = a. A missing unit-law entry is
/// filled in; a conflicting one is rejected.
class PartialAdditionTable {
 public:
  static constexpr std::int16_t kUndefined = -1;

  /// `cells` is row-major n*n with kUndefined for undefined sums.
  PartialAdditionTable(std::vector<std::string> names, Elem zero,
                       std::optional<Elem> one, std::vector<std::int16_t> cells);

  /// Name-based construction, as used by the document loader.
  static PartialAdditionTable from_triples(
      std::vector<std::string> names, const std::string& zero,
      const std::optional<std::string>& one,
      const std::vector<std::array<std::string, 3>>& sums);

  std::size_t size() const { return names_.size(); }
  Elem zero() const { return zero_; }
  std::optional<Elem> one() const { return one_; }
  bool has_one() const { return one_.has_value(); }
  /// The unit of a PEA; throws Refused on a GPEA.
  Elem unit() const;

  std::optional<Elem> add(Elem a, Elem b) const {
    const auto v = cells_[cell(a, b)];
    if (v == kUndefined) return std::nullopt;
    return Elem{static_cast<std::uint16_t>(v)};
  }
  bool defined(Elem a, Elem b) const { return cells_[cell(a, b)] != kUndefined; }
  std::int16_t raw(Elem a, Elem b) const { return cells_[cell(a, b)]; }
  const std::vector<std::int16_t>& cells() const { return cells_; }

  const std::string& name(Elem e) const { return names_[e.id]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Elem> find(std::string_view name) const;
  /// Like find() but throws InputError for unknown names.
  Elem at(std::string_view name) const;

  auto elements() const {
    return std::views::iota(std::size_t{0}, names_.size()) |
           std::views::transform([](std::size_t i) { return Elem{static_cast<std::uint16_t>(i)}; });
  }

  std::string names_of(const ElemSet& s) const;

  friend bool operator==(const PartialAdditionTable& a, const PartialAdditionTable& b) {
    return a.names_ == b.names_ && a.zero_ == b.zero_ && a.one_ == b.one_ && a.cells_ == b.cells_;
  }

 private:
  std::size_t cell(Elem a, Elem b) const { return std::size_t{a.id} * names_.size() + b.id; }

  std::vector<std::string> names_;
  Elem zero_;
  std::optional<Elem> one_;
  std::vector<std::int16_t> cells_;
  std::unordered_map<std::string, std::uint16_t> index_;
};

/// Incrementally fills the cells of a table by index.
class TableBuilder {
 public:
  explicit TableBuilder(std::size_t n) : n_(n), cells_(n * n, PartialAdditionTable::kUndefined) {}
  TableBuilder& set(std::size_t a, std::size_t b, std::size_t sum) {
    cells_[a * n_ + b] = static_cast<std::int16_t>(sum);
    return *this;
  }
  PartialAdditionTable build(std::vector<std::string> names, std::size_t zero,
                             std::optional<std::size_t> one) const;

 private:
  std::size_t n_;
  std::vector<std::int16_t> cells_;
};

/// Applies a bijection `perm` (old index -> new index) and new names.
PartialAdditionTable relabel(const PartialAdditionTable& t, const std::vector<Elem>& perm,
                             std::vector<std::string> new_names);

/// Restriction of `t` to the elements of `s` (which must contain zero);
/// sums leaving `s` become undefined. The result has no unit.
PartialAdditionTable restrict_to(const PartialAdditionTable& t, const ElemSet& s);

/// True when `map` (index in a -> index in b) is a bijection preserving
/// zero, unit and the partial operation in both directions.
bool is_isomorphism(const PartialAdditionTable& a, const PartialAdditionTable& b,
                    const std::vector<Elem>& map);

}  // namespace pea
