#include "pea/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "pea/errors.hpp"

namespace pea {

namespace {

constexpr std::int16_t kUndef = PartialAdditionTable::kUndefined;
constexpr std::int16_t kUnknown = -2;

// Encodes the order relation followed by the cells under a relabeling.
std::vector<std::int16_t> encode(const PartialAdditionTable& t, const OrderRelation& ord,
                                 const std::vector<std::uint16_t>& perm) {
  const std::size_t n = t.size();
  std::vector<std::uint16_t> inv(n);
  for (std::size_t i = 0; i < n; ++i) inv[perm[i]] = static_cast<std::uint16_t>(i);
  std::vector<std::int16_t> code;
  code.reserve(2 * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      code.push_back(ord.leq(Elem{inv[i]}, Elem{inv[j]}) ? 1 : 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto v = t.raw(Elem{inv[i]}, Elem{inv[j]});
      code.push_back(v == kUndef ? kUndef : static_cast<std::int16_t>(perm[static_cast<std::size_t>(v)]));
    }
  return code;
}

// Permutation old -> new minimizing the encoding; zero maps to 0, the unit to n-1.
std::vector<std::uint16_t> canonical_perm(const PartialAdditionTable& t) {
  const std::size_t n = t.size();
  const OrderRelation ord = detail::order_of(t);
  std::vector<std::uint16_t> free_old;
  for (Elem e : t.elements())
    if (e != t.zero() && (!t.has_one() || e != *t.one())) free_old.push_back(e.id);
  std::vector<std::uint16_t> slots(free_old.size());
  std::iota(slots.begin(), slots.end(), std::uint16_t{1});

  std::vector<std::uint16_t> perm(n), best;
  std::vector<std::int16_t> best_code;
  perm[t.zero().id] = 0;
  if (t.has_one()) perm[t.one()->id] = static_cast<std::uint16_t>(n - 1);
  do {
    for (std::size_t i = 0; i < free_old.size(); ++i) perm[free_old[i]] = slots[i];
    auto code = encode(t, ord, perm);
    if (best.empty() || code < best_code) {
      best_code = std::move(code);
      best = perm;
    }
  } while (std::next_permutation(slots.begin(), slots.end()));
  return best;
}

class Generator {
 public:
  Generator(std::size_t n, Kind kind) : n_(n), pea_(kind == Kind::Pea), cells_(n * n, kUnknown) {
    for (std::size_t x = 0; x < n_; ++x) {
      at(0, x) = static_cast<std::int16_t>(x);
      at(x, 0) = static_cast<std::int16_t>(x);
    }
    hi_ = pea_ ? n_ - 2 : n_ - 1;  // last free element
    if (pea_)
      for (std::size_t x = 1; x < n_; ++x) {
        at(x, n_ - 1) = kUndef;
        at(n_ - 1, x) = kUndef;
      }
    for (std::size_t a = 1; a <= hi_; ++a)
      for (std::size_t b = 1; b <= hi_; ++b) vars_.emplace_back(a, b);
  }

  std::vector<PartialAdditionTable> run() {
    search(0);
    std::vector<PartialAdditionTable> out;
    for (const auto& code : found_) out.push_back(decode(code));
    return out;
  }

 private:
  std::int16_t& at(std::size_t a, std::size_t b) { return cells_[a * n_ + b]; }
  std::int16_t get(std::size_t a, std::size_t b) const { return cells_[a * n_ + b]; }

  // 1 = consistent or undecided, 0 = violated.
  bool triple_ok(std::size_t x, std::size_t y, std::size_t z) const {
    std::int16_t lhs, rhs;
    const auto c1 = get(x, y);
    if (c1 == kUnknown) return true;
    if (c1 == kUndef) {
      lhs = kUndef;
    } else {
      lhs = get(static_cast<std::size_t>(c1), z);
      if (lhs == kUnknown) return true;
    }
    const auto d1 = get(y, z);
    if (d1 == kUnknown) return true;
    if (d1 == kUndef) {
      rhs = kUndef;
    } else {
      rhs = get(x, static_cast<std::size_t>(d1));
      if (rhs == kUnknown) return true;
    }
    return lhs == rhs;
  }

  bool consistent_after(std::size_t a, std::size_t b) const {
    const auto v = get(a, b);
    // cancellation along the row and the column
    if (v != kUndef) {
      for (std::size_t k = 1; k < n_; ++k) {
        if (k != b && get(a, k) == v) return false;
        if (k != a && get(k, b) == v) return false;
      }
    }
    for (std::size_t k = 0; k < n_; ++k) {
      if (!triple_ok(a, b, k)) return false;
      if (!triple_ok(k, a, b)) return false;
    }
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y) {
        if (get(x, y) == static_cast<std::int16_t>(a) && !triple_ok(x, y, b)) return false;
        if (get(x, y) == static_cast<std::int16_t>(b) && !triple_ok(a, x, y)) return false;
      }
    if (pea_) {
      const auto one = static_cast<std::int16_t>(n_ - 1);
      // exactly one right complement per row, one left complement per column
      std::size_t row_ones = 0, col_ones = 0;
      bool row_done = true, col_done = true;
      for (std::size_t k = 1; k <= hi_; ++k) {
        row_ones += get(a, k) == one;
        col_ones += get(k, b) == one;
        row_done = row_done && get(a, k) != kUnknown;
        col_done = col_done && get(k, b) != kUnknown;
      }
      if (row_ones > 1 || col_ones > 1) return false;
      if ((row_done && row_ones == 0) || (col_done && col_ones == 0)) return false;
    }
    return true;
  }

  void search(std::size_t k) {
    if (k == vars_.size()) {
      accept();
      return;
    }
    const auto [a, b] = vars_[k];
    auto& cell = at(a, b);
    cell = kUndef;
    if (consistent_after(a, b)) search(k + 1);
    for (std::size_t c = 1; c < n_; ++c) {
      if (c == a || c == b) continue;
      cell = static_cast<std::int16_t>(c);
      if (consistent_after(a, b)) search(k + 1);
    }
    cell = kUnknown;
  }

  PartialAdditionTable decode(const std::vector<std::int16_t>& cells) const {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n_; ++i) names.push_back("e" + std::to_string(i));
    std::optional<Elem> one;
    if (pea_) one = Elem{static_cast<std::uint16_t>(n_ - 1)};
    return PartialAdditionTable(std::move(names), Elem{0}, one, cells);
  }

  void accept() {
    const PartialAdditionTable t = decode(cells_);
    if (!check_axioms(t, pea_ ? Kind::Pea : Kind::Gpea).passed()) return;
    found_.insert(relabel_cells(t, canonical_perm(t)));
  }

  std::vector<std::int16_t> relabel_cells(const PartialAdditionTable& t,
                                          const std::vector<std::uint16_t>& perm) const {
    std::vector<std::int16_t> out(n_ * n_, kUndef);
    for (Elem a : t.elements())
      for (Elem b : t.elements())
        if (auto s = t.add(a, b)) out[std::size_t{perm[a.id]} * n_ + perm[b.id]] = static_cast<std::int16_t>(perm[s->id]);
    return out;
  }

  std::size_t n_;
  bool pea_;
  std::size_t hi_ = 0;
  std::vector<std::int16_t> cells_;
  std::vector<std::pair<std::size_t, std::size_t>> vars_;
  std::set<std::vector<std::int16_t>> found_;
};

}  // namespace

std::vector<std::int16_t> canonical_form(const PartialAdditionTable& t) {
  return encode(t, detail::order_of(t), canonical_perm(t));
}

PartialAdditionTable canonical_table(const PartialAdditionTable& t) {
  const auto perm = canonical_perm(t);
  std::vector<Elem> map;
  for (auto p : perm) map.push_back(Elem{p});
  std::vector<std::string> names;
  for (std::size_t i = 0; i < t.size(); ++i) names.push_back("e" + std::to_string(i));
  return relabel(t, map, std::move(names));
}

std::vector<PartialAdditionTable> generate_peas(std::size_t size) {
  if (size < 2) throw InputError("a PEA has at least two elements");
  if (size > 9) throw TooLarge("exhaustive PEA generation is capped at 9 elements");
  return Generator(size, Kind::Pea).run();
}

std::vector<PartialAdditionTable> generate_gpeas(std::size_t size) {
  if (size < 1) throw InputError("a GPEA has at least one element");
  if (size > 7) throw TooLarge("exhaustive GPEA generation is capped at 7 elements");
  return Generator(size, Kind::Gpea).run();
}

std::vector<PartialAdditionTable> pea_corpus(std::size_t max_size) {
  std::vector<PartialAdditionTable> out;
  for (std::size_t k = 2; k <= max_size; ++k)
    for (auto& t : generate_peas(k)) out.push_back(std::move(t));
  return out;
}

std::vector<PartialAdditionTable> gpea_corpus(std::size_t max_size) {
  std::vector<PartialAdditionTable> out;
  for (std::size_t k = 1; k <= max_size; ++k)
    for (auto& t : generate_gpeas(k)) out.push_back(std::move(t));
  return out;
}

}  // namespace pea
