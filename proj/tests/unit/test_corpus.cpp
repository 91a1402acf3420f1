#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pea/builtins.hpp"
#include "pea/corpus.hpp"

using namespace pea;

TEST_CASE("corpus sizes agree with brute-force generation") {
  for (std::size_t k = 2; k <= 5; ++k) CHECK(generate_peas(k).size() == oracle::small_peas(k).size());
}

TEST_CASE("corpus members are pairwise non-isomorphic PEAs") {
  for (std::size_t k = 2; k <= 6; ++k) {
    const auto v = generate_peas(k);
    for (std::size_t i = 0; i < v.size(); ++i) {
      CHECK(oracle::is_pea(v[i]));
      for (std::size_t j = i + 1; j < v.size(); ++j) CHECK_FALSE(oracle::isomorphic(v[i], v[j]));
    }
  }
}

TEST_CASE("canonical form is invariant under relabeling") {
  const auto b = boolean4();
  const auto swapped = relabel(b, {E(0), E(2), E(1), E(3)}, {"0", "x", "y", "1"});
  CHECK(canonical_form(b) == canonical_form(swapped));
  CHECK(canonical_form(b) != canonical_form(diamond()));
  CHECK(oracle::isomorphic(canonical_table(diamond()), diamond()));
}

TEST_CASE("builtins are in the corpus") {
  std::set<std::vector<std::int16_t>> forms;
  for (const auto& t : pea_corpus(6)) forms.insert(canonical_form(t));
  CHECK(forms.count(canonical_form(diamond())) == 1);
  CHECK(forms.count(canonical_form(boolean4())) == 1);
  for (std::size_t n = 1; n <= 5; ++n) CHECK(forms.count(canonical_form(chain(n))) == 1);
}

TEST_CASE("small GPEA counts") {
  CHECK(generate_gpeas(1).size() == 1);
  CHECK(generate_gpeas(2).size() == 1);
  for (std::size_t k = 1; k <= 4; ++k)
    for (const auto& g : generate_gpeas(k)) CHECK_FALSE(g.has_one());
}
