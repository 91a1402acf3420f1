#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pea/builtins.hpp"
#include "pea/corpus.hpp"
#include "pea/decompositions.hpp"
#include "pea/errors.hpp"
#include "pea/ideals.hpp"

using namespace pea;

TEST_CASE("finding decompositions") {
  const auto d = diamond();
  const auto dd = find_decompositions(d, 2);
  REQUIRE(dd.size() == 1);
  CHECK(dd[0].parts == std::vector<ElemSet>{{d.zero()}, by_name(d, {"a", "b"}), {d.unit()}});
  CHECK(find_decompositions(boolean4(), 1).size() == 2);
  // a -> 1, a' -> 2 and its mirror are surjective onto {0,1,2,3}
  CHECK(find_decompositions(boolean4(), 3).size() == 2);
  CHECK(find_decompositions(boolean4(), 4).empty());
}

TEST_CASE("decompositions and discrete states are paired") {
  const auto b = boolean4();
  const auto p = decomposition_state_bijection(b, 2);
  CHECK(p.bijective());
  REQUIRE(p.pairs.size() == 1);
  CHECK(p.pairs[0].second[b.at("a")] == Rational(1, 2));
  CHECK(decomposition_state_bijection(diamond(), 2).pairs.size() == 1);
  const auto none = decomposition_state_bijection(diamond(), 1);
  CHECK(none.pairs.empty());
  CHECK(none.bijective());
}

TEST_CASE("decomposition counts equal labeling counts") {
  for (const auto& t : pea_corpus(6))
    for (std::size_t n = 1; n <= 5; ++n) CHECK(find_decompositions(t, n).size() == oracle::discrete_labelings(t, n).size());
}

TEST_CASE("clause violations are reported") {
  const auto b = boolean4();
  std::vector<std::size_t> labels(b.size(), 0);
  labels[b.unit().id] = 1;
  CHECK_FALSE(decomposition_error(b, decomposition_from_labels(labels, 1)).empty());
  CHECK(decomposition_error(b, find_decompositions(b, 1)[0]).empty());
}

TEST_CASE("comparability") {
  const auto b = boolean4();
  for (const auto& d : find_decompositions(b, 1)) {
    const auto c = check_comparability(b, d);
    CHECK_FALSE(c.chain);
    CHECK_FALSE(c.sums_exist);
    CHECK(c.agree());
  }
  const auto dm = diamond();
  const auto c = check_comparability(dm, find_decompositions(dm, 2)[0]);
  CHECK(c.chain);
  CHECK(c.sums_exist);
  CHECK(c.consequences_checked);
  CHECK(c.e0_is_infinit);
  CHECK(c.consequences_hold());
}

TEST_CASE("n-perfect") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(is_n_perfect(chain(n), n).perfect);
  CHECK_FALSE(is_n_perfect(boolean4(), 2).perfect);
  const auto d = is_n_perfect(diamond(), 2);
  CHECK(d.perfect);
  REQUIRE(d.maximal_ideals.size() == 1);
}

TEST_CASE("directed parts") {
  const auto dm = diamond();
  CHECK_FALSE(check_condition_e(dm, find_decompositions(dm, 2)[0]).holds);
  for (std::size_t n = 1; n <= 5; ++n) CHECK(check_condition_e(chain(n), find_decompositions(chain(n), n)[0]).holds);
  for (const auto& d : find_decompositions(boolean4(), 1)) CHECK(check_condition_e(boolean4(), d).holds);
}

TEST_CASE("canonical chain of a perfect chain") {
  const auto c3 = chain(3);
  const auto r = canonical_chain_report(c3, 3);
  CHECK(r.c == E(1));
  CHECK(r.multiples == all_elements(c3));
  CHECK(r.quotient_is_chain);
  CHECK(canonical_chain_report(chain(2), 2).c == E(1));
  CHECK_THROWS_AS(canonical_chain_report(diamond(), 2), Refused);
}

TEST_CASE("bottom part of an n-perfect table is the radical and a Riesz ideal") {
  for (const auto& t : pea_corpus(6))
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto p = is_n_perfect(t, n);
      if (!p.perfect) continue;
      const auto& e0 = p.certificate->parts[0];
      CHECK(is_riesz_ideal(t, e0).riesz);
      CHECK(radicals(t).rad == e0);
      CHECK(radicals(t).rad_n == e0);
    }
}
