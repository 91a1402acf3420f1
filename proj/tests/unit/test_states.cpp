#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pea/builtins.hpp"
#include "pea/corpus.hpp"
#include "pea/states.hpp"

using namespace pea;

namespace {

StateVector boolean4_state(const PartialAdditionTable& b, Rational a) {
  StateVector s{std::vector<Rational>(b.size(), 0)};
  s.values[b.at("a").id] = a;
  s.values[b.at("a'").id] = 1 - a;
  s.values[b.unit().id] = 1;
  return s;
}

}  // namespace

TEST_CASE("state space of the diamond is one point") {
  const auto d = diamond();
  const auto sp = solve_state_space(d);
  CHECK(sp.dimension() == 0);
  REQUIRE(sp.extremal.size() == 1);
  CHECK(sp.extremal[0][d.at("a")] == Rational(1, 2));
  CHECK(sp.extremal[0][d.at("b")] == Rational(1, 2));
}

TEST_CASE("state space of boolean4 is a segment") {
  const auto b = boolean4();
  const auto sp = solve_state_space(b);
  CHECK(sp.dimension() == 1);
  REQUIRE(sp.extremal.size() == 2);
  CHECK(sp.extremal[0][b.at("a")] + sp.extremal[1][b.at("a")] == 1);
}

TEST_CASE("the 2-chain has a unique state") {
  CHECK(solve_state_space(chain(1)).extremal.size() == 1);
}

TEST_CASE("extremal states match brute-force vertex enumeration") {
  for (const auto& t : pea_corpus(7)) {
    std::set<std::vector<Rational>> got;
    for (const auto& s : solve_state_space(t).extremal) got.insert(s.values);
    CHECK(got == oracle::state_vertices(t));
  }
}

TEST_CASE("discrete states") {
  const auto b = boolean4();
  CHECK(enumerate_discrete_states(b, 1).size() == 2);
  const auto two = enumerate_discrete_states(b, 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0][b.at("a")] == Rational(1, 2));
  CHECK(two[0][b.at("a'")] == Rational(1, 2));
  CHECK(enumerate_discrete_states(diamond(), 1).empty());
  CHECK(enumerate_discrete_states(diamond(), 2).size() == 1);
}

TEST_CASE("discrete states match exhaustive labelings") {
  for (const auto& t : pea_corpus(6))
    for (std::size_t n = 1; n <= 4; ++n) {
      std::set<std::vector<std::size_t>> got;
      for (const auto& l : additive_labelings(t, n)) got.insert(l);
      CHECK(got == oracle::discrete_labelings(t, n));
      CHECK(enumerate_discrete_states(t, n).size() == got.size());
    }
}

TEST_CASE("classification") {
  const auto b = boolean4();
  const auto c = classify_state(b, boolean4_state(b, Rational(2, 5)));
  CHECK_FALSE(c.discrete);
  CHECK_FALSE(c.cond_ii);
  CHECK_FALSE(c.cond_iii);
  REQUIRE(c.gap.has_value());
  CHECK((*c.gap)[2] == Rational(1, 5));
  CHECK(state_error(b, boolean4_state(b, Rational(2, 5))).empty());

  const auto h = classify_state(b, boolean4_state(b, Rational(1, 2)));
  CHECK(h.discrete);
  CHECK(h.n == 2);
  CHECK(h.cond_i);
  CHECK(h.cond_ii);
  CHECK(h.cond_iii);

  const auto z = classify_state(b, boolean4_state(b, 0));
  CHECK(z.discrete);
  CHECK(z.n == 1);
}

TEST_CASE("invalid states are reported") {
  const auto b = boolean4();
  auto s = boolean4_state(b, Rational(1, 3));
  s.values[b.at("a'").id] = Rational(1, 3);
  CHECK_FALSE(state_error(b, s).empty());
}

TEST_CASE("extremality") {
  const auto b = boolean4();
  const auto half = is_extremal(b, boolean4_state(b, Rational(1, 2)));
  CHECK_FALSE(half.extremal);
  REQUIRE(half.witness.has_value());
  CHECK(half.witness->first[b.at("a")] == 0);
  CHECK(half.witness->second[b.at("a")] == 1);
  CHECK(is_extremal(b, boolean4_state(b, 0)).extremal);
  const auto d = diamond();
  CHECK(is_extremal(d, solve_state_space(d).extremal[0]).extremal);
}

TEST_CASE("two-valued states are extremal across the corpus") {
  for (const auto& t : pea_corpus(6))
    for (const auto& s : enumerate_discrete_states(t, 1)) CHECK(is_extremal(t, s).extremal);
}

TEST_CASE("kernels") {
  const auto b = boolean4();
  CHECK(kernel(b, boolean4_state(b, 0)) == by_name(b, {"0", "a"}));
  const auto d = diamond();
  CHECK(kernel(d, solve_state_space(d).extremal[0]) == ElemSet{d.zero()});
}
