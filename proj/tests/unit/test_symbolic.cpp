#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pea/builtins.hpp"
#include "pea/errors.hpp"
#include "pea/representation.hpp"
#include "pea/symbolic.hpp"

using namespace pea;

namespace {

constexpr std::size_t kSamples = 2000;

std::string failures(const SampledReport& r) {
  std::string out;
  for (const auto& c : r.checks)
    if (!c.passed) out += c.name + ": " + c.failure + "\n";
  return out;
}

GroupPtr z1() { return int_vector(1, VectorOrder::Pointwise); }

}  // namespace

TEST_CASE("twisted interval") {
  const auto tg = twisted_gamma();
  const auto r = symbolic_suite(*tg, kSamples, 3, 6, false);
  CHECK(failures(r) == "");
  CHECK_FALSE(symbolic_suite(*tg, kSamples, 3, 6, true).passed());
  const GroupElem x{0, 1, 4};
  CHECK(tg->minus(x) == GroupElem{1, -1, -4});
  CHECK(tg->tilde(x) == GroupElem{1, -4, -1});
  CHECK(check_predicate_intersection(*tg, "kernel", {"E0"}, kSamples, 4, 6).passed);
  CHECK(check_predicate_ideal(*tg, "kernel", kSamples, 5, 6).passed);
}

TEST_CASE("lexicographic interval with one level is two-valued") {
  const auto e = lex_product_pea(1, z1(), {0});
  CHECK(failures(symbolic_suite(*e, kSamples, 1, 6, true)) == "");
  std::mt19937_64 rng(2);
  for (int i = 0; i < 200; ++i) {
    const auto x = e->sample(rng, 6);
    CHECK((e->level(x) == 0) == e->holds("E0", x));
  }
}

TEST_CASE("three-level interval over Z^2") {
  const auto e = lex_product_pea(3, int_vector(2, VectorOrder::Pointwise), {0, 0});
  CHECK(e->levels() == 3);
  CHECK(failures(symbolic_suite(*e, kSamples, 7, 6, true)) == "");
  CHECK(check_condition_star(*e, kSamples, 8, 4).passed);
  CHECK(check_cyclic_uniqueness(*e, {1, 0, 0}, kSamples, 9, 1).passed);
}

TEST_CASE("central offset keeps the twisted interval symmetric") {
  const auto e = lex_product_pea(2, twisted_z3(), {0, 1, 1});
  CHECK(failures(symbolic_suite(*e, kSamples, 11, 6, true)) == "");
}

TEST_CASE("the table-based fixtures") {
  const auto e46 = example46();
  CHECK(failures(symbolic_suite(*e46, kSamples, 12, 6, true)) == "");
  const auto e47 = example47(z1());
  CHECK(failures(symbolic_suite(*e47, kSamples, 13, 6, true)) == "");
  CHECK(check_predicate_intersection(*e47, "E0", {"I_a", "I_b"}, kSamples, 14, 6).passed);
  CHECK(check_predicate_ideal(*e47, "I_a", kSamples, 15, 6).passed);
}

TEST_CASE("builtin lookup") {
  CHECK(builtin_pea("diamond").table.has_value());
  CHECK(builtin_pea("chain:4").table->size() == 5);
  CHECK(builtin_pea("twisted_gamma").symbolic != nullptr);
  CHECK(builtin_pea("example47:z:2").symbolic != nullptr);
  CHECK_THROWS_AS(builtin_pea("nonsense"), InputError);
}

TEST_CASE("representation of an interval in Z lex Z") {
  const auto e = lex_product_pea(2, z1(), {0});
  const StrongRepresentation rep(e, {1, 0}, 500, 1);
  std::mt19937_64 rng(4);
  for (int i = 0; i < 200; ++i) {
    const auto x = e->sample(rng, 6);
    CHECK(rep.apply(x) == x);
  }
  CHECK(failures(rep.verify(kSamples, 5, 6)) == "");
}

TEST_CASE("representation of an interval in Z lex Z^2") {
  const auto e = lex_product_pea(3, int_vector(2, VectorOrder::Pointwise), {0, 0});
  const StrongRepresentation rep(e, {1, 0, 0}, 500, 1);
  CHECK(rep.apply({2, 1, -4}) == GroupElem{2, 1, -4});
}

TEST_CASE("representation through an obfuscated presentation") {
  const auto h = obfuscated_lex_z();
  const auto e = std::make_shared<IntervalPea>(h, obfuscate({2, 0}), "obfuscated");
  const StrongRepresentation rep(e, obfuscate({1, 0}), 500, 1);
  const auto r = rep.verify(kSamples, 6, 6);
  CHECK(failures(r) == "");
  const GroupElem x = obfuscate({1, 5});
  CHECK(rep.preimage(rep.apply(x)) == x);
}

TEST_CASE("representation preconditions") {
  const auto e = lex_product_pea(2, z1(), {0});
  CHECK_THROWS_AS(StrongRepresentation(e, {0, 1}, 100, 1), NotCyclic);
  CHECK_THROWS_AS(StrongRepresentation(e, {2, 0}, 100, 1), NotCyclic);
  const auto tw = lex_product_pea(1, twisted_z3(), {0, 0, 0});
  CHECK_NOTHROW(StrongRepresentation(tw, {1, 0, 0, 0}, 100, 1));
}

TEST_CASE("lifted homomorphisms") {
  const auto z = z1();
  const auto id = lift_group_hom(z, z, [](const GroupElem& g) { return g; }, 2);
  CHECK(id.apply({1, 7}) == GroupElem{1, 7});
  const auto dbl = lift_group_hom(z, z, [](const GroupElem& g) { return GroupElem{2 * g[0]}; }, 2);
  CHECK(dbl.apply({1, 3}) == GroupElem{1, 6});
  CHECK(failures(dbl.verify(kSamples, 1, 6)) == "");
  const auto zero = lift_group_hom(z, z, [](const GroupElem&) { return GroupElem{0}; }, 2);
  CHECK(zero.apply({2, -9}) == GroupElem{2, 0});
  CHECK(failures(zero.verify(kSamples, 2, 6)) == "");
  CHECK_THROWS_AS(lift_group_hom(z, z, [](const GroupElem& g) { return GroupElem{g[0] * g[0]}; }, 2), Refused);
}

TEST_CASE("universal group extension") {
  const auto z = z1();
  const auto e = lex_product_pea(2, z, {0});
  const auto ident = universal_group_extension({e, lex_extension(z), [](const GroupElem& x) { return x; }});
  CHECK(ident.apply({1, -3}) == GroupElem{1, -3});
  CHECK(failures(ident.verify(500, 1, 6)) == "");

  const auto level = universal_group_extension({e, z, [](const GroupElem& x) { return GroupElem{x[0]}; }});
  CHECK(level.from_difference(5, {2}, {7}) == GroupElem{5});
  CHECK(failures(level.verify(500, 2, 6)) == "");

  const auto z2 = int_vector(2, VectorOrder::Pointwise);
  const auto plain = universal_group_extension({e, z2, [](const GroupElem& x) { return x; }});
  CHECK(plain.apply({3, -4}) == GroupElem{3, -4});
  CHECK(plain.from_difference(1, {5}, {2}) == GroupElem{1, 3});
  CHECK(plain.from_left_difference(1, {2}, {5}) == GroupElem{1, 3});
  CHECK(failures(plain.verify(500, 3, 6)) == "");

  const auto tw = lex_product_pea(2, twisted_z3(), {0, 1, 1});
  CHECK_THROWS_AS(universal_group_extension({tw, z, [](const GroupElem& x) { return GroupElem{x[0]}; }}), Refused);
}
