#include <doctest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pea/builtins.hpp"
#include "pea/core_algebra.hpp"
#include "pea/corpus.hpp"
#include "pea/errors.hpp"
#include "pea/rdp.hpp"

using namespace pea;

TEST_CASE("diamond passes the PEA axioms") {
  const auto d = diamond();
  CHECK(check_axioms(d, Kind::Pea).passed());
  CHECK(oracle::is_pea(d));
}

TEST_CASE("1 + a defined violates PE4 with witness a") {
  const auto t = doc(R"({"elements":["0","a","1"],"zero":"0","one":"1","add":[["a","a","1"],["1","a","1"]]})");
  const auto r = check_axioms(t, Kind::Pea);
  REQUIRE(r.violates(Axiom::PE4));
  for (const auto& v : r.violations)
    if (v.axiom == Axiom::PE4) CHECK(std::find(v.witness.begin(), v.witness.end(), t.at("a")) != v.witness.end());
  CHECK_THROWS_AS(require_axioms(t, Kind::Pea), Refused);
}

TEST_CASE("a+b and (a+b)+c defined with b+c undefined violates PE1") {
  const auto t = doc(R"({"elements":["0","a","b","c","d","e"],"zero":"0",
    "add":[["a","b","d"],["d","c","e"]]})");
  const auto r = check_axioms(t, Kind::Gpea);
  REQUIRE(r.violates(Axiom::GP1));
  for (const auto& v : r.violations)
    if (v.axiom == Axiom::GP1) CHECK(v.witness == std::vector<Elem>{t.at("a"), t.at("b"), t.at("c")});
}

TEST_CASE("axiom checker agrees with the definitional oracle on every small partial operation") {
  // all 3^4 * ... tables on {0,x,y,1} with unit laws forced
  const std::vector<std::string> names{"0", "x", "y", "1"};
  std::size_t agree = 0;
  std::vector<int> c(4, -1);
  for (;;) {
    std::vector<std::int16_t> cells(16, -1);
    for (int a = 0; a < 4; ++a) cells[a * 4] = cells[a] = static_cast<std::int16_t>(a);
    cells[1 * 4 + 1] = c[0], cells[1 * 4 + 2] = c[1], cells[2 * 4 + 1] = c[2], cells[2 * 4 + 2] = c[3];
    const PartialAdditionTable t(names, E(0), E(3), cells);
    CHECK(check_axioms(t, Kind::Pea).passed() == oracle::is_pea(t));
    ++agree;
    std::size_t i = 0;
    while (i < 4 && c[i] == 3) c[i++] = -1;
    if (i == 4) break;
    ++c[i];
  }
  CHECK(agree == 625);
}

TEST_CASE("induced order") {
  const auto d = diamond();
  const auto o = induced_order(d);
  const Elem z = d.at("0"), a = d.at("a"), b = d.at("b"), u = d.at("1");
  CHECK(o.less(z, a));
  CHECK(o.less(a, u));
  CHECK(o.less(z, b));
  CHECK(o.less(b, u));
  CHECK_FALSE(o.comparable(a, b));
  for (Elem x : d.elements()) CHECK(o.leq(x, x));
  CHECK(induced_order(chain(3)).is_total());
  CHECK_FALSE(o.is_total());
  for (const auto& t : pea_corpus(6)) {
    const auto ot = induced_order(t);
    for (Elem x : t.elements())
      for (Elem y : t.elements()) CHECK(ot.leq(x, y) == oracle::leq(t, x.id, y.id));
  }
}

TEST_CASE("complements") {
  const auto d = diamond();
  CHECK(complements(d, d.at("a")).minus == d.at("a"));
  CHECK(complements(d, d.at("a")).tilde == d.at("a"));
  const auto b = boolean4();
  CHECK(complements(b, b.at("a")).minus == b.at("a'"));
  CHECK(complements(b, b.at("a")).tilde == b.at("a'"));
  for (const auto& t : pea_corpus(6)) {
    CHECK(complements(t, t.zero()).minus == t.unit());
    CHECK(complements(t, t.zero()).tilde == t.unit());
  }
}

TEST_CASE("symmetry") {
  CHECK(is_symmetric(diamond()).symmetric);
  CHECK(is_symmetric(boolean4()).symmetric);
}

TEST_CASE("isotropic index") {
  const auto d = diamond();
  const auto b = boolean4();
  CHECK(detail::iota_of(d, d.zero()).infinite());
  CHECK(detail::iota_of(d, d.at("a")).value == 2u);
  CHECK(detail::iota_of(b, b.at("a")).value == 1u);
  CHECK(isotropic_data(d).infinit == ElemSet{d.zero()});
}

TEST_CASE("RDP family") {
  const auto d = diamond();
  const auto r = check_rdp0(d);
  CHECK_FALSE(r.holds);
  CHECK(r.witness.size() == 3);
  CHECK(check_rdp0(boolean4()).holds);
  CHECK(check_rdp0(chain(3)).holds);
  CHECK_FALSE(check_rdp(d).holds);
  CHECK(check_rdp(boolean4()).holds);
  CHECK(check_rdp(chain(4)).holds);
  CHECK_FALSE(check_rdp1(d).holds);
  CHECK(check_rdp1(boolean4()).holds);
  for (std::size_t n = 1; n <= 6; ++n) CHECK(check_rdp1(chain(n)).holds);
}

TEST_CASE("RDP implies RDP0 and RDP1 implies RDP across the corpus") {
  for (const auto& t : pea_corpus(6)) {
    const auto r = check_all_rdp(t);
    if (r.rdp.holds) CHECK(r.rdp0.holds);
    if (r.rdp1.holds) CHECK(r.rdp.holds);
  }
}

TEST_CASE("document round trip is byte-stable") {
  for (const auto& t : pea_corpus(6)) {
    const std::string once = write_document(t);
    const auto back = parse_document(once);
    CHECK(back == t);
    CHECK(write_document(back) == once);
    CHECK(digest(back) == digest(t));
  }
}

TEST_CASE("documents with missing unit-law sums are completed") {
  const auto t = doc(R"({"elements":["0","1"],"zero":"0","one":"1","add":[]})");
  CHECK(t.add(t.zero(), t.unit()) == t.unit());
  CHECK(check_axioms(t, Kind::Pea).passed());
}

TEST_CASE("malformed documents are input errors") {
  CHECK_THROWS_AS(parse_document("not json"), InputError);
  CHECK_THROWS_AS(parse_document(R"({"elements":["0","0"],"zero":"0"})"), InputError);
  CHECK_THROWS_AS(parse_document(R"({"elements":["0","a"],"zero":"z"})"), InputError);
  CHECK_THROWS_AS(parse_document(R"({"elements":["0","a"],"zero":"0","add":[["a","q","a"]]})"), InputError);
  CHECK_THROWS_AS(parse_document(R"({"elements":["0","a"],"zero":"0","add":[["a","0","0"]]})"), InputError);
  CHECK_THROWS_AS(load_document("/nonexistent/file.json"), InputError);
}
