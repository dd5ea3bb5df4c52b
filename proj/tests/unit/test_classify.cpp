#include "coquasi/classify.hpp"
#include "coquasi/json_io.hpp"
#include "doctest.h"

using namespace coquasi;

TEST_CASE("classification over cyclic groups") {
  for (int n = 2; n <= 5; ++n) {
    const auto g = FiniteAbelianGroup::cyclic(n);
    const auto rep = classify_zn(n, RamificationDatum::parse(g, "1:1"));
    REQUIRE(rep.results.size() == static_cast<std::size_t>(n));
    CHECK(rep.results[0].phi_trivial);
    CHECK(rep.results[0].rform_count == (n % 2 == 0 ? 2 : 1));
    CHECK(rep.results[0].verified);
    for (int s = 1; s < n; ++s) CHECK(rep.results[static_cast<std::size_t>(s)].rform_count == 0);
    CHECK(rep.forced_s_zero);
  }
  const auto g = FiniteAbelianGroup::cyclic(4);
  CHECK_THROWS_AS(classify_zn(4, RamificationDatum::parse(g, "2:1")), NotConnected);
}

TEST_CASE("classification over a product group") {
  const auto g = FiniteAbelianGroup::parse("2,2");
  const auto rep = classify_abelian_family(RamificationDatum::parse(g, "1,0:1;0,1:1"));
  REQUIRE(rep.results.size() == 4);
  CHECK(rep.results[0].rform_count == 8);
  CHECK(rep.results[0].verified);
  for (std::size_t i = 1; i < 4; ++i) CHECK(rep.results[i].rform_count == 0);
  CHECK(rep.forced_s_zero);
}

TEST_CASE("limit truncates materialization but not the count") {
  const auto g = FiniteAbelianGroup::parse("2,2");
  ClassifyOptions opts;
  opts.limit = 3;
  const auto rep = classify_abelian(RamificationDatum::parse(g, "1,0:1;0,1:1"), Associator(g, 8), opts);
  CHECK(rep.results[0].rform_count == 8);
  CHECK(rep.results[0].truncated);
  CHECK(rep.results[0].structures_verified == 3);
}

TEST_CASE("Taft relations") {
  for (int n : {2, 4, 6}) {
    const auto t = taft_check(n, 3);
    CHECK(t.rform_valid);
    CHECK(t.alpha_squared_zero);
    CHECK(t.anticommutes);
    CHECK(t.group_relation);
    CHECK(t.control_fails);
    CHECK(t.ok());
  }
  CHECK_THROWS_AS(taft_check(3), OddN);
  CHECK_THROWS_AS(taft_check(2, 1), TruncationOverflow);
}

TEST_CASE("nonabelian obstruction") {
  for (const char* name : {"S3", "D4", "Q8"}) {
    const auto t = MultiplicationTable::builtin(name);
    CHECK_NOTHROW(t.validate());
    const auto w = nonabelian_obstruction(t);
    REQUIRE(w.has_value());
    CHECK(t.mul(w->g, w->h) == w->gh);
    CHECK(t.mul(w->h, w->g) == w->hg);
    CHECK(w->gh != w->hg);
  }
  for (const char* name : {"Z1", "Z8", "2,4", "2,2,2"}) CHECK_FALSE(nonabelian_obstruction(MultiplicationTable::builtin(name)));
  CHECK_THROWS_AS(MultiplicationTable::builtin("A5x"), ParseError);

  MultiplicationTable bad{"bad", {"a", "b"}, {{0, 0}, {1, 1}}};
  CHECK_THROWS_AS(bad.validate(), NotAGroup);
}

TEST_CASE("table JSON round trip") {
  const auto phi = phi_s(4, 3).lifted(32);
  CHECK(json_io::parse_associator(json_io::table(phi)) == phi);
  RForm r(FiniteAbelianGroup::parse("2,2"), 8);
  r.set({1, 2}, 4);
  r.set({2, 1}, 4);
  CHECK(json_io::parse_rform(json_io::table(r)) == r);
  CHECK_THROWS_AS(json_io::parse_rform(json_io::Json::parse(R"({"group": [2], "entries": 3})")), ParseError);
  const auto t = MultiplicationTable::builtin("Q8");
  const auto back = json_io::parse_multiplication_table(json_io::multiplication_table(t));
  CHECK(back.table == t.table);
}
