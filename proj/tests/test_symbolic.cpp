#include <doctest.h>

#include "moufang/catalog.hpp"
#include "moufang/errors.hpp"
#include "moufang/series.hpp"
#include "moufang/symbolic.hpp"

using namespace moufang;

TEST_CASE("three-element classification matrix") {
  const LoopTable& c81 = build(ConstructionSpec::parse("cml81"));
  const LoopTable z3 = build(ConstructionSpec::parse("cyclic:3"));

  const ClassificationReport a = classify(SymbolicCML(1, c81));
  CHECK(a.min_condition);
  CHECK(a.infinite);
  REQUIRE(a.prop_2_17.available);
  CHECK(a.prop_2_17.holds);
  CHECK(a.nilpotency_class_value == 2);
  CHECK(a.solvability_class_value == 2);

  const ClassificationReport b = classify(SymbolicCML(2, c81));
  REQUIRE(b.prop_2_17.available);
  CHECK(!b.prop_2_17.holds);
  CHECK(b.prop_2_17.reason == "more than one quasicyclic factor");

  const ClassificationReport c = classify(SymbolicCML(1, z3));
  REQUIRE(c.prop_2_17.available);
  CHECK(!c.prop_2_17.holds);
  CHECK(c.prop_2_17.reason == "finite part is associative");
  CHECK(!c.cor_2_11_steady.holds);
}

TEST_CASE("divisible part and steadiness criterion") {
  const LoopTable& c81 = build(ConstructionSpec::parse("cml81"));
  CHECK(divisible_part(SymbolicCML(0, c81)) == 0);
  CHECK(divisible_part(SymbolicCML(3, c81)) == 3);
  for (int d : {0, 1, 2, 5}) {
    const ClassificationReport r = classify(SymbolicCML(d, c81));
    CHECK(r.cor_2_11_steady.holds == (d == 0));
    CHECK(r.infinite == (d >= 1));
    CHECK((divisible_part(SymbolicCML(d, c81)) == 0) ==
          r.cor_2_11_steady.holds);
  }
}

TEST_CASE("classes of the symbolic loop equal classes of the finite part") {
  for (const auto& spec : catalog_specs()) {
    const LoopTable K = build(spec);
    if (K.order() > kDefaultEnumerationBound) {
      continue;
    }
    CAPTURE(spec.label());
    const ClassificationReport r = classify(SymbolicCML(2, K));
    CHECK(r.nilpotency_class_value == nilpotency_class(K));
    CHECK(r.solvability_class_value == solvability_class(K));
  }
}

TEST_CASE("minimal-of-class leg of the product classification") {
  const LoopTable& c81 = build(ConstructionSpec::parse("cml81"));
  const ClassificationReport r = classify(SymbolicCML(1, c81));
  REQUIRE(r.cor_2_7.available);
  CHECK(r.cor_2_7.holds);
  CHECK(r.cor_2_7_class == 2);

  const ClassificationReport r0 = classify(SymbolicCML(0, c81));
  REQUIRE(r0.cor_2_7.available);
  CHECK(!r0.cor_2_7.holds);
  CHECK(r0.cor_2_7.reason == "no quasicyclic factor");
}

TEST_CASE("enumeration-dependent verdicts go unavailable past the bound") {
  const LoopTable p243 = build(ConstructionSpec::parse("product:cml81,cyclic:3"));
  const ClassificationReport r = classify(SymbolicCML(1, p243), 100);
  CHECK(!r.prop_2_17.available);
  CHECK(!r.cor_2_7.available);
  // The rest of the report still stands.
  CHECK(r.min_condition);
  CHECK(r.nilpotency_class_value == 2);
  CHECK(r.cor_2_11_steady.holds == false);

  // d != 1 short-circuits without enumeration, so it stays available.
  const ClassificationReport r2 = classify(SymbolicCML(2, p243), 100);
  REQUIRE(r2.prop_2_17.available);
  CHECK(!r2.prop_2_17.holds);
}

TEST_CASE("invalid symbolic loops are rejected") {
  const LoopTable& c81 = build(ConstructionSpec::parse("cml81"));
  CHECK_THROWS_AS(SymbolicCML(-1, c81), InputError);
  CHECK_THROWS_AS(SymbolicCML(1, fixture_non_moufang()), PreconditionError);
}
