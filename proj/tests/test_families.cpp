// Subset algebra: masks, carriers, set families, principal filters, grills.
#include "convlab/families.hpp"

#include "doctest.h"

#include <vector>

using namespace convlab;

TEST_SUITE("families") {

TEST_CASE("mask helpers") {
  CHECK(bit(0) == 1u);
  CHECK(bit(3) == 8u);
  CHECK(has(0b101u, 0));
  CHECK(!has(0b101u, 1));
  CHECK(subsetOf(0b001u, 0b011u));
  CHECK(!subsetOf(0b100u, 0b011u));
  CHECK(subsetOf(0u, 0u));
  CHECK(meets(0b110u, 0b011u));
  CHECK(!meets(0b100u, 0b011u));
  CHECK(popcount(0b1011u) == 3);
  CHECK(fullMask(0) == 0u);
  CHECK(fullMask(3) == 7u);
  CHECK(fullMask(16) == 0xFFFFu);
}

TEST_CASE("forEachSubset visits every subset ascending") {
  std::vector<Mask> seen;
  forEachSubset(0b101u, [&](Mask s) { seen.push_back(s); });
  CHECK(seen == std::vector<Mask>{0, 1, 4, 5});
}

TEST_CASE("carrier labels round-trip") {
  CarrierRef c = Carrier::make({"a", "b", "c"});
  CHECK(c->size() == 3);
  CHECK(c->full() == 7u);
  CHECK(c->name(1) == "b");
  CHECK(c->index("c") == 2);
  CHECK(c->tryIndex("b").value() == 1);
  CHECK(!c->tryIndex("z").has_value());
  CHECK_THROWS_AS((void)c->index("z"), Error);
}

TEST_CASE("carrier construction rejects bad label sets") {
  CHECK_THROWS_AS((void)Carrier::make({"a", "a"}), Error);
  CHECK_THROWS_AS((void)Carrier::make({""}), Error);
  std::vector<std::string> many;
  for (int i = 0; i < MAX_CARRIER + 1; ++i)
    many.push_back("p" + std::to_string(i));
  CHECK_THROWS_AS((void)Carrier::make(many), Error);
  // the cap itself is fine
  many.pop_back();
  CHECK(Carrier::make(many)->size() == MAX_CARRIER);
}

TEST_CASE("set literals render sorted by point index") {
  CarrierRef c = Carrier::make({"a", "b", "c"});
  CHECK(setLiteral(*c, 0) == "{}");
  CHECK(setLiteral(*c, 0b101u) == "{a,c}");
  CHECK(setLiteral(*c, 7) == "{a,b,c}");
}

TEST_CASE("set families deduplicate and sort members") {
  CarrierRef c = Carrier::make({"a", "b"});
  SetFamily f(c, {3, 1, 3, 0});
  CHECK(f.size() == 3);
  CHECK(f.members() == std::vector<Mask>{0, 1, 3});
  CHECK(f.contains(1));
  CHECK(!f.contains(2));
  CHECK(SetFamily(c, {1, 0, 3}) == f);
}

TEST_CASE("closure operators on families") {
  CarrierRef c = Carrier::make({"a", "b", "c"});
  SetFamily f(c, {0b011u});
  CHECK(upClosure(f).members() == std::vector<Mask>{3, 7});
  CHECK(downClosure(f).members() == std::vector<Mask>{0, 1, 2, 3});
  SetFamily g(c, {1, 2});
  CHECK(unionClosure(g).members() == std::vector<Mask>{1, 2, 3});
  SetFamily h(c, {3, 5});
  CHECK(intersectionClosure(h).members() == std::vector<Mask>{1, 3, 5});
  // closures never inject the empty selection's unit
  CHECK(!unionClosure(g).contains(0));
  CHECK(!intersectionClosure(g).contains(7));
  // extensive + idempotent, exhaustively over a two-point carrier
  CarrierRef c2 = Carrier::make({"a", "b"});
  for (Mask fb = 0; fb < 16; ++fb) {
    std::vector<Mask> mem;
    for (int i = 0; i < 4; ++i)
      if (has(fb, i)) mem.push_back(static_cast<Mask>(i));
    const SetFamily base(c2, mem);
    for (auto* op : {&upClosure, &downClosure, &unionClosure,
                     &intersectionClosure}) {
      const SetFamily once = (*op)(base);
      for (Mask m : base.members()) CHECK(once.contains(m));
      CHECK((*op)(once) == once);
    }
  }
}

TEST_CASE("complements is an involution") {
  CarrierRef c = Carrier::make({"a", "b", "c"});
  SetFamily f(c, {0, 0b101u, 7});
  CHECK(complements(f).members() == std::vector<Mask>{0, 2, 7});
  CHECK(complements(complements(f)) == f);
}

TEST_CASE("mesh and grill") {
  CarrierRef c = Carrier::make({"a", "b"});
  SetFamily f(c, {1});
  CHECK(grill(f).members() == std::vector<Mask>{1, 3});
  CHECK(mesh(f, SetFamily(c, {3})));
  CHECK(!mesh(f, SetFamily(c, {2})));
  // B meshes A exactly when B's members all land in grill(A)
  SetFamily a(c, {3});
  SetFamily b(c, {1, 2});
  CHECK(mesh(a, b));
  for (Mask m : b.members()) CHECK(grill(a).contains(m));
}

TEST_CASE("grill of grill is the up-closure, exhaustively at two points") {
  CarrierRef c = Carrier::make({"a", "b"});
  for (Mask fb = 0; fb < 16; ++fb) {
    std::vector<Mask> mem;
    for (int i = 0; i < 4; ++i)
      if (has(fb, i)) mem.push_back(static_cast<Mask>(i));
    SetFamily f(c, mem);
    CHECK(grill(grill(f)) == upClosure(f));
  }
}

TEST_CASE("principal filters and their families") {
  CarrierRef c = Carrier::make({"a", "b", "c"});
  PFilter f{c, 0b011u};
  CHECK(f.proper());
  CHECK(asFamily(f).members() == std::vector<Mask>{3, 7});
  PFilter d{c, 0};
  CHECK(d.degenerate());
  CHECK(asFamily(d).size() == 8);  // every subset
}

TEST_CASE("filter comparisons") {
  CarrierRef c = Carrier::make({"a", "b", "c"});
  const FilterOpsResult r = filterOps(PFilter{c, 1}, PFilter{c, 3});
  CHECK(r.finerThan);       // smaller kernel = finer filter
  CHECK(r.mesh);
  CHECK(r.ultraSet.bits == 1u);
  CHECK(!filterOps(PFilter{c, 3}, PFilter{c, 1}).finerThan);
  CHECK(!filterOps(PFilter{c, 1}, PFilter{c, 6}).mesh);
  // the degenerate filter is finer than everything and meshes nothing
  CHECK(filterOps(PFilter{c, 0}, PFilter{c, 5}).finerThan);
  CHECK(!filterOps(PFilter{c, 0}, PFilter{c, 5}).mesh);
  CHECK(!filterOps(PFilter{c, 5}, PFilter{c, 0}).finerThan);
}

TEST_CASE("filter and ideal family recognition") {
  CarrierRef c = Carrier::make({"a", "b"});
  CHECK(isFilterFamily(asFamily(PFilter{c, 1})));
  CHECK(isFilterFamily(SetFamily(c, {3})));
  CHECK(!isFilterFamily(SetFamily(c, {})));               // empty
  CHECK(!isFilterFamily(SetFamily(c, {1, 3, 0})));        // has the empty set
  CHECK(!isFilterFamily(SetFamily(c, {1, 2, 3})));        // kernel missing
  CHECK(!isFilterFamily(SetFamily(c, {1})));              // not up-closed
  CHECK(isIdealFamily(SetFamily(c, {0, 1})));
  CHECK(isIdealFamily(downClosure(SetFamily(c, {1}))));
  CHECK(!isIdealFamily(SetFamily(c, {0, 1, 2, 3})));      // improper (has full)
  CHECK(!isIdealFamily(SetFamily(c, {1})));                // not down-closed
  // duality: ideals are exactly the complement images of filter families
  for (Mask fb = 1; fb < 16; ++fb) {
    std::vector<Mask> mem;
    for (int i = 0; i < 4; ++i)
      if (has(fb, i)) mem.push_back(static_cast<Mask>(i));
    SetFamily f(c, mem);
    CHECK(isIdealFamily(f) == isFilterFamily(complements(f)));
  }
}

TEST_CASE("error kinds distinguish bad input from misuse") {
  try {
    (void)Carrier::make({"a", "a"});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::input);
  }
  CarrierRef c2 = Carrier::make({"a"});
  CarrierRef c3 = Carrier::make({"a", "b"});
  try {
    (void)filterOps(PFilter{c2, 1}, PFilter{c3, 1});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::precondition);
  }
}

}  // TEST_SUITE
