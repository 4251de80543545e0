// The dual convergence on closed sets, the reduce/erect maps, saturation,
// and the Alexandroff closure pair with the regularity predicates.
#include "convlab/harness.hpp"
#include "convlab/reference.hpp"

#include "doctest.h"

#include <vector>

using namespace convlab;

TEST_SUITE("dual") {

TEST_CASE("dual of the chain example, fully pinned") {
  const Space chain = fixtureChain();
  const DualSpace d = dualSpace(chain);
  CHECK(d.dualCarrier()->size() == 4);
  CHECK(d.closedList() == std::vector<Mask>{0, 4, 6, 7});
  CHECK(d.dualCarrier()->name(0) == "C0");
  CHECK(d.dualCarrier()->name(3) == "C3");
  const std::vector<Mask> expect{0,  15, 14, 14, 12, 12, 12, 12,
                                 8,  8,  8,  8,  8,  8,  8,  8};
  for (Mask g = 1; g <= 15; ++g) CHECK(d.conv().lim(g) == expect[g]);
  CHECK(validate(d.conv()).empty());
}

TEST_CASE("dual index and mask conversions round-trip") {
  const DualSpace d = dualSpace(fixtureChain());
  CHECK(d.dualIndex(6) == 2);
  CHECK_THROWS_AS((void)d.dualIndex(1), Error);  // {a} is not closed
  const SetFamily g(d.base().carrier(), {0, 6});
  const Mask dm = d.toDualMask(g);
  CHECK(dm == 0b0101u);
  CHECK(d.fromDualMask(dm) == g);
  CHECK(d.unionOf(dm) == 6);
  CHECK(d.unionOf(0) == 0);
}

TEST_CASE("dual construction caps at the carrier limit") {
  // a discrete space on five points has 32 closed sets: over the cap
  const Space disc = discreteSpace(letterCarrier(5));
  CHECK(closedSets(disc).size() == 32);
  try {
    (void)dualSpace(disc);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::capacity);
  }
}

TEST_CASE("the dual is always a pseudotopology with pinned extremes") {
  enumerateConvergences(
      letterCarrier(2), GenOrder::sizeAscending,
      [&](const std::vector<Mask>& table) {
        const Space c = Space::tabulated(letterCarrier(2), table);
        const DualSpace d = dualSpace(c);
        CHECK(isPseudotopology(d.conv()));
        const InducedGraph dg = graphOf(d.conv());
        const int m = d.dualCarrier()->size();
        CHECK(dg.roots == bit(0));      // the empty set converges everywhere
        CHECK(dg.ends == bit(m - 1));   // the full set is in every limit
      });
}

TEST_CASE("the dual limit is the adherence containment rule") {
  const Space over = fixtureOverlap();
  const DualSpace d = dualSpace(over);
  const int m = d.dualCarrier()->size();
  const Mask dualFull = d.dualCarrier()->full();
  for (Mask g = 1; g <= dualFull; ++g) {
    Mask expect = 0;
    const Mask adh = adherence(over, d.unionOf(g));
    for (int i = 0; i < m; ++i)
      if (subsetOf(adh, d.closedList()[static_cast<std::size_t>(i)]))
        expect |= bit(i);
    CHECK(d.conv().lim(g) == expect);
  }
}

TEST_CASE("erect and reduce, pinned on the chain example") {
  const Space chain = fixtureChain();
  const DualSpace d = dualSpace(chain);
  CHECK(erected(chain, 6).members() == std::vector<Mask>{0, 4, 6});
  CHECK(erected(chain, 0).members() == std::vector<Mask>{0});
  CHECK(rdc(chain, erected(chain, 6)).bits == 6);
  CHECK(rdc(chain, SetFamily(chain.carrier(), {0})).bits == 0);
  CHECK_THROWS_AS((void)rdc(chain, SetFamily(chain.carrier(), {1})), Error);
  CHECK(erectedFilter(d, PFilter{chain.carrier(), 6}).kernel == 0b0111u);
  CHECK(rdcFilter(d, PFilter{d.dualCarrier(), 0b0111u}).kernel == 6);
  // a dual kernel holding only the empty set reduces to the degenerate filter
  CHECK(rdcFilter(d, PFilter{d.dualCarrier(), 0b0001u}).degenerate());
}

TEST_CASE("reduce after erect recovers the union of closed subsets") {
  enumerateConvergences(
      letterCarrier(3), GenOrder::sizeAscending,
      [&](const std::vector<Mask>& table) {
        const Space c = Space::tabulated(letterCarrier(3), table);
        const DualSpace d = dualSpace(c);
        const SetFamily closed = closedSets(c);
        for (Mask k = 1; k <= 7; ++k) {
          const PFilter f{c.carrier(), k};
          const Mask comp = rdcFilter(d, erectedFilter(d, f)).kernel;
          Mask expect = 0;
          for (Mask cl : closed.members())
            if (subsetOf(cl, k)) expect |= cl;
          CHECK(comp == expect);
          CHECK(subsetOf(comp, k));  // the composite never grows the kernel
        }
      });
}

TEST_CASE("saturation is extensive, idempotent, reduction-preserving") {
  const Space chain = fixtureChain();
  const DualSpace d = dualSpace(chain);
  CHECK(saturate(d, PFilter{d.dualCarrier(), 0b0010u}).kernel == 0b0011u);
  // {∅} is a fixed point
  CHECK(saturate(d, PFilter{d.dualCarrier(), 0b0001u}).kernel == 0b0001u);
  for (Mask g = 0; g <= 15; ++g) {
    const PFilter gf{d.dualCarrier(), g};
    const Mask sat = saturate(d, gf).kernel;
    CHECK(subsetOf(g, sat));
    CHECK(saturate(d, PFilter{d.dualCarrier(), sat}).kernel == sat);
    CHECK(rdcFilter(d, PFilter{d.dualCarrier(), sat}).kernel ==
          rdcFilter(d, gf).kernel);
  }
}

TEST_CASE("the upper-set description agrees on topological bases") {
  const Space chain = fixtureChain();
  const DualSpace d = dualSpace(chain);
  for (Mask g = 1; g <= 15; ++g)
    CHECK(upperKuratowskiLim(d, g) == d.conv().lim(g));
  const Space pair = fixtureDiscretePair();
  const DualSpace dp = dualSpace(pair);
  const Mask full = dp.dualCarrier()->full();
  for (Mask g = 1; g <= full; ++g)
    CHECK(upperKuratowskiLim(dp, g) == dp.conv().lim(g));
}

TEST_CASE("point closures and the two derived operators, pinned") {
  const Space chain = fixtureChain();
  const AlexandroffPair ax = alexandroff(chain);
  CHECK(ax.pointClosure == std::vector<Mask>{7, 6, 4});
  CHECK(ax.star(1) == 1);
  CHECK(ax.star(2) == 3);
  CHECK(ax.star(4) == 7);
  CHECK(ax.bullet(1) == 7);
  CHECK(ax.bullet(2) == 6);
  CHECK(ax.bullet(4) == 4);
  CHECK(ax.star(0) == 0);
  CHECK(ax.bullet(0) == 0);
  // both operators are extensive and monotone; both agree with their
  // defining quantifiers
  enumerateConvergences(
      letterCarrier(3), GenOrder::sizeAscending,
      [&](const std::vector<Mask>& table) {
        const Space c = Space::tabulated(letterCarrier(3), table);
        const AlexandroffPair a = alexandroff(c);
        for (int x = 0; x < 3; ++x)
          CHECK(a.pointClosure[static_cast<std::size_t>(x)] ==
                closureOf(c, bit(x)));
        for (Mask b = 0; b <= 7; ++b) {
          Mask star = 0, bullet = 0;
          for (int x = 0; x < 3; ++x) {
            if (meets(a.pointClosure[static_cast<std::size_t>(x)], b))
              star |= bit(x);
            if (has(b, x)) bullet |= a.pointClosure[static_cast<std::size_t>(x)];
          }
          CHECK(a.star(b) == star);
          CHECK(a.bullet(b) == bullet);
          CHECK(subsetOf(b, a.star(b)));
          CHECK(subsetOf(b, a.bullet(b)));
        }
      });
}

TEST_CASE("regularity predicates, pinned on the bundled examples") {
  const RegularityPredicates chain = regularityPredicates(fixtureChain());
  CHECK(chain.starRegular);
  CHECK(!chain.bulletRegular);
  CHECK(!chain.reciprocal);
  const RegularityPredicates ultra = regularityPredicates(fixtureUltra());
  CHECK(!ultra.starRegular);
  CHECK(!ultra.bulletRegular);
  CHECK(ultra.reciprocal);
  // discrete spaces satisfy all three
  const RegularityPredicates disc =
      regularityPredicates(fixtureDiscretePair());
  CHECK(disc.starRegular);
  CHECK(disc.bulletRegular);
  CHECK(disc.reciprocal);
}

TEST_CASE("star-regularity holds for every two-point convergence's topology") {
  enumerateConvergences(
      letterCarrier(2), GenOrder::sizeAscending,
      [&](const std::vector<Mask>& table) {
        const Space c = Space::tabulated(letterCarrier(2), table);
        CHECK(regularityPredicates(reflectorT(c)).starRegular);
        // and on star-regular instances adherence absorbs the bullet hull
        const RegularityPredicates r = regularityPredicates(c);
        const AlexandroffPair ax = alexandroff(c);
        if (r.starRegular)
          for (Mask k = 1; k <= 3; ++k)
            CHECK(adherence(c, k) == adherence(c, ax.bullet(k)));
      });
}

}  // TEST_SUITE
