#include "convlab/graph.hpp"

namespace convlab {

InducedGraph graphOf(const Space& c) {
  InducedGraph g;
  g.carrier = c.carrier();
  const int n = c.points();
  g.forward.resize(static_cast<std::size_t>(n));
  g.backward.assign(static_cast<std::size_t>(n), 0);
  const Mask full = c.carrier()->full();
  g.ends = full;
  for (int y = 0; y < n; ++y) {
    const Mask f = c.lim(bit(y));
    g.forward[static_cast<std::size_t>(y)] = f;
    g.ends &= f;
    if (f == full) g.roots |= bit(y);
    forEachBit(f, [&](int x) { g.backward[static_cast<std::size_t>(x)] |= bit(y); });
  }
  return g;
}

NotArrowSets notArrowSets(const InducedGraph& g, int y) {
  NotArrowSets out;
  const int n = static_cast<int>(g.forward.size());
  const Mask by = g.backward[static_cast<std::size_t>(y)];
  const Mask fy = g.forward[static_cast<std::size_t>(y)];
  for (int x = 0; x < n; ++x) {
    if (subsetOf(by & g.backward[static_cast<std::size_t>(x)], g.roots))
      out.notLeft |= bit(x);
    if (subsetOf(fy & g.forward[static_cast<std::size_t>(x)], g.ends))
      out.notRight |= bit(x);
  }
  return out;
}

Mask daggerClosure(const InducedGraph& g, Mask a) {
  const int n = static_cast<int>(g.forward.size());
  const Mask full = fullMask(n);
  std::vector<Mask> notLeft(static_cast<std::size_t>(n));
  for (int y = 0; y < n; ++y)
    notLeft[static_cast<std::size_t>(y)] = notArrowSets(g, y).notLeft;
  Mask inter = full;
  forEachBit(a, [&](int p) { inter &= notLeft[static_cast<std::size_t>(p)]; });
  Mask out = full;
  forEachBit(inter, [&](int p) { out &= notLeft[static_cast<std::size_t>(p)]; });
  return out;
}

SetFamily dualDaggerForm(const DualSpace& d, const SetFamily& g) {
  const Mask u = rdc(d.base(), g).bits;
  const Mask starred = alexandroff(d.base()).star(u);
  return erected(d.base(), starred);
}

}  // namespace convlab
