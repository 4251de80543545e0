#include "convlab/dual.hpp"

#include <algorithm>
#include <sstream>

namespace convlab {

DualSpace DualSpace::of(const Space& base) {
  std::vector<Mask> closed = closedSets(base).members();
  if (closed.size() > static_cast<std::size_t>(MAX_CARRIER)) {
    std::ostringstream os;
    os << "dualSpace: " << closed.size() << " closed sets exceed the carrier"
       << " capacity of " << MAX_CARRIER;
    throw Error(ErrorKind::capacity, os.str());
  }
  std::vector<std::string> labels;
  labels.reserve(closed.size());
  for (std::size_t i = 0; i < closed.size(); ++i)
    labels.push_back("C" + std::to_string(i));
  CarrierRef dc = Carrier::make(labels);

  // Adherence of each closed set, precomputed once; the dual limit of a
  // kernel G is then {A : ⋃ adh over selected sets ⊆ A}, a cheap fold.
  std::vector<Mask> adh(closed.size());
  for (std::size_t i = 0; i < closed.size(); ++i)
    adh[i] = adherence(base, closed[i]);
  const int m = static_cast<int>(closed.size());
  std::vector<Mask> closedCopy = closed;
  Space conv = Space::lazy(dc, Repr::dualView, [m, adh, closedCopy](Mask g) {
    Mask u = 0;
    forEachBit(g, [&](int i) { u |= adh[static_cast<std::size_t>(i)]; });
    Mask out = 0;
    for (int a = 0; a < m; ++a)
      if (subsetOf(u, closedCopy[static_cast<std::size_t>(a)])) out |= bit(a);
    return out;
  });
  return DualSpace(base, std::move(conv), std::move(dc), std::move(closed));
}

int DualSpace::dualIndex(Mask closedSet) const {
  auto it = std::lower_bound(closed_.begin(), closed_.end(), closedSet);
  if (it == closed_.end() || *it != closedSet)
    throw Error(ErrorKind::input,
                "dualIndex: set is not closed in the base space");
  return static_cast<int>(it - closed_.begin());
}

Mask DualSpace::toDualMask(const SetFamily& g) const {
  Mask out = 0;
  for (Mask m : g.members()) out |= bit(dualIndex(m));
  return out;
}

SetFamily DualSpace::fromDualMask(Mask dualKernel) const {
  std::vector<Mask> members;
  forEachBit(dualKernel, [&](int i) {
    members.push_back(closed_[static_cast<std::size_t>(i)]);
  });
  return SetFamily(base_.carrier(), members);
}

Mask DualSpace::unionOf(Mask dualKernel) const {
  Mask u = 0;
  forEachBit(dualKernel, [&](int i) {
    u |= closed_[static_cast<std::size_t>(i)];
  });
  return u;
}

Subset rdc(const Space& base, const SetFamily& g) {
  Mask u = 0;
  for (Mask m : g.members()) {
    if (!isClosed(base, m))
      throw Error(ErrorKind::input,
                  "rdc: family member is not closed in the base space");
    u |= m;
  }
  return Subset{base.carrier(), u};
}

PFilter rdcFilter(const DualSpace& d, const PFilter& dualFilter) {
  return PFilter{d.base().carrier(), d.unionOf(dualFilter.kernel)};
}

SetFamily erected(const Space& base, Mask f) {
  std::vector<Mask> members;
  const SetFamily closed = closedSets(base);
  for (Mask c : closed.members())
    if (subsetOf(c, f)) members.push_back(c);
  return SetFamily(base.carrier(), members);
}

PFilter erectedFilter(const DualSpace& d, const PFilter& baseFilter) {
  if (baseFilter.degenerate())
    throw Error(ErrorKind::precondition, "erectedFilter: degenerate filter");
  Mask g = 0;
  const std::vector<Mask>& closed = d.closedList();
  for (std::size_t i = 0; i < closed.size(); ++i)
    if (subsetOf(closed[i], baseFilter.kernel)) g |= bit(static_cast<int>(i));
  return PFilter{d.dualCarrier(), g};
}

PFilter saturate(const DualSpace& d, const PFilter& dualFilter) {
  const Mask u = d.unionOf(dualFilter.kernel);
  Mask g = 0;
  const std::vector<Mask>& closed = d.closedList();
  for (std::size_t i = 0; i < closed.size(); ++i)
    if (subsetOf(closed[i], u)) g |= bit(static_cast<int>(i));
  return PFilter{d.dualCarrier(), g};
}

Mask upperKuratowskiLim(const DualSpace& d, Mask dualKernel) {
  const Mask cl = closureOf(d.base(), d.unionOf(dualKernel));
  Mask out = 0;
  const std::vector<Mask>& closed = d.closedList();
  for (std::size_t i = 0; i < closed.size(); ++i)
    if (subsetOf(cl, closed[i])) out |= bit(static_cast<int>(i));
  return out;
}

Mask AlexandroffPair::star(Mask b) const {
  Mask out = 0;
  for (std::size_t x = 0; x < pointClosure.size(); ++x)
    if (meets(pointClosure[x], b)) out |= bit(static_cast<int>(x));
  return out;
}

Mask AlexandroffPair::bullet(Mask b) const {
  Mask out = 0;
  forEachBit(b, [&](int x) {
    out |= pointClosure[static_cast<std::size_t>(x)];
  });
  return out;
}

AlexandroffPair alexandroff(const Space& c) {
  AlexandroffPair p;
  p.pointClosure.resize(static_cast<std::size_t>(c.points()));
  for (int x = 0; x < c.points(); ++x)
    p.pointClosure[static_cast<std::size_t>(x)] = closureOf(c, bit(x));
  return p;
}

RegularityPredicates regularityPredicates(const Space& c) {
  const AlexandroffPair p = alexandroff(c);
  const Mask full = c.carrier()->full();
  RegularityPredicates out;
  out.starRegular = true;
  out.bulletRegular = true;
  for (Mask a = 1; a <= full; ++a) {
    // star/bullet are extensive, so lim(op(A)) ⊆ lim(A) holds by
    // antitonicity; only the reverse inclusion needs checking.
    if (out.starRegular && !subsetOf(c.lim(a), c.lim(p.star(a))))
      out.starRegular = false;
    if (out.bulletRegular && !subsetOf(c.lim(a), c.lim(p.bullet(a))))
      out.bulletRegular = false;
    if (!out.starRegular && !out.bulletRegular) break;
  }
  out.reciprocal = true;
  for (int x = 0; x < c.points() && out.reciprocal; ++x)
    for (int y = 0; y < c.points(); ++y)
      if (has(c.lim(bit(y)), x) != has(c.lim(bit(x)), y)) {
        out.reciprocal = false;
        break;
      }
  return out;
}

}  // namespace convlab
