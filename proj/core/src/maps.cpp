#include "convlab/maps.hpp"

namespace convlab {

Mask SpaceMap::imageMask(Mask a) const {
  Mask out = 0;
  forEachBit(a, [&](int x) { out |= bit(f[static_cast<std::size_t>(x)]); });
  return out;
}

Mask SpaceMap::preimageMask(Mask b) const {
  Mask out = 0;
  for (int x = 0; x < source.points(); ++x)
    if (has(b, f[static_cast<std::size_t>(x)])) out |= bit(x);
  return out;
}

bool SpaceMap::onto() const {
  return imageMask(source.carrier()->full()) == target.carrier()->full();
}

SpaceMap makeMap(Space source, Space target, std::vector<int> f) {
  if (f.size() != static_cast<std::size_t>(source.points()))
    throw Error(ErrorKind::input, "makeMap: one image per source point required");
  for (int v : f)
    if (v < 0 || v >= target.points())
      throw Error(ErrorKind::input, "makeMap: image point out of range");
  return SpaceMap{std::move(source), std::move(target), std::move(f)};
}

PFilter imageFilter(const SpaceMap& m, const PFilter& f) {
  return PFilter{m.target.carrier(), m.imageMask(f.kernel)};
}

Witnessed isContinuous(const SpaceMap& m) {
  const Mask full = m.source.carrier()->full();
  for (Mask a = 1; a <= full; ++a)
    if (!subsetOf(m.imageMask(m.source.lim(a)), m.target.lim(m.imageMask(a))))
      return Witnessed::failSubset(a);
  return Witnessed::ok();
}

Space finalStructure(const SpaceMap& m) {
  if (!m.onto())
    throw Error(ErrorKind::precondition, "finalStructure: map not onto");
  const SpaceMap mm = m;  // captured by value: the view owns its data
  const Mask srcFull = m.source.carrier()->full();
  return Space::lazy(m.target.carrier(), Repr::finalView, [mm, srcFull](Mask b) {
    Mask out = (popcount(b) == 1) ? b : 0;  // centering term for singletons
    for (Mask a = 1; a <= srcFull; ++a)
      if (subsetOf(b, mm.imageMask(a))) out |= mm.imageMask(mm.source.lim(a));
    return out;
  });
}

Space initialStructure(const SpaceMap& m) {
  const SpaceMap mm = m;
  return Space::lazy(m.source.carrier(), Repr::initialView, [mm](Mask a) {
    return mm.preimageMask(mm.target.lim(mm.imageMask(a)));
  });
}

MapClass mapClass(const SpaceMap& m) {
  if (!m.onto() || !isContinuous(m).verdict)
    throw Error(ErrorKind::precondition,
                "mapClass: map must be continuous and onto");
  MapClass out;
  out.continuous = true;
  const Space fin = finalStructure(m);
  out.almostOpen = finerThan(m.target, fin);
  out.biquotient = finerThan(m.target, reflectorS(fin));
  out.quotient = finerThan(m.target, reflectorT(fin));
  return out;
}

SetFamily familyImage(const SpaceMap& m, const SetFamily& p) {
  std::vector<Mask> members;
  members.reserve(p.members().size());
  for (Mask mem : p.members()) members.push_back(m.imageMask(mem));
  return SetFamily(m.target.carrier(), members);
}

CoverCollection coverImage(const SpaceMap& m, const CoverCollection& pp) {
  CoverCollection out;
  out.carrier = m.target.carrier();
  out.families.reserve(pp.families.size());
  for (const SetFamily& fam : pp.families)
    out.families.push_back(familyImage(m, fam));
  return out;
}

}  // namespace convlab
