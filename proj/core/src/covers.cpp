#include "convlab/covers.hpp"

#include <algorithm>
#include <optional>

namespace convlab {

namespace {

void checkCarrier(const Space& c, const CarrierRef& other, const char* what) {
  if (!other || other->size() != c.points())
    throw Error(ErrorKind::precondition,
                std::string(what) + ": carrier size mismatch");
}

Mask kernelBound(const Space& c, Mask target) {
  // Kernels of admissible filters: adherence(K) ⊆ target ⇔ every point of K
  // has lim{y} ⊆ target.
  Mask bound = 0;
  for (int y = 0; y < c.points(); ++y)
    if (subsetOf(c.lim(bit(y)), target)) bound |= bit(y);
  return bound;
}

}  // namespace

Mask familyAdherence(const Space& c, const SetFamily& p) {
  checkCarrier(c, p.carrier(), "familyAdherence");
  const Mask full = c.carrier()->full();
  Mask out = 0;
  for (Mask k = 1; k <= full; ++k) {
    bool meshes = true;
    for (Mask m : p.members())
      if (!meets(k, m)) { meshes = false; break; }
    if (meshes) out |= c.lim(k);
  }
  return out;
}

Witnessed isCover(const Space& c, const SetFamily& p, CoverKind kind) {
  checkCarrier(c, p.carrier(), "isCover");
  const Mask full = c.carrier()->full();
  if (kind == CoverKind::cover) {
    for (Mask k = 1; k <= full; ++k) {
      if (c.lim(k) == 0) continue;
      bool inside = false;
      for (Mask m : p.members())
        if (subsetOf(k, m)) { inside = true; break; }
      if (!inside) return Witnessed::failSubset(k);
    }
    return Witnessed::ok();
  }
  for (int x = 0; x < c.points(); ++x) {
    if (c.lim(bit(x)) == 0) continue;  // principal filter not convergent
    bool inside = false;
    for (Mask m : p.members())
      if (has(m, x)) { inside = true; break; }
    if (!inside) return Witnessed::failPoint(x);
  }
  return Witnessed::ok();
}

bool coverCriterion(const Space& c, const SetFamily& p) {
  return familyAdherence(c, complements(p)) == 0;
}

bool isCauchy(const PFilter& f, const CoverCollection& pp, CauchyKind kind) {
  if (f.degenerate())
    throw Error(ErrorKind::precondition, "isCauchy: degenerate filter");
  for (const SetFamily& fam : pp.families) {
    bool found = false;
    for (Mask m : fam.members()) {
      const bool hit = (kind == CauchyKind::cauchy) ? subsetOf(f.kernel, m)
                                                    : meets(f.kernel, m);
      if (hit) { found = true; break; }
    }
    if (!found) return false;
  }
  return true;
}

Witnessed isCompleteCollection(const Space& c, const CoverCollection& pp,
                               CompleteKind kind) {
  checkCarrier(c, pp.carrier, "isCompleteCollection");
  for (const SetFamily& fam : pp.families)
    if (!isCover(c, fam, CoverKind::cover).verdict)
      throw Error(ErrorKind::precondition,
                  "isCompleteCollection: collection member is not a cover");
  const CauchyKind ck = (kind == CompleteKind::complete)
                            ? CauchyKind::cauchy
                            : CauchyKind::preCauchy;
  const Mask full = c.carrier()->full();
  for (Mask k = 1; k <= full; ++k) {
    PFilter f{c.carrier(), k};
    if (!isCauchy(f, pp, ck)) continue;
    if (adherence(c, f) == 0) return Witnessed::failFilter(k);
  }
  return Witnessed::ok();
}

IdealTransforms idealTransforms(const CoverCollection& pp) {
  IdealTransforms out;
  out.unionDown.carrier = pp.carrier;
  out.filterForm.carrier = pp.carrier;
  out.filterForm.admitsDegenerate = true;
  const Mask full = pp.carrier->full();
  for (const SetFamily& fam : pp.families) {
    out.unionDown.families.push_back(downClosure(unionClosure(fam)));
    Mask u = 0;
    for (Mask m : fam.members()) u |= m;
    out.filterForm.members.push_back(PFilter{pp.carrier, full & ~u});
  }
  return out;
}

Witnessed isCocompleteCollection(const Space& c, const FilterCollection& d,
                                 Mask target, CocompleteKind kind) {
  checkCarrier(c, d.carrier, "isCocompleteCollection");
  for (const PFilter& m : d.members)
    if (!subsetOf(adherence(c, m), target))
      throw Error(ErrorKind::precondition,
                  "isCocompleteCollection: member adherence escapes target");
  const Mask full = c.carrier()->full();
  const Mask lo = (kind == CocompleteKind::ultracocomplete) ? 0 : 1;
  for (Mask k = lo; k <= full; ++k) {
    if (!subsetOf(adherence(c, PFilter{c.carrier(), k}), target)) continue;
    bool dominated = false;
    for (const PFilter& m : d.members) {
      const bool hit = (kind == CocompleteKind::cocomplete)
                           ? (m.proper() && k != 0 && meets(k, m.kernel))
                           : subsetOf(k, m.kernel);
      if (hit) { dominated = true; break; }
    }
    if (!dominated) return Witnessed::failFilter(k);
  }
  return Witnessed::ok();
}

CompletenessResult completenessNumber(const Space& c, Mask target,
                                      CompletenessKind kind) {
  if (!isClosed(c, target))
    throw Error(ErrorKind::input, "completenessNumber: target is not closed");
  const CocompleteKind ck = (kind == CompletenessKind::plain)
                                ? CocompleteKind::cocomplete
                                : CocompleteKind::ultracocomplete;
  const Mask bound = kernelBound(c, target);

  // Candidate member kernels, ascending: the degenerate kernel first, then
  // every nonempty admissible kernel.
  std::vector<Mask> cand;
  cand.push_back(0);
  forEachSubset(bound, [&](Mask s) { if (s != 0) cand.push_back(s); });
  std::sort(cand.begin(), cand.end());

  auto tryCollection =
      [&](const std::vector<Mask>& kernels) -> std::optional<FilterCollection> {
    FilterCollection d;
    d.carrier = c.carrier();
    d.admitsDegenerate = true;
    for (Mask k : kernels) d.members.push_back(PFilter{c.carrier(), k});
    if (isCocompleteCollection(c, d, target, ck).verdict) return d;
    return std::nullopt;
  };

  CompletenessResult out;
  // Size-ascending, lexicographic combination search: the first success is
  // the minimum size with the lexicographically least witness.
  std::vector<std::size_t> idx;
  for (std::size_t size = 1; size <= cand.size(); ++size) {
    idx.assign(size, 0);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      std::vector<Mask> kernels;
      kernels.reserve(size);
      for (std::size_t i : idx) kernels.push_back(cand[i]);
      if (auto d = tryCollection(kernels)) {
        out.value = static_cast<unsigned>(size);
        out.witness = *d;
        out.paperConvention = (bound == 0) ? 0 : out.value;
        return out;
      }
      // advance the combination
      std::size_t pos = size;
      while (pos > 0 && idx[pos - 1] == cand.size() - (size - pos) - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < size; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  throw Error(ErrorKind::precondition,
              "completenessNumber: no collection found");  // unreachable
}

}  // namespace convlab
