#include "convlab/harness.hpp"
#include "convlab/reference.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace convlab {

namespace {

// ---------------------------------------------------------------------------
// Recording and drivers.
// ---------------------------------------------------------------------------

std::string hexTable(const Space& c) {
  std::ostringstream os;
  os << "n=" << c.points() << " lims=";
  const Mask full = c.carrier()->full();
  for (Mask k = 1; k <= full; ++k) {
    if (k > 1) os << ".";
    os << std::hex << c.lim(k);
  }
  return os.str();
}

class Rec {
 public:
  explicit Rec(PropertyResult& r) : res_(r) {}
  const Space* cur = nullptr;

  // `witness` of ~0 means "no witness to print".
  void check(bool ok, const char* tag, Mask witness = ~Mask{0}) {
    ++res_.instances;
    if (ok) return;
    ++res_.failures;
    if (res_.notes.size() >= 3) return;
    std::ostringstream os;
    os << tag;
    if (witness != ~Mask{0}) os << " witness=0x" << std::hex << witness;
    if (cur) os << " [" << hexTable(*cur) << "]";
    res_.notes.push_back(os.str());
  }

  void exception(const std::string& what) {
    ++res_.instances;
    ++res_.failures;
    if (res_.notes.size() < 3) {
      std::string msg = "exception: " + what;
      if (cur) msg += " [" + hexTable(*cur) + "]";
      res_.notes.push_back(msg);
    }
  }

  void info(const std::string& line) {
    if (res_.notes.size() < 6) res_.notes.push_back("info " + line);
  }

 private:
  PropertyResult& res_;
};

const double kDensities[6] = {0.0, 0.15, 0.35, 0.65, 0.9, 1.0};

std::uint64_t spaceSeed(const SuiteParams& p, int n, int trial) {
  return p.seed ^ (static_cast<std::uint64_t>(n) << 40) ^
         (static_cast<std::uint64_t>(trial) * 0x9E3779B97F4A7C15ull);
}

// Visits the standard universe: every lawful space exhaustively for carriers
// up to 3, `trials` seeded random spaces per larger carrier.  Exceptions in
// the callback are recorded as failures and iteration continues.
void forEachSpace(const SuiteParams& p, int cap, Rec& rec,
                  const std::function<void(const Space&)>& fn) {
  auto guarded = [&](const Space& c) {
    rec.cur = &c;
    try {
      fn(c);
    } catch (const std::exception& e) {
      rec.exception(e.what());
    }
    rec.cur = nullptr;
  };
  for (int n = std::max(1, p.nMin); n <= std::min(p.nMax, cap); ++n) {
    if (n <= 3) {
      CarrierRef car = letterCarrier(n);
      enumerateConvergences(car, GenOrder::sizeAscending,
                            [&](const std::vector<Mask>& t) {
                              guarded(Space::tabulated(car, t));
                            });
    } else {
      for (int t = 0; t < p.trials; ++t)
        guarded(randomSpace(spaceSeed(p, n, t), n, kDensities[t % 6]));
    }
  }
}

// Enumerates every topology (as an open-set family) on n labelled points;
// fn receives the resulting topological space.  famBits indexes subsets of
// the carrier: bit m set means the subset with mask m is open.
void forEachTopology(int n, const std::function<void(const Space&)>& fn,
                     std::uint64_t* countOut = nullptr) {
  const Mask full = fullMask(n);
  const std::uint32_t subsets = std::uint32_t{1} << (1 << n);
  std::uint64_t count = 0;
  for (std::uint32_t famBits = 0; famBits < subsets; ++famBits) {
    if (!has(famBits, 0) || !has(famBits, static_cast<int>(full))) continue;
    std::vector<Mask> members;
    for (Mask m = 0; m <= full; ++m)
      if (has(famBits, static_cast<int>(m))) members.push_back(m);
    bool closed = true;
    for (Mask a : members) {
      for (Mask b : members) {
        if (!has(famBits, static_cast<int>(a | b)) ||
            !has(famBits, static_cast<int>(a & b))) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (!closed) continue;
    ++count;
    CarrierRef car = letterCarrier(n);
    std::vector<Mask> vx(static_cast<std::size_t>(n), full);
    for (int x = 0; x < n; ++x)
      for (Mask u : members)
        if (has(u, x)) vx[static_cast<std::size_t>(x)] &= u;
    std::vector<Mask> table(std::size_t{1} << n, 0);
    for (Mask a = 1; a <= full; ++a) {
      Mask lim = 0;
      for (int x = 0; x < n; ++x)
        if (subsetOf(a, vx[static_cast<std::size_t>(x)])) lim |= bit(x);
      table[a] = lim;
    }
    fn(Space::tabulated(std::move(car), std::move(table)));
  }
  if (countOut) *countOut = count;
}

// Shared deterministic sample: everything on 1-2 points, all 3-point
// topologies, the bundled fixtures, and seeded random spaces on 3-4 points.
std::vector<Space> sampleUniverse(const SuiteParams& p, int randoms3,
                                  int randoms4) {
  std::vector<Space> out;
  for (int n = 1; n <= 2; ++n) {
    CarrierRef car = letterCarrier(n);
    enumerateConvergences(car, GenOrder::sizeAscending,
                          [&](const std::vector<Mask>& t) {
                            out.push_back(Space::tabulated(car, t));
                          });
  }
  forEachTopology(3, [&](const Space& c) { out.push_back(c); });
  out.push_back(fixtureChain());
  out.push_back(fixtureUltra());
  out.push_back(fixtureOverlap());
  out.push_back(fixtureDiscretePair());
  for (int t = 0; t < randoms3; ++t)
    out.push_back(randomSpace(spaceSeed(p, 3, t) ^ 0x5AFEull, 3,
                              kDensities[t % 6]));
  for (int t = 0; t < randoms4; ++t)
    out.push_back(randomSpace(spaceSeed(p, 4, t) ^ 0x5AFEull, 4,
                              kDensities[t % 6]));
  return out;
}

SetFamily familyFromBits(const CarrierRef& car, std::uint32_t famBits) {
  std::vector<Mask> members;
  const Mask full = car->full();
  for (Mask m = 0; m <= full; ++m)
    if (has(famBits, static_cast<int>(m))) members.push_back(m);
  return SetFamily(car, members);
}

bool familySubset(const SetFamily& a, const SetFamily& b) {
  for (Mask m : a.members())
    if (!b.contains(m)) return false;
  return true;
}

// All families with at most `maxMembers` members over the carrier's subsets.
std::vector<SetFamily> smallFamilies(const CarrierRef& car, int maxMembers,
                                     bool nonemptyMembersOnly) {
  const Mask full = car->full();
  std::vector<Mask> pool;
  for (Mask m = nonemptyMembersOnly ? 1 : 0; m <= full; ++m) pool.push_back(m);
  std::vector<SetFamily> out;
  out.emplace_back(car, std::vector<Mask>{});
  std::vector<std::size_t> idx;
  for (int s = 1; s <= maxMembers; ++s) {
    idx.assign(static_cast<std::size_t>(s), 0);
    for (int i = 0; i < s; ++i) idx[static_cast<std::size_t>(i)] =
        static_cast<std::size_t>(i);
    if (pool.size() < static_cast<std::size_t>(s)) break;
    for (;;) {
      std::vector<Mask> members;
      for (std::size_t i : idx) members.push_back(pool[i]);
      out.emplace_back(car, members);
      std::size_t pos = static_cast<std::size_t>(s);
      while (pos > 0 && idx[pos - 1] == pool.size() -
                            (static_cast<std::size_t>(s) - pos) - 1)
        --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < static_cast<std::size_t>(s); ++i)
        idx[i] = idx[i - 1] + 1;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Properties.
// ---------------------------------------------------------------------------

void propFamiliesLaws(const SuiteParams& p, PropertyResult& res) {
  Rec rec(res);
  for (int n = std::max(1, p.nMin); n <= std::min(p.nMax, 3); ++n) {
    CarrierRef car = letterCarrier(n);
    const std::uint32_t famCount = std::uint32_t{1} << (1 << n);
    std::vector<SetFamily> all;
    for (std::uint32_t fb = 0; fb < famCount; ++fb)
      all.push_back(familyFromBits(car, fb));

    auto closureLaws = [&](const SetFamily& f,
                           SetFamily (*op)(const SetFamily&), const char* tag) {
      const SetFamily once = op(f);
      rec.check(familySubset(f, once), tag);                  // extensive
      rec.check(op(once) == once, tag);                       // idempotent
    };
    for (const SetFamily& f : all) {
      closureLaws(f, &upClosure, "families up-closure");
      closureLaws(f, &downClosure, "families down-closure");
      closureLaws(f, &unionClosure, "families union-closure");
      closureLaws(f, &intersectionClosure, "families intersection-closure");
      rec.check(complements(complements(f)) == f, "families complements");
      rec.check(grill(grill(f)) == upClosure(f), "families grill-grill");
      const bool filterLiteral = !f.empty() &&
                                 [&] {
                                   for (Mask m : f.members())
                                     if (m == 0) return false;
                                   return f == upClosure(f) &&
                                          f == intersectionClosure(f);
                                 }();
      rec.check(isFilterFamily(f) == filterLiteral, "families filter-test");
      const bool idealLiteral = !f.empty() && !f.contains(car->full()) &&
                                f == downClosure(f) && f == unionClosure(f);
      rec.check(isIdealFamily(f) == idealLiteral, "families ideal-test");
    }

    // Pair laws: exhaustively for carriers 1-2, seeded samples at 3.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    if (n <= 2) {
      for (std::uint32_t a = 0; a < famCount; ++a)
        for (std::uint32_t b = 0; b < famCount; ++b) pairs.emplace_back(a, b);
    } else {
      SplitMix64 rng(p.seed ^ 0xFA111Ea5ull);
      for (int t = 0; t < 500; ++t)
        pairs.emplace_back(static_cast<std::uint32_t>(rng.next() % famCount),
                           static_cast<std::uint32_t>(rng.next() % famCount));
    }
    for (const auto& [ab, bb] : pairs) {
      const SetFamily& a = all[ab];
      const SetFamily& b = all[bb];
      rec.check(mesh(a, b) == mesh(b, a), "families mesh-symmetric");
      rec.check(mesh(a, b) == familySubset(b, grill(a)),
                "families mesh-grill");
      if (familySubset(a, b)) {
        rec.check(familySubset(upClosure(a), upClosure(b)),
                  "families up-monotone");
        rec.check(familySubset(downClosure(a), downClosure(b)),
                  "families down-monotone");
        rec.check(familySubset(unionClosure(a), unionClosure(b)),
                  "families union-monotone");
        rec.check(familySubset(intersectionClosure(a),
                               intersectionClosure(b)),
                  "families intersection-monotone");
      }
    }

    // Filter kernel operations against the family forms.
    const Mask full = car->full();
    for (Mask kf = 0; kf <= full; ++kf)
      for (Mask kg = 0; kg <= full; ++kg) {
        const PFilter f{car, kf}, g{car, kg};
        const FilterOpsResult ops = filterOps(f, g);
        rec.check(ops.finerThan == familySubset(asFamily(g), asFamily(f)),
                  "families filterops-finer");
        const bool famMesh = f.proper() && g.proper() &&
                             mesh(SetFamily(car, {kf}), SetFamily(car, {kg}));
        rec.check(ops.mesh == famMesh, "families filterops-mesh");
        rec.check(ops.ultraSet.bits == kf, "families filterops-ultraset");
      }
  }
}

void propSpaceAdherence(const SuiteParams& p, PropertyResult& res) {
  Rec rec(res);
  forEachSpace(p, 5, rec, [&](const Space& c) {
    const Mask full = c.carrier()->full();
    rec.check(adherence(c, Mask{0}) == 0, "adh degenerate");
    for (Mask k = 1; k <= full; ++k)
      rec.check(adherence(c, k) == reference::meshAdherence(c, k),
                "adh mesh-form", k);
    for (Mask k1 = 1; k1 <= full; ++k1)
      for (Mask k2 = 1; k2 <= full; ++k2)
        rec.check(adherence(c, k1 | k2) ==
                      (adherence(c, k1) | adherence(c, k2)),
                  "adh additive", k1 | k2);
  });
}

void propSpaceClosure(const SuiteParams& p, PropertyResult& res) {
  Rec rec(res);
  forEachSpace(p, 5, rec, [&](const Space& c) {
    const Mask full = c.carrier()->full();
    for (Mask m = 0; m <= full; ++m) {
      rec.check(isClosed(c, m) == reference::isClosedLiteral(c, m),
                "closed literal", m);
      const Mask cl = closureOf(c, m);
      rec.check(cl == reference::closureLiteral(c, m), "closure literal", m);
      rec.check(subsetOf(m, cl), "closure extensive", m);
      rec.check(closureOf(c, cl) == cl, "closure idempotent", m);
      for (int b = 0; b < c.points(); ++b)
        if (!has(m, b)) {
          rec.check(subsetOf(cl, closureOf(c, m | bit(b))),
                    "closure monotone", m);
          break;  // one extension suffices per kernel for the step law
        }
    }
    const SetFamily closed = closedSets(c);
    rec.check(closed.contains(0) && closed.contains(full),
              "closed family bounds");
    bool stable = true;
    for (Mask a : closed.members())
      for (Mask b : closed.members())
        if (!closed.contains(a | b) || !closed.contains(a & b)) stable = false;
    rec.check(stable, "closed family lattice");
  });
}

void propSpaceReflectors(const SuiteParams& p, PropertyResult& res) {
  Rec rec(res);
  forEachSpace(p, 5, rec, [&](const Space& c) {
    const Mask full = c.carrier()->full();
    const Space s = reflectorS(c);
    const Space t = reflectorT(c);
    rec.check(finerThan(c, s), "reflector S coarser");
    rec.check(finerThan(s, t), "reflector S below T");
    rec.check(equalPointwise(reflectorS(s), s), "reflector S idempotent");
    rec.check(equalPointwise(reflectorT(t), t), "reflector T idempotent");
    rec.check(isPseudotopology(s), "reflector S pseudotopology");
    rec.check(isTopological(t), "reflector T topological");
    rec.check(closedSets(t) == closedSets(c), "reflector T closed sets");
    for (Mask k = 1; k <= full; ++k)
      rec.check(adherence(s, k) == adherence(c, k), "reflector S adherence",
                k);
    // monotonicity along comparable pairs
    const Space anti = antidiscreteSpace(c.carrier());
    const Space pairs[3][2] = {{c, s}, {c, t}, {s, t}};
    for (const auto& pr : pairs) {
      rec.check(finerThan(reflectorS(pr[0]), reflectorS(pr[1])),
                "reflector S monotone");
      rec.check(finerThan(reflectorT(pr[0]), reflectorT(pr[1])),
                "reflector T monotone");
    }
    rec.check(finerThan(reflectorS(c), reflectorS(anti)),
              "reflector S monotone top");
    rec.check(finerThan(reflectorT(c), reflectorT(anti)),
              "reflector T monotone top");
  });
}

void propSpaceCompactness(const SuiteParams& p, PropertyResult& res) {
  Rec rec(res);
  forEachSpace(p, 5, rec, [&](const Space& c) {
    const Mask full = c.carrier()->full();
    const CompactParts parts = compactParts(c);
    rec.check(parts.compactoids.size() == (std::size_t{1} << c.points()),
              "compactoids everything");
    rec.check(parts.compacts.size() == (std::size_t{1} << c.points()),
              "compacts everything");
    rec.check(parts.cocompactoid.degenerate(), "cocompactoid degenerate");
    rec.check(adherence(c, parts.cocompactoid) == 0,
              "cocompactoid non-adherent");
    rec.check(parts.locallyCompactoid, "locally compactoid");
    for (CompletenessKind kind :
         {CompletenessKind::plain, CompletenessKind::ultra}) {
      const CompletenessResult r = completenessNumber(c, 0, kind);
      rec.check(r.value == 1, "absolute completeness one");
      rec.check(r.paperConvention == 0, "absolute completeness paper zero");
      rec.check(r.witness.members.size() == 1 &&
                    r.witness.members.front().degenerate(),
                "absolute completeness witness");
    }
    (void)full;
  });
}

void propCoversCriterion(const SuiteParams& p, PropertyResult& res) {
  Rec rec(res);
  forEachSpace(p, 4, rec, [&](const Space& c) {
    const CarrierRef& car = c.carrier();
    std::vector<SetFamily> fams;
    if (c.points() <= 3) {
      fams = smallFamilies(car, 3, false);
    } else {
      SplitMix64 rng(p.seed ^ 0xC0FEull ^ tableHash(tabulate(c).table()));
      const Mask full = car->full();
      for (int t = 0; t < 150; ++t) {
        std::vector<Mask> members;
        const int sz = 1 + static_cast<int>(rng.next() % 4);
        for (int i = 0; i < sz; ++i)
          members.push_back(static_cast<Mask>(rng.next()) & full);
        fams.emplace_back(car, members);
      }
    }
    for (const SetFamily& fam : fams) {
      const bool cover = isCover(c, fam, CoverKind::cover).verdict;
      rec.check(cover == coverCriterion(c, fam), "cover criterion");
      const bool pseudo = isCover(c, fam, CoverKind::pseudocover).verdict;
      rec.check(!cover || pseudo, "cover implies pseudocover");
      std::vector<Mask> withFull = fam.members();
      withFull.push_back(car->full());
      rec.check(isCover(c, SetFamily(car, withFull), CoverKind::cover).verdict,
                "cover with full member");
    }
    rec.check(familyAdherence(c, SetFamily(car, {Mask{0}})) == 0,
              "family adherence empty member");
  });
}

void propCoversCauchy(const SuiteParams& p, PropertyResult& res) {
  Rec rec(res);
  // Part 1 (space-free): preCauchy is invariant under the union-down
  // transform, and Cauchy transfers forward, for every filter.
  for (int n = std::max(1, p.nMin); n <= std::min(p.nMax, 3); ++n) {
    CarrierRef car = letterCarrier(n);
    const std::vector<SetFamily> fams = smallFamilies(car, 2, false);
    std::vector<CoverCollection> colls;
    for (const SetFamily& f : fams)
      colls.push_back(CoverCollection{car, {f}});
    if (n <= 2) {
      for (std::size_t i = 0; i < fams.size(); ++i)
        for (std::size_t j = i + 1; j < fams.size(); ++j)
          colls.push_back(CoverCollection{car, {fams[i], fams[j]}});
    } else {
      SplitMix64 rng(p.seed ^ 0xCAFEull);
      for (int t = 0; t < 60; ++t) {
        const std::size_t i = rng.next() % fams.size();
        const std::size_t j = rng.next() % fams.size();
        colls.push_back(CoverCollection{car, {fams[i], fams[j]}});
      }
    }
    const Mask full = car->full();
    for (const CoverCollection& pp : colls) {
      const IdealTransforms tr = idealTransforms(pp);
      for (Mask k = 1; k <= full; ++k) {
        const PFilter f{car, k};
        rec.check(isCauchy(f, pp, CauchyKind::preCauchy) ==
                      isCauchy(f, tr.unionDown, CauchyKind::preCauchy),
                  "preCauchy union-down invariant", k);
        rec.check(!isCauchy(f, pp, CauchyKind::cauchy) ||
                      isCauchy(f, tr.unionDown, CauchyKind::cauchy),
                  "Cauchy transfers to union-down", k);
        rec.check(!isCauchy(f, pp, CauchyKind::cauchy) ||
                      isCauchy(f, pp, CauchyKind::preCauchy),
                  "Cauchy implies preCauchy", k);
      }
    }
  }

  // Part 2 (per space, sampled universe): completeness is equivalent across
  // the collection, its union-down transform, and the filter-form dual
  // reading, for both strengths.
  const std::vector<Space> sample = sampleUniverse(p, 40, 0);
  for (const Space& c : sample) {
    rec.cur = &c;
    try {
      const CarrierRef& car = c.carrier();
      std::vector<SetFamily> coverPool;
      for (const SetFamily& f : smallFamilies(car, 2, true))
        if (isCover(c, f, CoverKind::cover).verdict) coverPool.push_back(f);
      std::vector<CoverCollection> colls;
      for (const SetFamily& f : coverPool)
        colls.push_back(CoverCollection{car, {f}});
      SplitMix64 rng(p.seed ^ 0xBEEFull);
      for (int t = 0; t < 15 && coverPool.size() >= 2; ++t) {
        const std::size_t i = rng.next() % coverPool.size();
        const std::size_t j = rng.next() % coverPool.size();
        colls.push_back(CoverCollection{car, {coverPool[i], coverPool[j]}});
      }
      for (const CoverCollection& pp : colls) {
        const IdealTransforms tr = idealTransforms(pp);
        for (CompleteKind kind :
             {CompleteKind::complete, CompleteKind::ultracomplete}) {
          const bool lhs = isCompleteCollection(c, pp, kind).verdict;
          const bool mid = isCompleteCollection(c, tr.unionDown, kind).verdict;
          const CocompleteKind ck = (kind == CompleteKind::complete)
                                        ? CocompleteKind::cocomplete
                                        : CocompleteKind::ultracocomplete;
          const bool rhs =
              isCocompleteCollection(c, tr.filterForm, 0, ck).verdict;
          rec.check(lhs == mid, "completeness union-down equivalent");
          rec.check(lhs == rhs, "completeness filter-form equivalent");
        }
      }
    } catch (const std::exception& e) {
      rec.exception(e.what());
    }
    rec.cur = nullptr;
  }
}

void propCoversCompleteness(const SuiteParams& p, PropertyResult& res) {
  Rec rec(res);
  forEachSpace(p, 5, rec, [&](const Space& c) {
    const SetFamily closed = closedSets(c);
    for (Mask a : closed.members()) {
      const CompletenessResult plain =
          completenessNumber(c, a, CompletenessKind::plain);
      const CompletenessResult ultra =
          completenessNumber(c, a, CompletenessKind::ultra);
      rec.check(plain.value <= ultra.value, "completeness plain<=ultra", a);
      rec.check(plain.paperConvention <= ultra.paperConvention,
                "completeness paper plain<=ultra", a);
      rec.check(plain.value == 1 && ultra.value == 1,
                "completeness finite value one", a);
      const unsigned expectPaper = (a == 0) ? 0u : 1u;
      rec.check(plain.paperConvention == expectPaper &&
                    ultra.paperConvention == expectPaper,
                "completeness paper convention", a);
      rec.check(plain.witness.members.size() == plain.value,
                "completeness witness size", a);
      rec.check(
          isCocompleteCollection(c, plain.witness, a,
                                 CocompleteKind::cocomplete)
              .verdict,
          "completeness witness verifies", a);
      rec.check(isCocompleteCollection(c, ultra.witness, a,
                                       CocompleteKind::ultracocomplete)
                    .verdict,
                "ultracompleteness witness verifies", a);
    }
  });
}

void propDualAdjunction(const SuiteParams& p, PropertyResult& res) {
  Rec rec(res);
  forEachSpace(p, 4, rec, [&](const Space& c) {
    const SetFamily closed = closedSets(c);
    if (closed.size() > static_cast<std::size_t>(MAX_CARRIER)) return;
    const DualSpace d = dualSpace(c);
    const Mask full = c.carrier()->full();
    bool t1 = true;
    for (int x = 0; x < c.points(); ++x)
      if (!closed.contains(bit(x))) t1 = false;
    for (Mask k = 1; k <= full; ++k) {
      const PFilter f{c.carrier(), k};
      const Mask comp = rdcFilter(d, erectedFilter(d, f)).kernel;
      Mask direct = 0;
      for (Mask cl : closed.members())
        if (subsetOf(cl, k)) direct |= cl;
      rec.check(comp == direct, "adjunction composite formula", k);
      rec.check(subsetOf(comp, k), "adjunction composite below", k);
      if (t1) rec.check(comp == k, "adjunction composite T1 identity", k);
    }
    const int m = d.dualCarrier()->size();
    const Mask dualFull = d.dualCarrier()->full();
    std::vector<Mask> dualKernels;
    if (m <= 12) {
      for (Mask g = 0; g <= dualFull; ++g) dualKernels.push_back(g);
    } else {
      for (int i = 0; i < m; ++i) dualKernels.push_back(bit(i));
      SplitMix64 rng(p.seed ^ 0xD0A1ull);
      for (int t = 0; t < 256; ++t)
        dualKernels.push_back(static_cast<Mask>(rng.next()) & dualFull);
      for (Mask k = 1; k <= full; ++k)
        dualKernels.push_back(erectedFilter(d, PFilter{c.carrier(), k}).kernel);
    }
    for (Mask g : dualKernels) {
      const PFilter gf{d.dualCarrier(), g};
      const Mask sat = saturate(d, gf).kernel;
      rec.check(subsetOf(g, sat), "saturate coarser", g);
      rec.check(saturate(d, PFilter{d.dualCarrier(), sat}).kernel == sat,
                "saturate idempotent", g);
      rec.check(rdcFilter(d, PFilter{d.dualCarrier(), sat}).kernel ==
                    rdcFilter(d, gf).kernel,
                "saturate preserves reduction", g);
    }
  });
}

void propDualPseudotopology(const SuiteParams& p, PropertyResult& res) {
  Rec rec(res);
  forEachSpace(p, 4, rec, [&](const Space& c) {
    if (closedSets(c).size() > static_cast<std::size_t>(MAX_CARRIER)) return;
    const DualSpace d = dualSpace(c);
    const Space& dc = d.conv();
    const int m = d.dualCarrier()->size();
    const Mask dualFull = d.dualCarrier()->full();
    // point limits once; pseudotopology = every limit is the intersection
    // of its kernel's point limits
    std::vector<Mask> pointLim(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
      pointLim[static_cast<std::size_t>(i)] = dc.lim(bit(i));
    std::vector<Mask> kernels;
    if (m <= 13) {
      for (Mask g = 1; g <= dualFull; ++g) kernels.push_back(g);
    } else {
      SplitMix64 rng(p.seed ^ 0xDD2ull);
      for (int i = 0; i < m; ++i) kernels.push_back(bit(i));
      for (int t = 0; t < 512; ++t) {
        const Mask g = static_cast<Mask>(rng.next()) & dualFull;
        if (g) kernels.push_back(g);
      }
    }
    const bool baseTopological = isTopological(c);
    for (Mask g : kernels) {
      Mask inter = dualFull;
      forEachBit(g, [&](int i) {
        inter &= pointLim[static_cast<std::size_t>(i)];
      });
      rec.check(dc.lim(g) == inter, "dual pseudotopology", g);
      if (baseTopological)
        rec.check(dc.lim(g) == upperKuratowskiLim(d, g),
                  "dual upper-Kuratowski form", g);
    }
    const InducedGraph dg = graphOf(dc);
    rec.check(dg.roots == bit(0), "dual roots are empty-set point");
    rec.check(dg.ends == bit(m - 1), "dual ends are full-set point");
  });
}

void propDualRegularity(const SuiteParams& p, PropertyResult& res) {
  Rec rec(res);
  // Part 1: every finite topology is star-regular; exhaustive over all
  // topologies on up to 4 points, with the labelled counts pinned.
  static const std::uint64_t topoCounts[5] = {0, 1, 4, 29, 355};
  for (int n = std::max(1, p.nMin); n <= std::min({p.nMax, 4}); ++n) {
    std::uint64_t count = 0;
    forEachTopology(n, [&](const Space& c) {
      rec.cur = &c;
      const RegularityPredicates r = regularityPredicates(c);
      rec.check(r.starRegular, "topology star-regular");
      rec.cur = nullptr;
    }, &count);
    rec.check(count == topoCounts[n], "topology labelled count");
  }
  // Part 2: regularity consequences on the general universe.
  forEachSpace(p, 5, rec, [&](const Space& c) {
    const RegularityPredicates r = regularityPredicates(c);
    if (isTopological(c))
      rec.check(r.starRegular, "topological implies star-regular");
    const AlexandroffPair ax = alexandroff(c);
    const Mask full = c.carrier()->full();
    if (r.starRegular)
      for (Mask k = 1; k <= full; ++k)
        rec.check(adherence(c, k) == adherence(c, ax.bullet(k)),
                  "star-regular bullet adherence", k);
    if (r.bulletRegular)
      for (Mask k = 1; k <= full; ++k)
        rec.check(adherence(c, k) == adherence(c, ax.star(k)),
                  "bullet-regular star adherence", k);
    if (r.reciprocal) {
      const SetFamily closed = closedSets(c);
      for (Mask cl : closed.members())
        rec.check(ax.star(cl) == cl, "reciprocal closed star-fixed", cl);
    }
    // At size 5 and above the exhaustive topology sweep is out of reach;
    // the topologization of each random space keeps topologies in play.
    if (c.points() >= 5) {
      const Space t = tabulate(reflectorT(c));
      rec.check(regularityPredicates(t).starRegular,
                "topologization star-regular");
    }
  });
}

void propGraphDagger(const SuiteParams& p, PropertyResult& res) {
  Rec rec(res);
  forEachSpace(p, 5, rec, [&](const Space& c) {
    const InducedGraph g = graphOf(c);
    const Mask full = c.carrier()->full();
    const int n = c.points();
    std::vector<Mask> notLeft(static_cast<std::size_t>(n));
    std::vector<Mask> notRight(static_cast<std::size_t>(n));
    for (int y = 0; y < n; ++y) {
      const NotArrowSets na = notArrowSets(g, y);
      notLeft[static_cast<std::size_t>(y)] = na.notLeft;
      notRight[static_cast<std::size_t>(y)] = na.notRight;
    }
    auto interNotLeft = [&](Mask a) {
      Mask out = full;
      forEachBit(a, [&](int q) {
        out &= notLeft[static_cast<std::size_t>(q)];
      });
      return out;
    };
    Mask emptyDagger = 0;
    for (int x = 0; x < n; ++x)
      if (subsetOf(g.backward[static_cast<std::size_t>(x)], g.roots))
        emptyDagger |= bit(x);
    rec.check(daggerClosure(g, 0) == emptyDagger, "dagger of empty unfolds");
    rec.check(subsetOf(daggerClosure(g, 0), g.roots),
              "dagger of empty below roots");
    if (g.roots == 0)
      rec.check(daggerClosure(g, 0) == 0, "rootless implies grounded");
    for (Mask a = 0; a <= full; ++a) {
      const Mask da = daggerClosure(g, a);
      rec.check(subsetOf(a, da), "dagger extensive", a);
      rec.check(daggerClosure(g, da) == da, "dagger idempotent", a);
      rec.check(da == reference::daggerLiteral(c, a), "dagger literal", a);
      rec.check(interNotLeft(da) == interNotLeft(a),
                "dagger auxiliary intersection", a);
      for (int b = 0; b < n; ++b)
        if (!has(a, b)) {
          rec.check(subsetOf(da, daggerClosure(g, a | bit(b))),
                    "dagger monotone", a);
          break;
        }
    }
    // T1 shadow: all singletons closed on 2+ points with no roots or ends.
    const SetFamily closed = closedSets(c);
    bool t1 = n >= 2;
    for (int x = 0; x < n && t1; ++x)
      if (!closed.contains(bit(x))) t1 = false;
    if (t1 && g.roots == 0 && g.ends == 0) {
      for (Mask a = 0; a <= full; ++a)
        rec.check(daggerClosure(g, a) == a, "dagger T1 identity", a);
      for (int y = 0; y < n; ++y)
        rec.check(notRight[static_cast<std::size_t>(y)] == (full & ~bit(y)),
                  "notRight T1 shadow");
    }
  });
}

void propGraphDualDagger(const SuiteParams& p, PropertyResult& res) {
  Rec rec(res);
  forEachSpace(p, 4, rec, [&](const Space& c) {
    if (closedSets(c).size() > static_cast<std::size_t>(MAX_CARRIER)) return;
    const DualSpace d = dualSpace(c);
    const InducedGraph dg = graphOf(d.conv());
    // On dual graphs the ungrounded form is exact: the bottom point is the
    // unique root and its only predecessor.
    rec.check(daggerClosure(dg, 0) == dg.roots, "dual dagger of empty roots");
    const AlexandroffPair ax = alexandroff(c);
    const std::vector<Mask>& closed = d.closedList();
    const int m = d.dualCarrier()->size();
    const Mask dualFull = d.dualCarrier()->full();
    const bool reciprocal = regularityPredicates(c).reciprocal;
    auto erectMask = [&](Mask baseSet) {
      Mask out = 0;
      for (std::size_t i = 0; i < closed.size(); ++i)
        if (subsetOf(closed[i], baseSet)) out |= bit(static_cast<int>(i));
      return out;
    };
    std::vector<Mask> kernels;
    if (m <= 12) {
      for (Mask g = 0; g <= dualFull; ++g) kernels.push_back(g);
    } else {
      kernels.push_back(0);
      for (int i = 0; i < m; ++i) kernels.push_back(bit(i));
      SplitMix64 rng(p.seed ^ 0xDA66ull);
      for (int t = 0; t < 512; ++t)
        kernels.push_back(static_cast<Mask>(rng.next()) & dualFull);
    }
    for (Mask g : kernels) {
      const Mask left = daggerClosure(dg, g);
      const Mask right = erectMask(ax.star(d.unionOf(g)));
      rec.check(left == right, "dual dagger two-path", g);
      if (reciprocal)
        rec.check(left == erectMask(d.unionOf(g)),
                  "dual dagger reciprocal erect", g);
    }
    // The family-level production API agrees on singleton kernels.
    for (int i = 0; i < m; ++i) {
      const SetFamily viaApi = dualDaggerForm(d, d.fromDualMask(bit(i)));
      rec.check(d.toDualMask(viaApi) == daggerClosure(dg, bit(i)),
                "dual dagger family api", bit(i));
    }
  });
}

void propPavingSolver(const SuiteParams& p, PropertyResult& res) {
  Rec rec(res);
  forEachSpace(p, 5, rec, [&](const Space& c) {
    const bool pseudo = isPseudotopology(c);
    for (int x = 0; x < c.points(); ++x) {
      const PavingResult pav = pavingNumber(c, x, PavingKind::pavement);
      const PavingResult pse = pavingNumber(c, x, PavingKind::pseudo);
      const PavingResult dag = pavingNumber(c, x, PavingKind::dagger);
      rec.check(dag.value <= pse.value && pse.value <= pav.value,
                "paving ordering", bit(x));
      rec.check(pav.witness.members.size() == pav.value &&
                    pse.witness.members.size() == pse.value &&
                    dag.witness.members.size() == dag.value,
                "paving witness sizes", bit(x));
      rec.check(isPavement(c, pav.witness, x, PavingKind::pavement).verdict,
                "pavement witness verifies", bit(x));
      rec.check(isPavement(c, pse.witness, x, PavingKind::pseudo).verdict,
                "pseudo witness verifies", bit(x));
      rec.check(isPavement(c, dag.witness, x, PavingKind::dagger).verdict,
                "dagger witness verifies", bit(x));
      if (pseudo)
        rec.check(pav.value == 1 && pse.value == 1,
                  "pseudotopology paving collapse", bit(x));
    }
  });
  // Naive cross-check on the sampled small universe (carrier ≤ 4).
  const std::vector<Space> sample = sampleUniverse(p, 40, 20);
  for (const Space& c : sample) {
    rec.cur = &c;
    try {
      for (int x = 0; x < c.points(); ++x)
        for (PavingKind kind :
             {PavingKind::pavement, PavingKind::pseudo, PavingKind::dagger}) {
          const PavingResult fast = pavingNumber(c, x, kind);
          const reference::NaivePaving slow =
              reference::pavingLiteral(c, x, kind);
          rec.check(fast.value == slow.value, "paving naive value", bit(x));
          std::vector<Mask> fastKernels;
          for (const PFilter& f : fast.witness.members)
            fastKernels.push_back(f.kernel);
          rec.check(fastKernels == slow.members, "paving naive witness",
                    bit(x));
        }
    } catch (const std::exception& e) {
      rec.exception(e.what());
    }
    rec.cur = nullptr;
  }
  // Dual-side saturation invariance, and the localization numbers on
  // topological spaces.
  const std::vector<Space> sample2 = sampleUniverse(p, 10, 0);
  for (const Space& c : sample2) {
    rec.cur = &c;
    try {
      if (closedSets(c).size() <= static_cast<std::size_t>(MAX_CARRIER)) {
        const DualSpace d = dualSpace(c);
        for (int at = 0; at < d.dualCarrier()->size(); ++at) {
          const PavingResult pav =
              pavingNumber(d.conv(), at, PavingKind::pavement);
          FilterCollection saturated;
          saturated.carrier = d.dualCarrier();
          for (const PFilter& mfilter : pav.witness.members)
            saturated.members.push_back(saturate(d, mfilter));
          rec.check(
              isPavement(d.conv(), saturated, at, PavingKind::pavement)
                  .verdict,
              "saturated pavement still paves", static_cast<Mask>(at));
          rec.check(saturated.members.size() == pav.value,
                    "saturated pavement same size", static_cast<Mask>(at));
        }
      }
      if (isTopological(c)) {
        rec.check(kArensNumber(c) == 1, "compact-domination number one");
        const Mask full = c.carrier()->full();
        for (Mask a = 0; a <= full; ++a)
          rec.check(characterOf(c, a) == 1, "neighborhood character one", a);
      }
    } catch (const std::exception& e) {
      rec.exception(e.what());
    }
    rec.cur = nullptr;
  }
}

void propPavingPseudopavement(const SuiteParams& p, PropertyResult& res) {
  Rec rec(res);
  forEachSpace(p, 3, rec, [&](const Space& c) {
    if (!isPseudotopology(c)) return;
    const Mask full = c.carrier()->full();
    for (int x = 0; x < c.points(); ++x) {
      std::vector<Mask> ks;
      for (Mask k = 1; k <= full; ++k)
        if (has(c.lim(k), x)) ks.push_back(k);
      const Mask cp = convergentPoints(c, x);
      const std::uint32_t subsets = std::uint32_t{1} << ks.size();
      for (std::uint32_t sel = 1; sel < subsets; ++sel) {
        FilterCollection coll;
        coll.carrier = c.carrier();
        Mask unionKernels = 0;
        for (std::size_t i = 0; i < ks.size(); ++i)
          if (has(sel, static_cast<int>(i))) {
            coll.members.push_back(PFilter{c.carrier(), ks[i]});
            unionKernels |= ks[i];
          }
        const bool viaApi =
            isPavement(c, coll, x, PavingKind::pseudo).verdict;
        const bool viaCover = subsetOf(cp, unionKernels);
        bool viaMesh = true;
        for (Mask k : ks) {
          bool meshes = false;
          for (const PFilter& mfilter : coll.members)
            if (meets(k, mfilter.kernel)) { meshes = true; break; }
          if (!meshes) { viaMesh = false; break; }
        }
        rec.check(viaApi == viaCover, "pseudopavement cover form", sel);
        rec.check(viaApi == viaMesh, "pseudopavement mesh form", sel);
      }
    }
  });
}

void propMapsStructures(const SuiteParams& p, PropertyResult& res) {
  Rec rec(res);
  std::vector<Space> pool = {fixtureChain(), fixtureUltra(), fixtureOverlap(),
                             fixtureDiscretePair(),
                             discreteSpace(letterCarrier(3)),
                             antidiscreteSpace(letterCarrier(2))};
  for (int t = 0; t < 3; ++t)
    pool.push_back(randomSpace(spaceSeed(p, 3, t) ^ 0x3A9ull, 3,
                               kDensities[(t + 2) % 6]));
  std::uint64_t relHolds = 0, relTotal = 0;
  for (const Space& src : pool)
    for (const Space& dst : pool) {
      const int ns = src.points(), nt = dst.points();
      std::uint64_t fnCount = 1;
      for (int i = 0; i < ns; ++i) fnCount *= static_cast<std::uint64_t>(nt);
      for (std::uint64_t code = 0; code < fnCount; ++code) {
        std::vector<int> f(static_cast<std::size_t>(ns));
        std::uint64_t rest = code;
        for (int i = 0; i < ns; ++i) {
          f[static_cast<std::size_t>(i)] = static_cast<int>(rest % nt);
          rest /= static_cast<std::uint64_t>(nt);
        }
        rec.cur = &src;
        try {
          const SpaceMap m = makeMap(src, dst, f);
          const bool cont = isContinuous(m).verdict;
          const Space ini = initialStructure(m);
          rec.check(validate(ini).empty(), "initial structure lawful");
          rec.check(cont == finerThan(src, ini),
                    "continuity via initial structure");
          if (m.onto()) {
            const Space fin = finalStructure(m);
            rec.check(validate(fin).empty(), "final structure lawful");
            rec.check(cont == finerThan(fin, dst),
                      "continuity via final structure");
            if (cont) {
              const MapClass mc = mapClass(m);
              rec.check(!mc.almostOpen || mc.biquotient,
                        "almost-open implies biquotient");
              rec.check(!mc.biquotient || mc.quotient,
                        "biquotient implies quotient");
              // cover image laws over two-member cover families
              for (const SetFamily& fam :
                   smallFamilies(src.carrier(), 2, true)) {
                if (!isCover(src, fam, CoverKind::cover).verdict) continue;
                const SetFamily img = familyImage(m, fam);
                if (mc.almostOpen)
                  rec.check(isCover(dst, img, CoverKind::cover).verdict,
                            "almost-open cover image");
                const SetFamily ideal = downClosure(unionClosure(fam));
                if (mc.biquotient)
                  rec.check(
                      isCover(dst, familyImage(m, ideal), CoverKind::cover)
                          .verdict,
                      "biquotient ideal cover image");
              }
              if (mc.biquotient) {
                const SetFamily srcClosed = closedSets(src);
                for (Mask a : srcClosed.members()) {
                  const unsigned su =
                      completenessNumber(src, a, CompletenessKind::ultra)
                          .paperConvention;
                  const Mask ta = closureOf(dst, m.imageMask(a));
                  const unsigned du =
                      completenessNumber(dst, ta, CompletenessKind::ultra)
                          .paperConvention;
                  ++relTotal;
                  if (du <= su) ++relHolds;
                }
              }
            }
          }
        } catch (const std::exception& e) {
          rec.exception(e.what());
        }
        rec.cur = nullptr;
      }
    }
  // Identity maps are almost-open homeomorphisms onto themselves.
  for (const Space& c : pool) {
    rec.cur = &c;
    try {
      std::vector<int> id(static_cast<std::size_t>(c.points()));
      for (int i = 0; i < c.points(); ++i) id[static_cast<std::size_t>(i)] = i;
      const SpaceMap m = makeMap(c, c, id);
      const MapClass mc = mapClass(m);
      rec.check(mc.almostOpen && mc.biquotient && mc.quotient,
                "identity map classes");
      rec.check(equalPointwise(finalStructure(m), c),
                "identity final structure");
      rec.check(equalPointwise(initialStructure(m), c),
                "identity initial structure");
    } catch (const std::exception& e) {
      rec.exception(e.what());
    }
    rec.cur = nullptr;
  }
  {
    std::ostringstream os;
    os << "relative-ultracompleteness holds=" << relHolds << "/" << relTotal
       << " (exploratory, not asserted)";
    rec.info(os.str());
  }
}

void dualityProp(const SuiteParams& p, PropertyResult& res, bool ultraSide) {
  Rec rec(res);
  forEachSpace(p, 5, rec, [&](const Space& c) {
    if (closedSets(c).size() > static_cast<std::size_t>(MAX_CARRIER)) return;
    if (!regularityPredicates(c).starRegular) return;
    const std::vector<DualityRow> rows = dualityCheck(c);
    int notes = 0;
    for (const DualityRow& row : rows) {
      if (ultraSide) {
        rec.check(row.equalUltra, "ultracompleteness equals dual pavement",
                  row.target);
        rec.check(row.paperUltra == ((row.target == 0) ? 0u : row.ultraValue),
                  "paper ultra convention", row.target);
      } else {
        rec.check(row.equalPlain, "completeness equals dual dagger pavement",
                  row.target);
        rec.check(row.paperPlain == ((row.target == 0) ? 0u : row.plainValue),
                  "paper plain convention", row.target);
      }
      if (row.paperNote) ++notes;
      rec.check(row.paperNote == (row.target == 0), "paper note placement",
                row.target);
    }
    rec.check(notes == 1, "paper note exactly once");
  });
}

void propDualityUltra(const SuiteParams& p, PropertyResult& res) {
  dualityProp(p, res, true);
}

void propDualityPlain(const SuiteParams& p, PropertyResult& res) {
  dualityProp(p, res, false);
}

void propHarnessRoundtrip(const SuiteParams& p, PropertyResult& res) {
  Rec rec(res);
  forEachSpace(p, 5, rec, [&](const Space& c) {
    const std::string text = serializeSpace(c, "s");
    const SpaceFile parsed = parseSpace(text);
    rec.check(parsed.name == "s", "roundtrip name");
    rec.check(equalPointwise(parsed.space, c), "roundtrip space");
    rec.check(serializeSpace(parsed.space, "s") == text, "roundtrip bytes");
  });
  // Generators are reproducible, and malformed inputs are rejected with
  // input errors.
  for (int t = 0; t < 8; ++t) {
    const Space a = randomSpace(p.seed + static_cast<std::uint64_t>(t), 4,
                                kDensities[t % 6]);
    const Space b = randomSpace(p.seed + static_cast<std::uint64_t>(t), 4,
                                kDensities[t % 6]);
    rec.check(equalPointwise(a, b), "random space deterministic");
    rec.check(validate(a).empty(), "random space lawful");
  }
  const char* bad[] = {
      "space: x\npoints: a b\nmode: explicit\nlim: {} -> {a}\n",
      "space: x\npoints: a b\nmode: explicit\nlim: {a} -> {a}\n",
      "space: x\npoints: a a\nmode: explicit\nlim: {a} -> {a}\n",
      "space: x\npoints: a\nmode: nonsense\n",
      "space: x\npoints: a\nmode: topology\nopen: {a}\n",
      "points: a\nmode: explicit\nlim: {a} -> {a}\n",
  };
  for (const char* text : bad) {
    bool threw = false;
    try {
      parseSpace(text);
    } catch (const Error& e) {
      threw = (e.kind() == ErrorKind::input);
    }
    rec.check(threw, "malformed space rejected");
  }
}

void propHarnessEnumeration(const SuiteParams& p, PropertyResult& res) {
  Rec rec(res);
  for (int n = std::max(1, p.nMin); n <= std::min(p.nMax, 3); ++n) {
    CarrierRef car = letterCarrier(n);
    const EnumerationSummary up =
        summarizeEnumeration(car, GenOrder::sizeAscending);
    const EnumerationSummary down =
        summarizeEnumeration(car, GenOrder::sizeDescending);
    rec.check(up == down, "enumeration orders agree");
    const std::uint64_t frozen = frozenEnumerationCount(n);
    if (frozen != 0)
      rec.check(up.count == frozen, "enumeration count frozen");
    std::ostringstream os;
    os << "n=" << n << " count=" << up.count << " hashSum=" << up.hashSum
       << " hashXor=" << up.hashXor;
    rec.info(os.str());
    // every enumerated table is lawful: spot-check via full validation
    std::uint64_t bad = 0;
    enumerateConvergences(car, GenOrder::sizeAscending,
                          [&](const std::vector<Mask>& t) {
                            if (!validate(Space::tabulated(car, t)).empty())
                              ++bad;
                          });
    rec.check(bad == 0, "enumerated tables lawful");
  }
}

struct PropEntry {
  const char* name;
  void (*fn)(const SuiteParams&, PropertyResult&);
};

const PropEntry kRegistry[] = {
    {"families-laws", propFamiliesLaws},
    {"space-adherence", propSpaceAdherence},
    {"space-closure", propSpaceClosure},
    {"space-reflectors", propSpaceReflectors},
    {"space-compactness", propSpaceCompactness},
    {"covers-criterion", propCoversCriterion},
    {"covers-cauchy", propCoversCauchy},
    {"covers-completeness", propCoversCompleteness},
    {"dual-adjunction", propDualAdjunction},
    {"dual-pseudotopology", propDualPseudotopology},
    {"dual-regularity", propDualRegularity},
    {"graph-dagger", propGraphDagger},
    {"graph-dual-dagger", propGraphDualDagger},
    {"paving-solver", propPavingSolver},
    {"paving-pseudopavement", propPavingPseudopavement},
    {"maps-structures", propMapsStructures},
    {"duality-ultra", propDualityUltra},
    {"duality-plain", propDualityPlain},
    {"harness-roundtrip", propHarnessRoundtrip},
    {"harness-enumeration", propHarnessEnumeration},
};

}  // namespace

std::vector<std::string> suitePropertyNames() {
  std::vector<std::string> out;
  for (const PropEntry& e : kRegistry) out.emplace_back(e.name);
  return out;
}

SuiteReport runSuite(const SuiteParams& p) {
  if (p.nMin < 1 || p.nMax < p.nMin || p.nMax > MAX_CARRIER)
    throw Error(ErrorKind::input, "runSuite: bad carrier range");
  if (p.trials < 0) throw Error(ErrorKind::input, "runSuite: bad trials");
  std::vector<const PropEntry*> selected;
  if (p.props.empty()) {
    for (const PropEntry& e : kRegistry) selected.push_back(&e);
  } else {
    for (const std::string& name : p.props) {
      const PropEntry* found = nullptr;
      for (const PropEntry& e : kRegistry)
        if (name == e.name) { found = &e; break; }
      if (!found)
        throw Error(ErrorKind::input, "runSuite: unknown property '" + name +
                                          "'");
      selected.push_back(found);
    }
  }
  SuiteReport report;
  report.params = p;
  for (const PropEntry* e : selected) {
    PropertyResult r;
    r.name = e->name;
    try {
      e->fn(p, r);
    } catch (const std::exception& ex) {
      ++r.failures;
      r.notes.push_back(std::string("aborted: ") + ex.what());
    }
    if (r.failures > 0) report.pass = false;
    report.properties.push_back(std::move(r));
  }
  return report;
}

std::string serializeReport(const SuiteReport& r) {
  std::ostringstream os;
  os << "suite.nMin=" << r.params.nMin << "\n";
  os << "suite.nMax=" << r.params.nMax << "\n";
  os << "suite.trials=" << r.params.trials << "\n";
  os << "suite.seed=" << r.params.seed << "\n";
  os << "suite.props=";
  if (r.params.props.empty()) {
    os << "all";
  } else {
    for (std::size_t i = 0; i < r.params.props.size(); ++i) {
      if (i) os << ",";
      os << r.params.props[i];
    }
  }
  os << "\n";
  for (const PropertyResult& pr : r.properties) {
    os << "prop." << pr.name << ".instances=" << pr.instances << "\n";
    os << "prop." << pr.name << ".failures=" << pr.failures << "\n";
    os << "prop." << pr.name << ".status="
       << (pr.failures == 0 ? "pass" : "fail") << "\n";
    for (std::size_t i = 0; i < pr.notes.size(); ++i)
      os << "prop." << pr.name << ".note." << i << "=" << pr.notes[i] << "\n";
  }
  os << "suite.pass=" << (r.pass ? "true" : "false") << "\n";
  return os.str();
}

}  // namespace convlab
