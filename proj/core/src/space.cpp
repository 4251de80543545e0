#include "convlab/space.hpp"

namespace convlab {

Space Space::tabulated(CarrierRef carrier, std::vector<Mask> table) {
  if (!carrier) throw Error(ErrorKind::input, "space without carrier");
  if (table.size() != (std::size_t{1} << carrier->size()))
    throw Error(ErrorKind::input, "lim table size does not match carrier");
  Mask full = carrier->full();
  for (Mask m : table)
    if (!subsetOf(m, full))
      throw Error(ErrorKind::input, "limit set outside carrier");
  Space s;
  s.carrier_ = std::move(carrier);
  s.repr_ = Repr::tabulated;
  s.table_ = std::move(table);
  s.table_[0] = 0;
  return s;
}

Space Space::lazy(CarrierRef carrier, Repr repr, std::function<Mask(Mask)> rule) {
  if (!carrier) throw Error(ErrorKind::input, "space without carrier");
  Space s;
  s.carrier_ = std::move(carrier);
  s.repr_ = repr;
  s.rule_ = std::move(rule);
  return s;
}

const std::vector<Mask>& Space::table() const {
  if (!isTabulated())
    throw Error(ErrorKind::precondition, "table() requires a tabulated space");
  return table_;
}

Space tabulate(const Space& c) {
  if (c.isTabulated()) return c;
  Mask full = c.carrier()->full();
  std::vector<Mask> table(std::size_t{full} + 1, 0);
  for (Mask k = 1; k <= full; ++k) table[k] = c.lim(k);
  return Space::tabulated(c.carrier(), std::move(table));
}

bool equalPointwise(const Space& c, const Space& d) {
  if (c.points() != d.points())
    throw Error(ErrorKind::precondition, "pointwise comparison needs one carrier");
  Mask full = c.carrier()->full();
  for (Mask k = 1; k <= full; ++k)
    if (c.lim(k) != d.lim(k)) return false;
  return true;
}

std::string Violation::describe(const Carrier& carrier) const {
  if (kind == Kind::centered)
    return "centeredness fails at " + carrier.name(point) + ": " +
           carrier.name(point) + " not in lim" + setLiteral(carrier, bit(point));
  return "antitone fails on " + setLiteral(carrier, smaller) + " subset-of " +
         setLiteral(carrier, larger) + ": lim" + setLiteral(carrier, larger) +
         " not within lim" + setLiteral(carrier, smaller);
}

std::vector<Violation> validate(const Space& c) {
  std::vector<Violation> out;
  int n = c.points();
  Mask full = c.carrier()->full();
  for (int x = 0; x < n; ++x)
    if (!has(c.lim(bit(x)), x))
      out.push_back({Violation::Kind::centered, x, 0, 0});
  // One-element extensions suffice: lim(A∪{b}) ⊆ lim(A) for all A, b ∉ A.
  for (Mask a = 1; a <= full; ++a) {
    Mask la = c.lim(a);
    for (int b = 0; b < n; ++b) {
      if (has(a, b)) continue;
      Mask larger = a | bit(b);
      if (!subsetOf(c.lim(larger), la))
        out.push_back({Violation::Kind::antitone, -1, a, larger});
    }
  }
  return out;
}

Mask adherence(const Space& c, Mask kernel) {
  Mask out = 0;
  forEachBit(kernel, [&](int y) { out |= c.lim(bit(y)); });
  return out;
}

Mask adherence(const Space& c, const PFilter& f) { return adherence(c, f.kernel); }

bool isClosed(const Space& c, Mask candidate) {
  // A kernel K meshing C has K∩C ⊆ K, so lim(K) ⊆ lim(K∩C) by antitonicity;
  // checking the kernels inside C therefore suffices.
  bool ok = true;
  forEachSubset(candidate, [&](Mask k) {
    if (k != 0 && ok && !subsetOf(c.lim(k), candidate)) ok = false;
  });
  return ok;
}

SetFamily closedSets(const Space& c) {
  Mask full = c.carrier()->full();
  std::vector<Mask> out;
  for (Mask m = 0; m <= full; ++m)
    if (isClosed(c, m)) out.push_back(m);
  return SetFamily(c.carrier(), std::move(out));
}

Mask closureOf(const Space& c, Mask a) {
  // Grow by limits of enclosed kernels until stable; every closed superset
  // is stable under this step, so the fixpoint is the smallest one.
  Mask cl = a;
  bool grew = true;
  while (grew) {
    grew = false;
    Mask next = cl;
    forEachSubset(cl, [&](Mask k) {
      if (k != 0) next |= c.lim(k);
    });
    if (next != cl) {
      cl = next;
      grew = true;
    }
  }
  return cl;
}

Space reflectorT(const Space& c) {
  int n = c.points();
  SetFamily closed = closedSets(c);
  Mask full = c.carrier()->full();
  // V_x = smallest open set containing x = complement of the union of the
  // closed sets avoiding x.
  std::vector<Mask> vx(n, 0);
  for (int x = 0; x < n; ++x) {
    Mask unionAvoiding = 0;
    for (Mask cset : closed.members())
      if (!has(cset, x)) unionAvoiding |= cset;
    vx[x] = full & ~unionAvoiding;
  }
  return Space::lazy(c.carrier(), Repr::reflectorT, [vx, n](Mask a) {
    Mask out = 0;
    for (int x = 0; x < n; ++x)
      if (subsetOf(a, vx[x])) out |= bit(x);
    return out;
  });
}

Space reflectorS(const Space& c) {
  int n = c.points();
  std::vector<Mask> pointLim(n);
  for (int x = 0; x < n; ++x) pointLim[x] = c.lim(bit(x));
  return Space::lazy(c.carrier(), Repr::reflectorS, [pointLim](Mask a) {
    Mask out = ~Mask{0};
    forEachBit(a, [&](int x) { out &= pointLim[x]; });
    return out;
  });
}

bool isPseudotopology(const Space& c) { return equalPointwise(c, reflectorS(c)); }

bool isTopological(const Space& c) { return equalPointwise(c, reflectorT(c)); }

CompactParts compactParts(const Space& c) {
  int n = c.points();
  Mask full = c.carrier()->full();
  Mask good = 0;  // points whose principal filter converges somewhere
  for (int y = 0; y < n; ++y)
    if (c.lim(bit(y)) != 0) good |= bit(y);

  std::vector<Mask> compactoids, compacts;
  for (Mask a = 0; a <= full; ++a) {
    if (subsetOf(a, good)) compactoids.push_back(a);
    bool cp = true;
    forEachBit(a, [&](int y) {
      if (!meets(c.lim(bit(y)), a)) cp = false;
    });
    if (cp) compacts.push_back(a);
  }

  CompactParts out{SetFamily(c.carrier(), std::move(compactoids)),
                   SetFamily(c.carrier(), std::move(compacts)),
                   PFilter{c.carrier(), static_cast<Mask>(full & ~good)}, true};
  // Locally compactoid: every convergent kernel is contained in a compactoid
  // set, i.e. lies inside the largest one.
  for (Mask a = 1; a <= full; ++a)
    if (c.lim(a) != 0 && !subsetOf(a, good)) {
      out.locallyCompactoid = false;
      break;
    }
  return out;
}

bool finerThan(const Space& c, const Space& d) {
  if (c.points() != d.points())
    throw Error(ErrorKind::precondition, "finerThan needs one carrier");
  Mask full = c.carrier()->full();
  for (Mask a = 1; a <= full; ++a)
    if (!subsetOf(c.lim(a), d.lim(a))) return false;
  return true;
}

Space generateConvergence(CarrierRef carrier,
                          const std::vector<std::pair<Mask, Mask>>& generators) {
  Mask full = carrier->full();
  for (const auto& [s, l] : generators) {
    if (s == 0)
      throw Error(ErrorKind::input, "generator with empty kernel");
    if (!subsetOf(s, full) || !subsetOf(l, full))
      throw Error(ErrorKind::input, "generator outside carrier");
  }
  std::vector<Mask> table(std::size_t{full} + 1, 0);
  for (Mask a = 1; a <= full; ++a) {
    Mask lim = (popcount(a) == 1) ? a : 0;
    for (const auto& [s, l] : generators)
      if (subsetOf(a, s)) lim |= l;
    table[a] = lim;
  }
  return Space::tabulated(std::move(carrier), std::move(table));
}

}  // namespace convlab
