#include "convlab/paving.hpp"

#include <algorithm>
#include <functional>

namespace convlab {

namespace {

// Exact minimum set cover of `universe` by members of `cand` (each covering
// itself), by iterative deepening bounded by a greedy cover; within each
// size the DFS visits combinations in lexicographic order over the
// ascending candidate list, so the first success is the least witness.
struct SearchOut {
  unsigned value = 0;
  std::vector<Mask> members;
};

SearchOut minCoverLex(const std::vector<Mask>& cand, Mask universe) {
  const std::size_t n = cand.size();
  std::vector<Mask> suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] | cand[i];

  unsigned greedy = 0;
  {
    Mask covered = 0;
    while (covered != universe) {
      std::size_t best = n;
      int gain = -1;
      for (std::size_t j = 0; j < n; ++j) {
        const int g = popcount(cand[j] & universe & ~covered);
        if (g > gain) { gain = g; best = j; }
      }
      covered |= cand[best];
      ++greedy;
    }
  }

  std::vector<Mask> chosen;
  std::function<bool(std::size_t, Mask, unsigned)> dfs =
      [&](std::size_t i, Mask covered, unsigned left) -> bool {
    if (left == 0) return covered == universe;
    if ((covered | suffix[i]) != universe) return false;
    for (std::size_t j = i; j + left <= n; ++j) {
      chosen.push_back(cand[j]);
      if (dfs(j + 1, covered | cand[j], left - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (unsigned s = 1; s <= greedy; ++s) {
    chosen.clear();
    if (dfs(0, 0, s)) return SearchOut{s, chosen};
  }
  return SearchOut{greedy, {}};  // unreachable: greedy size always succeeds
}

// Exact minimum hitting family: every target must intersect some chosen
// member.  Same deepening/ordering scheme as minCoverLex.
SearchOut minHitLex(const std::vector<Mask>& cand,
                    const std::vector<Mask>& targets) {
  const std::size_t n = cand.size();
  std::vector<Mask> suffix(n + 1, 0);
  for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] | cand[i];

  unsigned greedy = 0;
  {
    std::vector<Mask> picked;
    std::vector<Mask> unhit = targets;
    while (!unhit.empty()) {
      std::size_t best = n;
      int gain = -1;
      for (std::size_t j = 0; j < n; ++j) {
        int g = 0;
        for (Mask t : unhit)
          if (meets(cand[j], t)) ++g;
        if (g > gain) { gain = g; best = j; }
      }
      picked.push_back(cand[best]);
      std::vector<Mask> rest;
      for (Mask t : unhit)
        if (!meets(cand[best], t)) rest.push_back(t);
      unhit.swap(rest);
      ++greedy;
    }
  }

  std::vector<Mask> chosen;
  std::function<bool(std::size_t, const std::vector<Mask>&, unsigned)> dfs =
      [&](std::size_t i, const std::vector<Mask>& unhit,
          unsigned left) -> bool {
    if (left == 0) return unhit.empty();
    for (Mask t : unhit)
      if (!meets(t, suffix[i])) return false;
    for (std::size_t j = i; j + left <= n; ++j) {
      std::vector<Mask> rest;
      for (Mask t : unhit)
        if (!meets(cand[j], t)) rest.push_back(t);
      chosen.push_back(cand[j]);
      if (dfs(j + 1, rest, left - 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  for (unsigned s = 1; s <= greedy; ++s) {
    chosen.clear();
    if (dfs(0, targets, s)) return SearchOut{s, chosen};
  }
  return SearchOut{greedy, {}};  // unreachable
}

std::vector<Mask> notLeftTable(const InducedGraph& g) {
  std::vector<Mask> out(g.forward.size());
  for (int y = 0; y < static_cast<int>(g.forward.size()); ++y)
    out[static_cast<std::size_t>(y)] = notArrowSets(g, y).notLeft;
  return out;
}

Mask daggerOf(const std::vector<Mask>& notLeft, Mask full, Mask a) {
  Mask inter = full;
  forEachBit(a, [&](int p) { inter &= notLeft[static_cast<std::size_t>(p)]; });
  Mask out = full;
  forEachBit(inter, [&](int p) { out &= notLeft[static_cast<std::size_t>(p)]; });
  return out;
}

void checkPoint(const Space& c, int x, const char* what) {
  if (x < 0 || x >= c.points())
    throw Error(ErrorKind::input, std::string(what) + ": point out of range");
}

}  // namespace

Mask convergentPoints(const Space& c, int x) {
  checkPoint(c, x, "convergentPoints");
  Mask out = 0;
  for (int y = 0; y < c.points(); ++y)
    if (has(c.lim(bit(y)), x)) out |= bit(y);
  return out;
}

Witnessed isPavement(const Space& c, const FilterCollection& d, int x,
                     PavingKind kind) {
  checkPoint(c, x, "isPavement");
  if (d.members.empty())
    throw Error(ErrorKind::precondition, "isPavement: empty collection");
  for (const PFilter& m : d.members) {
    if (m.degenerate())
      throw Error(ErrorKind::precondition, "isPavement: degenerate member");
    if (!has(c.lim(m.kernel), x))
      throw Error(ErrorKind::precondition,
                  "isPavement: member does not converge to the point");
  }
  const Mask full = c.carrier()->full();
  auto meshesMember = [&](Mask k) {
    for (const PFilter& m : d.members)
      if (meets(k, m.kernel)) return true;
    return false;
  };
  auto refinesMember = [&](Mask k) {
    for (const PFilter& m : d.members)
      if (subsetOf(k, m.kernel)) return true;
    return false;
  };
  switch (kind) {
    case PavingKind::pavement:
      for (Mask k = 1; k <= full; ++k) {
        if (!has(c.lim(k), x)) continue;
        if (!refinesMember(k)) return Witnessed::failFilter(k);
      }
      return Witnessed::ok();
    case PavingKind::pseudo: {
      Mask covered = 0;
      for (const PFilter& m : d.members) covered |= m.kernel;
      const Mask cp = convergentPoints(c, x);
      if (!subsetOf(cp, covered)) {
        Mask missing = cp & ~covered;
        int y = 0;
        while (!has(missing, y)) ++y;
        return Witnessed::failPoint(y);
      }
      return Witnessed::ok();
    }
    case PavingKind::dagger: {
      const std::vector<Mask> notLeft = notLeftTable(graphOf(c));
      for (Mask k = 1; k <= full; ++k) {
        if (!has(c.lim(k), x)) continue;
        if (!meshesMember(daggerOf(notLeft, full, k)))
          return Witnessed::failFilter(k);
      }
      return Witnessed::ok();
    }
  }
  return Witnessed::ok();  // unreachable
}

PavingResult pavingNumber(const Space& c, int x, PavingKind kind) {
  checkPoint(c, x, "pavingNumber");
  const Mask full = c.carrier()->full();
  const int n = c.points();

  // Convergent kernels at x, ascending, with O(1) membership.
  std::vector<char> inK(static_cast<std::size_t>(full) + 1, 0);
  std::vector<Mask> kernels;
  for (Mask k = 1; k <= full; ++k)
    if (has(c.lim(k), x)) {
      inK[k] = 1;
      kernels.push_back(k);
    }

  PavingResult out;
  out.kind = kind;
  out.at = x;
  out.witness.carrier = c.carrier();

  std::vector<Mask> picked;
  switch (kind) {
    case PavingKind::pavement: {
      // Convergent kernels are down-closed (antitonicity), so every one is
      // contained in a ⊆-maximal convergent kernel: the maximal antichain is
      // a pavement.  Conversely a maximal kernel can only be contained in a
      // member whose kernel is itself convergent, hence equal to it, so
      // every pavement contains all maximals: the antichain is the unique
      // minimum.
      for (Mask k : kernels) {
        bool maximal = true;
        for (int b = 0; b < n && maximal; ++b)
          if (!has(k, b) && inK[k | bit(b)]) maximal = false;
        if (maximal) picked.push_back(k);
      }
      break;
    }
    case PavingKind::pseudo: {
      const SearchOut r = minCoverLex(kernels, convergentPoints(c, x));
      picked = r.members;
      break;
    }
    case PavingKind::dagger: {
      const std::vector<Mask> notLeft = notLeftTable(graphOf(c));
      std::vector<Mask> targets;
      targets.reserve(kernels.size());
      for (Mask k : kernels) targets.push_back(daggerOf(notLeft, full, k));
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()),
                    targets.end());
      // Hitting a ⊆-smaller target hits every superset, so only the
      // ⊆-minimal targets constrain the search.
      std::vector<Mask> minimal;
      for (Mask t : targets) {
        bool hasSmaller = false;
        for (Mask u : targets)
          if (u != t && subsetOf(u, t)) { hasSmaller = true; break; }
        if (!hasSmaller) minimal.push_back(t);
      }
      const SearchOut r = minHitLex(kernels, minimal);
      picked = r.members;
      break;
    }
  }

  out.value = static_cast<unsigned>(picked.size());
  for (Mask k : picked)
    out.witness.members.push_back(PFilter{c.carrier(), k});
  return out;
}

unsigned kArensNumber(const Space& c) {
  if (!isTopological(c))
    throw Error(ErrorKind::precondition, "kArensNumber: space not topological");
  const SetFamily compacts = compactParts(c).compacts;
  Mask unionAll = 0;
  for (Mask k : compacts.members()) unionAll |= k;
  // Size 1: a compact member containing every compact set must contain the
  // union of all of them.
  for (Mask k : compacts.members())
    if (subsetOf(unionAll, k)) return 1;
  // General search, size-ascending over combinations (not reachable on a
  // validated finite space, where the full carrier is compact).
  const std::vector<Mask>& cs = compacts.members();
  for (std::size_t s = 2; s <= cs.size(); ++s) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      bool ok = true;
      for (Mask cset : cs) {
        bool inside = false;
        for (std::size_t i : idx)
          if (subsetOf(cset, cs[i])) { inside = true; break; }
        if (!inside) { ok = false; break; }
      }
      if (ok) return static_cast<unsigned>(s);
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == cs.size() - (s - pos) - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  throw Error(ErrorKind::precondition, "kArensNumber: no witness");
}

unsigned characterOf(const Space& c, Mask a) {
  if (!isTopological(c))
    throw Error(ErrorKind::precondition, "characterOf: space not topological");
  if (!subsetOf(a, c.carrier()->full()))
    throw Error(ErrorKind::input, "characterOf: set escapes the carrier");
  const Mask full = c.carrier()->full();
  std::vector<Mask> opens;
  const SetFamily closed = closedSets(c);
  for (Mask cl : closed.members()) opens.push_back(full & ~cl);
  std::sort(opens.begin(), opens.end());
  // Neighborhood-filter members: supersets of open supersets of a.
  std::vector<Mask> membersList;
  for (Mask m = 0; m <= full; ++m) {
    bool isMember = false;
    for (Mask u : opens)
      if (subsetOf(a, u) && subsetOf(u, m)) { isMember = true; break; }
    if (isMember) membersList.push_back(m);
  }
  Mask inter = full;
  for (Mask m : membersList) inter &= m;
  // Size 1: the base element must be below every member, i.e. equal to the
  // intersection of them all — and itself a member.
  for (Mask m : membersList)
    if (m == inter) return 1;
  // General search (not reachable: finite open families are ∩-closed).
  for (std::size_t s = 2; s <= membersList.size(); ++s) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      bool ok = true;
      for (Mask m : membersList) {
        bool below = false;
        for (std::size_t i : idx)
          if (subsetOf(membersList[i], m)) { below = true; break; }
        if (!below) { ok = false; break; }
      }
      if (ok) return static_cast<unsigned>(s);
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == membersList.size() - (s - pos) - 1)
        --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  throw Error(ErrorKind::precondition, "characterOf: no witness");
}

}  // namespace convlab
