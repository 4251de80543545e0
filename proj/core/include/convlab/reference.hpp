// reference.hpp — literal-definition reference implementations.
//
// Everything here is written as a direct transcription of a defining
// quantifier, with no precomputation, pruning, or structural shortcuts, so
// the optimized production paths can be cross-checked against it.  Only
// meant for small carriers (the property suite uses it up to carrier 4);
// costs are exponential and unapologetic.

#pragma once

#include "convlab/paving.hpp"
#include "convlab/space.hpp"

#include <vector>

namespace convlab::reference {

// Adherence via the mesh formula: ⋃ lim(H) over proper kernels H meshing
// the filter (for principal filters, H meets the kernel).
inline Mask meshAdherence(const Space& c, Mask kernel) {
  if (kernel == 0) return 0;
  const Mask full = c.carrier()->full();
  Mask out = 0;
  for (Mask h = 1; h <= full; ++h)
    if (meets(h, kernel)) out |= c.lim(h);
  return out;
}

// Closedness via the unreduced quantifier: every nonempty kernel meeting C
// has its limit inside C.
inline bool isClosedLiteral(const Space& c, Mask candidate) {
  const Mask full = c.carrier()->full();
  for (Mask k = 1; k <= full; ++k)
    if (meets(k, candidate) && !subsetOf(c.lim(k), candidate)) return false;
  return true;
}

// Closure as the intersection of all literal-closed supersets.
inline Mask closureLiteral(const Space& c, Mask a) {
  const Mask full = c.carrier()->full();
  Mask out = full;
  for (Mask m = 0; m <= full; ++m)
    if (subsetOf(a, m) && isClosedLiteral(c, m)) out &= m;
  return out;
}

// Dagger closure from first principles: recompute roots, backward sets, and
// the notLeft sets with plain loops, then apply the double intersection.
inline Mask daggerLiteral(const Space& c, Mask a) {
  const int n = c.points();
  const Mask full = c.carrier()->full();
  Mask roots = 0;
  for (int r = 0; r < n; ++r)
    if (c.lim(bit(r)) == full) roots |= bit(r);
  auto backward = [&](int y) {
    Mask out = 0;
    for (int x = 0; x < n; ++x)
      if (has(c.lim(bit(x)), y)) out |= bit(x);
    return out;
  };
  auto notLeft = [&](int y) {
    Mask out = 0;
    for (int x = 0; x < n; ++x) {
      bool ok = true;
      for (int w = 0; w < n; ++w)
        if (has(backward(y), w) && has(backward(x), w) && !has(roots, w)) {
          ok = false;
          break;
        }
      if (ok) out |= bit(x);
    }
    return out;
  };
  Mask inter = full;
  for (int p = 0; p < n; ++p)
    if (has(a, p)) inter &= notLeft(p);
  Mask out = full;
  for (int p = 0; p < n; ++p)
    if (has(inter, p)) out &= notLeft(p);
  return out;
}

struct NaivePaving {
  unsigned value = 0;
  std::vector<Mask> members;
};

// Paving numbers by brute force: enumerate collections of convergent
// kernels by (size, lexicographic) order and return the first one whose
// literal paving condition holds.
inline NaivePaving pavingLiteral(const Space& c, int x, PavingKind kind) {
  const Mask full = c.carrier()->full();
  std::vector<Mask> ks;
  for (Mask k = 1; k <= full; ++k)
    if (has(c.lim(k), x)) ks.push_back(k);

  auto holds = [&](const std::vector<Mask>& chosen) {
    switch (kind) {
      case PavingKind::pavement:
        for (Mask k : ks) {
          bool dominated = false;
          for (Mask d : chosen)
            if (subsetOf(k, d)) { dominated = true; break; }
          if (!dominated) return false;
        }
        return true;
      case PavingKind::pseudo:
        for (int y = 0; y < c.points(); ++y) {
          if (!has(c.lim(bit(y)), x)) continue;
          bool inside = false;
          for (Mask d : chosen)
            if (has(d, y)) { inside = true; break; }
          if (!inside) return false;
        }
        return true;
      case PavingKind::dagger:
        for (Mask k : ks) {
          const Mask t = daggerLiteral(c, k);
          bool met = false;
          for (Mask d : chosen)
            if (meets(d, t)) { met = true; break; }
          if (!met) return false;
        }
        return true;
    }
    return false;
  };

  for (std::size_t s = 1; s <= ks.size(); ++s) {
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      std::vector<Mask> chosen;
      chosen.reserve(s);
      for (std::size_t i : idx) chosen.push_back(ks[i]);
      if (holds(chosen))
        return NaivePaving{static_cast<unsigned>(s), chosen};
      std::size_t pos = s;
      while (pos > 0 && idx[pos - 1] == ks.size() - (s - pos) - 1) --pos;
      if (pos == 0) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return NaivePaving{};  // unreachable on a validated space
}

}  // namespace convlab::reference
