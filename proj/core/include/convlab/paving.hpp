// paving.hpp — paving numbers at a point and their witnesses, plus the two
// small topological localization numbers.
//
// A pavement at x is a collection of filters converging to x such that every
// filter converging to x is finer than a member (kernel contained in a
// member kernel); a pseudopavement requires every point of cp(x) =
// {y : x ∈ lim{y}} to lie in a member kernel (equivalently: every filter
// converging to x meshes a member); a dagger pavement requires every
// converging filter's dagger closure (of its kernel) to meet a member
// kernel.  Values are exact minima over nonempty collections; witnesses are
// the lexicographically least optimal collections (kernels ascending by
// mask, collections compared as ascending kernel sequences).
//
// Structure exploited: convergent kernels at x form a down-closed family, so
// the pavement minimum is the antichain of its maximal elements (meshing a
// proper filter = meeting its kernel, and every convergent kernel extends to
// a maximal one); the pseudo and dagger problems are exact set-cover /
// hitting-set searches run with iterative deepening bounded by a greedy
// cover, suffix-feasibility pruning, and lexicographic order.

#pragma once

#include "convlab/covers.hpp"
#include "convlab/graph.hpp"
#include "convlab/space.hpp"

namespace convlab {

enum class PavingKind { pavement, pseudo, dagger };

// cp(x): the points whose principal filters converge to x.
Mask convergentPoints(const Space& c, int x);

// Literal check that a collection of proper filters is a pavement of the
// given kind at x.  Preconditions: collection nonempty, every member proper
// and convergent to x.
Witnessed isPavement(const Space& c, const FilterCollection& d, int x,
                     PavingKind kind);

struct PavingResult {
  PavingKind kind = PavingKind::pavement;
  int at = 0;
  unsigned value = 0;
  FilterCollection witness;
};

PavingResult pavingNumber(const Space& c, int x, PavingKind kind);

// Minimum size of a family of compact sets such that every compact set is
// contained in a member.  Precondition: c topological.
unsigned kArensNumber(const Space& c);

// Minimum size of a base of the open-neighborhood filter of a (1 on every
// finite topology: the intersection of the open supersets qualifies).
// Precondition: c topological.
unsigned characterOf(const Space& c, Mask a);

}  // namespace convlab
