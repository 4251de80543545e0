// graph.hpp — the point-level digraph induced by singleton limits, the
// non-arrow sets, and the dagger closure they generate.
//
// The digraph has an arrow y → x when x ∈ lim{y} (forward(y) = lim{y};
// backward(y) = {x : y ∈ lim{x}}).  Roots converge to everything
// (lim{r} = full); ends lie in every singleton limit.  notLeft(y) collects
// the points x that no non-root point reaches alongside y (backward(y) ∩
// backward(x) ⊆ roots); notRight is the mirror with forward sets and ends.
//
// daggerClosure(A) intersects notLeft over A to get the intermediate set I,
// then intersects notLeft over I (empty intersections read as the full
// carrier).  It is extensive, monotone, and idempotent but not additive;
// daggerClosure(∅) unfolds to {x : backward(x) ⊆ roots} (equal to the root
// set itself on dual graphs, where only the bottom point lacks non-root
// predecessors).

#pragma once

#include "convlab/dual.hpp"
#include "convlab/space.hpp"

namespace convlab {

struct InducedGraph {
  CarrierRef carrier;
  std::vector<Mask> forward;   // forward[y] = lim{y}
  std::vector<Mask> backward;  // backward[y] = {x : y ∈ lim{x}}
  Mask roots = 0;              // {r : lim{r} = full}
  Mask ends = 0;               // ⋂ over y of lim{y}
};

InducedGraph graphOf(const Space& c);

struct NotArrowSets {
  Mask notLeft = 0;
  Mask notRight = 0;
};
NotArrowSets notArrowSets(const InducedGraph& g, int y);

Mask daggerClosure(const InducedGraph& g, Mask a);

// The dagger closure of a principal dual filter computed without the dual
// graph: erect the star-closure of the reduced kernel.  Returns the family
// of base-closed sets; agrees with daggerClosure on the dual's own graph.
SetFamily dualDaggerForm(const DualSpace& d, const SetFamily& g);

}  // namespace convlab
