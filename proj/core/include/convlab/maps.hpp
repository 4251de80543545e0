// maps.hpp — point maps between spaces, image filters, continuity, the
// final and initial convergences a map induces, and the map classes
// (almost-open, biquotient, quotient) defined by comparing the target
// against reflections of the final structure.
//
// Final and initial structures are lazy views: a final limit query scans the
// source powerset once (pure, no memoization); an initial query is a single
// target lookup.  The final structure is the finest lawful convergence
// making the map continuous: each query unions f(lim A) over the nonempty
// source sets with f(A) ⊇ B and adds the centering term for singletons.

#pragma once

#include "convlab/covers.hpp"
#include "convlab/space.hpp"

namespace convlab {

struct SpaceMap {
  Space source;
  Space target;
  std::vector<int> f;  // f[x] = target index of the image of source point x

  Mask imageMask(Mask a) const;     // pointwise image
  Mask preimageMask(Mask b) const;  // full preimage
  bool onto() const;
};

// Builds a map and validates the table: one entry per source point, every
// entry a valid target index (input error otherwise).
SpaceMap makeMap(Space source, Space target, std::vector<int> f);

// Image of a proper filter: the principal filter of the kernel's image.
PFilter imageFilter(const SpaceMap& m, const PFilter& f);

// Continuity: f(lim A) ⊆ lim(f(A)) for every nonempty A; the witness on
// failure is the offending kernel.
Witnessed isContinuous(const SpaceMap& m);

// The final convergence on the target induced by the source structure, and
// the initial convergence on the source induced by the target structure.
Space finalStructure(const SpaceMap& m);    // precondition: m onto
Space initialStructure(const SpaceMap& m);

struct MapClass {
  bool continuous = false;
  bool almostOpen = false;   // target finer than the final structure
  bool biquotient = false;   // target finer than the pseudotopologization
  bool quotient = false;     // target finer than the topologization
};

// Classifies a continuous onto map (precondition error otherwise).  The
// classes form a chain: almostOpen ⇒ biquotient ⇒ quotient.
MapClass mapClass(const SpaceMap& m);

// Memberwise image of a family collection (used by the cover-image laws).
CoverCollection coverImage(const SpaceMap& m, const CoverCollection& pp);
SetFamily familyImage(const SpaceMap& m, const SetFamily& p);

}  // namespace convlab
