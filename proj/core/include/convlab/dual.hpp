// dual.hpp — the dual convergence on closed sets, the reduce/erect maps
// between base filters and dual filters, and the Alexandroff-style closure
// pair used by the regularity predicates.
//
// The dual carrier is the set of closed subsets of the base, listed in
// ascending mask order and labelled C0, C1, … (C0 = ∅ always; the last
// entry is the full carrier).  A dual kernel G (a set of closed sets)
// converges to a closed set A exactly when the base adherence of ⋃G is
// contained in A; the union over the empty selection is ∅, whose adherence
// is read as ∅, so the kernel {∅} converges to every closed set.  The dual
// convergence structure is always a pseudotopology.
//
// The dual of the dual is never materialized: the dual's convergence is a
// lazy view backed by per-closed-set adherences precomputed once.

#pragma once

#include "convlab/space.hpp"

namespace convlab {

class DualSpace {
 public:
  // Builds the dual of a validated base space.  Errors: capacity if the base
  // has more than MAX_CARRIER closed sets.
  static DualSpace of(const Space& base);

  const Space& base() const { return base_; }
  const Space& conv() const { return conv_; }  // lazy view on the dual carrier
  const CarrierRef& dualCarrier() const { return dualCarrier_; }
  const std::vector<Mask>& closedList() const { return closed_; }

  // Index of a base-closed set in the dual carrier; input error if not closed.
  int dualIndex(Mask closedSet) const;
  // A family of base-closed sets as a dual-carrier mask, and back.
  Mask toDualMask(const SetFamily& g) const;
  SetFamily fromDualMask(Mask dualKernel) const;
  // Union of the closed sets selected by a dual kernel (a base subset).
  Mask unionOf(Mask dualKernel) const;

 private:
  DualSpace(Space base, Space conv, CarrierRef dualCarrier,
            std::vector<Mask> closed)
      : base_(std::move(base)), conv_(std::move(conv)),
        dualCarrier_(std::move(dualCarrier)), closed_(std::move(closed)) {}
  Space base_;
  Space conv_;
  CarrierRef dualCarrier_;
  std::vector<Mask> closed_;
};

inline DualSpace dualSpace(const Space& base) { return DualSpace::of(base); }

// Reduce: the union of a family of base-closed sets (the kernel of the
// reduced filter of the principal dual filter it generates).  Errors: input
// if a member is not closed in the base.
Subset rdc(const Space& base, const SetFamily& g);

// Reduce a principal dual filter to its base filter: kernel = ⋃ of the
// closed sets in the dual kernel (degenerate when the dual kernel is empty
// or {∅}).
PFilter rdcFilter(const DualSpace& d, const PFilter& dualFilter);

// Erect: all base-closed subsets of f (always contains ∅).
SetFamily erected(const Space& base, Mask f);

// Erect a proper base filter to the principal dual filter generated by the
// closed subsets of its kernel.  Precondition: baseFilter proper.
PFilter erectedFilter(const DualSpace& d, const PFilter& baseFilter);

// Saturate a dual filter: erect the union of its kernel's closed sets.  The
// all-closed-subsets family of ∅ is {∅}, so the kernel {∅} is a fixed
// point.  Saturation is idempotent and coarsens (kernel grows).
PFilter saturate(const DualSpace& d, const PFilter& dualFilter);

// The limit a dual kernel would have under the upper-Kuratowski description
// for a topological base: every closed set containing the base closure of
// the kernel's union.  Cross-check path; agrees with conv() on topological
// bases.
Mask upperKuratowskiLim(const DualSpace& d, Mask dualKernel);

// Point closures and the two derived closure operators: star(B) = points
// whose closure meets B; bullet(B) = union of closures of points of B.
struct AlexandroffPair {
  std::vector<Mask> pointClosure;
  Mask star(Mask b) const;
  Mask bullet(Mask b) const;
};
AlexandroffPair alexandroff(const Space& c);

// starRegular: lim(star(A)) = lim(A) for every nonempty kernel A (the ⊇
// direction is automatic since star is extensive); bulletRegular likewise
// with bullet; reciprocal: x ∈ lim{y} ⇔ y ∈ lim{x} for all points.
struct RegularityPredicates {
  bool starRegular = false;
  bool bulletRegular = false;
  bool reciprocal = false;
};
RegularityPredicates regularityPredicates(const Space& c);

}  // namespace convlab
