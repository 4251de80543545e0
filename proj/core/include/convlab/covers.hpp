// covers.hpp — covers, pseudocovers, Cauchy/preCauchy filters, complete and
// cocomplete collections, and relative completeness numbers with witnesses.
//
// Completeness notions are relativized by a closed target set A: the
// absolute notions quantify filters with empty adherence, which is vacuous
// on a finite carrier (every proper filter adheres), so "adherence = ∅" is
// replaced by "adherence ⊆ A" throughout; A = ∅ recovers the absolute case.
//
// Degenerate-filter conventions: the mesh-based (cocomplete) quantifier
// ranges over proper filters only — the degenerate filter meshes nothing, so
// admitting it would make the notion unsatisfiable; the refinement-based
// (ultracocomplete) quantifier ranges over all filters including the
// degenerate one, which any nonempty collection dominates since the empty
// kernel is ⊆-least.  Minimal witnesses are reported under two conventions:
// the dual-consistent value minimizes over nonempty collections (always
// ≥ 1), the paper-style value is 0 exactly when the empty collection
// suffices vacuously (no proper filter has adherence inside the target).

#pragma once

#include "convlab/space.hpp"

namespace convlab {

struct CoverCollection {
  CarrierRef carrier;
  std::vector<SetFamily> families;
};

struct FilterCollection {
  CarrierRef carrier;
  std::vector<PFilter> members;
  bool admitsDegenerate = false;  // whether the degenerate filter may appear
};

enum class CoverKind { cover, pseudocover };
enum class CauchyKind { cauchy, preCauchy };
enum class CompleteKind { complete, ultracomplete };
enum class CocompleteKind { cocomplete, ultracocomplete };
enum class CompletenessKind { plain, ultra };

// Adherence of a set family: ⋃ lim(K) over nonempty kernels K meshing every
// member.  (For the up-set of a proper kernel this is filter adherence.)
Mask familyAdherence(const Space& c, const SetFamily& p);

// cover: every nonempty kernel with a nonempty limit is contained in a
// member; pseudocover: every point whose principal filter converges lies in
// a member.  Failure witness: the offending kernel / point.
Witnessed isCover(const Space& c, const SetFamily& p, CoverKind kind);

// The adherence criterion: P is a cover iff the family of member
// complements is non-adherent.  Must agree with isCover(kind = cover).
bool coverCriterion(const Space& c, const SetFamily& p);

// Cauchy: each family of PP has a member containing kernel(F); preCauchy:
// each family has a member meeting kernel(F).  F must be proper.
bool isCauchy(const PFilter& f, const CoverCollection& pp, CauchyKind kind);

// complete: every Cauchy proper filter adheres; ultracomplete: every
// preCauchy proper filter adheres.  Precondition: every family of PP passes
// isCover(kind = cover).  (On a finite carrier every proper filter adheres,
// so this holds; it is kept literal for the equivalence properties.)
Witnessed isCompleteCollection(const Space& c, const CoverCollection& pp,
                               CompleteKind kind);

// unionDown: ∪-closure then ↓-closure, per family.  filterForm: for each
// ∪↓-closed family the complement family is the up-set of the complement of
// the largest member union; that kernel's filter is returned per family.
struct IdealTransforms {
  CoverCollection unionDown;
  FilterCollection filterForm;
};
IdealTransforms idealTransforms(const CoverCollection& pp);

// cocomplete: every proper filter with adherence ⊆ target meshes a member;
// ultracocomplete: every filter (degenerate included) with adherence ⊆
// target is finer than a member.  Precondition: each member's adherence is
// within the target.
Witnessed isCocompleteCollection(const Space& c, const FilterCollection& d,
                                 Mask target, CocompleteKind kind);

struct CompletenessResult {
  unsigned value = 0;            // dual-consistent: nonempty collections, ≥ 1
  unsigned paperConvention = 0;  // 0 when the empty collection suffices
  FilterCollection witness;      // lexicographically least optimal collection
};

// Exact minimum over nonempty collections of admissible filters (admissible:
// adherence ⊆ target, i.e. kernel ⊆ {x : lim{x} ⊆ target}, plus the
// degenerate filter).  Search ascends by collection size and lexicographic
// order on ascending kernel sequences, so minimality is certified by the
// exhausted smaller sizes and the witness is deterministic.
// Precondition: target closed in c.
CompletenessResult completenessNumber(const Space& c, Mask target,
                                      CompletenessKind kind);

}  // namespace convlab
