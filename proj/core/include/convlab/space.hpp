// space.hpp — the convergence structure: axioms, limits, adherence, closed
// sets, the reflectors T and S, compactness notions.
//
// A Space maps every nonempty kernel (a subset of the carrier, as a Mask) to
// its limit set.  The lawfulness axioms are:
//   centered:  x ∈ lim{x} for every point x;
//   antitone:  A ⊆ B  ⇒  lim(B) ⊆ lim(A).
//
// Representation is either a full table (tabulated) or a lazy view (dual,
// reflector, final, initial): the lim rule of a view is computed on demand
// and never materializes the carrier's powerset; tabulation is an explicit
// operation.  Views are memo-free, so concurrent reads are safe and
// deterministic.
//
// The lim rule's domain excludes ∅; the degenerate filter may be passed only
// to adherence-like operations, never to lim.

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "convlab/families.hpp"

namespace convlab {

enum class Repr { tabulated, dualView, reflectorT, reflectorS, finalView, initialView };

class Space {
public:
  Space() = default;

  // table[k] = limit set of kernel k, for every nonempty k ≤ full; table[0]
  // is ignored (kept 0).  table.size() must be 1 << carrier size.
  static Space tabulated(CarrierRef carrier, std::vector<Mask> table);

  // A lazy view; `rule` must be total on nonempty kernels and lawful (each
  // view construction documents why).
  static Space lazy(CarrierRef carrier, Repr repr, std::function<Mask(Mask)> rule);

  const CarrierRef& carrier() const { return carrier_; }
  int points() const { return carrier_->size(); }
  Repr repr() const { return repr_; }
  bool isTabulated() const { return repr_ == Repr::tabulated; }

  // Limit set of a nonempty kernel.
  Mask lim(Mask kernel) const {
    if (kernel == 0)
      throw Error(ErrorKind::precondition, "lim is undefined on the empty kernel");
    return isTabulated() ? table_[kernel] : rule_(kernel);
  }

  const std::vector<Mask>& table() const;  // tabulated spaces only

private:
  CarrierRef carrier_;
  Repr repr_ = Repr::tabulated;
  std::vector<Mask> table_;
  std::function<Mask(Mask)> rule_;
};

// Materialize any space as a table (2^n entries; the carrier cap keeps this
// within one word of index space).
Space tabulate(const Space& c);

// Pointwise equality of the lim rules (same carrier size required).
bool equalPointwise(const Space& c, const Space& d);

// ---------------------------------------------------------------------------
// Validation.  Violations are data, not errors.
// ---------------------------------------------------------------------------
struct Violation {
  enum class Kind { centered, antitone } kind;
  int point = -1;      // centered: the offending point
  Mask smaller = 0;    // antitone: the kernel pair smaller ⊆ larger
  Mask larger = 0;
  std::string describe(const Carrier& carrier) const;
};

// Empty iff centered and antitone.  Antitone is checked on one-element
// extensions only (transitivity covers the rest).
std::vector<Violation> validate(const Space& c);

// ---------------------------------------------------------------------------
// Witnessed predicate results: when verdict is false the witness exhibits
// the violated condition.
// ---------------------------------------------------------------------------
struct Witnessed {
  bool verdict = true;
  enum class Kind { none, subset, point, filter } witnessKind = Kind::none;
  Mask witness = 0;  // subset/point: the set; filter: the kernel (0 = degenerate)

  static Witnessed ok() { return {}; }
  static Witnessed failSubset(Mask m) { return {false, Kind::subset, m}; }
  static Witnessed failPoint(int i) { return {false, Kind::point, bit(i)}; }
  static Witnessed failFilter(Mask kernel) { return {false, Kind::filter, kernel}; }
};

// ---------------------------------------------------------------------------
// Adherence and closed sets.
// ---------------------------------------------------------------------------

// adher(F) for proper F with kernel K is ⋃_{y∈K} lim{y}; the degenerate
// filter has adherence ∅.  (Equal to the mesh form ⋃_{H#F} lim(ker H); the
// suite checks the two formulas against each other.)
Mask adherence(const Space& c, const PFilter& f);
Mask adherence(const Space& c, Mask kernel);  // same, kernel 0 = degenerate

// C is closed iff lim(A) ⊆ C for every nonempty kernel A meshing C.
bool isClosed(const Space& c, Mask candidate);
SetFamily closedSets(const Space& c);

// Smallest closed superset (closed sets are intersection-stable).
Mask closureOf(const Space& c, Mask a);

// ---------------------------------------------------------------------------
// Reflectors.
// ---------------------------------------------------------------------------

// Topological reflection: the convergence of the closed-set lattice of c;
// lim_T(A) = {x : A ⊆ V_x} with V_x the smallest open set containing x.
// Lawful: V_x ∋ x gives centeredness, and the membership test is antitone
// in A by construction.  Coarser than c; fixed point on topological inputs.
Space reflectorT(const Space& c);

// Pseudotopological reflection: lim_S(A) = ⋂_{x∈A} lim{x}.  Lawful:
// centered since x ∈ lim{x}, antitone since larger A intersect more.
// Coarser than c; idempotent; S ≤ T pointwise.
Space reflectorS(const Space& c);

bool isPseudotopology(const Space& c);
bool isTopological(const Space& c);

// ---------------------------------------------------------------------------
// Compactness notions.
// ---------------------------------------------------------------------------
struct CompactParts {
  SetFamily compactoids;   // A with lim{y} ≠ ∅ for all y ∈ A (an ideal)
  SetFamily compacts;      // A with lim{y} ∩ A ≠ ∅ for all y ∈ A
  PFilter cocompactoid;    // complement of the largest compactoid (degenerate
                           // iff the whole carrier is compactoid)
  bool locallyCompactoid;  // every convergent kernel is compactoid
};
CompactParts compactParts(const Space& c);

// lim_c(A) ⊆ lim_d(A) for every nonempty A.
bool finerThan(const Space& c, const Space& d);

// The finest convergence with L ⊆ lim(S↑) for each generator (S, L), plus
// centeredness: lim(A) = ⋃{L : A ⊆ S} ∪ ({x} when A = {x}).  The union
// formula is lawful by construction, so the result always validates.
Space generateConvergence(CarrierRef carrier,
                          const std::vector<std::pair<Mask, Mask>>& generators);

}  // namespace convlab
