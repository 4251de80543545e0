// families.hpp — exact algebra of subsets, set families, principal filters,
// ideals, grills and the mesh relation on a finite carrier.
//
// Everything is bit-indexed: a subset of a carrier with n points is a Mask
// whose low n bits are significant.  Carriers are capped at MAX_CARRIER
// points so a subset always fits one machine word; constructors reject
// anything larger with a capacity error.
//
// All values are immutable after construction and all operations are pure,
// so unrestricted concurrent use is safe.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace convlab {

using Mask = std::uint32_t;

inline constexpr int MAX_CARRIER = 16;

// ---------------------------------------------------------------------------
// Errors.  kind() tells the CLI which exit code applies: input errors and
// capacity errors are exit 2; precondition violations are misuse of an
// operation (also reported as input errors at the CLI boundary).
// ---------------------------------------------------------------------------
enum class ErrorKind { input, capacity, precondition };

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

// --- mask helpers ----------------------------------------------------------

inline Mask bit(int i) { return Mask{1} << i; }
inline bool has(Mask m, int i) { return (m >> i) & 1u; }
inline bool subsetOf(Mask a, Mask b) { return (a & ~b) == 0; }
inline bool meets(Mask a, Mask b) { return (a & b) != 0; }
inline int popcount(Mask m) { return __builtin_popcount(m); }
inline Mask fullMask(int n) { return (n >= 32) ? ~Mask{0} : (Mask{1} << n) - 1; }

// Iterate the positions of set bits, ascending.
template <typename F>
inline void forEachBit(Mask m, F&& f) {
  while (m) {
    int i = __builtin_ctz(m);
    f(i);
    m &= m - 1;
  }
}

// Iterate all subsets of `m` (including 0 and m itself), ascending as masks.
template <typename F>
inline void forEachSubset(Mask m, F&& f) {
  Mask s = 0;
  while (true) {
    f(s);
    if (s == m) break;
    s = (s - m) & m;  // next subset of m above s
  }
}

// ---------------------------------------------------------------------------
// Carrier: the finite ground set.  Labels are unique, nonempty, and the
// label <-> index bijection is fixed at construction.
// ---------------------------------------------------------------------------
class Carrier {
public:
  static std::shared_ptr<const Carrier> make(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  Mask full() const { return fullMask(size()); }

  // Index of a label; input error if unknown.
  int index(const std::string& label) const;
  std::optional<int> tryIndex(const std::string& label) const;

private:
  explicit Carrier(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

using CarrierRef = std::shared_ptr<const Carrier>;

// Render a mask as a subset literal over the carrier's labels: `{a,b}`, `{}`.
std::string setLiteral(const Carrier& c, Mask m);

// ---------------------------------------------------------------------------
// Subset: a carrier-attached mask.
// ---------------------------------------------------------------------------
struct Subset {
  CarrierRef carrier;
  Mask bits = 0;

  bool operator==(const Subset& o) const { return bits == o.bits; }
  std::string literal() const { return setLiteral(*carrier, bits); }
};

// ---------------------------------------------------------------------------
// SetFamily: a finite family of subsets of one carrier (duplicates collapsed,
// members kept sorted ascending by mask).
// ---------------------------------------------------------------------------
class SetFamily {
public:
  SetFamily() = default;
  SetFamily(CarrierRef carrier, std::vector<Mask> members);

  const CarrierRef& carrier() const { return carrier_; }
  const std::vector<Mask>& members() const { return members_; }
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  bool contains(Mask m) const;

  bool operator==(const SetFamily& o) const { return members_ == o.members_; }

private:
  CarrierRef carrier_;
  std::vector<Mask> members_;  // sorted, unique
};

// ---------------------------------------------------------------------------
// PFilter: a filter on a finite carrier, stored by its kernel (the
// intersection of all members — on a finite set every filter is principal).
// kernel == 0 encodes the degenerate (improper) filter: it is ⊆-finest,
// meshes nothing, and has adherence ∅.  The full up-set is materialized only
// on demand (asFamily).
// ---------------------------------------------------------------------------
struct PFilter {
  CarrierRef carrier;
  Mask kernel = 0;

  bool proper() const { return kernel != 0; }
  bool degenerate() const { return kernel == 0; }
  bool operator==(const PFilter& o) const { return kernel == o.kernel; }
};

// The up-set of the kernel as an explicit family (degenerate: every subset).
SetFamily asFamily(const PFilter& f);

// --- family operations -----------------------------------------------------

// ⊆-up-closure / down-closure of F within the carrier's powerset.
// Extensive, monotone, idempotent.
SetFamily upClosure(const SetFamily& f);
SetFamily downClosure(const SetFamily& f);

// Closure under finite unions / intersections of nonempty sub-selections.
// Empty selections are excluded: the closure of a nonempty family never
// silently injects ∅ (resp. the carrier).
SetFamily unionClosure(const SetFamily& f);
SetFamily intersectionClosure(const SetFamily& f);

// Member-wise complement; involutive.
SetFamily complements(const SetFamily& f);

// mesh(A,B): every member of A intersects every member of B.
bool mesh(const SetFamily& a, const SetFamily& b);

// grill(A): all subsets of the carrier meshing A.
SetFamily grill(const SetFamily& a);

// Filter comparisons.
struct FilterOpsResult {
  bool finerThan;  // kernel(F) ⊆ kernel(G); the degenerate filter is ⊆-least
  bool mesh;       // both proper and kernels intersect
  Subset ultraSet; // kernel(F) read as the set of principal ultrafilter points
};
FilterOpsResult filterOps(const PFilter& f, const PFilter& g);

// Characterizations used by the family laws: a family is a filter family iff
// it is the up-closure of a single nonempty kernel; an ideal iff its
// complement family is a filter family.
bool isFilterFamily(const SetFamily& f);
bool isIdealFamily(const SetFamily& f);

}  // namespace convlab
