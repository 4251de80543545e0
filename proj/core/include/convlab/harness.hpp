// harness.hpp — the laboratory around the core: the space-file format,
// deterministic generators and exhaustive enumeration, bundled example
// spaces, the completeness/paving duality check, and the property suite.
//
// Space-file grammar (one directive per line; '#' starts a comment; blank
// lines ignored):
//
//   space: NAME
//   points: a b c
//   mode: explicit | generators | topology
//   lim: {a,b} -> {c}          (explicit, generators)
//   open: {} {a} {a,b}         (topology; any number of sets per line)
//
// Set literals use no internal spaces; {} is the empty set.  In explicit
// mode unlisted kernels converge to ∅ (so a space file is a sparse table;
// the parsed space must still validate, which forces every singleton to be
// listed).  In generators mode each lim line contributes a generator (S, L)
// and the space is the finest lawful convergence with L ⊆ lim(S↑).  In
// topology mode the open family must contain ∅ and the carrier and be
// closed under union and intersection.
//
// Everything here is deterministic: generation depends only on (seed, n,
// density), enumeration order is fixed, and suite reports are
// byte-reproducible (timing is never part of a report).

#pragma once

#include "convlab/covers.hpp"
#include "convlab/dual.hpp"
#include "convlab/graph.hpp"
#include "convlab/maps.hpp"
#include "convlab/paving.hpp"
#include "convlab/space.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace convlab {

// ---------------------------------------------------------------------------
// Files.
// ---------------------------------------------------------------------------

struct SpaceFile {
  std::string name;
  Space space;
};

// Parses the grammar above; throws Error(input) with a line-numbered message
// on malformed text, and rejects spaces that fail validation.
SpaceFile parseSpace(const std::string& text);

// Canonical explicit form: ascending kernel order, kernels with empty limits
// omitted.  parse(serialize(c)) reproduces c, and serializing again is
// byte-identical.
std::string serializeSpace(const Space& c, const std::string& name);

// Map files: one "map: x -> y" line per source point (x a source label, y a
// target label), each source point exactly once.
SpaceMap parseMapFile(const std::string& text, const Space& src,
                      const Space& dst);

// ---------------------------------------------------------------------------
// Deterministic generation and enumeration.
// ---------------------------------------------------------------------------

// splitmix64; the canonical uniform double in [0,1) uses the top 53 bits.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  double uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
};

// Carrier labelled with the first n letters a, b, c, …  (n ≤ 16).
CarrierRef letterCarrier(int n);

// Random lawful space: singleton limits first (own point always; every other
// candidate point, ascending, kept with probability density), then kernels
// of sizes 2..n in ascending mask order, each limit drawn as a
// density-thinned subset (candidates ascending) of the intersection of the
// facet limits.  density 1 yields a pseudotopology, density 0 the discrete
// pattern.
Space randomSpace(std::uint64_t seed, int n, double density);

Space discreteSpace(const CarrierRef& carrier);
Space antidiscreteSpace(const CarrierRef& carrier);

enum class GenOrder { sizeAscending, sizeDescending };

// Visits every lawful convergence table on the carrier exactly once.
// sizeAscending assigns kernels small-to-large, choosing each limit as a
// free subset of the facet-limit intersection (singletons: own point plus a
// free subset of the rest); sizeDescending assigns large-to-small, choosing
// each limit as a superset of the union of the cofacet limits.  Both orders
// must agree in count and content (checked through an order-independent
// hash) — that agreement is a property in the suite.
void enumerateConvergences(
    const CarrierRef& carrier, GenOrder order,
    const std::function<void(const std::vector<Mask>&)>& fn);

// FNV-1a over the table entries; combined across an enumeration as
// (sum, xor) so the aggregate is order-independent.
std::uint64_t tableHash(const std::vector<Mask>& table);

struct EnumerationSummary {
  std::uint64_t count = 0;
  std::uint64_t hashSum = 0;
  std::uint64_t hashXor = 0;
  bool operator==(const EnumerationSummary& o) const {
    return count == o.count && hashSum == o.hashSum && hashXor == o.hashXor;
  }
};
EnumerationSummary summarizeEnumeration(const CarrierRef& carrier,
                                        GenOrder order);

// Frozen regression anchors for the enumeration counts (carrier sizes 1-3).
// Zero means "not frozen yet"; the suite only compares nonzero entries.
std::uint64_t frozenEnumerationCount(int n);

// ---------------------------------------------------------------------------
// Bundled example spaces.
// ---------------------------------------------------------------------------

Space fixtureChain();         // a,b,c: topological chain (opens ∅,{a},{a,b},X)
Space fixtureUltra();         // 1,2,3: singletons converge everywhere
Space fixtureOverlap();       // 1,2,3: kernels of size ≤ 2 converge everywhere
Space fixtureDiscretePair();  // p,q: discrete

// ---------------------------------------------------------------------------
// Completeness/paving duality check.
// ---------------------------------------------------------------------------

struct DualityRow {
  Mask target = 0;               // the closed set A
  unsigned plainValue = 0;       // relative completeness, mesh quantifier
  unsigned ultraValue = 0;       // relative completeness, refinement quantifier
  unsigned paperPlain = 0;       // 0 when no proper filter qualifies
  unsigned paperUltra = 0;
  unsigned pavementDual = 0;     // paving number of the dual at the point A
  unsigned daggerDual = 0;       // dagger paving number of the dual at A
  bool equalUltra = false;       // ultraValue == pavementDual
  bool equalPlain = false;       // plainValue == daggerDual
  bool paperNote = false;        // flagged on the A = ∅ row exactly
};

// One row per closed set, ascending.  Requires a validated star-regular
// space (input error otherwise); capacity error when the dual carrier would
// exceed MAX_CARRIER points.
std::vector<DualityRow> dualityCheck(const Space& c);

// ---------------------------------------------------------------------------
// Property suite.
// ---------------------------------------------------------------------------

struct SuiteParams {
  int nMin = 1;
  int nMax = 3;
  int trials = 200;          // per carrier size above the exhaustive range
  std::uint64_t seed = 1;
  std::vector<std::string> props;  // empty = every property
};

struct PropertyResult {
  std::string name;
  std::uint64_t instances = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> notes;  // first counterexamples and info lines
};

struct SuiteReport {
  SuiteParams params;
  std::vector<PropertyResult> properties;
  bool pass = true;
};

std::vector<std::string> suitePropertyNames();
SuiteReport runSuite(const SuiteParams& p);

// Deterministic key=value rendering (stable key order, no timing data).
std::string serializeReport(const SuiteReport& r);

}  // namespace convlab
