#include "convlab/harness.hpp"

#include <algorithm>

namespace convlab {

CarrierRef letterCarrier(int n) {
  if (n < 1 || n > MAX_CARRIER)
    throw Error(ErrorKind::input, "letterCarrier: size out of range");
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return Carrier::make(labels);
}

Space randomSpace(std::uint64_t seed, int n, double density) {
  CarrierRef carrier = letterCarrier(n);
  const Mask full = carrier->full();
  SplitMix64 rng(seed);
  std::vector<Mask> table(std::size_t{1} << n, 0);
  for (int x = 0; x < n; ++x) {
    Mask lim = bit(x);
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      if (rng.uniform() < density) lim |= bit(y);
    }
    table[bit(x)] = lim;
  }
  for (int size = 2; size <= n; ++size)
    for (Mask k = 1; k <= full; ++k) {
      if (popcount(k) != size) continue;
      Mask bound = full;
      forEachBit(k, [&](int b) { bound &= table[k & ~bit(b)]; });
      Mask lim = 0;
      forEachBit(bound, [&](int y) {
        if (rng.uniform() < density) lim |= bit(y);
      });
      table[k] = lim;
    }
  return Space::tabulated(std::move(carrier), std::move(table));
}

Space discreteSpace(const CarrierRef& carrier) {
  std::vector<Mask> table(std::size_t{1} << carrier->size(), 0);
  for (int x = 0; x < carrier->size(); ++x) table[bit(x)] = bit(x);
  return Space::tabulated(carrier, std::move(table));
}

Space antidiscreteSpace(const CarrierRef& carrier) {
  std::vector<Mask> table(std::size_t{1} << carrier->size(),
                          carrier->full());
  return Space::tabulated(carrier, std::move(table));
}

namespace {

// Kernels ordered by (popcount, mask) — ascending for the small-to-large
// order, reversed for large-to-small.
std::vector<Mask> kernelOrder(int n, GenOrder order) {
  std::vector<Mask> ks;
  const Mask full = fullMask(n);
  for (Mask k = 1; k <= full; ++k) ks.push_back(k);
  std::stable_sort(ks.begin(), ks.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return a < b;
  });
  if (order == GenOrder::sizeDescending)
    std::reverse(ks.begin(), ks.end());
  return ks;
}

void enumerateRec(const std::vector<Mask>& ks, std::size_t pos, int n,
                  GenOrder order, std::vector<Mask>& table,
                  const std::function<void(const std::vector<Mask>&)>& fn) {
  if (pos == ks.size()) {
    fn(table);
    return;
  }
  const Mask k = ks[pos];
  const Mask full = fullMask(n);
  if (order == GenOrder::sizeAscending) {
    if (popcount(k) == 1) {
      // centered: own point forced, the rest free
      forEachSubset(full & ~k, [&](Mask s) {
        table[k] = k | s;
        enumerateRec(ks, pos + 1, n, order, table, fn);
      });
    } else {
      // antitone: the limit must sit below every facet limit
      Mask bound = full;
      forEachBit(k, [&](int b) { bound &= table[k & ~bit(b)]; });
      forEachSubset(bound, [&](Mask s) {
        table[k] = s;
        enumerateRec(ks, pos + 1, n, order, table, fn);
      });
    }
  } else {
    // antitone from above: the limit must contain every cofacet limit,
    // plus the centering point for singletons
    Mask need = (popcount(k) == 1) ? k : Mask{0};
    for (int b = 0; b < n; ++b)
      if (!has(k, b)) need |= table[k | bit(b)];
    forEachSubset(full & ~need, [&](Mask s) {
      table[k] = need | s;
      enumerateRec(ks, pos + 1, n, order, table, fn);
    });
  }
}

}  // namespace

void enumerateConvergences(
    const CarrierRef& carrier, GenOrder order,
    const std::function<void(const std::vector<Mask>&)>& fn) {
  const int n = carrier->size();
  std::vector<Mask> table(std::size_t{1} << n, 0);
  const std::vector<Mask> ks = kernelOrder(n, order);
  enumerateRec(ks, 0, n, order, table, fn);
}

std::uint64_t tableHash(const std::vector<Mask>& table) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (Mask m : table)
    for (int byte = 0; byte < 4; ++byte) {
      h ^= (m >> (8 * byte)) & 0xFFu;
      h *= 1099511628211ull;
    }
  return h;
}

EnumerationSummary summarizeEnumeration(const CarrierRef& carrier,
                                        GenOrder order) {
  EnumerationSummary s;
  enumerateConvergences(carrier, order, [&](const std::vector<Mask>& t) {
    const std::uint64_t h = tableHash(t);
    ++s.count;
    s.hashSum += h;
    s.hashXor ^= h;
  });
  return s;
}

std::uint64_t frozenEnumerationCount(int n) {
  // The per-point structures are independent (both axioms constrain each
  // point separately), so the totals are perfect n-th powers: the base
  // counts the down-closed families of nonempty kernels that contain the
  // point's own singleton (1, 3, 14 for n = 1, 2, 3).
  switch (n) {
    case 1: return 1;
    case 2: return 9;
    case 3: return 2744;
    default: return 0;
  }
}

Space fixtureChain() {
  return parseSpace(
             "space: chain\n"
             "points: a b c\n"
             "mode: topology\n"
             "open: {} {a} {a,b} {a,b,c}\n")
      .space;
}

Space fixtureUltra() {
  return parseSpace(
             "space: ultra\n"
             "points: 1 2 3\n"
             "mode: explicit\n"
             "lim: {1} -> {1,2,3}\n"
             "lim: {2} -> {1,2,3}\n"
             "lim: {3} -> {1,2,3}\n")
      .space;
}

Space fixtureOverlap() {
  return parseSpace(
             "space: overlap\n"
             "points: 1 2 3\n"
             "mode: explicit\n"
             "lim: {1} -> {1,2,3}\n"
             "lim: {2} -> {1,2,3}\n"
             "lim: {3} -> {1,2,3}\n"
             "lim: {1,2} -> {1,2,3}\n"
             "lim: {1,3} -> {1,2,3}\n"
             "lim: {2,3} -> {1,2,3}\n")
      .space;
}

Space fixtureDiscretePair() {
  return parseSpace(
             "space: discrete-pair\n"
             "points: p q\n"
             "mode: explicit\n"
             "lim: {p} -> {p}\n"
             "lim: {q} -> {q}\n")
      .space;
}

std::vector<DualityRow> dualityCheck(const Space& c) {
  if (!validate(c).empty())
    throw Error(ErrorKind::input, "dualityCheck: space fails validation");
  if (!regularityPredicates(c).starRegular)
    throw Error(ErrorKind::input,
                "dualityCheck: space is not star-regular");
  const DualSpace d = dualSpace(c);
  std::vector<DualityRow> rows;
  for (Mask a : d.closedList()) {
    DualityRow row;
    row.target = a;
    const CompletenessResult plain =
        completenessNumber(c, a, CompletenessKind::plain);
    const CompletenessResult ultra =
        completenessNumber(c, a, CompletenessKind::ultra);
    row.plainValue = plain.value;
    row.ultraValue = ultra.value;
    row.paperPlain = plain.paperConvention;
    row.paperUltra = ultra.paperConvention;
    const int at = d.dualIndex(a);
    row.pavementDual = pavingNumber(d.conv(), at, PavingKind::pavement).value;
    row.daggerDual = pavingNumber(d.conv(), at, PavingKind::dagger).value;
    row.equalUltra = (row.ultraValue == row.pavementDual);
    row.equalPlain = (row.plainValue == row.daggerDual);
    row.paperNote = (a == 0);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace convlab
