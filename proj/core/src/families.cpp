#include "convlab/families.hpp"

#include <algorithm>
#include <set>

namespace convlab {

std::shared_ptr<const Carrier> Carrier::make(std::vector<std::string> names) {
  if (names.empty())
    throw Error(ErrorKind::input, "carrier must have at least one point");
  if (static_cast<int>(names.size()) > MAX_CARRIER)
    throw Error(ErrorKind::capacity,
                "carrier has " + std::to_string(names.size()) +
                    " points; the cap is " + std::to_string(MAX_CARRIER));
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error(ErrorKind::input, "empty point label");
    if (!seen.insert(n).second)
      throw Error(ErrorKind::input, "duplicate point label '" + n + "'");
  }
  return std::shared_ptr<const Carrier>(new Carrier(std::move(names)));
}

int Carrier::index(const std::string& label) const {
  if (auto i = tryIndex(label)) return *i;
  throw Error(ErrorKind::input, "unknown point label '" + label + "'");
}

std::optional<int> Carrier::tryIndex(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (names_[i] == label) return i;
  return std::nullopt;
}

std::string setLiteral(const Carrier& c, Mask m) {
  std::string out = "{";
  bool first = true;
  forEachBit(m, [&](int i) {
    if (!first) out += ',';
    out += c.name(i);
    first = false;
  });
  out += '}';
  return out;
}

SetFamily::SetFamily(CarrierRef carrier, std::vector<Mask> members)
    : carrier_(std::move(carrier)), members_(std::move(members)) {
  if (!carrier_) throw Error(ErrorKind::input, "family without carrier");
  Mask full = carrier_->full();
  for (Mask m : members_)
    if (!subsetOf(m, full))
      throw Error(ErrorKind::input, "family member outside carrier");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool SetFamily::contains(Mask m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

SetFamily asFamily(const PFilter& f) {
  std::vector<Mask> out;
  Mask full = f.carrier->full();
  for (Mask m = 0; m <= full; ++m)
    if (subsetOf(f.kernel, m)) out.push_back(m);
  return SetFamily(f.carrier, std::move(out));
}

SetFamily upClosure(const SetFamily& f) {
  std::vector<Mask> out;
  Mask full = f.carrier()->full();
  for (Mask m = 0; m <= full; ++m)
    for (Mask p : f.members())
      if (subsetOf(p, m)) {
        out.push_back(m);
        break;
      }
  return SetFamily(f.carrier(), std::move(out));
}

SetFamily downClosure(const SetFamily& f) {
  std::vector<Mask> out;
  Mask full = f.carrier()->full();
  for (Mask m = 0; m <= full; ++m)
    for (Mask p : f.members())
      if (subsetOf(m, p)) {
        out.push_back(m);
        break;
      }
  return SetFamily(f.carrier(), std::move(out));
}

namespace {

// Closure of the member set under a binary operation (covers all finite
// nonempty selections, since the operations are associative/commutative).
template <typename Op>
SetFamily pairwiseClosure(const SetFamily& f, Op op) {
  std::set<Mask> acc(f.members().begin(), f.members().end());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Mask> cur(acc.begin(), acc.end());
    for (Mask a : cur)
      for (Mask b : cur)
        if (acc.insert(op(a, b)).second) grew = true;
  }
  return SetFamily(f.carrier(), std::vector<Mask>(acc.begin(), acc.end()));
}

}  // namespace

SetFamily unionClosure(const SetFamily& f) {
  return pairwiseClosure(f, [](Mask a, Mask b) { return a | b; });
}

SetFamily intersectionClosure(const SetFamily& f) {
  return pairwiseClosure(f, [](Mask a, Mask b) { return a & b; });
}

SetFamily complements(const SetFamily& f) {
  Mask full = f.carrier()->full();
  std::vector<Mask> out;
  out.reserve(f.size());
  for (Mask m : f.members()) out.push_back(full & ~m);
  return SetFamily(f.carrier(), std::move(out));
}

bool mesh(const SetFamily& a, const SetFamily& b) {
  for (Mask x : a.members())
    for (Mask y : b.members())
      if (!meets(x, y)) return false;
  return true;
}

SetFamily grill(const SetFamily& a) {
  Mask full = a.carrier()->full();
  std::vector<Mask> out;
  for (Mask m = 0; m <= full; ++m) {
    bool ok = true;
    for (Mask x : a.members())
      if (!meets(m, x)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(m);
  }
  return SetFamily(a.carrier(), std::move(out));
}

FilterOpsResult filterOps(const PFilter& f, const PFilter& g) {
  if (f.carrier->size() != g.carrier->size())
    throw Error(ErrorKind::precondition, "filterOps requires one carrier");
  FilterOpsResult r;
  r.finerThan = subsetOf(f.kernel, g.kernel);
  r.mesh = f.proper() && g.proper() && meets(f.kernel, g.kernel);
  r.ultraSet = Subset{f.carrier, f.kernel};
  return r;
}

bool isFilterFamily(const SetFamily& f) {
  if (f.empty()) return false;
  Mask kernel = f.carrier()->full();
  for (Mask m : f.members()) {
    if (m == 0) return false;  // filters have nonempty members
    kernel &= m;
  }
  if (kernel == 0) return false;
  return f == upClosure(SetFamily(f.carrier(), {kernel}));
}

bool isIdealFamily(const SetFamily& f) { return isFilterFamily(complements(f)); }

}  // namespace convlab
