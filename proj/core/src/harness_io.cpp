#include "convlab/harness.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace convlab {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> splitWhitespace(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(int line, const std::string& msg) {
  std::ostringstream os;
  os << "line " << line << ": " << msg;
  throw Error(ErrorKind::input, os.str());
}

Mask parseSetLiteral(const std::string& tok, const Carrier& carrier,
                     int line) {
  if (tok.size() < 2 || tok.front() != '{' || tok.back() != '}')
    fail(line, "expected a set literal like {a,b} or {}, got '" + tok + "'");
  const std::string inner = tok.substr(1, tok.size() - 2);
  if (inner.empty()) return 0;
  Mask out = 0;
  std::size_t pos = 0;
  while (pos <= inner.size()) {
    std::size_t comma = inner.find(',', pos);
    const std::string label =
        inner.substr(pos, comma == std::string::npos ? std::string::npos
                                                     : comma - pos);
    if (label.empty()) fail(line, "empty element in set literal '" + tok + "'");
    const std::optional<int> idx = carrier.tryIndex(label);
    if (!idx) fail(line, "unknown point '" + label + "'");
    if (has(out, *idx)) fail(line, "duplicate point '" + label + "'");
    out |= bit(*idx);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

SpaceFile parseSpace(const std::string& text) {
  std::string name;
  std::vector<std::string> labels;
  std::string mode;
  struct LimLine { int line; std::string lhs, rhs; };
  struct OpenLine { int line; std::vector<std::string> sets; };
  std::vector<LimLine> limLines;
  std::vector<OpenLine> openLines;

  std::istringstream is(text);
  std::string raw;
  int lineNo = 0;
  while (std::getline(is, raw)) {
    ++lineNo;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      fail(lineNo, "expected 'key: value', got '" + line + "'");
    const std::string key = trim(line.substr(0, colon));
    const std::string rest = trim(line.substr(colon + 1));
    if (key == "space") {
      if (!name.empty()) fail(lineNo, "duplicate space: line");
      if (rest.empty() || splitWhitespace(rest).size() != 1)
        fail(lineNo, "space name must be a single token");
      name = rest;
    } else if (key == "points") {
      if (!labels.empty()) fail(lineNo, "duplicate points: line");
      labels = splitWhitespace(rest);
      if (labels.empty()) fail(lineNo, "points: needs at least one label");
      for (const std::string& l : labels)
        if (l.find_first_of("{},#") != std::string::npos)
          fail(lineNo, "label '" + l + "' uses a reserved character");
    } else if (key == "mode") {
      if (!mode.empty()) fail(lineNo, "duplicate mode: line");
      if (rest != "explicit" && rest != "generators" && rest != "topology")
        fail(lineNo, "mode must be explicit, generators, or topology");
      mode = rest;
    } else if (key == "lim") {
      const std::size_t arrow = rest.find("->");
      if (arrow == std::string::npos)
        fail(lineNo, "lim: expects '{..} -> {..}'");
      limLines.push_back(LimLine{lineNo, trim(rest.substr(0, arrow)),
                                 trim(rest.substr(arrow + 2))});
    } else if (key == "open") {
      openLines.push_back(OpenLine{lineNo, splitWhitespace(rest)});
    } else {
      fail(lineNo, "unknown directive '" + key + "'");
    }
  }

  if (name.empty()) fail(lineNo, "missing space: line");
  if (labels.empty()) fail(lineNo, "missing points: line");
  if (mode.empty()) fail(lineNo, "missing mode: line");

  CarrierRef carrier;
  try {
    carrier = Carrier::make(labels);
  } catch (const Error& e) {
    fail(lineNo, e.what());
  }
  const int n = carrier->size();
  const Mask full = carrier->full();

  auto validateOrThrow = [&](const Space& c) {
    const std::vector<Violation> v = validate(c);
    if (!v.empty())
      throw Error(ErrorKind::input,
                  "space '" + name + "' fails validation: " +
                      v.front().describe(*carrier));
  };

  if (mode == "explicit" || mode == "generators") {
    if (!openLines.empty())
      fail(openLines.front().line, "open: lines need mode: topology");
    std::vector<std::pair<Mask, Mask>> pairs;
    std::set<Mask> seen;
    for (const LimLine& l : limLines) {
      const Mask k = parseSetLiteral(l.lhs, *carrier, l.line);
      const Mask v = parseSetLiteral(l.rhs, *carrier, l.line);
      if (k == 0) fail(l.line, "lim: kernel must be nonempty");
      if (!seen.insert(k).second)
        fail(l.line, "duplicate lim entry for " + setLiteral(*carrier, k));
      pairs.emplace_back(k, v);
    }
    Space c = (mode == "explicit")
                  ? [&] {
                      std::vector<Mask> table(std::size_t{1} << n, 0);
                      for (const auto& [k, v] : pairs) table[k] = v;
                      return Space::tabulated(carrier, std::move(table));
                    }()
                  : generateConvergence(carrier, pairs);
    validateOrThrow(c);
    return SpaceFile{name, std::move(c)};
  }

  // topology mode
  if (!limLines.empty())
    fail(limLines.front().line, "lim: lines need mode: explicit or generators");
  std::set<Mask> opens;
  for (const OpenLine& l : openLines)
    for (const std::string& tok : l.sets)
      opens.insert(parseSetLiteral(tok, *carrier, l.line));
  if (!opens.count(0) || !opens.count(full))
    fail(lineNo, "topology must contain {} and the full carrier");
  for (Mask a : opens)
    for (Mask b : opens) {
      if (!opens.count(a | b))
        fail(lineNo, "open family not closed under union: " +
                         setLiteral(*carrier, a) + " " + setLiteral(*carrier, b));
      if (!opens.count(a & b))
        fail(lineNo, "open family not closed under intersection: " +
                         setLiteral(*carrier, a) + " " + setLiteral(*carrier, b));
    }
  std::vector<Mask> vx(static_cast<std::size_t>(n), full);
  for (int x = 0; x < n; ++x)
    for (Mask u : opens)
      if (has(u, x)) vx[static_cast<std::size_t>(x)] &= u;
  std::vector<Mask> table(std::size_t{1} << n, 0);
  for (Mask a = 1; a <= full; ++a) {
    Mask lim = 0;
    for (int x = 0; x < n; ++x)
      if (subsetOf(a, vx[static_cast<std::size_t>(x)])) lim |= bit(x);
    table[a] = lim;
  }
  Space c = Space::tabulated(carrier, std::move(table));
  validateOrThrow(c);
  return SpaceFile{name, std::move(c)};
}

std::string serializeSpace(const Space& c, const std::string& name) {
  const Carrier& carrier = *c.carrier();
  std::ostringstream os;
  os << "space: " << name << "\n";
  os << "points:";
  for (int i = 0; i < carrier.size(); ++i) os << " " << carrier.name(i);
  os << "\n";
  os << "mode: explicit\n";
  const Mask full = carrier.full();
  for (Mask k = 1; k <= full; ++k) {
    const Mask v = c.lim(k);
    if (v == 0) continue;
    os << "lim: " << setLiteral(carrier, k) << " -> " << setLiteral(carrier, v)
       << "\n";
  }
  return os.str();
}

SpaceMap parseMapFile(const std::string& text, const Space& src,
                      const Space& dst) {
  std::istringstream is(text);
  std::string raw;
  int lineNo = 0;
  std::vector<int> f(static_cast<std::size_t>(src.points()), -1);
  while (std::getline(is, raw)) {
    ++lineNo;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const std::size_t colon = line.find(':');
    if (colon == std::string::npos || trim(line.substr(0, colon)) != "map")
      fail(lineNo, "expected 'map: x -> y'");
    const std::string rest = trim(line.substr(colon + 1));
    const std::size_t arrow = rest.find("->");
    if (arrow == std::string::npos) fail(lineNo, "expected 'map: x -> y'");
    const std::string from = trim(rest.substr(0, arrow));
    const std::string to = trim(rest.substr(arrow + 2));
    const std::optional<int> xi = src.carrier()->tryIndex(from);
    if (!xi) fail(lineNo, "unknown source point '" + from + "'");
    const std::optional<int> yi = dst.carrier()->tryIndex(to);
    if (!yi) fail(lineNo, "unknown target point '" + to + "'");
    if (f[static_cast<std::size_t>(*xi)] != -1)
      fail(lineNo, "source point '" + from + "' mapped twice");
    f[static_cast<std::size_t>(*xi)] = *yi;
  }
  for (int x = 0; x < src.points(); ++x)
    if (f[static_cast<std::size_t>(x)] == -1)
      throw Error(ErrorKind::input, "map file misses source point '" +
                                        src.carrier()->name(x) + "'");
  return makeMap(src, dst, std::move(f));
}

}  // namespace convlab
