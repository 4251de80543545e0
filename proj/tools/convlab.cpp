// convlab — command-line front end for the finite convergence laboratory.
//
// Machine-readable output: one key=value line per record on stdout, stable
// key order.  Wall time goes to stderr so stdout stays byte-deterministic.
// Exit codes: 0 success, 1 property/equality failure, 2 input error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "convlab/covers.hpp"
#include "convlab/dual.hpp"
#include "convlab/graph.hpp"
#include "convlab/harness.hpp"
#include "convlab/maps.hpp"
#include "convlab/paving.hpp"

namespace {

using namespace convlab;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::input, "cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

SpaceFile loadSpace(const std::string& path) { return parseSpace(slurp(path)); }

// Parses "{a,b}" / "{}" against a carrier (labels comma-separated, no
// internal spaces — the same literal form the space files use).
Mask parseSet(const Carrier& car, const std::string& text) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw Error(ErrorKind::input, "set literal must look like {a,b}: '" +
                                      text + "'");
  const std::string body = text.substr(1, text.size() - 2);
  Mask m = 0;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    if (comma == std::string::npos) comma = body.size();
    const std::string label = body.substr(pos, comma - pos);
    if (label.empty())
      throw Error(ErrorKind::input, "empty label in set literal '" + text +
                                        "'");
    m |= bit(car.index(label));
    pos = comma + 1;
  }
  return m;
}

std::string boolWord(bool b) { return b ? "true" : "false"; }

int cmdValidate(const std::string& file) {
  const SpaceFile sf = loadSpace(file);
  std::cout << "validate.ok=true\n";
  std::cout << "space.name=" << sf.name << "\n";
  std::cout << "space.points=" << sf.space.points() << "\n";
  return 0;
}

int cmdInfo(const std::string& file) {
  const SpaceFile sf = loadSpace(file);
  const Space& c = sf.space;
  const Carrier& car = *c.carrier();
  std::cout << "space.name=" << sf.name << "\n";
  std::cout << "space.points=" << c.points() << "\n";
  std::cout << "space.labels=";
  for (int i = 0; i < c.points(); ++i) {
    if (i) std::cout << ",";
    std::cout << car.name(i);
  }
  std::cout << "\n";
  std::cout << "space.pseudotopology=" << boolWord(isPseudotopology(c)) << "\n";
  std::cout << "space.topological=" << boolWord(isTopological(c)) << "\n";
  const SetFamily closed = closedSets(c);
  std::cout << "closed.count=" << closed.size() << "\n";
  for (std::size_t i = 0; i < closed.size(); ++i)
    std::cout << "closed." << i << "=" << setLiteral(car, closed.members()[i])
              << "\n";
  const InducedGraph g = graphOf(c);
  std::cout << "graph.roots=" << setLiteral(car, g.roots) << "\n";
  std::cout << "graph.ends=" << setLiteral(car, g.ends) << "\n";
  std::cout << "graph.grounded=" << boolWord(daggerClosure(g, 0) == 0) << "\n";
  const RegularityPredicates r = regularityPredicates(c);
  std::cout << "regular.star=" << boolWord(r.starRegular) << "\n";
  std::cout << "regular.bullet=" << boolWord(r.bulletRegular) << "\n";
  std::cout << "regular.reciprocal=" << boolWord(r.reciprocal) << "\n";
  const CompactParts parts = compactParts(c);
  std::cout << "compact.locallyCompactoid=" << boolWord(parts.locallyCompactoid)
            << "\n";
  return 0;
}

int cmdDual(const std::string& file, const std::string& emit) {
  const SpaceFile sf = loadSpace(file);
  const DualSpace d = dualSpace(sf.space);
  const Carrier& baseCar = *sf.space.carrier();
  const Carrier& dualCar = *d.dualCarrier();
  std::cout << "dual.base=" << sf.name << "\n";
  std::cout << "dual.points=" << dualCar.size() << "\n";
  for (int i = 0; i < dualCar.size(); ++i)
    std::cout << "dual.set." << dualCar.name(i) << "="
              << setLiteral(baseCar, d.closedList()[static_cast<std::size_t>(i)])
              << "\n";
  const InducedGraph g = graphOf(d.conv());
  std::cout << "dual.roots=" << setLiteral(dualCar, g.roots) << "\n";
  std::cout << "dual.ends=" << setLiteral(dualCar, g.ends) << "\n";
  std::cout << "dual.pseudotopology=" << boolWord(isPseudotopology(d.conv()))
            << "\n";
  if (!emit.empty()) {
    std::ostringstream os;
    for (int i = 0; i < dualCar.size(); ++i)
      os << "# " << dualCar.name(i) << " = "
         << setLiteral(baseCar, d.closedList()[static_cast<std::size_t>(i)])
         << "\n";
    os << serializeSpace(tabulate(d.conv()), sf.name + "-dual");
    std::ofstream out(emit, std::ios::binary);
    if (!out)
      throw Error(ErrorKind::input, "cannot write '" + emit + "'");
    out << os.str();
    std::cout << "dual.emitted=" << emit << "\n";
  }
  return 0;
}

int cmdPaving(const std::string& file, const std::string& at,
              const std::string& kindWord) {
  const SpaceFile sf = loadSpace(file);
  const Carrier& car = *sf.space.carrier();
  PavingKind kind;
  if (kindWord == "pavement") kind = PavingKind::pavement;
  else if (kindWord == "pseudo") kind = PavingKind::pseudo;
  else if (kindWord == "dagger") kind = PavingKind::dagger;
  else
    throw Error(ErrorKind::input, "unknown paving kind '" + kindWord + "'");
  const int x = car.index(at);
  const PavingResult r = pavingNumber(sf.space, x, kind);
  std::cout << "paving.space=" << sf.name << "\n";
  std::cout << "paving.at=" << at << "\n";
  std::cout << "paving.kind=" << kindWord << "\n";
  std::cout << "paving.value=" << r.value << "\n";
  for (std::size_t i = 0; i < r.witness.members.size(); ++i)
    std::cout << "paving.witness." << i << "="
              << setLiteral(car, r.witness.members[i].kernel) << "\n";
  return 0;
}

int cmdComplete(const std::string& file, const std::string& target,
                bool ultra) {
  const SpaceFile sf = loadSpace(file);
  const Carrier& car = *sf.space.carrier();
  const Mask a = parseSet(car, target);
  const CompletenessKind kind =
      ultra ? CompletenessKind::ultra : CompletenessKind::plain;
  const CompletenessResult r = completenessNumber(sf.space, a, kind);
  std::cout << "complete.space=" << sf.name << "\n";
  std::cout << "complete.target=" << setLiteral(car, a) << "\n";
  std::cout << "complete.kind=" << (ultra ? "ultra" : "plain") << "\n";
  std::cout << "complete.value=" << r.value << "\n";
  std::cout << "complete.paperConvention=" << r.paperConvention << "\n";
  for (std::size_t i = 0; i < r.witness.members.size(); ++i)
    std::cout << "complete.witness." << i << "="
              << setLiteral(car, r.witness.members[i].kernel) << "\n";
  return 0;
}

int cmdDuality(const std::string& file) {
  const SpaceFile sf = loadSpace(file);
  const Carrier& car = *sf.space.carrier();
  const std::vector<DualityRow> rows = dualityCheck(sf.space);
  std::cout << "duality.space=" << sf.name << "\n";
  std::cout << "duality.rows=" << rows.size() << "\n";
  bool allEqual = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const DualityRow& r = rows[i];
    const std::string p = "duality.row." + std::to_string(i) + ".";
    std::cout << p << "target=" << setLiteral(car, r.target) << "\n";
    std::cout << p << "plain=" << r.plainValue << "\n";
    std::cout << p << "ultra=" << r.ultraValue << "\n";
    std::cout << p << "paperPlain=" << r.paperPlain << "\n";
    std::cout << p << "paperUltra=" << r.paperUltra << "\n";
    std::cout << p << "pavementDual=" << r.pavementDual << "\n";
    std::cout << p << "daggerDual=" << r.daggerDual << "\n";
    std::cout << p << "equalUltra=" << boolWord(r.equalUltra) << "\n";
    std::cout << p << "equalPlain=" << boolWord(r.equalPlain) << "\n";
    std::cout << p << "paperNote=" << boolWord(r.paperNote) << "\n";
    if (!r.equalUltra || !r.equalPlain) allEqual = false;
  }
  std::cout << "duality.allEqual=" << boolWord(allEqual) << "\n";
  return allEqual ? 0 : 1;
}

int cmdMap(const std::string& mapFile, const std::string& srcFile,
           const std::string& dstFile) {
  const SpaceFile src = loadSpace(srcFile);
  const SpaceFile dst = loadSpace(dstFile);
  const SpaceMap m = parseMapFile(slurp(mapFile), src.space, dst.space);
  std::cout << "map.source=" << src.name << "\n";
  std::cout << "map.target=" << dst.name << "\n";
  std::cout << "map.onto=" << boolWord(m.onto()) << "\n";
  const bool cont = isContinuous(m).verdict;
  std::cout << "map.continuous=" << boolWord(cont) << "\n";
  if (cont && m.onto()) {
    const MapClass mc = mapClass(m);
    std::cout << "map.almostOpen=" << boolWord(mc.almostOpen) << "\n";
    std::cout << "map.biquotient=" << boolWord(mc.biquotient) << "\n";
    std::cout << "map.quotient=" << boolWord(mc.quotient) << "\n";
  } else {
    std::cout << "map.classes=undefined\n";
  }
  return 0;
}

int cmdSuite(const std::string& range, int trials, std::uint64_t seed,
             const std::string& propsCsv) {
  SuiteParams p;
  p.trials = trials;
  p.seed = seed;
  if (!range.empty()) {
    const std::size_t dots = range.find("..");
    if (dots == std::string::npos) {
      p.nMin = p.nMax = std::stoi(range);
    } else {
      p.nMin = std::stoi(range.substr(0, dots));
      p.nMax = std::stoi(range.substr(dots + 2));
    }
  }
  if (!propsCsv.empty()) {
    std::size_t pos = 0;
    while (pos <= propsCsv.size()) {
      std::size_t comma = propsCsv.find(',', pos);
      if (comma == std::string::npos) comma = propsCsv.size();
      const std::string name = propsCsv.substr(pos, comma - pos);
      if (!name.empty()) p.props.push_back(name);
      pos = comma + 1;
    }
  }
  const auto start = std::chrono::steady_clock::now();
  const SuiteReport report = runSuite(p);
  const auto stop = std::chrono::steady_clock::now();
  std::cout << serializeReport(report);
  std::cerr << "wall_ms="
            << std::chrono::duration_cast<std::chrono::milliseconds>(stop -
                                                                     start)
                   .count()
            << "\n";
  return report.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite convergence-space laboratory"};
  app.require_subcommand(1);

  std::string file, emit, at, kind = "pavement", target, range, propsCsv;
  std::string mapFile, srcFile, dstFile;
  bool ultra = false;
  int trials = 200;
  std::uint64_t seed = 1;

  CLI::App* validate = app.add_subcommand("validate", "parse and validate a space file");
  validate->add_option("file", file)->required();

  CLI::App* info = app.add_subcommand("info", "structural report for a space file");
  info->add_option("file", file)->required();

  CLI::App* dual = app.add_subcommand("dual", "closed-set dual of a space");
  dual->add_option("file", file)->required();
  dual->add_option("--emit", emit, "write the tabulated dual as a space file");

  CLI::App* paving = app.add_subcommand("paving", "minimum paving at a point");
  paving->add_option("file", file)->required();
  paving->add_option("--at", at, "point label")->required();
  paving->add_option("--kind", kind, "pavement|pseudo|dagger");

  CLI::App* complete = app.add_subcommand("complete", "relative completeness number");
  complete->add_option("file", file)->required();
  complete->add_option("--target", target, "closed set literal, e.g. {a,b}")
      ->required();
  complete->add_flag("--ultra", ultra, "refinement quantifier (all filters)");

  CLI::App* duality = app.add_subcommand("duality", "completeness/paving duality table");
  duality->add_option("file", file)->required();

  CLI::App* mapCmd = app.add_subcommand("map", "classify a map between spaces");
  mapCmd->add_option("mapfile", mapFile)->required();
  mapCmd->add_option("src", srcFile)->required();
  mapCmd->add_option("dst", dstFile)->required();

  CLI::App* suite = app.add_subcommand("suite", "run the property suite");
  suite->add_option("--n", range, "carrier range A..B (default 1..3)");
  suite->add_option("--trials", trials, "random trials per carrier above 3");
  suite->add_option("--seed", seed, "base seed");
  suite->add_option("--props", propsCsv, "comma-separated property names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*validate) return cmdValidate(file);
    if (*info) return cmdInfo(file);
    if (*dual) return cmdDual(file, emit);
    if (*paving) return cmdPaving(file, at, kind);
    if (*complete) return cmdComplete(file, target, ultra);
    if (*duality) return cmdDuality(file);
    if (*mapCmd) return cmdMap(mapFile, srcFile, dstFile);
    if (*suite) return cmdSuite(range, trials, seed, propsCsv);
  } catch (const convlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
