// Command-line front end. Every subcommand produces a report; verification
// failures exit 1, usage and input errors exit 2.

#include "CLI11.hpp"
#include "json.hpp"

#include "diracforge/characters/cache.hpp"
#include "diracforge/characters/character.hpp"
#include "diracforge/characters/io.hpp"
#include "diracforge/clifford/clifford.hpp"
#include "diracforge/dirac/dirac.hpp"
#include "diracforge/errors.hpp"
#include "diracforge/induction/induction.hpp"
#include "diracforge/polarized/polarized.hpp"
#include "diracforge/qr/qr.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace diracforge;
using Json = nlohmann::ordered_json;
using characters::ConeSeries;
using characters::FormalCharacter;
using lie::Weight;

namespace {

constexpr const char* kNormalization = "long-root-2";
constexpr const char* kPolarizationRule =
    "<w,alpha> < 0: sum_{k>=0} e^{-k w}; <w,alpha> > 0: -sum_{k>=1} e^{k w}";

enum class Format { Json, Text };

struct RunConfig {
  std::string subcommand;
  std::optional<Rational> window;
  std::string normalization = kNormalization;
  std::string cacheDir;
  std::optional<Format> format;
  uint64_t seed = 1;
  std::string output;
};

struct Result {
  Json report;
  std::string text;  // character-file or one-line output for text mode
  Format preferred = Format::Json;
};

Json toJson(const Rational& q) { return str(q); }

Json toJson(const Weight& w) {
  Json a = Json::array();
  for (const auto& x : w) a.push_back(str(x));
  return a;
}

Json entriesJson(const std::map<Weight, long>& entries) {
  Json a = Json::array();
  for (const auto& [w, m] : entries) a.push_back({{"weight", toJson(w)}, {"multiplicity", m}});
  return a;
}

Json characterJson(const FormalCharacter& chi) {
  return {{"system", chi.system->label()},
          {"basis", std::string(characters::basisName(chi.basis))},
          {"entries", entriesJson(chi.entries)}};
}

Json seriesJson(const ConeSeries& s) {
  Json j = {{"system", s.system->label()},
            {"basis", std::string(characters::basisName(s.basis))},
            {"polarizer", toJson(s.polarizer)},
            {"offset", s.offset ? Json(str(*s.offset)) : Json(nullptr)},
            {"window", toJson(s.window)}};
  if (s.floor) j["floor"] = toJson(*s.floor);
  j["entries"] = entriesJson(s.entries);
  return j;
}

Json conventions() {
  return {{"normalization", kNormalization},
          {"clifford_convention", std::string(clifford::conventionName(clifford::SpinConvention::Equivariant))},
          {"polarization_rule", kPolarizationRule}};
}

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::IoError, "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::IoError, "cannot write " + path.string());
  out << text;
  if (!out) fail(ErrorKind::IoError, "write failed for " + path.string());
}

std::vector<Weight> parseWeightList(const std::string& text) {
  std::vector<Weight> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) out.push_back(characters::parseWeight(item));
  return out;
}

// Dominant lattice weights with semisimple coordinates in [0, bound] and
// torus coordinates in [-bound, bound].
std::vector<Weight> dominantBox(const lie::RootSystem& rs, long bound) {
  std::vector<Weight> out{Weight{}};
  for (size_t j = 0; j < rs.rank(); ++j) {
    long lo = rs.isTorusCoordinate(j) ? -bound : 0;
    std::vector<Weight> next;
    for (const auto& p : out)
      for (long x = lo; x <= bound; ++x) {
        Weight q = p;
        q.emplace_back(x);
        next.push_back(std::move(q));
      }
    out = std::move(next);
  }
  std::erase_if(out, [&](const Weight& v) { return !rs.isDominant(v) || !rs.isLatticeWeight(v); });
  return out;
}

characters::CharacterCache openCache(const RunConfig& cfg) {
  return characters::CharacterCache(cfg.cacheDir.empty() ? characters::CharacterCache::defaultDirectory()
                                                         : std::filesystem::path(cfg.cacheDir));
}

Rational requireWindow(const RunConfig& cfg) {
  if (!cfg.window) fail(ErrorKind::ConfigurationError, "--window is required");
  if (sgn(*cfg.window) <= 0) fail(ErrorKind::ConfigurationError, "--window must be positive");
  return *cfg.window;
}

// ---------------------------------------------------------------- handlers

struct Args {
  std::string type, pair, weight, lambda, mu, xi, c = "0", alpha, shift, weights, model, input, out, basis = "weight";
  std::string seriesDir, action = "stats";
  long lambdaMax = -1;
  long sweep = 0;
  bool strict = false, check = false;
};

Result cmdRootSystem(const Args& a) {
  auto rs = lie::resolveSystem(a.type);
  Json roots = Json::array();
  for (const auto& r : rs->positiveRoots()) roots.push_back(toJson(r));
  Json j = {{"label", rs->label()},
            {"rank", rs->rank()},
            {"semisimple_rank", rs->semisimpleRank()},
            {"positive_roots", roots},
            {"rho", toJson(rs->rho())},
            {"weyl_order", rs->weylOrder()}};
  Json cartan = Json::array();
  for (size_t i = 0; i < rs->semisimpleRank(); ++i) {
    Json row = Json::array();
    for (size_t k = 0; k < rs->semisimpleRank(); ++k) row.push_back(str(rs->cartanMatrix()(i, k)));
    cartan.push_back(row);
  }
  j["cartan"] = cartan;
  return {j, rs->toJson(), Format::Json};
}

Result cmdOrbit(const Args& a) {
  auto rs = lie::resolveSystem(a.type);
  Weight w = characters::parseWeight(a.weight);
  auto orbit = rs->weylOrbit(w);
  auto [dom, word] = rs->makeDominant(w);
  Json pts = Json::array();
  std::string text;
  for (const auto& p : orbit) {
    pts.push_back(toJson(p));
    text += characters::formatWeight(p) + "\n";
  }
  Json j = {{"system", rs->label()},
            {"weight", toJson(w)},
            {"dominant", toJson(dom)},
            {"word_length", word.word.size()},
            {"size", orbit.size()},
            {"orbit", pts}};
  return {j, text, Format::Json};
}

Result cmdChar(const Args& a, const RunConfig& cfg) {
  auto rs = lie::resolveSystem(a.type);
  Weight lambda = characters::parseWeight(a.weight);
  auto cache = openCache(cfg);
  auto chi = characters::irreducibleCharacter(rs, lambda, &cache);
  if (a.basis == "irreducible") chi = characters::decompose(chi, &cache);
  std::string text = characters::formatCharacter(chi);
  if (!a.out.empty()) writeFile(a.out, text);
  Json j = {{"system", rs->label()},
            {"highest_weight", toJson(lambda)},
            {"dimension", characters::weylDimension(rs, lambda).get_str()},
            {"character", characterJson(chi)}};
  return {j, text, Format::Text};
}

Result cmdTensor(const Args& a, const RunConfig& cfg) {
  auto rs = lie::resolveSystem(a.type);
  auto cache = openCache(cfg);
  auto dec = characters::tensorDecompose(rs, characters::parseWeight(a.lambda), characters::parseWeight(a.mu), &cache);
  Json j = {{"system", rs->label()}, {"decomposition", characterJson(dec)}};
  return {j, characters::formatCharacter(dec), Format::Text};
}

Result cmdRestrict(const Args& a, const RunConfig& cfg) {
  auto pair = lie::parsePair(a.pair);
  auto cache = openCache(cfg);
  auto dec = characters::restrictCharacter(pair, characters::parseWeight(a.weight), &cache);
  Json j = {{"pair", pair.label}, {"subgroup", pair.h->label()}, {"decomposition", characterJson(dec)}};
  return {j, characters::formatCharacter(dec), Format::Text};
}

Result cmdInduct(const Args& a) {
  auto pair = lie::parsePair(a.pair);
  Json j = {{"pair", pair.label}, {"subgroup", pair.h->label()}, {"shift", toJson(induction::coadjointSpinorShift(pair))}};
  if (!a.weight.empty()) {
    Weight lambda = characters::parseWeight(a.weight);
    auto r = induction::diracInduct(pair, lambda);
    std::string line = r.sign == 0 ? "0" : std::string(r.sign > 0 ? "+" : "-") + "V[" + characters::formatWeight(r.mu) + "]";
    j["weight"] = toJson(lambda);
    j["result"] = line;
    j["sign"] = r.sign;
    if (r.sign) j["mu"] = toJson(r.mu);
    return {j, line + "\n", Format::Text};
  }
  if (a.input.empty()) fail(ErrorKind::ConfigurationError, "induct needs --weight or --input");
  auto parsed = characters::readCharacterFile(a.input);
  std::string text;
  if (auto* chi = std::get_if<FormalCharacter>(&parsed)) {
    auto out = induction::inductCharacter(pair, *chi);
    j["result"] = characterJson(out);
    text = characters::formatCharacter(out);
  } else {
    auto out = induction::inductSeries(pair, std::get<ConeSeries>(parsed));
    j["result"] = seriesJson(out);
    text = characters::formatSeries(out);
  }
  if (!a.out.empty()) writeFile(a.out, text);
  return {j, text, Format::Text};
}

Result cmdVerifyKostant(const Args& a) {
  auto rs = lie::resolveSystem(a.type);
  std::vector<Weight> lambdas;
  if (!a.lambda.empty()) lambdas.push_back(characters::parseWeight(a.lambda));
  if (a.lambdaMax >= 0)
    for (const auto& w : dominantBox(*rs, a.lambdaMax)) lambdas.push_back(w);
  if (lambdas.empty()) fail(ErrorKind::ConfigurationError, "verify-kostant needs --lambda or --lambda-max");
  Json cases = Json::array();
  Json scalars = Json::array();
  bool ok = true;
  std::optional<dirac::KostantReport> last;
  for (const auto& lambda : lambdas) {
    auto rep = dirac::buildLieRep(rs, lambda);
    auto r = dirac::verifyKostantIdentity(rep);
    ok = ok && r.matchesNorm;
    Json readings = Json::array();
    for (const auto& rd : r.readings)
      readings.push_back({{"reading", rd.name},
                          {"constant", rd.constant},
                          {"remainder", rd.remainder ? Json(str(*rd.remainder)) : Json(nullptr)}});
    cases.push_back({{"lambda", toJson(lambda)},
                     {"scalar", toJson(r.scalar)},
                     {"expected", toJson(r.expected)},
                     {"matches", r.matchesNorm},
                     {"readings", readings}});
    scalars.push_back(toJson(r.scalar));
    last = r;
  }
  Json j = {{"command", "verify-kostant"}, {"system", rs->label()}, {"conventions", conventions()}};
  j["rho_norm2"] = toJson(last->rhoNorm2);
  j["adjoint_casimir_trace"] = toJson(last->adjointTrace);
  j["scalars"] = scalars;
  j["cases"] = cases;
  j["status"] = ok ? "pass" : "fail";
  if (!ok) fail(ErrorKind::NotScalar, "D^2 differs from |lambda + rho|^2 for some lambda");
  return {j, "", Format::Json};
}

Result cmdVerifyRelative(const Args& a) {
  auto pair = lie::parsePair(a.pair);
  auto pm = dirac::makePairModel(pair);
  std::vector<Weight> lambdas;
  if (!a.lambda.empty()) lambdas.push_back(characters::parseWeight(a.lambda));
  if (a.lambdaMax >= 0)
    for (const auto& w : dominantBox(*pair.g, a.lambdaMax)) lambdas.push_back(w);
  if (lambdas.empty()) fail(ErrorKind::ConfigurationError, "verify-relative needs --lambda or --lambda-max");
  Json cases = Json::array();
  for (const auto& lambda : lambdas) {
    auto r = dirac::spectralCheckRelative(pm, lambda);
    Json blocks = Json::array();
    for (const auto& b : r.blocks)
      blocks.push_back({{"mu", toJson(b.mu)},
                        {"multiplicity", b.multiplicity},
                        {"scalar", toJson(b.scalar)},
                        {"expected", toJson(b.expected)},
                        {"match", b.match}});
    Json kernel = Json::array();
    for (const auto& k : r.kernel) kernel.push_back(toJson(k));
    cases.push_back({{"lambda", toJson(lambda)}, {"blocks", blocks}, {"kernel", kernel}, {"match", r.allMatch}});
  }
  Json j = {{"command", "verify-relative"}, {"pair", pair.label}, {"conventions", conventions()},
            {"cases", cases},               {"status", "pass"}};
  return {j, "", Format::Json};
}

Result cmdPolarize(const Args& a, const RunConfig& cfg) {
  Json j = {{"command", "polarize"}, {"conventions", conventions()}};
  if (a.sweep > 0) {
    // randomized property sweep over rank <= 2 fibers
    std::mt19937_64 rng(cfg.seed);
    std::uniform_int_distribution<long> coord(-3, 3);
    std::uniform_int_distribution<int> count(0, 3), rankPick(1, 2), windowPick(1, 8);
    long done = 0, strictCases = 0;
    while (done < a.sweep) {
      size_t r = static_cast<size_t>(rankPick(rng));
      auto draw = [&] {
        Weight v;
        for (size_t k = 0; k < r; ++k) v.emplace_back(coord(rng));
        return v;
      };
      Weight alpha = draw(), shift = draw();
      std::vector<Weight> fiber;
      for (int k = count(rng); k > 0; --k) fiber.push_back(draw());
      bool generic = !isZeroVec(alpha);
      for (const auto& f : fiber) generic = generic && sgn(dot(f, alpha)) != 0;
      if (!generic) continue;
      ++done;
      Rational window = windowPick(rng);
      auto series = polarized::polarizedExpand(fiber, alpha, window, r);
      if (!polarized::multiplyBackIsOne(series, fiber))
        fail(ErrorKind::PolarizationViolated, "multiply-back fails for sweep case " + std::to_string(done));
      polarized::vanishingCheck(series, alpha, false);
      if (sgn(dot(shift, alpha)) > 0) {
        ++strictCases;
        polarized::vanishingCheck(polarized::vectorSpaceIndex(fiber, alpha, shift, window, r), alpha, true);
      }
    }
    j["seed"] = cfg.seed;
    j["cases"] = done;
    j["strict_cases"] = strictCases;
    j["status"] = "pass";
    return {j, "", Format::Json};
  }
  Rational window = requireWindow(cfg);
  Weight alpha = characters::parseWeight(a.alpha);
  auto fiber = parseWeightList(a.weights);
  Weight shift = a.shift.empty() ? Weight(alpha.size(), 0) : characters::parseWeight(a.shift);
  ConeSeries series;
  if (!a.input.empty()) {
    auto base = characters::readFormalCharacter(a.input);
    series = polarized::bundleIndex(base, fiber, alpha, shift, window, a.check || a.strict);
  } else {
    series = polarized::vectorSpaceIndex(fiber, alpha, shift, window, alpha.size());
  }
  j["series"] = seriesJson(series);
  if (a.check || a.strict) {
    auto v = polarized::vanishingCheck(series, alpha, a.strict);
    j["check"] = {{"strict", v.strict}, {"polarized", v.polarized}, {"trivial_coefficient", v.trivialCoefficient}};
  }
  std::string text = characters::formatSeries(series);
  if (!a.out.empty()) writeFile(a.out, text);
  j["status"] = "pass";
  return {j, text, Format::Text};
}

Json decompositionJson(const qr::CircleDecomposition& d, const std::string& seriesDir) {
  Json comps = Json::array();
  size_t idx = 0;
  for (const auto& comp : d.components) {
    Json c = {{"alpha", toJson(comp.alpha)},
              {"contains_zero", comp.containsZero},
              {"fixed_points", comp.vertices},
              {"coefficient_at_zero", comp.localSeries.at(Weight{Rational(0)})},
              {"polarizer", toJson(comp.localSeries.polarizer)},
              {"window", toJson(comp.localSeries.window)}};
    if (!seriesDir.empty()) {
      std::filesystem::create_directories(seriesDir);
      auto path = std::filesystem::path(seriesDir) / ("component-" + std::to_string(idx) + ".series");
      writeFile(path, characters::formatSeries(comp.localSeries));
      c["series_file"] = path.filename().string();
    }
    comps.push_back(c);
    ++idx;
  }
  return comps;
}

Result cmdQrToric(const Args& a) {
  auto model = qr::parseToricModel(readFile(a.model), a.model);
  Weight xi = characters::parseWeight(a.xi);
  Rational c = parseRational(a.c);
  Json j = {{"command", "qr-toric"}, {"model", a.model}, {"xi", toJson(xi)}, {"c", toJson(c)}};
  auto r = qr::qrCheckCircle(model, xi, c);
  j["mult0"] = r.mult0;
  j["reduced"] = r.reduced;
  j["zero_component"] = r.zeroComponent;
  j["sum_matches"] = r.sumMatches;
  Json comps = Json::array();
  for (const auto& cc : r.components)
    comps.push_back({{"alpha", toJson(cc.alpha)}, {"coefficient_at_zero", cc.coefficientAtZero}});
  j["components"] = comps;
  j["status"] = "pass";
  j["conventions"] = conventions();
  return {j, "", Format::Json};
}

Result cmdDecompose(const Args& a) {
  auto model = qr::parseToricModel(readFile(a.model), a.model);
  Weight xi = characters::parseWeight(a.xi);
  Rational c = parseRational(a.c);
  auto d = qr::kirwanDecomposeCircle(model, xi, c);
  Json sum = Json::array();
  for (const auto& [k, m] : qr::componentSum(d)) sum.push_back({{"weight", toJson(k)}, {"multiplicity", m}});
  Json j = {{"command", "decompose"},
            {"model", a.model},
            {"xi", toJson(xi)},
            {"c", toJson(c)},
            {"range", {toJson(d.low), toJson(d.high)}},
            {"components", decompositionJson(d, a.seriesDir)},
            {"sum", sum},
            {"conventions", conventions()}};
  return {j, "", Format::Json};
}

Result cmdQrCoadjoint(const Args& a) {
  auto rs = lie::resolveSystem(a.type);
  Weight lambda = characters::parseWeight(a.lambda);
  auto q = qr::coadjointQuantization({rs, lambda});
  Json j = {{"command", "qr-coadjoint"}, {"system", rs->label()}, {"lambda", toJson(lambda)},
            {"quantization", characterJson(q)}};
  if (!a.mu.empty()) {
    Weight mu = characters::parseWeight(a.mu);
    auto r = qr::productQRCheck(rs, lambda, mu);
    j["product"] = {{"mu", toJson(mu)}, {"quantized", r.quantized}, {"reduced", r.reduced}, {"equal", r.equal}};
  }
  j["status"] = "pass";
  j["conventions"] = conventions();
  return {j, "", Format::Json};
}

Result cmdCache(const Args& a, const RunConfig& cfg) {
  auto cache = openCache(cfg);
  if (a.action == "clear") {
    cache.clear();
  } else if (a.action != "stats") {
    fail(ErrorKind::ConfigurationError, "cache action must be stats or clear");
  }
  auto s = cache.stats();
  Json j = {{"command", "cache"},
            {"action", a.action},
            {"directory", cache.directory().string()},
            {"entries", s.entries},
            {"bytes", s.bytes}};
  return {j, "", Format::Json};
}

void emit(const Result& r, const RunConfig& cfg) {
  Format f = cfg.format.value_or(r.preferred);
  std::string payload = f == Format::Json || r.text.empty() ? r.report.dump(2) + "\n" : r.text;
  if (cfg.output.empty()) {
    std::cout << payload;
  } else {
    writeFile(cfg.output, payload);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact representation-theory toolkit: characters, cubic Dirac operators, Dirac induction, "
               "polarized indices and quantization checks"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  RunConfig cfg;
  Args a;
  std::string format, window;
  app.add_option("--format", format, "json or text (default depends on the subcommand)")->check(
      CLI::IsMember({"json", "text"}));
  app.add_option("--cache", cfg.cacheDir, "character cache directory (default $DIRACFORGE_CACHE or .diracforge-cache)");
  app.add_option("--normalization", cfg.normalization, "invariant form normalization tag");
  app.add_option("--seed", cfg.seed, "seed for randomized sweeps");
  app.add_option("--output,-o", cfg.output, "write the report to a file");
  app.add_option("--window", window, "window bound (positive rational)");

  auto* rootSystem = app.add_subcommand("root-system", "roots, rho and Weyl group order");
  rootSystem->add_option("--type", a.type, "system label, e.g. A2 or A1xT1")->required();
  auto* orbit = app.add_subcommand("orbit", "Weyl orbit of a weight");
  orbit->add_option("--type", a.type)->required();
  orbit->add_option("--weight", a.weight)->required();
  auto* chr = app.add_subcommand("char", "irreducible character");
  chr->add_option("--type", a.type)->required();
  chr->add_option("--weight", a.weight, "highest weight")->required();
  chr->add_option("--basis", a.basis)->check(CLI::IsMember({"weight", "irreducible"}));
  chr->add_option("--out", a.out, "also write the character file here");
  auto* tensor = app.add_subcommand("tensor", "decompose V_lambda (x) V_mu");
  tensor->add_option("--type", a.type)->required();
  tensor->add_option("--lambda", a.lambda)->required();
  tensor->add_option("--mu", a.mu)->required();
  auto* restrict = app.add_subcommand("restrict", "restrict V_lambda to an equal-rank subgroup");
  restrict->add_option("--pair", a.pair, "G:H, e.g. A2:A1xT1 or A2:T")->required();
  restrict->add_option("--weight", a.weight)->required();
  auto* induct = app.add_subcommand("induct", "Dirac induction from H to G");
  induct->add_option("--pair", a.pair)->required();
  induct->add_option("--weight", a.weight, "dominant H weight");
  induct->add_option("--input", a.input, "character or series file over H");
  induct->add_option("--out", a.out);
  auto* kostant = app.add_subcommand("verify-kostant", "D^2 against |lambda + rho|^2");
  kostant->add_option("--type", a.type)->required();
  kostant->add_option("--lambda", a.lambda);
  kostant->add_option("--lambda-max", a.lambdaMax, "sweep dominant weights with coordinates <= N");
  auto* relative = app.add_subcommand("verify-relative", "relative operator block scalars");
  relative->add_option("--pair", a.pair)->required();
  relative->add_option("--lambda", a.lambda);
  relative->add_option("--lambda-max", a.lambdaMax);
  auto* polarize = app.add_subcommand("polarize", "polarized index of a vector space or product bundle");
  polarize->add_option("--weights", a.weights, "fiber weights separated by ';', e.g. \"1,0;0,-1\"");
  polarize->add_option("--alpha", a.alpha);
  polarize->add_option("--shift", a.shift);
  polarize->add_option("--base", a.input, "base character file (product bundle)");
  polarize->add_option("--out", a.out);
  polarize->add_flag("--check", a.check, "assert polarization");
  polarize->add_flag("--strict", a.strict, "assert strict polarization and a zero trivial coefficient");
  polarize->add_option("--sweep", a.sweep, "run N randomized property cases instead");
  auto* qrToric = app.add_subcommand("qr-toric", "quantization versus reduction for a circle in a toric model");
  qrToric->add_option("--model", a.model)->required();
  qrToric->add_option("--xi", a.xi)->required();
  qrToric->add_option("--c", a.c, "level of the circle moment map");
  auto* qrCoadjoint = app.add_subcommand("qr-coadjoint", "coadjoint orbit quantization and product check");
  qrCoadjoint->add_option("--type", a.type)->required();
  qrCoadjoint->add_option("--lambda", a.lambda)->required();
  qrCoadjoint->add_option("--mu", a.mu);
  auto* decompose = app.add_subcommand("decompose", "circle components of a toric model");
  decompose->add_option("--model", a.model)->required();
  decompose->add_option("--xi", a.xi)->required();
  decompose->add_option("--c", a.c);
  decompose->add_option("--series-dir", a.seriesDir, "write one series file per component");
  auto* cache = app.add_subcommand("cache", "character cache statistics or clearing");
  cache->add_option("action", a.action, "stats or clear");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cfg.normalization != kNormalization)
      fail(ErrorKind::ConfigurationError, "normalization tag must be " + std::string(kNormalization));
    if (!format.empty()) cfg.format = format == "json" ? Format::Json : Format::Text;
    if (!window.empty()) cfg.window = parseRational(window);
    cfg.subcommand = app.get_subcommands().front()->get_name();
    const std::string& s = cfg.subcommand;
    Result r;
    if (s == "root-system") r = cmdRootSystem(a);
    else if (s == "orbit") r = cmdOrbit(a);
    else if (s == "char") r = cmdChar(a, cfg);
    else if (s == "tensor") r = cmdTensor(a, cfg);
    else if (s == "restrict") r = cmdRestrict(a, cfg);
    else if (s == "induct") r = cmdInduct(a);
    else if (s == "verify-kostant") r = cmdVerifyKostant(a);
    else if (s == "verify-relative") r = cmdVerifyRelative(a);
    else if (s == "polarize") r = cmdPolarize(a, cfg);
    else if (s == "qr-toric") r = cmdQrToric(a);
    else if (s == "qr-coadjoint") r = cmdQrCoadjoint(a);
    else if (s == "decompose") r = cmdDecompose(a);
    else r = cmdCache(a, cfg);
    emit(r, cfg);
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (!isVerificationFailure(e.kind())) return 2;
    // failures still produce a report, with the message as the witness
    Json j = {{"command", cfg.subcommand},
              {"status", "fail"},
              {"error", std::string(str(e.kind()))},
              {"witness", e.what()},
              {"conventions", conventions()}};
    try {
      emit({j, "", Format::Json}, cfg);
    } catch (const Error&) {
      std::cout << j.dump(2) << "\n";
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
