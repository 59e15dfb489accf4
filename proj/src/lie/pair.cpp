#include "diracforge/lie/pair.hpp"

#include "diracforge/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace diracforge::lie {

namespace {

// Connected components of the Dynkin diagram restricted to `nodes`, each
// classified by its Cartan submatrix.
std::vector<Factor> classifyComponents(const RMatrix& cartan, const std::vector<size_t>& nodes) {
  std::vector<Factor> out;
  std::vector<bool> used(nodes.size(), false);
  for (size_t start = 0; start < nodes.size(); ++start) {
    if (used[start]) continue;
    std::vector<size_t> comp{start};
    used[start] = true;
    for (size_t k = 0; k < comp.size(); ++k)
      for (size_t j = 0; j < nodes.size(); ++j)
        if (!used[j] && sgn(cartan(nodes[comp[k]], nodes[j])) != 0) {
          used[j] = true;
          comp.push_back(j);
        }
    bool doubleBond = false, branch = false;
    for (size_t a : comp) {
      int degree = 0;
      for (size_t b : comp) {
        if (a == b) continue;
        Rational prod = cartan(nodes[a], nodes[b]) * cartan(nodes[b], nodes[a]);
        if (sgn(prod) != 0) ++degree;
        if (prod == 2) doubleBond = true;
      }
      if (degree > 2) branch = true;
    }
    int r = static_cast<int>(comp.size());
    Family fam = branch ? Family::D : doubleBond ? Family::B : Family::A;
    out.push_back({fam, r});
  }
  return out;
}

std::string factorsLabel(const std::vector<Factor>& fs) {
  std::string s;
  for (const auto& f : fs) {
    if (!s.empty()) s += "x";
    s += (f.family == Family::Torus ? std::string("T") : std::string(familyName(f.family))) + std::to_string(f.rank);
  }
  return s;
}

std::vector<Factor> hFactors(const RootSystem& g, const std::vector<size_t>& removed) {
  std::vector<size_t> kept;
  for (size_t i = 0; i < g.semisimpleRank(); ++i)
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) kept.push_back(i);
  auto fs = classifyComponents(g.cartanMatrix(), kept);
  size_t torus = removed.size();
  for (size_t j = 0; j < g.rank(); ++j)
    if (g.isTorusCoordinate(j)) ++torus;
  if (torus) fs.push_back({Family::Torus, static_cast<int>(torus)});
  return fs;
}

}  // namespace

Weight EqualRankPair::mapToH(const Weight& wG) const {
  g->check(wG);
  return toH.apply(wG);
}

Weight EqualRankPair::mapToG(const Weight& wH) const {
  h->check(wH);
  return toG.apply(wH);
}

bool EqualRankPair::isHRoot(size_t gRootIndex) const {
  return std::find(hRootInG.begin(), hRootInG.end(), gRootIndex) != hRootInG.end();
}

std::vector<Weight> EqualRankPair::pWeights() const {
  std::vector<Weight> out;
  for (size_t k : pRootsInG) {
    Weight w = mapToH(g->positiveRoots()[k]);
    out.push_back(w);
    out.push_back(scale(Rational(-1), w));
  }
  return out;
}

EqualRankPair makeLeviPair(RootSystemPtr g, std::vector<size_t> removed) {
  std::sort(removed.begin(), removed.end());
  removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
  size_t s = g->semisimpleRank(), n = g->rank();
  for (size_t k : removed)
    require(k < s, ErrorKind::IncompatiblePair, "node " + std::to_string(k + 1) + " does not exist in " + g->label());
  std::vector<size_t> kept;
  for (size_t i = 0; i < s; ++i)
    if (!std::binary_search(removed.begin(), removed.end(), i)) kept.push_back(i);

  RMatrix m(n, n);
  size_t row = 0;
  for (size_t i : kept) m(row++, g->simpleCoordinate(i)) = 1;
  if (!removed.empty()) {
    std::vector<size_t> idxS, all(n);
    for (size_t k : removed) idxS.push_back(g->simpleCoordinate(k));
    for (size_t j = 0; j < n; ++j) all[j] = j;
    // coefficients of the projection onto span{omega_k : k removed}
    RMatrix proj = solve(g->gram().submatrix(idxS, idxS), g->gram().submatrix(idxS, all));
    for (size_t r = 0; r < removed.size(); ++r) {
      RVec rowVec(n);
      for (size_t j = 0; j < n; ++j) rowVec[j] = proj(r, j);
      Integer l = lcmOfDenominators(rowVec);
      for (size_t j = 0; j < n; ++j) m(row, j) = rowVec[j] * l;
      ++row;
    }
  }
  for (size_t j = 0; j < n; ++j)
    if (g->isTorusCoordinate(j)) m(row++, j) = 1;

  EqualRankPair pair;
  pair.g = g;
  pair.removedNodes = removed;
  pair.toH = m;
  pair.toG = inverse(m);

  std::vector<Weight> simple;
  std::vector<size_t> coroot;
  for (size_t k = 0; k < kept.size(); ++k) {
    simple.push_back(m.apply(g->simpleRoots()[kept[k]]));
    coroot.push_back(k);
  }
  RMatrix gramH = pair.toG.transpose() * g->gram() * pair.toG;
  RMatrix latticeH = m * g->lattice();
  auto factors = hFactors(*g, removed);
  std::string shortLabel = factorsLabel(factors);
  std::string removedText;
  for (size_t k : removed) removedText += (removedText.empty() ? "" : ",") + std::to_string(k + 1);
  std::string hLabel = removed.empty() ? g->label() : shortLabel + "<" + g->label() + ":" + removedText + ">";
  pair.h = std::make_shared<RootSystem>(hLabel, factors, simple, coroot, gramH, latticeH);
  pair.label = g->label() + ":" + (removed.size() == s && s > 0 && n == s ? std::string("T") : shortLabel);

  for (const auto& a : pair.h->positiveRoots()) {
    auto [idx, sign] = g->findRoot(pair.mapToG(a));
    require(sign == 1, ErrorKind::InvariantViolated, "H root is not a positive G root");
    pair.hRootInG.push_back(idx);
  }
  for (size_t k = 0; k < g->positiveRoots().size(); ++k)
    if (!pair.isHRoot(k)) pair.pRootsInG.push_back(k);
  return pair;
}

EqualRankPair parsePair(std::string_view spec) {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    fail(ErrorKind::ParseError, "pair must look like G:H, got '" + std::string(spec) + "'");
  auto g = RootSystem::parse(spec.substr(0, colon));
  std::string right(spec.substr(colon + 1));
  size_t s = g->semisimpleRank();
  if (right == "T") {
    std::vector<size_t> all(s);
    for (size_t i = 0; i < s; ++i) all[i] = i;
    return makeLeviPair(g, all);
  }
  if (right == g->label()) return makeLeviPair(g, {});
  if (right.rfind("levi=", 0) == 0) {
    std::vector<size_t> nodes;
    std::stringstream ss(right.substr(5));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      long k = toLong(parseRational(tok));
      if (k < 1) fail(ErrorKind::ParseError, "levi node indices are one-based");
      nodes.push_back(static_cast<size_t>(k - 1));
    }
    return makeLeviPair(g, nodes);
  }
  // match by factor type; prefer keeping the lowest-numbered nodes
  std::vector<size_t> best;
  bool found = false;
  std::vector<size_t> bestKept;
  for (unsigned mask = 0; mask < (1u << s); ++mask) {
    std::vector<size_t> removed, kept;
    for (size_t i = 0; i < s; ++i) ((mask >> i) & 1u ? removed : kept).push_back(i);
    if (factorsLabel(hFactors(*g, removed)) != right) continue;
    if (!found || kept < bestKept) {
      found = true;
      best = removed;
      bestKept = kept;
    }
  }
  if (!found) fail(ErrorKind::IncompatiblePair, "no equal-rank subgroup of type " + right + " in " + g->label());
  return makeLeviPair(g, best);
}

RootSystemPtr resolveSystem(std::string_view label) {
  auto open = label.find('<');
  if (open == std::string_view::npos) return RootSystem::parse(label);
  auto close = label.rfind('>');
  auto colon = label.rfind(':');
  if (close != label.size() - 1 || colon == std::string_view::npos || colon < open)
    fail(ErrorKind::ParseError, "malformed subgroup label '" + std::string(label) + "'");
  std::string g(label.substr(open + 1, colon - open - 1));
  std::string nodes(label.substr(colon + 1, close - colon - 1));
  auto h = parsePair(g + ":levi=" + nodes).h;
  if (h->label() != label) fail(ErrorKind::ParseError, "label '" + std::string(label) + "' does not match " + h->label());
  return h;
}

}  // namespace diracforge::lie
