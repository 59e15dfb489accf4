#include "diracforge/dirac/lie_model.hpp"

#include "diracforge/characters/character.hpp"
#include "diracforge/errors.hpp"

#include <map>
#include <mutex>
#include <unordered_map>

namespace diracforge::dirac {

namespace {

constexpr size_t npos = static_cast<size_t>(-1);

Scalar rationalSqrt(const Rational& q) { return Scalar::sqrt(q); }

SMatrix diagonalOf(const std::vector<Scalar>& d) {
  SMatrix m(d.size(), d.size());
  for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

// tr(a b) without forming the product.
Scalar traceOfProduct(const SMatrix& a, const SMatrix& b) {
  Scalar t = 0;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k)
      if (!a(i, k).isZero() && !b(k, i).isZero()) t += a(i, k) * b(k, i);
  return t;
}

Rational requireRational(const Scalar& s, const char* what) {
  require(s.isRational(), ErrorKind::InvariantViolated, std::string(what) + " is not rational: " + str(s));
  return s.toRational();
}

}  // namespace

HighestWeightModule buildHighestWeightModule(const lie::RootSystem& rs, const Weight& lambda, size_t maxDim) {
  size_t r = rs.semisimpleRank();
  require(r == rs.rank(), ErrorKind::Unsupported, "highest-weight modules are built per semisimple factor");
  auto rsPtr = std::shared_ptr<const lie::RootSystem>(&rs, [](const lie::RootSystem*) {});
  Integer weyl = characters::weylDimension(rsPtr, lambda);
  require(weyl <= maxDim, ErrorKind::TooLarge,
          "dim V_" + str(lambda) + " = " + weyl.get_str() + " exceeds " + std::to_string(maxDim));
  size_t total = weyl.get_ui();

  // Orthogonal (unnormalized) basis with rational norms and rational e/f.
  std::vector<Weight> weights;
  std::vector<Rational> norm;
  RMatrix e0(total, total);
  std::vector<RMatrix> e(r, e0), f(r, e0);
  std::map<Weight, std::vector<size_t>> space;

  weights.push_back(lambda);
  norm.push_back(1);
  space[lambda] = {0};
  std::vector<Weight> level{lambda};

  auto coeffs = [&](const RMatrix& m, size_t col) {
    std::vector<std::pair<size_t, Rational>> out;
    for (size_t i = 0; i < weights.size(); ++i)
      if (sgn(m(i, col)) != 0) out.emplace_back(i, m(i, col));
    return out;
  };

  while (!level.empty()) {
    std::map<Weight, bool> nextSet;
    for (const auto& mu : level)
      for (size_t k = 0; k < r; ++k) nextSet[sub(mu, rs.simpleRoots()[k])] = true;
    std::vector<Weight> next;
    for (const auto& [mu, unused] : nextSet) {
      struct Candidate {
        size_t k, u;
      };
      std::vector<Candidate> cands;
      for (size_t k = 0; k < r; ++k) {
        auto it = space.find(add(mu, rs.simpleRoots()[k]));
        if (it == space.end()) continue;
        for (size_t u : it->second) cands.push_back({k, u});
      }
      if (cands.empty()) continue;
      size_t nc = cands.size();
      // Gram of candidates: <f_k u, f_l w> = <u, e_k f_l w>, e_k f_l = f_l e_k + delta_kl h_k
      RMatrix gram(nc, nc);
      for (size_t a = 0; a < nc; ++a)
        for (size_t b = 0; b < nc; ++b) {
          size_t k = cands[a].k, l = cands[b].k, u = cands[a].u, w = cands[b].u;
          Rational val = 0;
          for (const auto& [x, cx] : coeffs(e[k], w)) val += cx * f[l](u, x);
          if (k == l && u == w) val += weights[w][k];
          gram(a, b) = val * norm[u];
        }
      // Gram-Schmidt in the candidate metric.
      std::vector<std::vector<Rational>> basis;  // rows of P
      std::vector<Rational> bnorm;
      auto pair = [&](const std::vector<Rational>& p, size_t c) {
        Rational s = 0;
        for (size_t j = 0; j < nc; ++j)
          if (sgn(p[j]) != 0) s += p[j] * gram(c, j);
        return s;
      };
      for (size_t c = 0; c < nc && basis.size() < total; ++c) {
        std::vector<Rational> p(nc, 0);
        p[c] = 1;
        for (size_t m = 0; m < basis.size(); ++m) {
          Rational proj = pair(basis[m], c) / bnorm[m];
          for (size_t j = 0; j < nc; ++j) p[j] -= proj * basis[m][j];
        }
        Rational nn = 0;
        for (size_t j = 0; j < nc; ++j)
          if (sgn(p[j]) != 0) nn += p[j] * pair(p, j);
        if (sgn(nn) == 0) continue;
        require(sgn(nn) > 0, ErrorKind::InvariantViolated, "contravariant form is not positive");
        basis.push_back(std::move(p));
        bnorm.push_back(nn);
      }
      if (basis.empty()) continue;
      std::vector<size_t> ids;
      for (size_t m = 0; m < basis.size(); ++m) {
        require(weights.size() < total, ErrorKind::InvariantViolated, "module exceeds the Weyl dimension");
        ids.push_back(weights.size());
        weights.push_back(mu);
        norm.push_back(bnorm[m]);
      }
      space[mu] = ids;
      next.push_back(mu);
      // f_k u = sum_m <c, b_m>/N_m b_m
      for (size_t c = 0; c < nc; ++c)
        for (size_t m = 0; m < basis.size(); ++m) {
          Rational coef = pair(basis[m], c) / bnorm[m];
          if (sgn(coef) != 0) f[cands[c].k](ids[m], cands[c].u) = coef;
        }
      // e_k is the contravariant adjoint: e_{y,x} = f_{x,y} N_x / N_y
      for (size_t k = 0; k < r; ++k) {
        auto it = space.find(add(mu, rs.simpleRoots()[k]));
        if (it == space.end()) continue;
        for (size_t x : ids)
          for (size_t y : it->second)
            if (sgn(f[k](x, y)) != 0) e[k](y, x) = f[k](x, y) * norm[x] / norm[y];
      }
    }
    level = std::move(next);
  }
  require(weights.size() == total, ErrorKind::InvariantViolated,
          "constructed " + std::to_string(weights.size()) + " vectors, expected " + std::to_string(total));

  HighestWeightModule out;
  out.weights = weights;
  for (size_t k = 0; k < r; ++k) {
    SMatrix ek(total, total), fk(total, total);
    for (size_t y = 0; y < total; ++y)
      for (size_t x = 0; x < total; ++x)
        if (sgn(e[k](y, x)) != 0) {
          Scalar v = Scalar(e[k](y, x)) * rationalSqrt(norm[y] / norm[x]);
          ek(y, x) = v;
          fk(x, y) = v;
        }
    out.e.push_back(std::move(ek));
    out.f.push_back(std::move(fk));
  }
  return out;
}

namespace {

// Root vectors of a simple factor in a module, following the recipe.
std::vector<SMatrix> rootVectors(const LieAlgebraModel::FactorData& fd, const HighestWeightModule& mod) {
  std::vector<SMatrix> out;
  for (const auto& [i, lower] : fd.rootRecipe)
    out.push_back(lower == npos ? mod.e[i] : commutator(mod.e[i], out[lower]));
  return out;
}

// Matrices of the factor's local basis (root pairs in local order, then Cartan).
std::vector<SMatrix> factorBasisMatrices(const LieAlgebraModel::FactorData& fd, const HighestWeightModule& mod) {
  std::vector<SMatrix> out;
  auto roots = rootVectors(fd, mod);
  for (size_t b = 0; b < roots.size(); ++b) {
    Scalar inv = rationalSqrt(fd.rootNorms[b]).inverse();
    SMatrix dag = roots[b].adjoint();
    out.push_back(inv * (roots[b] - dag));
    out.push_back((Scalar::i() * inv) * (roots[b] + dag));
  }
  size_t r = fd.local->rank();
  for (size_t a = 0; a < r; ++a) {
    std::vector<Scalar> diag(mod.dim());
    Scalar scale = Scalar::i() * rationalSqrt(fd.cartanNorms[a]).inverse();
    for (size_t v = 0; v < mod.dim(); ++v) {
      Rational s = 0;
      for (size_t j = 0; j < r; ++j) s += fd.cartanCombination(a, j) * mod.weights[v][j];
      diag[v] = scale * Scalar(s);
    }
    out.push_back(diagonalOf(diag));
  }
  return out;
}

std::shared_ptr<LieAlgebraModel> buildModel(const RootSystemPtr& rs) {
  auto reparsed = lie::RootSystem::parse(rs->label());
  require(reparsed->gram() == rs->gram() && reparsed->simpleRoots() == rs->simpleRoots(), ErrorKind::Unsupported,
          "Lie models are built for product systems such as A2xT1, not for " + rs->label());
  auto model = std::make_shared<LieAlgebraModel>();
  model->system = rs;
  size_t npairs = rs->positiveRoots().size();
  model->dim = 2 * npairs + rs->rank();
  size_t dim = model->dim;
  model->f = clifford::StructureConstants(dim);
  model->coordinates = SMatrix(rs->rank(), dim);
  for (size_t k = 0; k < npairs; ++k) model->rootPairs.push_back({k, 2 * k, 2 * k + 1});
  for (size_t a = 2 * npairs; a < dim; ++a) model->cartan.push_back(a);

  size_t offset = 0, cartanNext = 2 * npairs;
  for (const auto& factor : rs->factors()) {
    LieAlgebraModel::FactorData fd;
    fd.factor = factor;
    fd.local = lie::RootSystem::build(factor.family, factor.rank);
    fd.coordinateOffset = offset;
    size_t r = static_cast<size_t>(factor.rank);
    for (size_t a = 0; a < r; ++a) fd.cartanIndices.push_back(cartanNext++);

    if (factor.family == lie::Family::Torus) {
      for (size_t j = 0; j < r; ++j) model->coordinates(offset + j, fd.cartanIndices[j]) = 1;
      model->factors.push_back(std::move(fd));
      offset += r;
      continue;
    }

    const auto& local = *fd.local;
    // global root pairs belonging to this factor
    for (size_t k = 0; k < npairs; ++k) {
      const Weight& beta = rs->positiveRoots()[k];
      bool inside = true;
      for (size_t j = 0; j < beta.size(); ++j)
        if ((j < offset || j >= offset + r) && sgn(beta[j]) != 0) inside = false;
      if (!inside) continue;
      Weight localBeta(beta.begin() + static_cast<long>(offset), beta.begin() + static_cast<long>(offset + r));
      auto [idx, sign] = local.findRoot(localBeta);
      require(sign == 1, ErrorKind::InvariantViolated, "factor root lookup failed");
      fd.pairIndices.push_back(k);
      fd.localRootOfPair.push_back(idx);
    }
    // recipe E_beta = [E_i, E_{beta - alpha_i}] with the smallest i
    const auto& coeffs = local.positiveRootCoefficients();
    for (size_t b = 0; b < local.positiveRoots().size(); ++b) {
      long height = 0;
      for (long c : coeffs[b]) height += c;
      if (height == 1) {
        size_t i = 0;
        while (coeffs[b][i] == 0) ++i;
        fd.rootRecipe.emplace_back(i, npos);
        continue;
      }
      bool done = false;
      for (size_t i = 0; i < r && !done; ++i) {
        auto [lower, sign] = local.findRoot(sub(local.positiveRoots()[b], local.simpleRoots()[i]));
        if (sign == 1) {
          require(lower < b, ErrorKind::InvariantViolated, "root order is not by height");
          fd.rootRecipe.emplace_back(i, lower);
          done = true;
        }
      }
      require(done, ErrorKind::InvariantViolated, "root has no lower neighbour");
    }

    auto faithful = buildHighestWeightModule(local, local.fundamentalWeight(0), 64);
    size_t longNode = 0;
    for (size_t i = 0; i < r; ++i)
      if (local.norm2(local.simpleRoots()[i]) == 2) longNode = i;
    Rational h2 = 0;
    for (const auto& wt : faithful.weights) h2 += wt[longNode] * wt[longNode];
    Rational kappa = 2 / h2;

    auto roots = rootVectors(fd, faithful);
    for (const auto& ev : roots)
      fd.rootNorms.push_back(2 * kappa * requireRational(traceOfProduct(ev, ev.adjoint()), "root vector norm"));

    // Gram-Schmidt of i h_j with B(i h_j, i h_k) = (alpha_j^vee, alpha_k^vee)
    RMatrix coroot(r, r);
    for (size_t j = 0; j < r; ++j)
      for (size_t k = 0; k < r; ++k) {
        const auto &aj = local.simpleRoots()[j], &ak = local.simpleRoots()[k];
        coroot(j, k) = 4 * local.inner(aj, ak) / (local.norm2(aj) * local.norm2(ak));
      }
    RMatrix p = RMatrix::identity(r);
    for (size_t a = 0; a < r; ++a) {
      for (size_t m = 0; m < a; ++m) {
        // <e_a, z_m> = sum_k coroot(a,k) p(m,k)
        Rational num = 0;
        for (size_t k = 0; k < r; ++k) num += coroot(a, k) * p(m, k);
        Rational c = num / fd.cartanNorms[m];
        for (size_t k = 0; k < r; ++k) p(a, k) -= c * p(m, k);
      }
      Rational d = 0;
      for (size_t j = 0; j < r; ++j)
        for (size_t k = 0; k < r; ++k) d += p(a, j) * coroot(j, k) * p(a, k);
      fd.cartanNorms.push_back(d);
    }
    fd.cartanCombination = p;
    RMatrix pinv = inverse(p);
    for (size_t j = 0; j < r; ++j)
      for (size_t a = 0; a < r; ++a)
        if (sgn(pinv(j, a)) != 0)
          model->coordinates(offset + j, fd.cartanIndices[a]) = Scalar(pinv(j, a)) * rationalSqrt(fd.cartanNorms[a]);

    // structure constants from the faithful module, local order
    auto xs = factorBasisMatrices(fd, faithful);
    size_t dl = xs.size();
    std::vector<size_t> toGlobal(dl);
    for (size_t q = 0; q < fd.pairIndices.size(); ++q) {
      size_t b = fd.localRootOfPair[q];
      toGlobal[2 * b] = model->rootPairs[fd.pairIndices[q]].x;
      toGlobal[2 * b + 1] = model->rootPairs[fd.pairIndices[q]].y;
    }
    for (size_t a = 0; a < r; ++a) toGlobal[2 * local.positiveRoots().size() + a] = fd.cartanIndices[a];
    Scalar minusKappa = Scalar(Rational(-kappa));
    for (size_t a = 0; a < dl; ++a)
      for (size_t b = 0; b < dl; ++b) {
        Scalar g = minusKappa * traceOfProduct(xs[a], xs[b]);
        require(g == Scalar(a == b ? 1 : 0), ErrorKind::InvariantViolated, "model basis is not orthonormal");
      }
    for (size_t a = 0; a < dl; ++a)
      for (size_t b = a + 1; b < dl; ++b) {
        SMatrix br = commutator(xs[a], xs[b]);
        if (br.isZero()) continue;
        for (size_t c = 0; c < dl; ++c) {
          Scalar v = minusKappa * traceOfProduct(br, xs[c]);
          if (v.isZero()) continue;
          model->f(toGlobal[a], toGlobal[b], toGlobal[c]) = v;
          model->f(toGlobal[b], toGlobal[a], toGlobal[c]) = -v;
        }
      }
    model->factors.push_back(std::move(fd));
    offset += r;
  }
  clifford::validateStructureConstants(model->f);
  return model;
}

}  // namespace

std::shared_ptr<const LieAlgebraModel> LieAlgebraModel::of(const RootSystemPtr& rs) {
  static std::mutex mutex;
  static std::unordered_map<std::string, std::shared_ptr<const LieAlgebraModel>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(rs->label());
    if (it != cache.end()) return it->second;
  }
  auto model = buildModel(rs);
  std::lock_guard lock(mutex);
  return cache.emplace(rs->label(), model).first->second;
}

std::vector<Weight> LieAlgebraModel::weightsOf(const std::vector<SMatrix>& rho) const {
  require(rho.size() == dim, ErrorKind::DimensionMismatch, "representation has the wrong number of matrices");
  size_t n = rho.empty() ? 0 : rho[0].rows();
  std::vector<Weight> out(n, Weight(system->rank(), 0));
  for (size_t j = 0; j < system->rank(); ++j) {
    SMatrix op(n, n);
    for (size_t a : cartan)
      if (!coordinates(j, a).isZero()) op += coordinates(j, a) * rho[a];
    for (size_t u = 0; u < n; ++u)
      for (size_t v = 0; v < n; ++v) {
        if (u == v) {
          Scalar val = Scalar(-1) * Scalar::i() * op(u, u);
          out[u][j] = requireRational(val, "weight coordinate");
        } else {
          require(op(u, v).isZero(), ErrorKind::InvariantViolated, "Cartan action is not diagonal");
        }
      }
  }
  return out;
}

LieRep buildLieRep(const RootSystemPtr& rs, const Weight& lambda, size_t maxDim) {
  rs->check(lambda);
  require(rs->isAlgebraicallyIntegral(lambda), ErrorKind::NotIntegral, str(lambda) + " is not integral");
  require(rs->isDominant(lambda), ErrorKind::NotDominant, str(lambda) + " is not dominant");
  Integer total = characters::weylDimension(rs, lambda);
  require(total <= maxDim, ErrorKind::TooLarge,
          "dim V_" + str(lambda) + " = " + total.get_str() + " exceeds " + std::to_string(maxDim));
  auto model = LieAlgebraModel::of(rs);
  LieRep rep;
  rep.algebra = model;
  rep.highest = lambda;
  rep.dim = total.get_ui();

  // factor modules and their local basis matrices
  std::vector<std::vector<SMatrix>> local;
  std::vector<std::vector<Weight>> localWeights;
  for (const auto& fd : model->factors) {
    size_t r = static_cast<size_t>(fd.factor.rank);
    Weight block(lambda.begin() + static_cast<long>(fd.coordinateOffset),
                 lambda.begin() + static_cast<long>(fd.coordinateOffset + r));
    if (fd.factor.family == lie::Family::Torus) {
      std::vector<SMatrix> ms;
      for (size_t j = 0; j < r; ++j) {
        SMatrix m(1, 1);
        m(0, 0) = Scalar::i() * Scalar(block[j]);
        ms.push_back(m);
      }
      local.push_back(ms);
      localWeights.push_back({block});
    } else {
      auto mod = buildHighestWeightModule(*fd.local, block, maxDim);
      local.push_back(factorBasisMatrices(fd, mod));
      localWeights.push_back(mod.weights);
    }
  }

  std::vector<size_t> dims;
  for (const auto& w : localWeights) dims.push_back(w.size());
  rep.pi.assign(model->dim, SMatrix());
  for (size_t fi = 0; fi < model->factors.size(); ++fi) {
    const auto& fd = model->factors[fi];
    size_t before = 1, after = 1;
    for (size_t g = 0; g < fi; ++g) before *= dims[g];
    for (size_t g = fi + 1; g < dims.size(); ++g) after *= dims[g];
    auto embed = [&](const SMatrix& m) {
      return kron(kron(SMatrix::identity(before), m), SMatrix::identity(after));
    };
    if (fd.factor.family == lie::Family::Torus) {
      for (size_t j = 0; j < fd.cartanIndices.size(); ++j) rep.pi[fd.cartanIndices[j]] = embed(local[fi][j]);
      continue;
    }
    size_t nroots = fd.local->positiveRoots().size();
    for (size_t q = 0; q < fd.pairIndices.size(); ++q) {
      size_t b = fd.localRootOfPair[q];
      const auto& pr = model->rootPairs[fd.pairIndices[q]];
      rep.pi[pr.x] = embed(local[fi][2 * b]);
      rep.pi[pr.y] = embed(local[fi][2 * b + 1]);
    }
    for (size_t a = 0; a < fd.cartanIndices.size(); ++a) rep.pi[fd.cartanIndices[a]] = embed(local[fi][2 * nroots + a]);
  }
  // weights in tensor order
  std::vector<Weight> ws{Weight{}};
  for (const auto& lw : localWeights) {
    std::vector<Weight> next;
    for (const auto& w : ws)
      for (const auto& x : lw) {
        Weight y = w;
        y.insert(y.end(), x.begin(), x.end());
        next.push_back(y);
      }
    ws = std::move(next);
  }
  rep.weights = ws;
  return rep;
}

bool isLieRepresentation(const LieRep& rep) {
  const auto& f = rep.algebra->f;
  size_t d = rep.algebra->dim;
  for (size_t a = 0; a < d; ++a)
    if (!(rep.pi[a].adjoint() == -rep.pi[a])) return false;
  for (size_t a = 0; a < d; ++a)
    for (size_t b = a + 1; b < d; ++b) {
      SMatrix rhs(rep.dim, rep.dim);
      for (size_t c = 0; c < d; ++c)
        if (!f(a, b, c).isZero()) rhs += f(a, b, c) * rep.pi[c];
      if (!(commutator(rep.pi[a], rep.pi[b]) == rhs)) return false;
    }
  return true;
}

}  // namespace diracforge::dirac
