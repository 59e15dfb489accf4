#include "diracforge/clifford/clifford.hpp"

#include "diracforge/errors.hpp"

#include <algorithm>
#include <functional>

namespace diracforge::clifford {

namespace {

SMatrix pauli(int which) {
  SMatrix m(2, 2);
  switch (which) {
    case 1: m(0, 1) = 1; m(1, 0) = 1; break;
    case 2: m(0, 1) = -Scalar::i(); m(1, 0) = Scalar::i(); break;
    default: m(0, 0) = 1; m(1, 1) = -1; break;
  }
  return m;
}

SMatrix krons(const std::vector<SMatrix>& factors) {
  SMatrix out = SMatrix::identity(1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

}  // namespace

SMatrix CliffordModule::of(const std::vector<Scalar>& coefficients) const {
  require(coefficients.size() == n, ErrorKind::DimensionMismatch, "Clifford coefficient vector");
  SMatrix out(spinorDim(), spinorDim());
  for (size_t k = 0; k < n; ++k)
    if (!coefficients[k].isZero()) out += coefficients[k] * gamma[k];
  return out;
}

CliffordModule buildClifford(size_t n) {
  require(n <= kMaxCliffordDim, ErrorKind::TooLarge,
          "Clifford dimension " + std::to_string(n) + " exceeds " + std::to_string(kMaxCliffordDim));
  CliffordModule cl;
  cl.n = n;
  size_t pairs = n / 2;
  SMatrix id2 = SMatrix::identity(2), z = pauli(3);
  for (size_t k = 0; k < pairs; ++k)
    for (int which : {1, 2}) {
      std::vector<SMatrix> fs;
      for (size_t j = 0; j < pairs; ++j) fs.push_back(j < k ? z : j == k ? pauli(which) : id2);
      cl.gamma.push_back(Scalar::i() * krons(fs));
    }
  SMatrix chirality = krons(std::vector<SMatrix>(pairs, z));
  if (n % 2) cl.gamma.push_back(Scalar::i() * chirality);
  else cl.grading = chirality;
  return cl;
}

bool satisfiesCliffordRelations(const CliffordModule& cl) {
  size_t d = cl.spinorDim();
  SMatrix id = SMatrix::identity(d);
  if (cl.gamma.size() != cl.n) return false;
  for (size_t i = 0; i < cl.n; ++i)
    for (size_t j = i; j < cl.n; ++j) {
      SMatrix anti = cl.gamma[i] * cl.gamma[j] + cl.gamma[j] * cl.gamma[i];
      SMatrix expected = i == j ? Scalar(-2) * id : SMatrix(d, d);
      if (!(anti == expected)) return false;
    }
  if (cl.n % 2 == 0) {
    if (!cl.grading) return false;
    const SMatrix& g = *cl.grading;
    if (!(g * g == id)) return false;
    for (const auto& gm : cl.gamma)
      if (!(g * gm + gm * g).isZero()) return false;
    Scalar trace = 0;
    for (size_t i = 0; i < d; ++i) trace += g(i, i);
    if (cl.n > 0 && !trace.isZero()) return false;
  } else if (cl.grading) {
    return false;
  }
  return true;
}

bool isIrreducible(const CliffordModule& cl) {
  require(cl.n <= 8, ErrorKind::TooLarge, "irreducibility check limited to n <= 8");
  size_t d = cl.spinorDim();
  // unknown M (d*d entries): M gamma_k - gamma_k M = 0 for every k
  SMatrix system(cl.n * d * d, d * d);
  for (size_t k = 0; k < cl.n; ++k) {
    const SMatrix& g = cl.gamma[k];
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j) {
        size_t row = (k * d + i) * d + j;
        for (size_t l = 0; l < d; ++l) {
          // (M g)_ij = sum_l M_il g_lj ; (g M)_ij = sum_l g_il M_lj
          if (!g(l, j).isZero()) system(row, i * d + l) += g(l, j);
          if (!g(i, l).isZero()) system(row, l * d + j) -= g(i, l);
        }
      }
  }
  return nullspace(system).size() == 1;
}

StructureConstants StructureConstants::restrictTo(const std::vector<size_t>& idx) const {
  StructureConstants out(idx.size());
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = 0; b < idx.size(); ++b)
      for (size_t c = 0; c < idx.size(); ++c) out(a, b, c) = (*this)(idx[a], idx[b], idx[c]);
  return out;
}

void validateStructureConstants(const StructureConstants& f) {
  size_t d = f.dim;
  require(f.values.size() == d * d * d, ErrorKind::BadStructureConstants, "structure constant table has wrong size");
  auto where = [](size_t a, size_t b, size_t c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  };
  for (size_t a = 0; a < d; ++a)
    for (size_t b = 0; b < d; ++b)
      for (size_t c = 0; c < d; ++c) {
        require((f(a, b, c) + f(b, a, c)).isZero(), ErrorKind::BadStructureConstants,
                "bracket is not antisymmetric at " + where(a, b, c));
        require((f(a, b, c) + f(a, c, b)).isZero(), ErrorKind::BadStructureConstants,
                "basis is not orthonormal for an invariant form at " + where(a, b, c));
      }
  // [[a,b],c] + [[b,c],a] + [[c,a],b] = 0
  for (size_t a = 0; a < d; ++a)
    for (size_t b = a + 1; b < d; ++b)
      for (size_t c = b + 1; c < d; ++c)
        for (size_t e = 0; e < d; ++e) {
          Scalar s = 0;
          for (size_t m = 0; m < d; ++m) {
            if (!f(a, b, m).isZero() && !f(m, c, e).isZero()) s += f(a, b, m) * f(m, c, e);
            if (!f(b, c, m).isZero() && !f(m, a, e).isZero()) s += f(b, c, m) * f(m, a, e);
            if (!f(c, a, m).isZero() && !f(m, b, e).isZero()) s += f(c, a, m) * f(m, b, e);
          }
          require(s.isZero(), ErrorKind::BadStructureConstants, "Jacobi identity fails at " + where(a, b, c));
        }
}

std::string_view conventionName(SpinConvention c) {
  return c == SpinConvention::Equivariant ? "ad(X) = 1/4 sum c(X_i) c([X,X_i])"
                                          : "ad(X) = 1/4 sum c([X,X_i]) c(X_i)";
}

std::vector<SMatrix> spinRepresentationOn(const StructureConstants& f, const std::vector<size_t>& sub,
                                          const CliffordModule& cl, SpinConvention convention) {
  require(cl.n == sub.size(), ErrorKind::DimensionMismatch,
          "Clifford module of dimension " + std::to_string(cl.n) + " for a subspace of dimension " +
              std::to_string(sub.size()));
  size_t d = cl.spinorDim();
  Scalar quarter = Scalar(Rational(1, 4));
  std::vector<SMatrix> out;
  for (size_t a = 0; a < f.dim; ++a) {
    SMatrix m(d, d);
    for (size_t j = 0; j < sub.size(); ++j)
      for (size_t k = 0; k < sub.size(); ++k) {
        const Scalar& c = f(a, sub[j], sub[k]);  // [X_a, X_j] component along X_k
        if (c.isZero()) continue;
        m += c * (convention == SpinConvention::Equivariant ? cl.gamma[j] * cl.gamma[k] : cl.gamma[k] * cl.gamma[j]);
      }
    out.push_back(quarter * m);
  }
  return out;
}

std::vector<SMatrix> spinRepresentation(const StructureConstants& f, const CliffordModule& cl,
                                        SpinConvention convention) {
  validateStructureConstants(f);
  std::vector<size_t> all(f.dim);
  for (size_t k = 0; k < f.dim; ++k) all[k] = k;
  return spinRepresentationOn(f, all, cl, convention);
}

SplitSpinors splitClifford(const StructureConstants& f, const std::vector<size_t>& hIndices,
                           const std::vector<size_t>& pIndices) {
  size_t n = f.dim;
  std::vector<int> owner(n, -1);
  for (size_t k : hIndices) {
    require(k < n && owner[k] == -1, ErrorKind::NotOrthogonal, "h index repeated or out of range");
    owner[k] = 0;
  }
  for (size_t k : pIndices) {
    require(k < n && owner[k] == -1, ErrorKind::NotOrthogonal, "h and p share a basis element");
    owner[k] = 1;
  }
  for (size_t k = 0; k < n; ++k)
    require(owner[k] != -1, ErrorKind::NotOrthogonal, "basis element " + std::to_string(k) + " is in neither h nor p");
  for (size_t a : hIndices)
    for (size_t b : pIndices)
      for (size_t c : hIndices)
        require(f(a, b, c).isZero(), ErrorKind::NotOrthogonal, "[h, p] is not contained in p");
  require(pIndices.size() % 2 == 0, ErrorKind::NotOrthogonal, "p must be even-dimensional");

  SplitSpinors out;
  out.hIndices = hIndices;
  out.pIndices = pIndices;
  out.sh = buildClifford(hIndices.size());
  out.sp = buildClifford(pIndices.size());
  CliffordModule full = buildClifford(n);
  size_t dh = out.sh.spinorDim(), dp = out.sp.spinorDim();
  const SMatrix& gp = *out.sp.grading;

  auto tensorModel = [&](int sign) {
    std::vector<SMatrix> gam(n);
    for (size_t k = 0; k < hIndices.size(); ++k) gam[hIndices[k]] = kron(out.sh.gamma[k], Scalar(sign) * gp);
    for (size_t k = 0; k < pIndices.size(); ++k) gam[pIndices[k]] = kron(SMatrix::identity(dh), out.sp.gamma[k]);
    return gam;
  };

  // Averaging over the Clifford group gives an intertwiner
  // U = sum_I c_t(e_I) A c_g(e_I)^dagger, nonzero for a suitable unit matrix A
  // exactly when the two modules are equivalent.
  auto intertwiner = [&](const std::vector<SMatrix>& gam) -> std::optional<SMatrix> {
    size_t d = dh * dp;
    for (size_t col = 0; col < d; ++col) {
      SMatrix a(d, d);
      a(0, col) = 1;
      SMatrix u(d, d);
      std::function<void(size_t, const SMatrix&, const SMatrix&)> walk = [&](size_t k, const SMatrix& lt,
                                                                            const SMatrix& rg) {
        if (k == n) {
          u += lt * a * rg.adjoint();
          return;
        }
        walk(k + 1, lt, rg);
        walk(k + 1, lt * gam[k], rg * full.gamma[k]);
      };
      walk(0, SMatrix::identity(d), SMatrix::identity(d));
      if (!u.isZero()) return u;
    }
    return std::nullopt;
  };

  for (int sign : {1, -1}) {
    auto gam = tensorModel(sign);
    if (n > 10) {
      out.tensorGamma = gam;
      out.gradingSign = sign;
      return out;  // change of basis not computed at this size
    }
    if (auto u = intertwiner(gam)) {
      out.tensorGamma = gam;
      out.gradingSign = sign;
      out.changeOfBasis = *u;
      return out;
    }
  }
  fail(ErrorKind::InvariantViolated, "tensor product spinors are not equivalent to S_g");
}

}  // namespace diracforge::clifford
