#include "berkspec/diffmod.hpp"

#include <algorithm>

namespace berkspec {

RatFun apply_derivation(const Derivation& d, const RatFun& f) {
  RatFun df = f.derivative();
  if (d.kind == Derivation::Kind::ddT) return df;
  Poly lin({-d.center, Rat(1)});
  return df * RatFun::from_poly(lin);
}

DiffModule make_module(RfMatrix G, Derivation d) {
  DiffModule M;
  M.rank = static_cast<int>(G.size());
  for (const auto& row : G)
    if (static_cast<int>(row.size()) != M.rank) fail(errc::out_of_range, "matrix not square");
  M.matrix = std::move(G);
  M.derivation = d;
  if (M.rank < 1) fail(errc::out_of_range, "rank >= 1 required");
  return M;
}

namespace {

RfMatrix scale_matrix(const RfMatrix& G, const RatFun& s) {
  RfMatrix out = G;
  for (auto& row : out)
    for (auto& e : row) e = e * s;
  return out;
}

} // namespace

DiffModule change_derivation(const DiffModule& M, const Derivation& target) {
  if (M.derivation == target) return M;
  RfMatrix G = M.matrix;
  if (M.derivation.kind == Derivation::Kind::centered) {
    // back to d/dT
    RatFun lin = RatFun::from_poly(Poly({-M.derivation.center, Rat(1)}));
    G = scale_matrix(G, RatFun::constant(Rat(1)) / lin);
  }
  if (target.kind == Derivation::Kind::centered) {
    RatFun lin = RatFun::from_poly(Poly({-target.center, Rat(1)}));
    G = scale_matrix(G, lin);
  }
  DiffModule out = M;
  out.matrix = std::move(G);
  out.derivation = target;
  return out;
}

DiffModule twist(const DiffModule& M, const Rat& a) {
  DiffModule out = M;
  for (int i = 0; i < M.rank; ++i) out.matrix[i][i] = out.matrix[i][i] - a;
  return out;
}

DiffModule dual(const DiffModule& M) {
  DiffModule out = M;
  for (int i = 0; i < M.rank; ++i)
    for (int j = 0; j < M.rank; ++j) out.matrix[i][j] = -M.matrix[j][i];
  return out;
}

RfVector connection_apply(const DiffModule& M, const RfVector& v) {
  RfVector out(M.rank);
  for (int i = 0; i < M.rank; ++i) {
    out[i] = apply_derivation(M.derivation, v[i]);
    for (int j = 0; j < M.rank; ++j) out[i] = out[i] + M.matrix[i][j] * v[j];
  }
  return out;
}

RatFun det(const RfMatrix& A) {
  int n = static_cast<int>(A.size());
  RfMatrix M = A;
  RatFun d = RatFun::constant(Rat(1));
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!M[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return RatFun();
    if (piv != col) {
      std::swap(M[piv], M[col]);
      d = -d;
    }
    d = d * M[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (M[r][col].is_zero()) continue;
      RatFun f = M[r][col] / M[col][col];
      for (int c = col; c < n; ++c) M[r][c] = M[r][c] - f * M[col][c];
    }
  }
  return d;
}

RfVector solve_linear(RfMatrix A, RfVector b) {
  int n = static_cast<int>(A.size());
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!A[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) fail(errc::singular_system, "singular linear system");
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    for (int r = 0; r < n; ++r) {
      if (r == col || A[r][col].is_zero()) continue;
      RatFun f = A[r][col] / A[col][col];
      for (int c = col; c < n; ++c) A[r][c] = A[r][c] - f * A[col][c];
      b[r] = b[r] - f * b[col];
    }
  }
  RfVector x(n);
  for (int i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
  return x;
}

RfVector cyclic_vector(const DiffModule& M, const RatFun& f) {
  if (apply_derivation(M.derivation, f).is_zero())
    fail(errc::out_of_range, "cyclic vector seed needs df != 0");
  const int n = M.rank;

  // nabla^k(e_j) for k = 0..n-1, j = 1..n.
  std::vector<std::vector<RfVector>> pw(n);
  for (int j = 0; j < n; ++j) {
    RfVector e(n, RatFun());
    e[j] = RatFun::constant(Rat(1));
    pw[j].push_back(e);
    for (int k = 1; k < n; ++k) pw[j].push_back(connection_apply(M, pw[j].back()));
  }

  RfVector m(n, RatFun());
  Rat factorial(1);
  RatFun fpow = RatFun::constant(Rat(1));
  for (int j = 0; j < n; ++j) {
    if (j > 0) {
      factorial *= j;
      fpow = fpow * f;
    }
    Rat binom(1);
    RfVector inner(n, RatFun());
    for (int k = 0; k <= j; ++k) {
      if (k > 0) binom = binom * (j - k + 1) / k;
      Rat sign = (k % 2 == 0) ? Rat(1) : Rat(-1);
      const RfVector& term = pw[j - k][k];  // nabla^k(e_{j+1-k})
      for (int i = 0; i < n; ++i) inner[i] = inner[i] + term[i] * (sign * binom);
    }
    RatFun scale = fpow * (Rat(1) / factorial);
    for (int i = 0; i < n; ++i) m[i] = m[i] + inner[i] * scale;
  }

  // Certificate: the iterates of m form a basis.
  RfMatrix W(n, RfVector(n));
  RfVector cur = m;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) W[i][k] = cur[i];
    if (k + 1 < n) cur = connection_apply(M, cur);
  }
  if (det(W).is_zero()) fail(errc::not_cyclic, "cyclic-vector determinant vanishes identically");
  return m;
}

DiffPoly diff_polynomial(const DiffModule& M, const RfVector& m) {
  const int n = M.rank;
  RfMatrix W(n, RfVector(n));
  RfVector cur = m;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) W[i][k] = cur[i];
    cur = connection_apply(M, cur);
  }
  RfVector rhs(n);
  for (int i = 0; i < n; ++i) rhs[i] = -cur[i];  // cur = nabla^n m
  DiffPoly P;
  P.coeffs = solve_linear(W, rhs);
  return P;
}

RfVector diff_poly_residual(const DiffModule& M, const RfVector& m, const DiffPoly& P) {
  const int n = M.rank;
  RfVector acc(n, RatFun());
  RfVector cur = m;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) acc[i] = acc[i] + P.coeffs[k] * cur[i];
    cur = connection_apply(M, cur);
  }
  for (int i = 0; i < n; ++i) acc[i] = acc[i] + cur[i];
  return acc;
}

namespace {

std::vector<NewtonSlope> lower_hull_slopes(const std::vector<std::pair<int, Rat>>& pts,
                                           int degree, int zero_roots) {
  // pts: (i, t-value) for nonzero coefficients, ascending i; the polygon of
  // root exponents comes from the lower convex hull.
  std::vector<std::pair<int, Rat>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& [x1, y1] = hull[hull.size() - 2];
      const auto& [x2, y2] = hull[hull.size() - 1];
      // keep hull lower-convex with strictly increasing slopes
      if ((y2 - y1) * (pt.first - x2) >= (pt.second - y2) * (x2 - x1))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }
  std::vector<NewtonSlope> out;
  if (zero_roots > 0) out.push_back({LogMag::zero(), zero_roots});
  for (size_t s = 0; s + 1 < hull.size(); ++s) {
    const auto& [x1, y1] = hull[s];
    const auto& [x2, y2] = hull[s + 1];
    Rat slope = (y2 - y1) / Rat(x2 - x1);
    out.push_back({LogMag::from_t(-slope), x2 - x1});
  }
  (void)degree;
  return out;
}

} // namespace

std::vector<NewtonSlope> newton_polygon(const DiffPoly& P, const BerkPoint& x, const Prime& p) {
  const int n = P.degree();
  std::vector<std::pair<int, Rat>> pts;
  int zero_roots = -1;
  for (int i = 0; i <= n; ++i) {
    RatFun gi = (i == n) ? RatFun::constant(Rat(1)) : P.coeffs[i];
    if (gi.is_zero()) continue;
    LogMag v;
    try {
      v = gauss_norm(gi, x.center, x.radius, p);
    } catch (const error& e) {
      if (e.kind() == errc::pole_at_type_one_point)
        fail(errc::pole_at_point, "coefficient pole at the evaluation point");
      throw;
    }
    if (v.is_zero()) continue;  // value-norm zero behaves like a zero coefficient
    if (zero_roots < 0) zero_roots = i;
    pts.push_back({i, v.t()});
  }
  return lower_hull_slopes(pts, n, zero_roots < 0 ? 0 : zero_roots);
}

std::vector<NewtonSlope> poly_newton(const Poly& P, const Prime& p) {
  std::vector<std::pair<int, Rat>> pts;
  int zero_roots = -1;
  for (int i = 0; i <= P.deg(); ++i) {
    if (P.coeff(i) == 0) continue;
    if (zero_roots < 0) zero_roots = i;
    pts.push_back({i, Rat(vp_int(P.coeff(i), p))});
  }
  return lower_hull_slopes(pts, P.deg(), zero_roots < 0 ? 0 : zero_roots);
}

} // namespace berkspec
