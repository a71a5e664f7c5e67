#ifndef BERKSPEC_DIFFMOD_HPP
#define BERKSPEC_DIFFMOD_HPP

#include <string>
#include <vector>

#include "berkspec/berkline.hpp"
#include "berkspec/ratfun.hpp"

namespace berkspec {

/// Derivation descriptor: d/dT, or the centered form d_c = (T-c) d/dT.
struct Derivation {
  enum class Kind { ddT, centered } kind = Kind::ddT;
  Rat center;  // centered only

  static Derivation ddT() { return {Kind::ddT, Rat(0)}; }
  static Derivation at(const Rat& c) { return {Kind::centered, c}; }
  bool operator==(const Derivation& o) const {
    return kind == o.kind && (kind == Kind::ddT || center == o.center);
  }
};

/// Apply the derivation to a scalar function.
RatFun apply_derivation(const Derivation& d, const RatFun& f);

using RfVector = std::vector<RatFun>;
using RfMatrix = std::vector<std::vector<RatFun>>;

/// Differential module of rank n over the rational function field: the
/// connection acts on column vectors as delta(v) + G v, delta applying the
/// derivation entrywise.
struct DiffModule {
  int rank = 0;
  RfMatrix matrix;
  Derivation derivation;
};

DiffModule make_module(RfMatrix G, Derivation d);

/// Same module, matrix rescaled to the target derivation by (T-c) factors.
DiffModule change_derivation(const DiffModule& M, const Derivation& target);

/// G - a*Id with respect to the module's current derivation.
DiffModule twist(const DiffModule& M, const Rat& a);

/// Dual module: matrix -G^T.
DiffModule dual(const DiffModule& M);

/// Connection applied to a vector of rational functions.
RfVector connection_apply(const DiffModule& M, const RfVector& v);

/// Kedlaya/Katz cyclic vector: m = sum_j f^j/j! sum_k (-1)^k C(j,k)
/// nabla^k(e_{j+1-k}). Certified by det[m, nabla m, ..., nabla^{n-1} m] != 0
/// as an exact rational function; throws not_cyclic when the determinant
/// vanishes identically.
RfVector cyclic_vector(const DiffModule& M, const RatFun& f);

/// Monic differential operator annihilating the certified cyclic vector:
/// coefficients g_0..g_{n-1} with nabla^n m + sum g_i nabla^i m = 0.
struct DiffPoly {
  std::vector<RatFun> coeffs;  // g_0 .. g_{n-1}; leading coefficient is 1
  int degree() const { return static_cast<int>(coeffs.size()); }
};

DiffPoly diff_polynomial(const DiffModule& M, const RfVector& m);

/// Residual nabla^n m + sum g_i nabla^i m; zero iff the operator is exact.
RfVector diff_poly_residual(const DiffModule& M, const RfVector& m, const DiffPoly& P);

/// Newton polygon of the commutative polynomial S^n + sum g_i S^i at a
/// point: slopes of the lower hull of (i, t-exponent of |g_i| at x), each
/// giving the magnitude p^(-slope-derived) of that many roots.
struct NewtonSlope {
  LogMag root_magnitude;
  int multiplicity;
};
std::vector<NewtonSlope> newton_polygon(const DiffPoly& P, const BerkPoint& x, const Prime& p);

/// Newton polygon of a plain commutative polynomial (v_p of coefficients).
std::vector<NewtonSlope> poly_newton(const Poly& P, const Prime& p);

RatFun det(const RfMatrix& A);
RfVector solve_linear(RfMatrix A, RfVector b);  // throws singular_system

} // namespace berkspec

#endif
