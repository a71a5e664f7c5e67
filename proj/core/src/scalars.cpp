#include "berkspec/scalars.hpp"

#include <sstream>

namespace berkspec {

const char* errc_name(errc k) {
  switch (k) {
    case errc::pole_at_type_one_point: return "PoleAtTypeOnePoint";
    case errc::irreducible_denominator: return "IrreducibleDenominator";
    case errc::pole_on_circle: return "PoleOnCircle";
    case errc::invalid_interval: return "InvalidInterval";
    case errc::no_complement: return "NoComplement";
    case errc::margin_too_large: return "MarginTooLarge";
    case errc::not_cyclic: return "NotCyclic";
    case errc::singular_system: return "SingularSystem";
    case errc::pole_at_point: return "PoleAtPoint";
    case errc::out_of_range: return "OutOfRange";
    case errc::unsupported: return "Unsupported";
    case errc::not_triangular: return "NotTriangular";
    case errc::separation_failed: return "SeparationFailed";
    case errc::not_separated: return "NotSeparated";
    case errc::not_piecewise_affine: return "NotPiecewiseAffine";
    case errc::discontinuity_detected: return "DiscontinuityDetected";
    case errc::never_stabilized: return "NeverStabilized";
    case errc::basis_not_neighborhood: return "BasisNotNeighborhood";
    case errc::pole_on_boundary: return "PoleOnBoundary";
    case errc::eigenvalue_on_boundary: return "EigenvalueOnBoundary";
    case errc::non_split_char_poly: return "NonSplitCharPoly";
    case errc::parse_error: return "ParseError";
    case errc::unbound_constant: return "UnboundConstant";
    case errc::non_rational_literal: return "NonRationalLiteral";
  }
  return "UnknownError";
}

Rat rat_from_string(const std::string& s) {
  Rat q;
  if (q.set_str(s, 10) != 0) fail(errc::non_rational_literal, "bad rational literal '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) { return q.get_str(); }

Prime::Prime(long p) : p_(p) {
  if (p < 2) fail(errc::out_of_range, "prime must be >= 2");
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) fail(errc::out_of_range, std::to_string(p) + " is not prime");
}

LogMag max_mag(const LogMag& a, const LogMag& b) { return a.cmp(b) >= 0 ? a : b; }
LogMag min_mag(const LogMag& a, const LogMag& b) { return a.cmp(b) <= 0 ? a : b; }

long vp_int(const Rat& q, const Prime& p) {
  if (q == 0) fail(errc::out_of_range, "vp of zero");
  long v = 0;
  mpz_class n = q.get_num(), d = q.get_den(), pz(p.value()), r;
  while (mpz_divisible_p(n.get_mpz_t(), pz.get_mpz_t())) {
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t());
    ++v;
  }
  if (v == 0) {
    while (mpz_divisible_p(d.get_mpz_t(), pz.get_mpz_t())) {
      mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t());
      --v;
    }
  }
  return v;
}

LogMag abs_p(const Rat& q, const Prime& p) {
  if (q == 0) return LogMag::zero();
  return LogMag::from_t(Rat(vp_int(q, p)));
}

LogMag omega(const Prime& p) { return LogMag::from_t(Rat(1, p.value() - 1)); }

LogMag dist_zp(const Rat& q, const Prime& p) {
  if (q == 0 || vp_int(q, p) >= 0) return LogMag::zero();
  return abs_p(q, p);
}

std::string mag_to_string(const LogMag& m, const Prime& p) {
  if (m.is_zero()) return "0";
  if (m.t() == 0) return "1";
  std::ostringstream os;
  os << p.value() << "^(" << to_string(-m.t()) << ")";
  return os.str();
}

Rat rat_floor(const Rat& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rat(f);
}

long rat_floor_long(const Rat& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

long rat_ceil_long(const Rat& q) {
  mpz_class f;
  mpz_cdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f.get_si();
}

} // namespace berkspec
