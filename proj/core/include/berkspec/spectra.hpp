#ifndef BERKSPEC_SPECTRA_HPP
#define BERKSPEC_SPECTRA_HPP

#include <string>
#include <vector>

#include "berkspec/compacts.hpp"
#include "berkspec/diffmod.hpp"

namespace berkspec {

/// delta(T(z) - a) for the orbit z: max(dist_zp(center - a), radius).
LogMag delta_of(const Orbit& z, const Rat& a, const Prime& p);

/// First spectral radius of a pure block with spectral distance delta:
/// R = 1 when delta = 0, else R = (|p|^l omega / delta)^(1/p^l) with
/// l = max(0, floor(t_delta) + 1). Exact in t-coordinates.
LogMag radius_from_delta(const LogMag& delta, const Prime& p);

/// Inverse dictionary: the orbit radius sigma attached to a spectral
/// radius R in (0,1], by the banded phi formulas at unit point radius.
LogMag sigma_from_radius(const LogMag& R, const Prime& p);

/// Banded variation formula: the orbit radius seen at a point of radius
/// r_y below an attachment point of radius r_x carrying spectral radius R.
LogMag phi_formula(const LogMag& R, const LogMag& r_y, const LogMag& r_x, const Prime& p);

/// Spectral radius of a rank-one remainder h (zero Laurent constant at the
/// expansion center): full convergence for h = 0, omega/|h| above norm 1,
/// the monomial rule for single Laurent terms, Unsupported otherwise.
LogMag radius_rank1(const RatFun& h, const BerkPoint& x, const Rat& c, const Prime& p);

/// Rank-one spectrum: Laurent constant as orbit center, remainder-derived
/// sigma as orbit radius. On-circle poles are evaluated under every
/// classification; the resulting orbits must agree.
Orbit spectrum_rank1(const RatFun& g, const BerkPoint& x, const Rat& c, const Prime& p);

/// Same, returning the per-classification center labels (used for junction
/// reporting, where one-sided labels may legitimately differ).
struct Rank1Detail {
  Orbit orbit;                 // canonical representative
  std::vector<Rat> labels;     // constants under each on-circle classification
};
Rank1Detail spectrum_rank1_detail(const RatFun& g, const BerkPoint& x, const Rat& c,
                                  const Prime& p);

struct Block {
  std::vector<int> indices;  // 1-based row indices of the triangular matrix
  Orbit orbit;
};

struct SpectrumResult {
  CompactSet orbits;
  std::vector<Block> blocks;
  bool separation_certified = false;
  std::vector<Orbit> diagonal_orbits;  // per-index orbit, pre-merge
};

/// Spectrum of a module triangular with respect to the d_c coordinate:
/// union of the diagonal rank-one orbits, grouped into blocks.
SpectrumResult spectrum_triangular(const DiffModule& M, const BerkPoint& x, const Rat& c,
                                   const Prime& p);

struct RobbaBlock {
  std::vector<int> indices;
  Orbit orbit;
  int rank;
};

/// Block decomposition certified by pairwise disjoint orbits.
std::vector<RobbaBlock> robba_decompose(const SpectrumResult& S, const Prime& p);

struct RadiusProfile {
  std::vector<LogMag> radii;  // ascending magnitudes, each in (0, 1]
};

/// Per-block spectral radii of (M_zi, nabla_zi - a), repeated by rank.
RadiusProfile multiradius(const SpectrumResult& S, const Rat& a, const Prime& p);

/// Refinedness of each block: orbit radius above 1 and center closer to
/// Z_p than the radius.
std::vector<bool> is_refined(const SpectrumResult& S, const Prime& p);

std::string to_string(const SpectrumResult& S, const Prime& p);

} // namespace berkspec

#endif
