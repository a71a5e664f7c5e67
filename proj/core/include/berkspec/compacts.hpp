#ifndef BERKSPEC_COMPACTS_HPP
#define BERKSPEC_COMPACTS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "berkspec/berkline.hpp"
#include "berkspec/scalars.hpp"

namespace berkspec {

/// Z_p-orbit of a point: {x_{center+g, radius} : g in Z_p}. When zp_closed
/// is false the orbit degenerates to the single point x_{center,radius}
/// (used by matrix spectra, which carry no Z_p translation structure).
/// A zp_closed orbit with radius > 1 is a one-point set as well, since all
/// integer translates of the center name the same Berkovich point.
struct Orbit {
  Rat center;
  LogMag radius;
  bool zp_closed = true;
};

bool orbit_eq(const Orbit& a, const Orbit& b, const Prime& p);
bool orbit_disjoint(const Orbit& a, const Orbit& b, const Prime& p);

/// Finite union of orbits, deduplicated under orbit_eq.
class CompactSet {
public:
  CompactSet() = default;
  explicit CompactSet(std::vector<Orbit> orbits, const Prime& p);
  void add(const Orbit& o, const Prime& p);
  const std::vector<Orbit>& orbits() const { return orbits_; }
  bool empty() const { return orbits_.empty(); }

private:
  std::vector<Orbit> orbits_;
};

bool compact_eq(const CompactSet& a, const CompactSet& b, const Prime& p);
CompactSet compact_union(const CompactSet& a, const CompactSet& b, const Prime& p);

/// One open piece of an OpenRegion.
struct RegionPiece {
  enum class Kind { open_disc, open_annulus, closed_disc_complement } kind;
  Rat center;
  LogMag r1;  // open_disc/complement: the radius; annulus: inner radius
  LogMag r2;  // annulus only: outer radius

  static RegionPiece disc(const Rat& c, const LogMag& r) {
    return {Kind::open_disc, c, r, LogMag()};
  }
  static RegionPiece annulus(const Rat& c, const LogMag& inner, const LogMag& outer) {
    return {Kind::open_annulus, c, inner, outer};
  }
  static RegionPiece complement(const Rat& c, const LogMag& r) {
    return {Kind::closed_disc_complement, c, r, LogMag()};
  }

  bool contains(const BerkPoint& x, const Prime& p) const;
};

/// Open subset of the line: finite union of open discs, open annuli and
/// complements of closed discs, all with rational parameters.
using OpenRegion = std::vector<RegionPiece>;

bool region_contains_point(const OpenRegion& U, const BerkPoint& x, const Prime& p);

/// Exact membership tests in the exponential topology. Subset is decided
/// per orbit by covering Z_p with the translation sets that land the orbit
/// point inside U (residue-tree recursion); meet is decided by achievable
/// |T - b| values over the orbit.
bool orbit_subset(const Orbit& o, const OpenRegion& U, const Prime& p);
bool orbit_meets(const Orbit& o, const OpenRegion& U, const Prime& p);
bool compact_subset(const CompactSet& K, const OpenRegion& U, const Prime& p);
bool compact_meets(const CompactSet& K, const OpenRegion& U, const Prime& p);

struct NeighborhoodReport {
  bool contained = false;
  std::vector<bool> witness_met;
  bool ok = false;
  /// Witness covers are trusted, not verified.
  bool cover_assumed = true;
};

/// K in the exponential-topology basic open (U, {witnesses}).
NeighborhoodReport in_neighborhood(const CompactSet& K, const OpenRegion& U,
                                   const std::vector<OpenRegion>& witnesses, const Prime& p);

struct BasisEntry {
  OpenRegion U;
  std::vector<OpenRegion> witnesses;
};

struct ConvergenceReport {
  struct PerBasis {
    bool converged = false;
    int l0 = -1;  // least index with membership for all l in [l0, l_max]
  };
  std::vector<PerBasis> per_basis;
  bool all_converged = false;
};

/// Eventual membership of seq(l) in every basis neighborhood of the limit,
/// scanned up to l_max. The limit itself must lie in every entry.
ConvergenceReport converges(const std::function<CompactSet(int)>& seq, const CompactSet& limit,
                            const std::vector<BasisEntry>& basis, int l_max, const Prime& p);

/// Contour around K: a complementary pair (U, V) with K in the interior of
/// U and V disjoint from K. Margins are per-disc radius offsets in t-units;
/// inner > outer as exponents, so the V-discs sit strictly inside the
/// U-discs. U and V meet in one closed annulus per disc.
struct Contour {
  Affinoid U;
  Affinoid V;
  struct Annulus {
    Rat center;
    LogMag inner;
    LogMag outer;
  };
  std::vector<Annulus> intersection;
};

Contour contour(const CompactSet& K, const Rat& inner_margin, const Rat& outer_margin,
                const Prime& p);

std::string to_string(const Orbit& o, const Prime& p);
std::string to_string(const CompactSet& K, const Prime& p);

} // namespace berkspec

#endif
