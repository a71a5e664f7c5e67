#ifndef BERKSPEC_BERKLINE_HPP
#define BERKSPEC_BERKLINE_HPP

#include <optional>
#include <string>
#include <vector>

#include "berkspec/scalars.hpp"

namespace berkspec {

/// Point x_{c,r} of the affine Berkovich line: the Gauss seminorm of the
/// closed disc |T-c| <= r. Radius zero is a type-(1) point, radii in p^Q
/// are type (2). Two descriptors name the same point iff the radii agree
/// and |c - c'| <= r.
struct BerkPoint {
  Rat center;
  LogMag radius;
};

int point_type(const BerkPoint& x);
bool point_eq(const BerkPoint& a, const BerkPoint& b, const Prime& p);
/// |T - a| evaluated at the point: max(|center - a|, radius).
LogMag coord_distance(const BerkPoint& x, const Rat& a, const Prime& p);

/// Closed disc of P^1: either D(center, radius) or its complement form
/// P^1 minus the open disc D^-(center, radius).
struct ClosedDisc {
  Rat center;
  LogMag radius;
  bool complement = false;

  bool contains(const BerkPoint& x, const Prime& p) const;
  bool contains_infinity() const { return complement; }
};

bool disc_eq(const ClosedDisc& a, const ClosedDisc& b, const Prime& p);

/// Modulus and length of the closed annulus r1 <= |T-c| <= r2.
struct AnnulusInvariants {
  LogMag modulus;  // r1/r2
  Rat length;      // -log_p modulus, in t-units
};
AnnulusInvariants annulus_invariants(const LogMag& r1, const LogMag& r2);

/// One connected affinoid piece: a bounding closed disc (absent for pieces
/// containing infinity) minus pairwise-disjoint open discs.
struct AffPiece {
  std::optional<std::pair<Rat, LogMag>> bound;       // D(center, radius)
  std::vector<std::pair<Rat, LogMag>> holes;         // removed D^-(center, radius)

  bool contains(const BerkPoint& x, const Prime& p) const;
  bool contains_infinity() const { return !bound.has_value(); }
  std::vector<ClosedDisc> boundary_discs() const;    // the set E(piece)
};

/// Affinoid domain of P^1 as a disjoint finite union of pieces, with its
/// canonical E(V) representation (V = intersection of closed discs per
/// component, no disc contained in another).
class Affinoid {
public:
  Affinoid() = default;
  explicit Affinoid(std::vector<AffPiece> pieces) : pieces_(std::move(pieces)) {}
  static Affinoid closed_disc(const Rat& center, const LogMag& radius);
  static Affinoid disc_complement(const Rat& center, const LogMag& radius);
  static Affinoid closed_annulus(const Rat& center, const LogMag& r1, const LogMag& r2);

  const std::vector<AffPiece>& pieces() const { return pieces_; }
  bool empty() const { return pieces_.empty(); }
  bool contains(const BerkPoint& x, const Prime& p) const;
  bool contains_infinity() const;
  std::vector<ClosedDisc> E() const;

private:
  std::vector<AffPiece> pieces_;
};

/// Exact decision: do the given affinoids jointly cover P^1? Implemented by
/// enumerating finitely many witness points on the tree spanned by all disc
/// centers; every membership profile of a point of P^1 is realized there.
bool covers_p1(const std::vector<const Affinoid*>& parts, const Prime& p);

/// Complementary affinoid per the disc bijection D -> D', with per-disc
/// radius offsets (t-units) controlling how far D' backs off from D.
struct Complementary {
  Affinoid complement;                 // V'
  std::vector<ClosedDisc> discs;       // E(V), parallel to primes
  std::vector<ClosedDisc> primes;      // the complementary disc of each
};
Complementary complementary(const Affinoid& V, const std::vector<Rat>& margins, const Prime& p);
Complementary complementary(const Affinoid& V, const Rat& margin, const Prime& p);

/// Oriented segment of the line: t-parametrized points x_{center, p^-t}.
/// Direction matters; decreasing t moves toward larger radii.
struct Segment {
  Rat center;
  Rat t_start;
  Rat t_end;
};

std::vector<BerkPoint> segment_points(const Segment& s, int steps);

std::string to_string(const BerkPoint& x, const Prime& p);

} // namespace berkspec

#endif
