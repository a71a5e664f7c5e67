#include "berkspec/berkline.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace berkspec {

int point_type(const BerkPoint& x) { return x.radius.is_zero() ? 1 : 2; }

bool point_eq(const BerkPoint& a, const BerkPoint& b, const Prime& p) {
  if (a.radius != b.radius) return false;
  return abs_p(a.center - b.center, p) <= a.radius;
}

LogMag coord_distance(const BerkPoint& x, const Rat& a, const Prime& p) {
  return max_mag(abs_p(x.center - a, p), x.radius);
}

bool ClosedDisc::contains(const BerkPoint& x, const Prime& p) const {
  LogMag d = coord_distance(x, center, p);
  return complement ? d >= radius : d <= radius;
}

bool disc_eq(const ClosedDisc& a, const ClosedDisc& b, const Prime& p) {
  if (a.complement != b.complement || a.radius != b.radius) return false;
  // Same disc iff centers within the (open for complements, closed for
  // plain) radius; for equal radii the open/closed distinction only matters
  // when |ca-cb| equals the radius, where complements of D^- still agree.
  return a.complement ? abs_p(a.center - b.center, p) < a.radius
                      : abs_p(a.center - b.center, p) <= a.radius;
}

AnnulusInvariants annulus_invariants(const LogMag& r1, const LogMag& r2) {
  if (r1.is_zero() || r1 > r2) fail(errc::invalid_interval, "need 0 < r1 <= r2");
  AnnulusInvariants inv;
  inv.modulus = r1 / r2;
  inv.length = r1.t() - r2.t();
  return inv;
}

bool AffPiece::contains(const BerkPoint& x, const Prime& p) const {
  if (bound) {
    if (coord_distance(x, bound->first, p) > bound->second) return false;
  }
  for (const auto& [hc, hr] : holes)
    if (coord_distance(x, hc, p) < hr) return false;
  return true;
}

std::vector<ClosedDisc> AffPiece::boundary_discs() const {
  std::vector<ClosedDisc> out;
  if (bound) out.push_back({bound->first, bound->second, false});
  for (const auto& [hc, hr] : holes) out.push_back({hc, hr, true});
  return out;
}

Affinoid Affinoid::closed_disc(const Rat& center, const LogMag& radius) {
  AffPiece piece;
  piece.bound = {center, radius};
  return Affinoid({piece});
}

Affinoid Affinoid::disc_complement(const Rat& center, const LogMag& radius) {
  AffPiece piece;
  piece.holes.push_back({center, radius});
  return Affinoid({piece});
}

Affinoid Affinoid::closed_annulus(const Rat& center, const LogMag& r1, const LogMag& r2) {
  AffPiece piece;
  piece.bound = {center, r2};
  piece.holes.push_back({center, r1});
  return Affinoid({piece});
}

bool Affinoid::contains(const BerkPoint& x, const Prime& p) const {
  for (const auto& piece : pieces_)
    if (piece.contains(x, p)) return true;
  return false;
}

bool Affinoid::contains_infinity() const {
  for (const auto& piece : pieces_)
    if (piece.contains_infinity()) return true;
  return false;
}

std::vector<ClosedDisc> Affinoid::E() const {
  std::vector<ClosedDisc> out;
  for (const auto& piece : pieces_)
    for (const auto& d : piece.boundary_discs()) out.push_back(d);
  return out;
}

namespace {

// Witness set: for each disc center, the point family x_{a, p^-t} with t
// running over all disc radii, midpoints between consecutive radii, one
// value beyond each end, and the type-1 point. Membership in any boolean
// combination of closed/open discs is piecewise constant between these.
std::vector<BerkPoint> witness_points(const std::vector<std::pair<Rat, LogMag>>& discs) {
  std::vector<Rat> tvals;
  for (const auto& [c, r] : discs)
    if (!r.is_zero()) tvals.push_back(r.t());
  std::sort(tvals.begin(), tvals.end());
  tvals.erase(std::unique(tvals.begin(), tvals.end()), tvals.end());

  std::vector<Rat> grid;
  if (tvals.empty()) {
    grid.push_back(Rat(0));
  } else {
    grid.push_back(tvals.front() - 1);
    for (size_t i = 0; i < tvals.size(); ++i) {
      grid.push_back(tvals[i]);
      if (i + 1 < tvals.size()) grid.push_back((tvals[i] + tvals[i + 1]) / 2);
    }
    grid.push_back(tvals.back() + 1);
  }

  std::vector<BerkPoint> out;
  std::vector<Rat> centers;
  for (const auto& [c, r] : discs) centers.push_back(c);
  std::sort(centers.begin(), centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
  for (const auto& c : centers) {
    out.push_back({c, LogMag::zero()});
    for (const auto& t : grid) out.push_back({c, LogMag::from_t(t)});
  }
  return out;
}

std::vector<std::pair<Rat, LogMag>> all_discs(const std::vector<const Affinoid*>& parts) {
  std::vector<std::pair<Rat, LogMag>> discs;
  for (const auto* a : parts)
    for (const auto& piece : a->pieces()) {
      if (piece.bound) discs.push_back(*piece.bound);
      for (const auto& h : piece.holes) discs.push_back(h);
    }
  return discs;
}

} // namespace

bool covers_p1(const std::vector<const Affinoid*>& parts, const Prime& p) {
  bool inf = false;
  for (const auto* a : parts) inf = inf || a->contains_infinity();
  if (!inf) return false;
  for (const auto& w : witness_points(all_discs(parts))) {
    bool in = false;
    for (const auto* a : parts) in = in || a->contains(w, p);
    if (!in) return false;
  }
  return true;
}

namespace {

// Union of the complementary discs of one connected piece, as an affinoid.
// Returns nullopt when the union is all of P^1.
std::optional<Affinoid> union_of_discs(const std::vector<ClosedDisc>& discs, const Prime& p) {
  // At most one complement disc can arise per connected piece (one bound).
  std::optional<std::pair<Rat, LogMag>> codisc;  // P^1 minus D^-(c,r)
  std::vector<std::pair<Rat, LogMag>> plains;
  for (const auto& d : discs) {
    if (d.complement) {
      codisc = {d.center, d.radius};
    } else {
      plains.push_back({d.center, d.radius});
    }
  }
  // Merge nested plain discs; larger radii first, so containment is one-way.
  std::sort(plains.begin(), plains.end(),
            [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<std::pair<Rat, LogMag>> kept;
  for (const auto& d : plains) {
    bool absorbed = false;
    for (const auto& k : kept)
      if (abs_p(d.first - k.first, p) <= k.second && d.second <= k.second) {
        absorbed = true;
        break;
      }
    if (!absorbed) kept.push_back(d);
  }

  std::vector<AffPiece> pieces;
  if (codisc) {
    AffPiece co;
    co.holes.push_back(*codisc);
    for (const auto& d : kept) {
      LogMag dist = abs_p(d.first - codisc->first, p);
      bool inside_hole = max_mag(dist, d.second) < codisc->second;
      bool outside = dist > d.second && dist >= codisc->second;
      if (inside_hole) {
        AffPiece pl;
        pl.bound = d;
        pieces.push_back(pl);
      } else if (outside) {
        // plain disc already inside the co-disc: absorbed
      } else {
        return std::nullopt;  // union is P^1
      }
    }
    pieces.push_back(co);
  } else {
    for (const auto& d : kept) {
      AffPiece pl;
      pl.bound = d;
      pieces.push_back(pl);
    }
  }
  return Affinoid(std::move(pieces));
}

std::optional<AffPiece> intersect_pieces(const AffPiece& a, const AffPiece& b, const Prime& p) {
  AffPiece out;
  if (a.bound && b.bound) {
    const auto& [ca, ra] = *a.bound;
    const auto& [cb, rb] = *b.bound;
    const auto& small = ra <= rb ? *a.bound : *b.bound;
    const auto& big = ra <= rb ? *b.bound : *a.bound;
    if (abs_p(small.first - big.first, p) > big.second) return std::nullopt;
    out.bound = small;
  } else if (a.bound) {
    out.bound = a.bound;
  } else if (b.bound) {
    out.bound = b.bound;
  }
  for (const auto& h : a.holes) out.holes.push_back(h);
  for (const auto& h : b.holes) out.holes.push_back(h);

  // Normalize holes against the bound and each other.
  if (out.bound) {
    const auto& [bc, br] = *out.bound;
    std::vector<std::pair<Rat, LogMag>> hs;
    for (const auto& [hc, hr] : out.holes) {
      LogMag dist = abs_p(hc - bc, p);
      if (max_mag(dist, br) < hr) return std::nullopt;  // hole swallows bound
      bool meets = dist <= br || dist < hr;
      if (meets) hs.push_back({hc, hr});
    }
    out.holes = std::move(hs);
  }
  // Overlapping open discs are nested; keep maximal ones (larger first).
  std::sort(out.holes.begin(), out.holes.end(),
            [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<std::pair<Rat, LogMag>> merged;
  for (const auto& h : out.holes) {
    bool absorbed = false;
    for (const auto& k : merged)
      if (abs_p(h.first - k.first, p) < k.second) {
        absorbed = true;
        break;
      }
    if (!absorbed) merged.push_back(h);
  }
  out.holes = std::move(merged);
  return out;
}

Affinoid intersect(const Affinoid& A, const Affinoid& B, const Prime& p) {
  std::vector<AffPiece> pieces;
  for (const auto& a : A.pieces())
    for (const auto& b : B.pieces())
      if (auto piece = intersect_pieces(a, b, p)) pieces.push_back(*piece);
  return Affinoid(std::move(pieces));
}

} // namespace

Complementary complementary(const Affinoid& V, const std::vector<Rat>& margins, const Prime& p) {
  if (V.empty()) fail(errc::no_complement, "empty affinoid");
  Complementary out;
  out.discs = V.E();
  if (margins.size() != out.discs.size())
    fail(errc::out_of_range, "one margin per boundary disc required");
  for (const auto& m : margins)
    if (m <= 0) fail(errc::out_of_range, "margins must be positive");

  size_t idx = 0;
  std::vector<Affinoid> per_component;
  for (const auto& piece : V.pieces()) {
    std::vector<ClosedDisc> primes;
    for (const auto& d : piece.boundary_discs()) {
      const Rat& m = margins[idx++];
      ClosedDisc prime;
      if (d.complement) {
        prime = {d.center, LogMag::from_t(d.radius.t() - m), false};
      } else {
        prime = {d.center, LogMag::from_t(d.radius.t() + m), true};
      }
      primes.push_back(prime);
      out.primes.push_back(prime);
    }
    auto u = union_of_discs(primes, p);
    if (!u) fail(errc::no_complement, "complementary discs of a component cover P^1");
    per_component.push_back(std::move(*u));
  }

  Affinoid W = per_component.front();
  for (size_t i = 1; i < per_component.size(); ++i) W = intersect(W, per_component[i], p);
  if (W.empty()) fail(errc::no_complement, "complementary candidate is empty");

  // E(W) must be exactly the complementary disc family.
  auto ew = W.E();
  if (ew.size() != out.primes.size())
    fail(errc::no_complement, "complementary boundary discs do not biject");
  std::vector<bool> used(ew.size(), false);
  for (const auto& d : out.primes) {
    bool matched = false;
    for (size_t j = 0; j < ew.size(); ++j) {
      if (!used[j] && disc_eq(d, ew[j], p)) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) fail(errc::no_complement, "complementary boundary discs do not biject");
  }

  if (!covers_p1({&V, &W}, p)) fail(errc::no_complement, "V union V' is not all of P^1");
  out.complement = std::move(W);
  return out;
}

Complementary complementary(const Affinoid& V, const Rat& margin, const Prime& p) {
  return complementary(V, std::vector<Rat>(V.E().size(), margin), p);
}

std::vector<BerkPoint> segment_points(const Segment& s, int steps) {
  if (steps < 2) fail(errc::out_of_range, "steps >= 2 required");
  std::vector<BerkPoint> out;
  Rat span = s.t_end - s.t_start;
  for (int j = 0; j < steps; ++j) {
    Rat t = s.t_start + span * Rat(j) / Rat(steps - 1);
    out.push_back({s.center, LogMag::from_t(t)});
  }
  return out;
}

std::string to_string(const BerkPoint& x, const Prime& p) {
  std::ostringstream os;
  os << "x_{" << to_string(x.center) << "," << mag_to_string(x.radius, p) << "}";
  return os.str();
}

} // namespace berkspec
