#include "berkspec/compacts.hpp"

#include <algorithm>
#include <sstream>

namespace berkspec {

namespace {

bool orbit_singleton(const Orbit& o) {
  // Integer translates land on the same point once the radius reaches 1.
  return !o.zp_closed || (!o.radius.is_zero() && o.radius.t() <= 0);
}

} // namespace

bool orbit_eq(const Orbit& a, const Orbit& b, const Prime& p) {
  if (a.radius != b.radius) return false;
  Rat d = a.center - b.center;
  if (a.zp_closed && b.zp_closed) return dist_zp(d, p) <= a.radius;
  if (!a.zp_closed && !b.zp_closed) return abs_p(d, p) <= a.radius;
  // Mixed: equal only if the zp orbit is a one-point set naming the same point.
  const Orbit& zp = a.zp_closed ? a : b;
  if (!orbit_singleton(zp)) return false;
  return dist_zp(d, p) <= a.radius;
}

bool orbit_disjoint(const Orbit& a, const Orbit& b, const Prime& p) {
  if (a.radius != b.radius) return true;  // point sets at distinct heights
  Rat d = a.center - b.center;
  LogMag sep = (!a.zp_closed && !b.zp_closed) ? abs_p(d, p) : dist_zp(d, p);
  return sep > a.radius;
}

CompactSet::CompactSet(std::vector<Orbit> orbits, const Prime& p) {
  for (const auto& o : orbits) add(o, p);
}

void CompactSet::add(const Orbit& o, const Prime& p) {
  for (const auto& have : orbits_)
    if (orbit_eq(have, o, p)) return;
  orbits_.push_back(o);
}

bool compact_eq(const CompactSet& a, const CompactSet& b, const Prime& p) {
  auto subset = [&](const CompactSet& x, const CompactSet& y) {
    for (const auto& ox : x.orbits()) {
      bool found = false;
      for (const auto& oy : y.orbits()) found = found || orbit_eq(ox, oy, p);
      if (!found) return false;
    }
    return true;
  };
  return subset(a, b) && subset(b, a);
}

CompactSet compact_union(const CompactSet& a, const CompactSet& b, const Prime& p) {
  CompactSet u = a;
  for (const auto& o : b.orbits()) u.add(o, p);
  return u;
}

bool RegionPiece::contains(const BerkPoint& x, const Prime& p) const {
  LogMag v = coord_distance(x, center, p);
  switch (kind) {
    case Kind::open_disc: return v < r1;
    case Kind::open_annulus: return r1 < v && v < r2;
    case Kind::closed_disc_complement: return v > r1;
  }
  return false;
}

bool region_contains_point(const OpenRegion& U, const BerkPoint& x, const Prime& p) {
  for (const auto& piece : U)
    if (piece.contains(x, p)) return true;
  return false;
}

namespace {

// Translation sets {g in Z_p : x_{c+g,sigma} in piece}, encoded by integer
// valuation thresholds on v_p(g - anchor).
struct GammaSet {
  enum class Kind { empty, all, ball, coball, shell } kind;
  Rat anchor;  // the piece center minus the orbit center
  long lo = 0; // ball/shell: v_p >= lo
  long hi = 0; // coball/shell: v_p <= hi
};

// v_p >= L encodes |g - anchor| < s, with L the least integer exceeding t_s.
long strict_level(const Rat& t) { return rat_floor_long(t) + 1; }
// v_p <= U encodes |g - anchor| > s.
long strict_colevel(const Rat& t) { return rat_ceil_long(t) - 1; }

GammaSet gamma_set(const Orbit& o, const RegionPiece& piece, const Prime& p) {
  GammaSet g;
  g.anchor = piece.center - o.center;
  const LogMag& sigma = o.radius;
  switch (piece.kind) {
    case RegionPiece::Kind::open_disc: {
      if (sigma >= piece.r1) return {GammaSet::Kind::empty, g.anchor};
      g.kind = GammaSet::Kind::ball;
      g.lo = strict_level(piece.r1.t());
      return g;
    }
    case RegionPiece::Kind::open_annulus: {
      if (sigma >= piece.r2) return {GammaSet::Kind::empty, g.anchor};
      long lo = strict_level(piece.r2.t());
      if (sigma > piece.r1) {
        g.kind = GammaSet::Kind::ball;
        g.lo = lo;
        return g;
      }
      g.kind = GammaSet::Kind::shell;
      g.lo = lo;
      g.hi = strict_colevel(piece.r1.t());
      if (g.hi < g.lo) return {GammaSet::Kind::empty, g.anchor};
      return g;
    }
    case RegionPiece::Kind::closed_disc_complement: {
      if (sigma > piece.r1) return {GammaSet::Kind::all, g.anchor};
      g.kind = GammaSet::Kind::coball;
      g.hi = strict_colevel(piece.r1.t());
      return g;
    }
  }
  return {GammaSet::Kind::empty, g.anchor};
}

// v_p(q - a) as extended integer, LONG_MAX for q == a.
long vp_diff(const Rat& q, const mpz_class& a, const Prime& p) {
  Rat d = q - Rat(a);
  if (d == 0) return std::numeric_limits<long>::max();
  return vp_int(d, p);
}

bool node_subset(const GammaSet& s, const mpz_class& a, long k, const Prime& p) {
  switch (s.kind) {
    case GammaSet::Kind::all: return true;
    case GammaSet::Kind::empty: return false;
    case GammaSet::Kind::ball: {
      long m = vp_diff(s.anchor, a, p);
      return std::min(m, k) >= s.lo;
    }
    case GammaSet::Kind::coball: {
      long m = vp_diff(s.anchor, a, p);
      return m < k && m <= s.hi;
    }
    case GammaSet::Kind::shell: {
      long m = vp_diff(s.anchor, a, p);
      return m >= s.lo && m < k && m <= s.hi;
    }
  }
  return false;
}

bool node_intersects(const GammaSet& s, const mpz_class& a, long k, const Prime& p) {
  switch (s.kind) {
    case GammaSet::Kind::all: return true;
    case GammaSet::Kind::empty: return false;
    case GammaSet::Kind::ball: {
      long m = vp_diff(s.anchor, a, p);
      return m >= std::min(s.lo, k);
    }
    case GammaSet::Kind::coball: {
      long m = vp_diff(s.anchor, a, p);
      return std::min(m, k) <= s.hi;
    }
    case GammaSet::Kind::shell: {
      long m = vp_diff(s.anchor, a, p);
      if (m < std::min(s.lo, k)) return false;
      // Some element of the node reaches valuation s.lo..s.hi exactly.
      return std::min(m, k) <= s.hi;
    }
  }
  return false;
}

bool covered(const std::vector<GammaSet>& sets, const mpz_class& a, long k, long kmax,
             const Prime& p) {
  std::vector<const GammaSet*> live;
  for (const auto& s : sets) {
    if (node_subset(s, a, k, p)) return true;
    if (node_intersects(s, a, k, p)) live.push_back(&s);
  }
  if (live.empty()) return false;
  if (k >= kmax) return false;
  mpz_class step;
  mpz_ui_pow_ui(step.get_mpz_t(), p.value(), k);
  std::vector<GammaSet> next;
  for (const auto* s : live) next.push_back(*s);
  for (long r = 0; r < p.value(); ++r) {
    if (!covered(next, a + step * r, k + 1, kmax, p)) return false;
  }
  return true;
}

} // namespace

bool orbit_subset(const Orbit& o, const OpenRegion& U, const Prime& p) {
  if (orbit_singleton(o)) return region_contains_point(U, {o.center, o.radius}, p);
  std::vector<GammaSet> sets;
  long kmax = 1;
  for (const auto& piece : U) {
    GammaSet s = gamma_set(o, piece, p);
    if (s.kind == GammaSet::Kind::empty) continue;
    if (s.kind == GammaSet::Kind::all) return true;
    sets.push_back(s);
    long level = 0;
    if (s.kind == GammaSet::Kind::ball) level = s.lo;
    else if (s.kind == GammaSet::Kind::coball) level = s.hi + 1;
    else level = std::max(s.lo, s.hi + 1);
    kmax = std::max(kmax, level + 1);
  }
  if (sets.empty()) return false;
  return covered(sets, mpz_class(0), 0, std::min(kmax, 64L), p);
}

bool orbit_meets(const Orbit& o, const OpenRegion& U, const Prime& p) {
  if (orbit_singleton(o)) return region_contains_point(U, {o.center, o.radius}, p);
  for (const auto& piece : U) {
    GammaSet s = gamma_set(o, piece, p);
    if (s.kind == GammaSet::Kind::all) return true;
    if (s.kind == GammaSet::Kind::empty) continue;
    // Achievable |g - anchor| over g in Z_p: the single value |anchor| when
    // |anchor| > 1, otherwise {0} and every p^-j with j >= 0.
    LogMag av = abs_p(s.anchor, p);
    bool far = !av.is_zero() && av.t() < 0;
    auto achievable_ge = [&](long lo) {  // exists value with v_p >= lo
      if (far) return vp_int(s.anchor, p) >= lo;
      return true;  // arbitrarily deep values exist, including infinity
    };
    auto achievable_range = [&](long lo, long hi) {  // exists v_p in [lo,hi]
      if (hi < lo) return false;
      if (far) {
        long v = vp_int(s.anchor, p);
        return lo <= v && v <= hi;
      }
      return hi >= std::max(lo, 0L);  // j >= 0 achievable
    };
    switch (s.kind) {
      case GammaSet::Kind::ball:
        if (achievable_ge(s.lo)) return true;
        break;
      case GammaSet::Kind::coball:
        if (far) {
          if (vp_int(s.anchor, p) <= s.hi) return true;
        } else if (s.hi >= 0) {
          return true;
        }
        break;
      case GammaSet::Kind::shell:
        if (achievable_range(s.lo, s.hi)) return true;
        break;
      default: break;
    }
  }
  return false;
}

bool compact_subset(const CompactSet& K, const OpenRegion& U, const Prime& p) {
  for (const auto& o : K.orbits())
    if (!orbit_subset(o, U, p)) return false;
  return true;
}

bool compact_meets(const CompactSet& K, const OpenRegion& U, const Prime& p) {
  for (const auto& o : K.orbits())
    if (orbit_meets(o, U, p)) return true;
  return false;
}

NeighborhoodReport in_neighborhood(const CompactSet& K, const OpenRegion& U,
                                   const std::vector<OpenRegion>& witnesses, const Prime& p) {
  NeighborhoodReport rep;
  rep.contained = compact_subset(K, U, p);
  rep.ok = rep.contained;
  for (const auto& w : witnesses) {
    bool met = compact_meets(K, w, p);
    rep.witness_met.push_back(met);
    rep.ok = rep.ok && met;
  }
  return rep;
}

ConvergenceReport converges(const std::function<CompactSet(int)>& seq, const CompactSet& limit,
                            const std::vector<BasisEntry>& basis, int l_max, const Prime& p) {
  for (const auto& entry : basis)
    if (!in_neighborhood(limit, entry.U, entry.witnesses, p).ok)
      fail(errc::basis_not_neighborhood, "limit set fails a basis neighborhood");

  std::vector<CompactSet> values;
  for (int l = 0; l <= l_max; ++l) values.push_back(seq(l));

  ConvergenceReport rep;
  rep.all_converged = true;
  for (const auto& entry : basis) {
    ConvergenceReport::PerBasis pb;
    int first_bad_after = -1;
    for (int l = 0; l <= l_max; ++l)
      if (!in_neighborhood(values[l], entry.U, entry.witnesses, p).ok) first_bad_after = l;
    if (first_bad_after == l_max) {
      pb.converged = false;
    } else {
      pb.converged = true;
      pb.l0 = first_bad_after + 1;
    }
    rep.per_basis.push_back(pb);
    rep.all_converged = rep.all_converged && pb.converged;
  }
  return rep;
}

Contour contour(const CompactSet& K, const Rat& inner_margin, const Rat& outer_margin,
                const Prime& p) {
  if (K.empty()) fail(errc::out_of_range, "contour of empty set");
  if (inner_margin <= 0 || outer_margin <= 0)
    fail(errc::out_of_range, "contour margins must be positive");

  struct DiscPair {
    Rat center;
    Rat t_out;
    Rat t_in;
  };
  std::vector<DiscPair> discs;

  for (const auto& o : K.orbits()) {
    if (orbit_singleton(o)) {
      Rat t_out, t_in;
      if (o.radius.is_zero()) {
        if (inner_margin <= outer_margin)
          fail(errc::margin_too_large, "type-1 point needs inner_margin > outer_margin");
        t_out = outer_margin;
        t_in = inner_margin;
      } else {
        if (outer_margin <= inner_margin)
          fail(errc::margin_too_large, "isolated point needs outer_margin > inner_margin");
        t_out = o.radius.t() - outer_margin;
        t_in = o.radius.t() - inner_margin;
      }
      discs.push_back({o.center, t_out, t_in});
      continue;
    }
    // Genuine orbit: radius < 1, covered at residue depth k by p^k discs.
    Rat t_in = inner_margin, t_out = outer_margin;
    if (t_out >= t_in)
      fail(errc::margin_too_large, "orbit cover needs inner_margin > outer_margin");
    if (!o.radius.is_zero() && t_in >= o.radius.t())
      fail(errc::margin_too_large, "inner margin reaches the orbit radius");
    long k = rat_floor_long(t_in) + 1;
    if (t_out <= Rat(k - 1))
      fail(errc::margin_too_large, "outer margin crosses the residue depth");
    mpz_class count;
    mpz_ui_pow_ui(count.get_mpz_t(), p.value(), k);
    for (mpz_class i(0); i < count; ++i)
      discs.push_back({o.center + Rat(i), t_out, t_in});
  }

  for (size_t i = 0; i < discs.size(); ++i)
    for (size_t j = i + 1; j < discs.size(); ++j) {
      LogMag d = abs_p(discs[i].center - discs[j].center, p);
      LogMag ri = LogMag::from_t(discs[i].t_out), rj = LogMag::from_t(discs[j].t_out);
      if (d <= max_mag(ri, rj))
        fail(errc::margin_too_large, "fattened discs of distinct components touch");
    }

  Contour out;
  std::vector<AffPiece> upieces;
  AffPiece vpiece;
  for (const auto& d : discs) {
    AffPiece u;
    u.bound = {d.center, LogMag::from_t(d.t_out)};
    upieces.push_back(u);
    vpiece.holes.push_back({d.center, LogMag::from_t(d.t_in)});
    out.intersection.push_back({d.center, LogMag::from_t(d.t_in), LogMag::from_t(d.t_out)});
  }
  out.U = Affinoid(std::move(upieces));
  out.V = Affinoid({vpiece});
  return out;
}

std::string to_string(const Orbit& o, const Prime& p) {
  std::ostringstream os;
  if (o.zp_closed && o.radius.is_zero()) {
    os << "{" << to_string(o.center) << "}+Z_p";
  } else if (o.zp_closed && o.radius.t() > 0) {
    os << "{x_{" << to_string(o.center) << "," << mag_to_string(o.radius, p) << "}}+Z_p";
  } else {
    os << "{x_{" << to_string(o.center) << "," << mag_to_string(o.radius, p) << "}}";
  }
  return os.str();
}

std::string to_string(const CompactSet& K, const Prime& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& o : K.orbits()) {
    if (!first) os << " u ";
    os << to_string(o, p);
    first = false;
  }
  if (first) os << "{}";
  return os.str();
}

} // namespace berkspec
