#include "berkspec/ratfun.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace berkspec {

Poly Poly::monomial(const Rat& a, int k) {
  std::vector<Rat> c(k + 1, Rat(0));
  c[k] = a;
  return Poly(std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
  return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  std::vector<Rat> c(c_);
  for (auto& a : c) a = -a;
  return Poly(std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return Poly(std::move(c));
}

Poly Poly::operator*(const Rat& a) const {
  if (a == 0) return Poly();
  std::vector<Rat> c(c_);
  for (auto& x : c) x *= a;
  return Poly(std::move(c));
}

Rat Poly::eval(const Rat& x) const {
  Rat v(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
  return v;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(c));
}

Poly Poly::shifted(const Rat& a) const {
  // Horner on T -> T + a.
  Poly res;
  Poly lin({a, Rat(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) res = res * lin + Poly::constant(*it);
  return res;
}

Poly Poly::pow(unsigned k) const {
  Poly r = Poly::constant(Rat(1));
  Poly b = *this;
  while (k) {
    if (k & 1u) r = r * b;
    b = b * b;
    k >>= 1u;
  }
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(errc::out_of_range, "polynomial division by zero");
  Poly q;
  std::vector<Rat> r = a.c_;
  const int db = b.deg();
  const Rat lb = b.lc();
  std::vector<Rat> qc(std::max(0, a.deg() - db + 1), Rat(0));
  while (static_cast<int>(r.size()) - 1 >= db) {
    int dr = static_cast<int>(r.size()) - 1;
    Rat f = r.back() / lb;
    qc[dr - db] = f;
    for (int i = 0; i <= db; ++i) r[dr - db + i] -= f * b.c_[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return {Poly(std::move(qc)), Poly(std::move(r))};
}

Poly Poly::gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a * (Rat(1) / a.lc());
}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(errc::out_of_range, "zero denominator");
  Poly g = Poly::gcd(num_, den_);
  if (g.deg() >= 1) {
    num_ = Poly::divmod(num_, g).first;
    den_ = Poly::divmod(den_, g).first;
  }
  Rat lb = den_.lc();
  if (lb != 1) {
    num_ = num_ * (Rat(1) / lb);
    den_ = den_ * (Rat(1) / lb);
  }
}

RatFun RatFun::operator+(const RatFun& o) const {
  return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}
RatFun RatFun::operator-(const RatFun& o) const {
  return RatFun(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}
RatFun RatFun::operator-() const { return RatFun(-num_, den_); }
RatFun RatFun::operator*(const RatFun& o) const { return RatFun(num_ * o.num_, den_ * o.den_); }
RatFun RatFun::operator/(const RatFun& o) const {
  if (o.is_zero()) fail(errc::out_of_range, "division by zero rational function");
  return RatFun(num_ * o.den_, den_ * o.num_);
}
RatFun RatFun::operator*(const Rat& a) const { return RatFun(num_ * a, den_); }

RatFun RatFun::derivative() const {
  return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rat RatFun::eval(const Rat& x) const {
  Rat d = den_.eval(x);
  if (d == 0) fail(errc::pole_at_point, "evaluation at pole " + to_string(x));
  return num_.eval(x) / d;
}

RatFun PrincipalPart::to_ratfun() const {
  RatFun sum;
  Poly lin({-pole, Rat(1)});
  Poly powk = Poly::constant(Rat(1));
  for (size_t k = 0; k < coeffs.size(); ++k) {
    powk = powk * lin;
    if (coeffs[k] != 0) sum = sum + RatFun(Poly::constant(coeffs[k]), powk);
  }
  return sum;
}

RatFun PFDecomp::reassemble() const {
  RatFun sum = RatFun::from_poly(polynomial_part);
  for (const auto& pp : principal_parts) sum = sum + pp.to_ratfun();
  return sum;
}

LogMag poly_gauss(const Poly& P, const Rat& center, const LogMag& radius, const Prime& p) {
  if (P.is_zero()) return LogMag::zero();
  Poly S = P.shifted(center);
  if (radius.is_zero()) return abs_p(S.coeff(0), p);
  LogMag best = LogMag::zero();
  for (int i = 0; i <= S.deg(); ++i) {
    const Rat& a = S.coeff(i);
    if (a == 0) continue;
    LogMag term = LogMag::from_t(Rat(vp_int(a, p)) + Rat(i) * radius.t());
    best = max_mag(best, term);
  }
  return best;
}

LogMag gauss_norm(const RatFun& f, const Rat& center, const LogMag& radius, const Prime& p) {
  LogMag dv = poly_gauss(f.den(), center, radius, p);
  if (dv.is_zero()) fail(errc::pole_at_type_one_point, "denominator vanishes at type-1 point");
  return poly_gauss(f.num(), center, radius, p) / dv;
}

namespace {

// Rational roots of P with multiplicities; the leftover cofactor has no
// rational root. P is consumed.
std::vector<std::pair<Rat, int>> rational_roots(Poly P) {
  std::vector<std::pair<Rat, int>> roots;
  if (P.deg() < 1) return roots;

  auto divide_out = [&](const Rat& r) {
    int mult = 0;
    Poly lin({-r, Rat(1)});
    for (;;) {
      auto [q, rem] = Poly::divmod(P, lin);
      if (!rem.is_zero()) break;
      P = q;
      ++mult;
    }
    if (mult) roots.emplace_back(r, mult);
  };

  divide_out(Rat(0));
  while (P.deg() == 1) {
    divide_out(-P.coeff(0) / P.coeff(1));
  }
  if (P.deg() < 1) return roots;

  // Clear denominators to a primitive integer polynomial; candidates are
  // +-(divisor of constant)/(divisor of leading).
  mpz_class lcmden(1);
  for (const auto& a : P.coeffs()) mpz_lcm(lcmden.get_mpz_t(), lcmden.get_mpz_t(), a.get_den_mpz_t());
  std::vector<mpz_class> ic;
  for (const auto& a : P.coeffs()) ic.push_back(mpz_class(a * Rat(lcmden)));

  auto divisors = [](mpz_class n) {
    n = abs(n);
    std::vector<mpz_class> ds;
    for (mpz_class d(1); d * d <= n; ++d)
      if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
        ds.push_back(d);
        ds.push_back(n / d);
      }
    return ds;
  };

  for (;;) {
    if (P.deg() < 1) break;
    if (P.deg() == 1) {
      divide_out(-P.coeff(0) / P.coeff(1));
      continue;
    }
    // Recompute integer coefficients for the current cofactor.
    mpz_class l(1);
    for (const auto& a : P.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a.get_den_mpz_t());
    std::vector<mpz_class> C;
    for (const auto& a : P.coeffs()) C.push_back(mpz_class(a * Rat(l)));
    bool found = false;
    for (const auto& dn : divisors(C.front())) {
      if (found) break;
      for (const auto& dd : divisors(C.back())) {
        Rat cand(dn, dd);
        cand.canonicalize();
        if (P.eval(cand) == 0) {
          divide_out(cand);
          found = true;
          break;
        }
        if (P.eval(-cand) == 0) {
          divide_out(-cand);
          found = true;
          break;
        }
      }
    }
    if (!found) break;
  }
  if (P.deg() >= 1)
    fail(errc::irreducible_denominator,
         "denominator factor without rational roots: " + to_string(P));
  return roots;
}

// Principal-part coefficients of rem/den at pole q of multiplicity m,
// where den = (T-q)^m * g, g(q) != 0: Taylor-expand rem/g at q to order m-1
// by truncated power series division.
std::vector<Rat> principal_coeffs(const Poly& rem, const Poly& den, const Rat& q, int m) {
  Poly lin({-q, Rat(1)});
  Poly g = den;
  for (int i = 0; i < m; ++i) g = Poly::divmod(g, lin).first;
  Poly ns = rem.shifted(q);
  Poly gs = g.shifted(q);
  // series division ns/gs mod u^m
  std::vector<Rat> tau(m, Rat(0));
  Rat g0 = gs.coeff(0);
  for (int j = 0; j < m; ++j) {
    Rat acc = ns.coeff(j);
    for (int k = 1; k <= j; ++k) acc -= gs.coeff(k) * tau[j - k];
    tau[j] = acc / g0;
  }
  // tau[j] is the coefficient of (T-q)^(j-m): coeffs[k-1] multiplies (T-q)^(-k).
  std::vector<Rat> coeffs(m, Rat(0));
  for (int j = 0; j < m; ++j) coeffs[m - 1 - j] = tau[j];
  return coeffs;
}

} // namespace

PFDecomp partial_fractions(const RatFun& f) {
  PFDecomp out;
  auto [q, rem] = Poly::divmod(f.num(), f.den());
  out.polynomial_part = q;
  if (f.den().deg() == 0) return out;
  auto roots = rational_roots(f.den());
  int total = 0;
  for (auto& [r, m] : roots) total += m;
  if (total != f.den().deg())
    fail(errc::irreducible_denominator, "denominator does not split over Q: " + to_string(f.den()));
  for (auto& [pole, m] : roots) {
    PrincipalPart pp;
    pp.pole = pole;
    pp.coeffs = principal_coeffs(rem, f.den(), pole, m);
    while (!pp.coeffs.empty() && pp.coeffs.back() == 0) pp.coeffs.pop_back();
    if (!pp.coeffs.empty()) out.principal_parts.push_back(std::move(pp));
  }
  std::sort(out.principal_parts.begin(), out.principal_parts.end(),
            [](const PrincipalPart& a, const PrincipalPart& b) { return a.pole < b.pole; });
  return out;
}

std::vector<Rat> poles_on_circle(const RatFun& f, const Rat& center, const LogMag& radius,
                                 const Prime& p) {
  std::vector<Rat> on;
  if (radius.is_zero()) return on;
  for (const auto& pp : partial_fractions(f).principal_parts) {
    Rat d = pp.pole - center;
    if (d != 0 && abs_p(d, p) == radius) on.push_back(pp.pole);
  }
  return on;
}

LaurentSplit laurent_split(const RatFun& f, const Rat& center, const LogMag& radius,
                           const Prime& p, const std::vector<CirclePolicy>& assignments) {
  if (radius.is_zero()) fail(errc::invalid_interval, "laurent_split needs positive radius");
  PFDecomp pf = partial_fractions(f);

  LaurentSplit out;
  out.outer = RatFun::from_poly(pf.polynomial_part);
  size_t next_on_circle = 0;
  for (const auto& pp : pf.principal_parts) {
    LogMag d = abs_p(pp.pole - center, p);
    bool inside;
    if (d < radius) {
      inside = true;
    } else if (d > radius) {
      inside = false;
    } else {
      out.on_circle_poles.push_back(pp.pole);
      if (next_on_circle >= assignments.size())
        fail(errc::pole_on_circle, "pole " + to_string(pp.pole) + " on expansion circle");
      inside = assignments[next_on_circle++] == CirclePolicy::inside;
    }
    if (inside)
      out.inner.push_back(pp);
    else
      out.outer = out.outer + pp.to_ratfun();
  }
  out.constant = out.outer.eval(center);
  out.remainder = f - RatFun::constant(out.constant);
  out.remainder_norm = out.remainder.is_zero() ? LogMag::zero()
                                               : gauss_norm(out.remainder, center, radius, p);
  return out;
}

LogMag pushforward_center_oracle(const RatFun& f, const Rat& center, const LogMag& radius,
                                 const Prime& p, int samples, unsigned seed) {
  if (samples < 1) fail(errc::out_of_range, "samples >= 1 required");
  std::vector<Rat> betas;
  auto on = poles_on_circle(f, center, radius, p);
  std::vector<CirclePolicy> assign(on.size(), CirclePolicy::inside);
  betas.push_back(laurent_split(f, center, radius, p, assign).constant);

  // Deterministic tau grid: units u scaled by powers p^k with |u p^k| <= radius.
  long kmin = radius.is_zero() ? 0 : rat_ceil_long(radius.t());
  std::vector<long> units;
  for (long u = 1; u < p.value() && static_cast<long>(units.size()) < 3; ++u)
    units.push_back(u + static_cast<long>(seed % 3) * p.value());
  if (!f.has_pole_at(center)) betas.push_back(f.eval(center));
  for (int s = 0; s < samples; ++s) {
    for (long u : units) {
      Rat tau = Rat(u) * [&] {
        Rat pw(1);
        for (long i = 0; i < kmin + s; ++i) pw *= p.value();
        return Rat(1) / pw;
      }();
      if (vp_int(Rat(u), p) != 0) continue;
      Rat x = center + tau;
      if (f.has_pole_at(x)) continue;
      betas.push_back(f.eval(x));
    }
  }

  LogMag best;
  bool first = true;
  for (const auto& b : betas) {
    RatFun g = f - RatFun::constant(b);
    LogMag n = g.is_zero() ? LogMag::zero() : gauss_norm(g, center, radius, p);
    if (first || n < best) {
      best = n;
      first = false;
    }
  }
  return best;
}

std::string to_string(const Poly& P) {
  if (P.is_zero()) return "0";
  std::ostringstream os;
  bool firstTerm = true;
  for (int i = P.deg(); i >= 0; --i) {
    Rat a = P.coeff(i);
    if (a == 0) continue;
    if (!firstTerm) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    Rat aa = abs(a);
    if (aa != 1 || i == 0) os << to_string(aa);
    if (i >= 1) {
      if (aa != 1) os << "*";
      os << "T";
      if (i > 1) os << "^" << i;
    }
    firstTerm = false;
  }
  return os.str();
}

std::string to_string(const RatFun& f) {
  if (f.den().deg() == 0) return to_string(f.num());
  return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

} // namespace berkspec
