#ifndef BERKSPEC_RATFUN_HPP
#define BERKSPEC_RATFUN_HPP

#include <optional>
#include <string>
#include <vector>

#include "berkspec/scalars.hpp"

namespace berkspec {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
class Poly {
public:
  Poly() = default;
  Poly(std::initializer_list<Rat> cs) : c_(cs) { trim(); }
  explicit Poly(std::vector<Rat> cs) : c_(std::move(cs)) { trim(); }
  static Poly constant(const Rat& a) { return Poly({a}); }
  static Poly variable() { return Poly({Rat(0), Rat(1)}); }  // T
  static Poly monomial(const Rat& a, int k);

  int deg() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rat(0); }
  Rat lc() const { return is_zero() ? Rat(0) : c_.back(); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& a) const;
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Rat eval(const Rat& x) const;
  Poly derivative() const;
  /// P(T + a): Taylor shift.
  Poly shifted(const Rat& a) const;
  Poly pow(unsigned k) const;

  /// Quotient and remainder; divisor must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  /// Monic gcd.
  static Poly gcd(Poly a, Poly b);

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rat> c_;
};

/// Rational function over Q: denominator monic, gcd(num, den) = 1.
class RatFun {
public:
  RatFun() : num_(), den_({Rat(1)}) {}
  RatFun(Poly num, Poly den);
  static RatFun constant(const Rat& a) { return RatFun(Poly::constant(a), Poly::constant(Rat(1))); }
  static RatFun variable() { return RatFun(Poly::variable(), Poly::constant(Rat(1))); }
  static RatFun from_poly(const Poly& p) { return RatFun(p, Poly::constant(Rat(1))); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.deg() <= 0 && den_.deg() == 0; }

  RatFun operator+(const RatFun& o) const;
  RatFun operator-(const RatFun& o) const;
  RatFun operator-() const;
  RatFun operator*(const RatFun& o) const;
  RatFun operator/(const RatFun& o) const;
  RatFun operator+(const Rat& a) const { return *this + constant(a); }
  RatFun operator-(const Rat& a) const { return *this - constant(a); }
  RatFun operator*(const Rat& a) const;
  bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }

  RatFun derivative() const;
  /// Exact value at x; throws pole_at_point if x is a pole.
  Rat eval(const Rat& x) const;
  bool has_pole_at(const Rat& x) const { return den_.eval(x) == 0; }

private:
  Poly num_, den_;
};

/// One pole with its principal-part coefficients: sum of
/// coeffs[k-1] * (T - pole)^(-k) for k = 1..m.
struct PrincipalPart {
  Rat pole;
  std::vector<Rat> coeffs;
  RatFun to_ratfun() const;
};

/// Mittag-Leffler split of a rational function: polynomial part plus one
/// principal part per (Q-rational) pole. Reassembles to the input exactly.
struct PFDecomp {
  Poly polynomial_part;
  std::vector<PrincipalPart> principal_parts;
  RatFun reassemble() const;
};

/// Gauss-norm exponent of a polynomial at the point x_{center,radius}:
/// t = min_i (v_p(a_i) + i * t_radius) on the shift to the center.
LogMag poly_gauss(const Poly& P, const Rat& center, const LogMag& radius, const Prime& p);

/// |f| at x_{center,radius}; multiplicative. Radius zero means exact
/// evaluation and requires the center not be a pole.
LogMag gauss_norm(const RatFun& f, const Rat& center, const LogMag& radius, const Prime& p);

/// Exact partial fractions; requires the denominator to split over Q.
PFDecomp partial_fractions(const RatFun& f);

/// How to classify a pole lying exactly on the expansion circle.
enum class CirclePolicy { inside, outside };

/// Laurent split of f on the circle |T - center| = radius: the constant
/// coefficient, the inside principal parts (negative powers only), and the
/// outside part (poles beyond the circle plus the polynomial part).
struct LaurentSplit {
  Rat constant;                              // Laurent coefficient of (T-center)^0
  std::vector<PrincipalPart> inner;          // poles with |q-center| < radius
  RatFun outer;                              // remaining analytic part
  RatFun remainder;                          // f - constant
  LogMag remainder_norm;                     // |f - constant| at x_{center,radius}
  std::vector<Rat> on_circle_poles;          // poles forced by `assignments`
};

/// Poles exactly on the circle |T-center| = radius.
std::vector<Rat> poles_on_circle(const RatFun& f, const Rat& center, const LogMag& radius,
                                 const Prime& p);

/// Split with every on-circle pole classified by `assignments` (parallel to
/// poles_on_circle order). Without assignments an on-circle pole throws.
LaurentSplit laurent_split(const RatFun& f, const Rat& center, const LogMag& radius,
                           const Prime& p,
                           const std::vector<CirclePolicy>& assignments = {});

/// Grid-search certificate that the Laurent constant minimizes
/// beta -> |f - beta| at x_{center,radius}. Returns the least norm found
/// over f(center + tau) samples and the Laurent constant itself.
LogMag pushforward_center_oracle(const RatFun& f, const Rat& center, const LogMag& radius,
                                 const Prime& p, int samples, unsigned seed = 1);

std::string to_string(const Poly& P);
std::string to_string(const RatFun& f);

} // namespace berkspec

#endif
