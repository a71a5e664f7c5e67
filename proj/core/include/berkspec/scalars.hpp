#ifndef BERKSPEC_SCALARS_HPP
#define BERKSPEC_SCALARS_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>

#include "berkspec/errors.hpp"

namespace berkspec {

/// Exact rational scalar. All field arithmetic in the library runs over Q,
/// viewed inside C_p through the p-adic absolute value.
using Rat = mpq_class;

Rat rat_from_string(const std::string& s);
std::string to_string(const Rat& q);

/// Residual characteristic, validated prime, fixed per computation session.
class Prime {
public:
  explicit Prime(long p);
  long value() const { return p_; }
  bool operator==(const Prime& o) const { return p_ == o.p_; }

private:
  long p_;
};

/// Magnitude p^(-t) stored as the exponent t in Q union {+infinity}.
/// t = +infinity encodes magnitude zero. Multiplying magnitudes adds
/// exponents; comparing magnitudes reverses the exponent order.
class LogMag {
public:
  LogMag() : zero_(true) {}  // magnitude 0
  static LogMag zero() { return LogMag(); }
  static LogMag one() { return from_t(0); }
  static LogMag from_t(const Rat& t) {
    LogMag m;
    m.zero_ = false;
    m.t_ = t;
    return m;
  }

  bool is_zero() const { return zero_; }
  /// Exponent; only valid for nonzero magnitudes.
  const Rat& t() const {
    if (zero_) fail(errc::out_of_range, "t() of zero magnitude");
    return t_;
  }

  LogMag operator*(const LogMag& o) const {
    if (zero_ || o.zero_) return zero();
    return from_t(t_ + o.t_);
  }
  LogMag operator/(const LogMag& o) const {
    if (o.zero_) fail(errc::out_of_range, "division by zero magnitude");
    if (zero_) return zero();
    return from_t(t_ - o.t_);
  }
  /// Magnitude raised to a rational power e (e > 0 when the base is zero).
  LogMag pow(const Rat& e) const {
    if (zero_) {
      if (e <= 0) fail(errc::out_of_range, "zero magnitude to nonpositive power");
      return zero();
    }
    return from_t(t_ * e);
  }

  /// Three-way comparison of magnitudes: -1 if *this < o, 0 equal, 1 greater.
  int cmp(const LogMag& o) const {
    if (zero_ && o.zero_) return 0;
    if (zero_) return -1;
    if (o.zero_) return 1;
    return ::cmp(o.t_, t_) > 0 ? 1 : (o.t_ == t_ ? 0 : -1);
  }
  bool operator==(const LogMag& o) const { return cmp(o) == 0; }
  bool operator!=(const LogMag& o) const { return cmp(o) != 0; }
  bool operator<(const LogMag& o) const { return cmp(o) < 0; }
  bool operator<=(const LogMag& o) const { return cmp(o) <= 0; }
  bool operator>(const LogMag& o) const { return cmp(o) > 0; }
  bool operator>=(const LogMag& o) const { return cmp(o) >= 0; }

private:
  bool zero_;
  Rat t_;
};

LogMag max_mag(const LogMag& a, const LogMag& b);
LogMag min_mag(const LogMag& a, const LogMag& b);

/// p-adic valuation of q as extended integer; v_p(0) = +infinity is encoded
/// as the zero magnitude. For q != 0 the result is p^(-v) with v integral.
LogMag abs_p(const Rat& q, const Prime& p);

/// Integer p-adic valuation; q must be nonzero.
long vp_int(const Rat& q, const Prime& p);

/// omega = |p|^(1/(p-1)), the exp/log convergence radius: t = 1/(p-1).
LogMag omega(const Prime& p);

/// Distance from q to Z_p: zero magnitude when v_p(q) >= 0, else |q|.
LogMag dist_zp(const Rat& q, const Prime& p);

/// Human rendering "p^(-num/den)" / "0" / "1".
std::string mag_to_string(const LogMag& m, const Prime& p);

// Rational helpers shared across modules.
Rat rat_floor(const Rat& q);  // greatest integer <= q, as a Rat
long rat_floor_long(const Rat& q);
long rat_ceil_long(const Rat& q);

} // namespace berkspec

#endif
