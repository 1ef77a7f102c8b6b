#ifndef PW_PADIC_HPP
#define PW_PADIC_HPP

#include "pw/arith.hpp"

#include <string>

namespace pw {

class PAdicInt;

/// An element of Q_p known to finite precision.
///
/// A nonzero value is p^valuation * unit, with unit in [1, p^precision)
/// coprime to p, and is known modulo p^(valuation + precision).
///
/// Zero carries valuation kInfinity. For zero, precision() is the absolute
/// precision: the value is only known to lie in p^precision Z_p. An exact
/// zero has absolute precision kInfinity.
class PAdicNumber {
public:
  PAdicNumber() = default;

  static PAdicNumber zero(long p, long absolute_precision = kInfinity);
  /// p^valuation * unit with relative precision digits; unit is reduced and
  /// must be coprime to p.
  static PAdicNumber from_parts(long p, long valuation, const Int& unit, long precision);

  long prime() const { return p_; }
  long valuation() const { return v_; }
  const Int& unit() const { return unit_; }
  long precision() const { return n_; }

  bool is_zero() const { return is_infinite(v_); }
  bool is_exact_zero() const { return is_zero() && is_infinite(n_); }
  /// Exponent e such that the value is known modulo p^e.
  long absolute_precision() const { return is_zero() ? n_ : v_ + n_; }

  /// The representative p^v * unit as a rational (0 for zero).
  Rat to_rat() const;

  /// Same value with precision lowered to `relative` digits (never raised).
  PAdicNumber with_precision(long relative) const;

  friend PAdicNumber operator+(const PAdicNumber& a, const PAdicNumber& b);
  friend PAdicNumber operator-(const PAdicNumber& a, const PAdicNumber& b);
  friend PAdicNumber operator*(const PAdicNumber& a, const PAdicNumber& b);
  friend PAdicNumber operator/(const PAdicNumber& a, const PAdicNumber& b);
  PAdicNumber operator-() const;

  /// Structural equality (prime, valuation, unit, precision).
  friend bool operator==(const PAdicNumber& a, const PAdicNumber& b);

  /// True when a - b is zero at the combined precision.
  friend bool congruent(const PAdicNumber& a, const PAdicNumber& b);

  std::string str() const;

private:
  long p_ = 2;
  long v_ = kInfinity;
  Int unit_ = 0;
  long n_ = kInfinity;
};

/// An element of Z_p known modulo p^precision: the coset residue + p^N Z_p.
class PAdicInt {
public:
  PAdicInt() = default;
  PAdicInt(long p, const Int& residue, long precision);

  long prime() const { return p_; }
  const Int& residue() const { return residue_; }
  long precision() const { return n_; }

  PAdicNumber to_number() const;

  friend bool operator==(const PAdicInt& a, const PAdicInt& b) = default;

private:
  long p_ = 2;
  Int residue_ = 0;
  long n_ = 1;
};

/// x as a p-adic number with N significant digits. Exact zero for x = 0.
PAdicNumber embed(const Rat& x, long p, long precision);
inline PAdicNumber embed(const Rat& x, long p) { return embed(x, p, default_precision()); }

/// Integral x (valuation >= 0) as a residue modulo p^min(N, known digits).
/// Throws ValidationError for negative valuation.
PAdicInt to_padic_int(const PAdicNumber& x, long precision);

} // namespace pw

#endif // PW_PADIC_HPP
