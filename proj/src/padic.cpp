#include "pw/padic.hpp"

#include "pw/errors.hpp"

#include <algorithm>

namespace pw {

namespace {

void require_same_prime(const PAdicNumber& a, const PAdicNumber& b) {
  if (a.prime() != b.prime())
    throw ValidationError("p-adic operands over different primes");
}

} // namespace

PAdicNumber PAdicNumber::zero(long p, long absolute_precision) {
  PAdicNumber z;
  z.p_ = p;
  z.v_ = kInfinity;
  z.unit_ = 0;
  z.n_ = std::min(absolute_precision, kInfinity);
  return z;
}

PAdicNumber PAdicNumber::from_parts(long p, long valuation, const Int& unit, long precision) {
  if (precision < 1)
    throw PrecisionExhausted("p-adic number with no significant digits");
  Int m = ipow(p, precision);
  Int u = mod(unit, m);
  if (u % p == 0)
    throw ValidationError("unit part divisible by p");
  PAdicNumber x;
  x.p_ = p;
  x.v_ = valuation;
  x.unit_ = std::move(u);
  x.n_ = precision;
  return x;
}

Rat PAdicNumber::to_rat() const {
  if (is_zero())
    return 0;
  if (v_ >= 0)
    return Rat(unit_ * ipow(p_, v_));
  return make_rat(unit_, ipow(p_, -v_));
}

PAdicNumber PAdicNumber::with_precision(long relative) const {
  if (is_zero())
    return *this;
  if (relative >= n_)
    return *this;
  return from_parts(p_, v_, unit_, relative);
}

PAdicNumber PAdicNumber::operator-() const {
  if (is_zero())
    return *this;
  return from_parts(p_, v_, -unit_, n_);
}

PAdicNumber operator+(const PAdicNumber& a, const PAdicNumber& b) {
  require_same_prime(a, b);
  if (a.is_exact_zero())
    return b;
  if (b.is_exact_zero())
    return a;
  const long p = a.prime();
  const long abs_prec = std::min(a.absolute_precision(), b.absolute_precision());
  if (a.is_zero() && b.is_zero())
    return PAdicNumber::zero(p, abs_prec);
  const long vmin = std::min(a.is_zero() ? kInfinity : a.valuation(), b.is_zero() ? kInfinity : b.valuation());
  if (abs_prec <= vmin)
    return PAdicNumber::zero(p, abs_prec);
  const long digits = abs_prec - vmin;
  Int m = ipow(p, digits);
  Int t = 0;
  if (!a.is_zero())
    t += a.unit() * ipow(p, a.valuation() - vmin);
  if (!b.is_zero())
    t += b.unit() * ipow(p, b.valuation() - vmin);
  t = mod(t, m);
  if (t == 0)
    return PAdicNumber::zero(p, abs_prec);
  auto [e, u] = split_power(t, p);
  const long v = vmin + e;
  return PAdicNumber::from_parts(p, v, u, abs_prec - v);
}

PAdicNumber operator-(const PAdicNumber& a, const PAdicNumber& b) { return a + (-b); }

PAdicNumber operator*(const PAdicNumber& a, const PAdicNumber& b) {
  require_same_prime(a, b);
  const long p = a.prime();
  if (a.is_exact_zero() || b.is_exact_zero())
    return PAdicNumber::zero(p);
  if (a.is_zero() || b.is_zero()) {
    // Absolute precision of a product with an inexact zero.
    long lo_a = a.is_zero() ? a.absolute_precision() : a.valuation();
    long lo_b = b.is_zero() ? b.absolute_precision() : b.valuation();
    return PAdicNumber::zero(p, lo_a + lo_b);
  }
  const long n = std::min(a.precision(), b.precision());
  return PAdicNumber::from_parts(p, a.valuation() + b.valuation(), a.unit() * b.unit(), n);
}

PAdicNumber operator/(const PAdicNumber& a, const PAdicNumber& b) {
  require_same_prime(a, b);
  const long p = a.prime();
  if (b.is_exact_zero())
    throw ValidationError("p-adic division by zero");
  if (b.is_zero())
    throw PrecisionExhausted("divisor is zero to working precision");
  if (a.is_exact_zero())
    return a;
  if (a.is_zero())
    return PAdicNumber::zero(p, a.absolute_precision() - b.valuation());
  const long n = std::min(a.precision(), b.precision());
  Int m = ipow(p, n);
  return PAdicNumber::from_parts(p, a.valuation() - b.valuation(), a.unit() * inv_mod(b.unit(), m), n);
}

bool operator==(const PAdicNumber& a, const PAdicNumber& b) {
  return a.p_ == b.p_ && a.v_ == b.v_ && a.unit_ == b.unit_ && a.n_ == b.n_;
}

bool congruent(const PAdicNumber& a, const PAdicNumber& b) { return (a - b).is_zero(); }

std::string PAdicNumber::str() const {
  std::string s = "{p=" + std::to_string(p_) + ", v=";
  s += is_zero() ? "INF" : std::to_string(v_);
  s += ", unit=" + unit_.get_str() + ", N=";
  s += is_infinite(n_) ? "INF" : std::to_string(n_);
  return s + "}";
}

PAdicInt::PAdicInt(long p, const Int& residue, long precision) : p_(p), n_(precision) {
  if (precision < 0)
    throw ValidationError("negative precision");
  residue_ = mod(residue, ipow(p, precision));
}

PAdicNumber PAdicInt::to_number() const {
  if (residue_ == 0)
    return PAdicNumber::zero(p_, n_);
  auto [v, u] = split_power(residue_, p_);
  return PAdicNumber::from_parts(p_, v, u, n_ - v);
}

PAdicNumber embed(const Rat& x, long p, long precision) {
  require_prime(p);
  if (precision < 1)
    throw ValidationError("precision must be at least 1");
  if (x == 0)
    return PAdicNumber::zero(p);
  auto [vn, un] = split_power(Int(x.get_num()), p);
  auto [vd, ud] = split_power(Int(x.get_den()), p);
  Int m = ipow(p, precision);
  return PAdicNumber::from_parts(p, vn - vd, un * inv_mod(ud, m), precision);
}

PAdicInt to_padic_int(const PAdicNumber& x, long precision) {
  if (!x.is_zero() && x.valuation() < 0)
    throw ValidationError("p-adic number is not integral");
  long n = std::min(precision, x.absolute_precision());
  if (n < 0)
    n = 0;
  if (x.is_zero())
    return PAdicInt(x.prime(), 0, n);
  return PAdicInt(x.prime(), x.unit() * ipow(x.prime(), x.valuation()), n);
}

} // namespace pw
