#include "pw/arith.hpp"

#include "pw/errors.hpp"

#include <atomic>

namespace pw {

namespace {
std::atomic<long> g_default_precision{32};
}

long default_precision() { return g_default_precision.load(std::memory_order_relaxed); }

void set_default_precision(long digits) {
  if (digits < 1)
    throw ValidationError("precision must be a positive number of digits");
  g_default_precision.store(digits, std::memory_order_relaxed);
}

bool is_prime(long n) {
  if (n < 2)
    return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  if (n < 2)
    return out;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (long i = 2; i <= n; ++i) {
    if (composite[i])
      continue;
    out.push_back(i);
    for (long j = i * i; j <= n; j += i)
      composite[j] = true;
  }
  return out;
}

void require_prime(long p) {
  if (!is_prime(p))
    throw ValidationError("not a prime: " + std::to_string(p));
}

Int ipow(long p, long e) {
  if (e < 0)
    throw ValidationError("negative exponent in ipow");
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e));
  return r;
}

long valp(const Int& x, long p) {
  if (x == 0)
    return kInfinity;
  Int base = p;
  Int rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), base.get_mpz_t()));
}

long valp(const Rat& x, long p) {
  if (x == 0)
    return kInfinity;
  return valp(Int(x.get_num()), p) - valp(Int(x.get_den()), p);
}

long factorial_valuation(long n, long p) {
  long v = 0;
  for (long q = p; q <= n; q *= p) {
    v += n / q;
    if (q > n / p)
      break;
  }
  return v;
}

Int mod(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Int inv_mod(const Int& a, const Int& m) {
  if (m == 1)
    return 0;
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw ValidationError("value is not invertible modulo " + m.get_str());
  return r;
}

Int residue_of(const Rat& x, long p, long e) {
  Int m = ipow(p, e);
  if (e == 0)
    return 0;
  Int den(x.get_den());
  if (valp(den, p) > 0)
    throw ValidationError("rational " + x.get_str() + " is not " + std::to_string(p) + "-integral");
  return mod(Int(x.get_num()) * inv_mod(den, m), m);
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0)
    throw ValidationError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::pair<long, Int> split_power(const Int& x, long p) {
  Int base = p;
  Int rest;
  long v = static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), base.get_mpz_t()));
  return {v, rest};
}

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& x) { return x.get_str(); }

} // namespace pw
