#ifndef PW_ARITH_HPP
#define PW_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace pw {

using Int = mpz_class;
using Rat = mpq_class;

/// Valuation of zero. Large enough to absorb small additive offsets.
constexpr long kInfinity = std::numeric_limits<long>::max() / 4;

inline bool is_infinite(long v) { return v >= kInfinity; }

/// Working precision (p-adic digits) used when a caller passes none.
/// Initially 32; the CLI overrides it from PW_PRECISION.
long default_precision();
void set_default_precision(long digits);

bool is_prime(long n);
std::vector<long> primes_up_to(long n);
/// Throws ValidationError unless p is prime.
void require_prime(long p);

Int ipow(long p, long e);

/// Exponent of p in x; kInfinity for x = 0.
long valp(const Int& x, long p);
long valp(const Rat& x, long p);

/// Legendre: v_p(n!).
long factorial_valuation(long n, long p);

/// Canonical representative of a modulo m in [0, m).
Int mod(const Int& a, const Int& m);
/// Inverse of a modulo m; throws ValidationError if gcd(a, m) != 1.
Int inv_mod(const Int& a, const Int& m);

/// For x with v_p(x) >= 0: the residue of x modulo p^e in [0, p^e).
Int residue_of(const Rat& x, long p, long e);

/// num/den in lowest terms with positive denominator.
Rat make_rat(const Int& num, const Int& den);

/// Strip all factors of p: returns (v, x / p^v) for x != 0.
std::pair<long, Int> split_power(const Int& x, long p);

/// Decimal text of an integer or "a/b" of a rational.
std::string to_string(const Int& x);
std::string to_string(const Rat& x);

} // namespace pw

#endif // PW_ARITH_HPP
