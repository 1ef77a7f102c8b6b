#ifndef PW_GLOBALBASIS_HPP
#define PW_GLOBALBASIS_HPP

#include "pw/compact_set.hpp"
#include "pw/pordering.hpp"
#include "pw/ratpoly.hpp"

#include <map>
#include <string>
#include <vector>

namespace pw {

/// The n-th characteristic module I_n(E): either (1/D) Z with
/// D = prod p^{exponents[p]}, or not finitely generated.
struct CharIdeal {
  long degree = 0;
  bool fractional = true;
  std::map<long, long> exponents;
  /// Description of the infinite prime family when not fractional.
  std::string witness;

  Int denominator() const;
};

CharIdeal char_ideal(const AdelicSet& a, long n, long precision);

struct CrtPart {
  long p = 2;
  long k = 1;
  RatPoly f;
};

/// One f in Q[x] with f ≡ part.f (mod p^k Z_(p)[x]) for every part and
/// f in Z_(q)[x] at every other prime q. Coefficients are C/E with E the
/// product of p^{e_p} (e_p the worst negative valuation of part p) and C the
/// least non-negative CRT solution.
RatPoly crt_combine(const std::vector<CrtPart>& parts, long degree_cap);

struct BasisFamily {
  AdelicSet set;
  std::vector<RatPoly> polys;
  /// Precision of the p-orderings behind each tracked prime's certificate.
  std::map<long, long> certified_depth;
};

/// Regular Z-basis g_0..g_D of Int_Q(E, Ẑ): local rational lifts at the
/// primes where #(E_p mod p) <= n are CRT-combined modulo p, then adjusted
/// with a Bezout pair so that lc(g_n) = 1/b exactly.
BasisFamily regular_basis(const AdelicSet& a, long max_degree, long precision);

/// f maps every component of the adelic set into Z_p.
bool global_membership(const RatPoly& f, const AdelicSet& a, long precision);

/// Primes dividing |n|, ascending (n != 0).
std::vector<long> prime_factors(const Int& n);

} // namespace pw

#endif // PW_GLOBALBASIS_HPP
