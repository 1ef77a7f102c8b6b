#include "pw/globalbasis.hpp"

#include "pw/detail/parallel.hpp"
#include "pw/errors.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace pw {

namespace {

const char* kPzpWitness =
    "default family pZ_p: #(pZ_p mod p) = 1 <= n for every untracked prime p, "
    "so I_n contains sum_p (1/p)Z";

void require_finite_components_large(const AdelicSet& a, long n) {
  for (const auto& [p, s] : a.tracked)
    if (s.is_finite() && static_cast<long>(s.size()) <= n)
      throw SetTooSmall("component at " + std::to_string(p) + " has " + std::to_string(s.size()) +
                        " elements; degree " + std::to_string(n) + " needs more");
}

Int pollard_rho(const Int& n) {
  if (n % 2 == 0)
    return 2;
  for (unsigned long c = 1;; ++c) {
    Int x = 2, y = 2, d = 1;
    auto f = [&](const Int& v) { return mod(v * v + c, n); };
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      Int diff = x - y;
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != n)
      return d;
  }
}

void factor_into(const Int& n, std::set<Int>& out) {
  if (n == 1)
    return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) != 0) {
    out.insert(n);
    return;
  }
  Int d = pollard_rho(n);
  factor_into(d, out);
  factor_into(Int(n / d), out);
}

Int strip_primes(Int n, const AdelicSet& a) {
  for (const auto& [p, s] : a.tracked)
    n = split_power(n, p).second;
  return n;
}

} // namespace

Int CharIdeal::denominator() const {
  Int d = 1;
  for (const auto& [p, e] : exponents)
    d *= ipow(p, e);
  return d;
}

std::vector<long> prime_factors(const Int& n) {
  if (n == 0)
    throw ValidationError("prime factors of zero");
  Int rest = abs(n);
  std::vector<long> out;
  for (long d = 2; d < 1000 && rest > 1; ++d) {
    if (rest % d == 0) {
      out.push_back(d);
      while (rest % d == 0)
        rest /= d;
    }
  }
  std::set<Int> big;
  factor_into(rest, big);
  for (const Int& q : big) {
    if (!q.fits_slong_p())
      throw ValidationError("prime factor " + q.get_str() + " exceeds the supported prime range");
    out.push_back(q.get_si());
  }
  std::sort(out.begin(), out.end());
  return out;
}

CharIdeal char_ideal(const AdelicSet& a, long n, long precision) {
  a.validate();
  if (n < 0)
    throw ValidationError("degree must be non-negative");
  require_finite_components_large(a, n);
  CharIdeal out;
  out.degree = n;
  if (n == 0)
    return out;
  if (a.fallback == DefaultFamily::MaximalIdeal) {
    out.fractional = false;
    out.witness = kPzpWitness;
    return out;
  }
  for (const auto& [p, s] : a.tracked) {
    POrdering o = p_ordering(s, n, precision);
    if (long w = o.w()[static_cast<std::size_t>(n)]; w > 0)
      out.exponents[p] = w;
  }
  for (long p : primes_up_to(n))
    if (!a.is_tracked(p))
      out.exponents[p] = factorial_valuation(n, p);
  return out;
}

RatPoly crt_combine(const std::vector<CrtPart>& parts, long degree_cap) {
  std::set<long> seen;
  long top = -1;
  Int scale = 1;
  std::vector<long> shift;
  for (const CrtPart& part : parts) {
    require_prime(part.p);
    if (part.k < 1)
      throw ValidationError("congruence exponent must be at least 1");
    if (!seen.insert(part.p).second)
      throw ValidationError("repeated prime " + std::to_string(part.p) + " in CRT parts");
    if (part.f.degree() > degree_cap)
      throw DegreeOverflow("part at " + std::to_string(part.p) + " has degree " + std::to_string(part.f.degree()) +
                           " > cap " + std::to_string(degree_cap));
    top = std::max(top, part.f.degree());
    long worst = 0;
    for (const Rat& c : part.f.coeffs())
      worst = std::max(worst, -std::min(0L, valp(c, part.p)));
    shift.push_back(worst);
    scale *= ipow(part.p, worst);
  }
  std::vector<Rat> out;
  for (long i = 0; i <= top; ++i) {
    Int value = 0;
    Int modulus = 1;
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const CrtPart& part = parts[j];
      const Int m = ipow(part.p, part.k + shift[j]);
      const Int target = residue_of(Rat(scale * part.f.coeff(i)), part.p, part.k + shift[j]);
      // value + modulus * t ≡ target (mod m)
      const Int t = mod((target - value) * inv_mod(mod(modulus, m), m), m);
      value += modulus * t;
      modulus *= m;
    }
    out.push_back(make_rat(value, scale));
  }
  return RatPoly(std::move(out));
}

BasisFamily regular_basis(const AdelicSet& a, long max_degree, long precision) {
  a.validate();
  if (max_degree < 0)
    throw ValidationError("degree must be non-negative");
  if (a.fallback == DefaultFamily::MaximalIdeal && max_degree >= 1)
    throw NotFinitelyGenerated(kPzpWitness);
  require_finite_components_large(a, max_degree);

  // Local orderings for every prime that can ever need a lift.
  std::vector<long> primes;
  for (const auto& [p, s] : a.tracked)
    primes.push_back(p);
  for (long p : primes_up_to(max_degree))
    if (!a.is_tracked(p))
      primes.push_back(p);
  std::vector<POrdering> orderings(primes.size(), POrdering(CompactSet::whole(2), {}, {}, 1));
  std::vector<long> counts(primes.size());
  detail::parallel_for(static_cast<long>(primes.size()), [&](long i) {
    CompactSet s = component(a, primes[i]);
    counts[i] = s.count_mod_p();
    orderings[i] = p_ordering(s, max_degree, precision);
  });

  BasisFamily fam;
  fam.set = a;
  for (const auto& [p, s] : a.tracked)
    fam.certified_depth[p] = precision;
  for (long n = 0; n <= max_degree; ++n) {
    std::vector<CrtPart> parts;
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (counts[i] <= n)
        parts.push_back({primes[i], 1, rational_lift(orderings[i], n).poly});
    RatPoly f = crt_combine(parts, n);
    const Rat lc = f.coeff(n);
    const Int num(lc.get_num());
    const Int den(lc.get_den());
    // u*num + v*den = 1 with u of least absolute value.
    Int u = den == 1 ? Int(0) : inv_mod(mod(num, den), den);
    if (2 * u > den)
      u -= den;
    const Int v = (1 - u * num) / den;
    fam.polys.push_back(Rat(u) * f + RatPoly::monomial(Rat(v), n));
  }
  return fam;
}

bool global_membership(const RatPoly& f, const AdelicSet& a, long precision) {
  a.validate();
  for (const auto& [p, s] : a.tracked)
    if (!local_membership(f, s, precision))
      return false;
  if (a.fallback == DefaultFamily::Full) {
    Int l = 1;
    for (const Rat& b : f.binomial_coordinates())
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), b.get_den_mpz_t());
    return strip_primes(l, a) == 1;
  }
  const Int rest = strip_primes(f.denominator_lcm(), a);
  if (rest == 1)
    return true;
  for (long q : prime_factors(rest))
    if (!local_membership(f, CompactSet::maximal_ideal(q), precision))
      return false;
  return true;
}

} // namespace pw
