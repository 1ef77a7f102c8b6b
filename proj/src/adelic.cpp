#include "pw/adelic.hpp"

#include "pw/detail/parallel.hpp"
#include "pw/errors.hpp"
#include "pw/globalbasis.hpp"

#include <algorithm>

namespace pw {

namespace {

std::vector<PAdicNumber> embed_coeffs(const RatPoly& f, long p, long precision) {
  std::vector<PAdicNumber> out;
  for (const Rat& c : f.coeffs())
    out.push_back(embed(c, p, precision));
  return out;
}

PAdicNumber horner(const std::vector<PAdicNumber>& coeffs, const PAdicNumber& x) {
  PAdicNumber acc = PAdicNumber::zero(x.prime());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

// Component of x at p: the tracked residue, else the fallback value.
PAdicNumber component_value(const AdelicPoint& x, long p, long precision) {
  auto it = x.tracked.find(p);
  if (it != x.tracked.end())
    return it->second.to_number();
  return embed(x.fallback, p, precision);
}

bool integral(const PAdicNumber& v) {
  if (v.is_zero()) {
    if (v.absolute_precision() < 0)
      throw PrecisionExhausted("value known only modulo p^" + std::to_string(v.absolute_precision()));
    return true;
  }
  return v.valuation() >= 0;
}

} // namespace

AdelicPoly AdelicPoly::from_rational(const RatPoly& f, const AdelicSet& a, long precision) {
  AdelicPoly g;
  g.degree = f.degree();
  g.fallback = f;
  for (const auto& [p, s] : a.tracked)
    g.tracked[p] = embed_coeffs(f, p, precision);
  Int den = f.denominator_lcm();
  for (const auto& [p, s] : a.tracked)
    den = split_power(den, p).second;
  if (den != 1)
    for (long q : prime_factors(den))
      g.tracked[q] = embed_coeffs(f, q, precision);
  return g;
}

AdelicOrdering adelic_ordering(const AdelicSet& a, long count, long precision) {
  a.validate();
  if (count < 0)
    throw ValidationError("ordering length must be non-negative");
  if (a.fallback == DefaultFamily::MaximalIdeal && count >= 2)
    throw NoAdelicOrdering("default pZ_p: v_p(alpha_1 - alpha_0) >= 1 at every untracked prime");
  AdelicOrdering o;
  o.set = a;
  o.precision = precision;
  if (count == 0)
    return o;

  std::vector<long> primes;
  for (const auto& [p, s] : a.tracked)
    primes.push_back(p);
  std::vector<POrdering> local(primes.size(), POrdering(CompactSet::whole(2), {}, {}, 1));
  detail::parallel_for(static_cast<long>(primes.size()), [&](long i) {
    local[static_cast<std::size_t>(i)] = p_ordering(a.tracked.at(primes[i]), count - 1, precision);
  });
  for (std::size_t i = 0; i < primes.size(); ++i)
    o.local.emplace(primes[i], local[i]);

  for (long n = 0; n < count; ++n) {
    AdelicPoint pt;
    pt.fallback = n;
    for (const auto& [p, lo] : o.local)
      pt.tracked[p] = lo.point(n);
    o.points.push_back(std::move(pt));

    std::vector<long> ex;
    if (a.fallback == DefaultFamily::Full)
      for (long p : primes_up_to(n))
        if (!a.is_tracked(p))
          ex.push_back(p);
    for (const auto& [p, lo] : o.local)
      if (lo.w()[static_cast<std::size_t>(n)] > 0)
        ex.push_back(p);
    std::sort(ex.begin(), ex.end());
    o.exceptions.push_back(std::move(ex));
  }
  return o;
}

AdelicPoly adelic_basis(const AdelicOrdering& o, long n) {
  if (n < 0 || n > o.length())
    throw ValidationError("basis degree outside the ordering");
  AdelicPoly g;
  g.degree = n;
  for (const auto& [p, lo] : o.local)
    g.tracked[p] = local_basis(lo, n).padic;

  std::vector<Rat> roots;
  Rat den = 1;
  for (long k = 0; k < n; ++k) {
    roots.push_back(o.points[static_cast<std::size_t>(k)].fallback);
    den *= o.points[static_cast<std::size_t>(n)].fallback - roots.back();
  }
  g.fallback = Rat(1) / den * RatPoly::from_roots(roots);
  for (long q : o.exceptions[static_cast<std::size_t>(n)])
    if (!g.tracked.count(q))
      g.tracked[q] = embed_coeffs(g.fallback, q, o.precision);
  g.integral_elsewhere = true;
  return g;
}

AdelicValue evaluate(const AdelicPoly& g, const AdelicPoint& x, long precision) {
  AdelicValue out;
  for (const auto& [p, coeffs] : g.tracked)
    out.tracked[p] = horner(coeffs, component_value(x, p, precision));
  for (const auto& [p, xp] : x.tracked)
    if (!g.tracked.count(p))
      out.tracked[p] = horner(embed_coeffs(g.fallback, p, precision), xp.to_number());
  out.fallback = g.fallback(x.fallback);
  return out;
}

bool adelic_membership(const AdelicPoly& g, const AdelicOrdering& o) {
  if (g.degree < 0)
    return true;
  if (g.degree > o.length())
    throw ValidationError("ordering too short for the membership criterion");
  for (long k = 0; k <= g.degree; ++k) {
    const AdelicPoint& x = o.points[static_cast<std::size_t>(k)];
    AdelicValue v = evaluate(g, x, o.precision);
    for (const auto& [p, value] : v.tracked)
      if (!integral(value))
        return false;
    Int den(v.fallback.get_den());
    if (den == 1)
      continue;
    for (long q : prime_factors(den))
      if (!v.tracked.count(q))
        return false;
  }
  return true;
}

ScaledSet scale_into_Z(const std::map<long, std::vector<RationalBall>>& components, DefaultFamily fallback) {
  ScaledSet out;
  std::map<long, long> shift;
  for (const auto& [p, balls] : components) {
    require_prime(p);
    if (balls.empty())
      throw EmptySet("component at " + std::to_string(p) + " has no balls");
    long worst = 0;
    for (const RationalBall& b : balls)
      worst = std::min({worst, valp(b.center, p), b.exponent});
    shift[p] = -worst;
    out.d *= ipow(p, -worst);
  }
  out.set.fallback = fallback;
  for (const auto& [p, balls] : components) {
    const long e = valp(Rat(out.d), p);
    std::vector<Ball> scaled;
    for (const RationalBall& b : balls)
      scaled.push_back(Ball{residue_of(Rat(out.d * b.center), p, b.exponent + e), b.exponent + e});
    out.set.tracked.emplace(p, CompactSet::balls(p, std::move(scaled)));
  }
  return out;
}

RatPoly conjugate_poly(const RatPoly& f, const Int& d, const Int& d1) {
  if (d < 1 || d1 < 1)
    throw ValidationError("scaling factors must be positive");
  return Rat(1, 1) / Rat(d1) * f.scaled_argument(Rat(d));
}

} // namespace pw
