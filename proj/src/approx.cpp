#include "pw/approx.hpp"

#include "pw/detail/parallel.hpp"
#include "pw/errors.hpp"
#include "pw/globalbasis.hpp"

#include <algorithm>

namespace pw {

namespace {

void validate(const ApproxRequest& r) {
  r.set.validate();
  for (const auto& [p, t] : r.targets) {
    require_prime(p);
    if (t.k < 1)
      throw ValidationError("closeness exponent at " + std::to_string(p) + " must be at least 1");
    if (t.phi.prime() != p)
      throw ValidationError("target at " + std::to_string(p) + " has a function over another prime");
    if (!equivalent(t.phi.domain(), component(r.set, p)))
      throw ValidationError("target at " + std::to_string(p) + " is not defined on the set's component");
    if (t.phi.precision() < t.k)
      throw ValidationError("target at " + std::to_string(p) + " has values known to fewer than k digits");
  }
}

// Local approximant at p: the certified Mahler sum rewritten over the
// rational lifts h_n/p^{w(n)}, coordinates reduced mod p^k.
RatPoly local_part(const ApproxTarget& t, long k, long precision) {
  const long p = t.phi.prime();
  const POrdering o = p_ordering(t.phi.domain(), 0, precision);
  const MahlerSeries s = expand(t.phi, o, k);
  const RatPoly sum = s.partial_sum();
  if (sum.is_zero())
    return sum;
  std::vector<RatPoly> lifts;
  for (long n = 0; n <= sum.degree(); ++n)
    lifts.push_back(rational_lift(s.ordering, n).poly);
  const auto d = basis_coordinates(sum, lifts);
  RatPoly out;
  for (std::size_t n = 0; n < d.size(); ++n) {
    if (valp(d[n], p) < 0)
      throw CertificateFailed("coordinate " + std::to_string(n) + " at " + std::to_string(p) + " is not p-integral");
    const Int dn = residue_of(d[n], p, k);
    if (dn != 0)
      out = out + Rat(dn) * lifts[n];
  }
  return out;
}

// inf over the component of v_p(f - phi), capped at the value precision.
long closeness(const RatPoly& f, const StepFunction& phi, long precision) {
  const long p = phi.prime();
  const long m = phi.modulus_exp();
  const long cap = phi.precision();
  std::vector<Int> keys;
  for (const auto& [r, v] : phi.table())
    keys.push_back(r);
  std::vector<long> best(keys.size(), cap);
  detail::parallel_for(static_cast<long>(keys.size()), [&](long i) {
    const Int& r = keys[static_cast<std::size_t>(i)];
    const auto cls = phi.domain().restrict_to_class(r, m);
    std::vector<Rat> xs;
    if (cls->is_finite() && static_cast<long>(cls->size()) <= f.degree() + 1)
      xs = cls->elements();
    else
      xs = p_ordering(*cls, std::max(f.degree(), 0L), precision).values();
    const Rat want(phi.at_residue(r).residue());
    for (const Rat& x : xs)
      best[static_cast<std::size_t>(i)] = std::min(best[static_cast<std::size_t>(i)], valp(Rat(f(x) - want), p));
  });
  return *std::min_element(best.begin(), best.end());
}

ApproxCertificate attempt(const ApproxRequest& r, long precision) {
  std::vector<long> primes;
  for (const auto& [p, t] : r.targets)
    primes.push_back(p);
  long top_k = 0;
  for (const auto& [p, t] : r.targets)
    top_k = std::max(top_k, t.k);

  std::vector<RatPoly> locals(primes.size());
  detail::parallel_for(static_cast<long>(primes.size()), [&](long i) {
    const ApproxTarget& t = r.targets.at(primes[static_cast<std::size_t>(i)]);
    locals[static_cast<std::size_t>(i)] = local_part(t, t.k, precision);
  });

  long degree = 0;
  for (const RatPoly& f : locals)
    degree = std::max(degree, f.degree());
  if (degree >= 1 && r.set.fallback == DefaultFamily::MaximalIdeal)
    throw NotFinitelyGenerated("default pZ_p: characteristic modules of degree >= 1 are not fractional ideals");

  std::vector<CrtPart> parts;
  for (std::size_t i = 0; i < primes.size(); ++i)
    parts.push_back({primes[i], top_k, locals[i]});

  ApproxCertificate cert;
  cert.precision = precision;
  cert.poly = crt_combine(parts, degree);
  for (const auto& [p, t] : r.targets) {
    const long got = closeness(cert.poly, t.phi, precision);
    cert.closeness[p] = got;
    if (got < t.k)
      throw CertificateFailed("closeness at " + std::to_string(p) + " is " + std::to_string(got) + " < " +
                              std::to_string(t.k));
  }
  cert.member = global_membership(cert.poly, r.set, precision);
  if (!cert.member)
    throw CertificateFailed("combined polynomial is not integer-valued on the set");
  return cert;
}

} // namespace

ApproxCertificate approximate(const ApproxRequest& r, long precision) {
  validate(r);
  if (precision < 1)
    throw ValidationError("precision must be positive");
  try {
    return attempt(r, precision);
  } catch (const PrecisionExhausted&) {
  } catch (const CertificateFailed&) {
  }
  try {
    return attempt(r, 2 * precision);
  } catch (const PrecisionExhausted& e) {
    throw CertificateFailed(std::string("precision exhausted after retry: ") + e.what());
  }
}

} // namespace pw
