#include "pw/mahler.hpp"

#include "pw/detail/parallel.hpp"
#include "pw/errors.hpp"
#include "pw/kernels.hpp"

#include <algorithm>

namespace pw {

StepFunction StepFunction::make(const CompactSet& domain, long m, const std::map<Int, Int>& values, long precision) {
  if (m < 0)
    throw ValidationError("step function modulus exponent must be non-negative");
  if (precision < 1)
    throw ValidationError("step function precision must be positive");
  const long p = domain.prime();
  const std::vector<Int> keys = domain.residues(m);
  if (keys.size() != values.size())
    throw ValidationError("step function table has " + std::to_string(values.size()) + " entries; domain has " +
                          std::to_string(keys.size()) + " classes mod p^" + std::to_string(m));
  StepFunction f;
  f.domain_ = domain;
  f.m_ = m;
  f.n_ = precision;
  const Int pn = ipow(p, precision);
  for (const Int& r : keys) {
    auto it = values.find(r);
    if (it == values.end())
      throw ValidationError("step function table misses residue " + r.get_str());
    f.table_.emplace(r, PAdicInt(p, mod(it->second, pn), precision));
  }
  return f;
}

const PAdicInt& StepFunction::at_residue(const Int& r) const {
  auto it = table_.find(r);
  if (it == table_.end())
    throw ValidationError("residue " + r.get_str() + " is outside the step function domain");
  return it->second;
}

const PAdicInt& StepFunction::operator()(const Rat& x) const {
  if (!domain_.contains(x))
    throw ValidationError(x.get_str() + " is outside the step function domain");
  return at_residue(residue_of(x, prime(), m_));
}

StepFunction sample(const CompactSet& domain, long m, long precision, const std::function<Rat(const Rat&)>& f) {
  const long p = domain.prime();
  std::map<Int, Int> values;
  for (const Int& r : domain.residues(m)) {
    Rat x;
    if (domain.is_finite())
      x = domain.restrict_to_class(r, m)->elements().front();
    else
      x = Rat(domain.smallest_in_class(r, m));
    const Rat y = f(x);
    if (valp(y, p) < 0)
      throw ValidationError("sampled value " + y.get_str() + " is not in Z_" + std::to_string(p));
    values.emplace(r, residue_of(y, p, precision));
  }
  return StepFunction::make(domain, m, values, precision);
}

RatPoly MahlerSeries::partial_sum() const {
  const auto& a = ordering.values();
  RatPoly sum;
  RatPoly prod = RatPoly::constant(1);
  for (long n = 0; n < length(); ++n) {
    Rat den = 1;
    for (long k = 0; k < n; ++k)
      den *= a[static_cast<std::size_t>(n)] - a[static_cast<std::size_t>(k)];
    const Int& c = coeffs[static_cast<std::size_t>(n)].residue();
    if (c != 0)
      sum = sum + Rat(c) / den * prod;
    prod = prod * RatPoly(std::vector<Rat>{-a[static_cast<std::size_t>(n)], 1});
  }
  return sum;
}

namespace {

void require_same_domain(const StepFunction& phi, const POrdering& o) {
  if (phi.prime() != o.prime() || !equivalent(phi.domain(), o.set()))
    throw ValidationError("ordering and step function live on different sets");
}

long default_cap(const StepFunction& phi, long precision) {
  const Int pm = ipow(phi.prime(), phi.modulus_exp());
  const Int cap = (precision + 2) * pm * 4;
  return cap.fits_slong_p() ? std::max(cap.get_si(), 16L) : kInfinity;
}

// Points of E ∩ (r + p^m Z_p) at which a degree-D polynomial must be checked:
// a p-ordering of length D, or every element of a small finite class.
std::vector<Rat> check_points(const CompactSet& cls, long degree, long precision) {
  if (cls.is_finite() && static_cast<long>(cls.size()) <= degree + 1)
    return cls.elements();
  return p_ordering(cls, std::max(degree, 0L), precision).values();
}

// The truncated series agrees with phi modulo p^N on every class. Exact:
// S - phi(r) maps a class into p^N Z_p iff it does so on a p-ordering of the
// class of length deg S.
bool certify(const StepFunction& phi, const kernels::OrderingTable& table, std::span<const Int> coeffs,
             long ordering_precision) {
  const long p = phi.prime();
  const long m = phi.modulus_exp();
  const Int pn = table.modulus;
  std::vector<Int> keys;
  for (const auto& [r, v] : phi.table())
    keys.push_back(r);
  std::vector<char> ok(keys.size(), 0);
  const long degree = static_cast<long>(coeffs.size()) - 1;
  detail::parallel_for(static_cast<long>(keys.size()), [&](long i) {
    const Int& r = keys[static_cast<std::size_t>(i)];
    const auto cls = phi.domain().restrict_to_class(r, m);
    const auto xs = check_points(*cls, degree, ordering_precision);
    const Int want = mod(phi.at_residue(r).residue(), pn);
    const auto got = kernels::eval_series(table, coeffs, xs);
    ok[static_cast<std::size_t>(i)] = std::all_of(got.begin(), got.end(), [&](const Int& g) { return g == want; });
  });
  (void)p;
  return std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
}

std::vector<Int> recurse(const StepFunction& phi, const kernels::OrderingTable& table) {
  const auto rows = kernels::basis_rows(table, 0, table.size());
  std::vector<Int> c(table.size());
  for (std::size_t n = 0; n < table.size(); ++n) {
    Int acc = phi(table.points[n]).residue();
    for (std::size_t k = 0; k < n; ++k)
      acc -= c[k] * rows[n][k];
    c[n] = mod(acc, table.modulus);
  }
  return c;
}

} // namespace

MahlerSeries expand(const StepFunction& phi, const POrdering& o, long precision, ExpandOptions opts) {
  require_same_domain(phi, o);
  if (precision < 1)
    throw ValidationError("precision must be positive");
  if (precision > phi.precision())
    throw PrecisionExhausted("step function values carry " + std::to_string(phi.precision()) + " digits, " +
                             std::to_string(precision) + " requested");
  const long p = phi.prime();
  const Int pm = ipow(p, phi.modulus_exp());
  long window = opts.window;
  if (window <= 0)
    window = pm.fits_slong_p() ? pm.get_si() : kInfinity;
  long cap = opts.max_length > 0 ? opts.max_length : default_cap(phi, precision);
  const bool finite = o.set().is_finite();
  if (finite)
    cap = std::min(cap, static_cast<long>(o.set().size()));
  long len = std::min(cap, std::max(2 * std::min(window, kInfinity / 4), 16L));

  POrdering ord = o;
  while (true) {
    ord = extend(ord, len - 1);
    const std::span<const Rat> pts(ord.values().data(), static_cast<std::size_t>(len));
    const auto table = kernels::make_table(p, pts, precision);
    const auto c = recurse(phi, table);

    // Candidate truncations: starts of zero runs of the required width, and
    // the full table once a finite set is exhausted.
    std::vector<long> starts;
    long run = 0;
    for (long n = 0; n < len; ++n) {
      run = c[static_cast<std::size_t>(n)] == 0 ? run + 1 : 0;
      if (run == window)
        starts.push_back(n - window + 1);
    }
    if (finite && len == static_cast<long>(o.set().size())) {
      long t = len;
      while (t > 0 && c[static_cast<std::size_t>(t - 1)] == 0)
        --t;
      starts.push_back(t);
    }
    for (long t : starts) {
      const std::span<const Int> head(c.data(), static_cast<std::size_t>(t));
      if (!certify(phi, table, head, ord.precision()))
        continue;
      MahlerSeries s{ord, {}, precision, true, window, precision};
      long maxw = 0;
      for (long n = 0; n < t; ++n) {
        s.coeffs.emplace_back(p, c[static_cast<std::size_t>(n)], precision);
        maxw = std::max(maxw, table.w[static_cast<std::size_t>(n)]);
      }
      s.certificate_depth = precision + maxw;
      return s;
    }
    if (len >= cap)
      throw CertificateFailed("no certified truncation within " + std::to_string(cap) + " coefficients");
    len = std::min(cap, 2 * len);
  }
}

std::vector<Int> solve_triangular(const StepFunction& phi, const POrdering& o, long count, long precision) {
  require_same_domain(phi, o);
  POrdering ord = extend(o, count - 1);
  const std::span<const Rat> pts(ord.values().data(), static_cast<std::size_t>(count));
  const auto table = kernels::serial::make_table(phi.prime(), pts, precision);
  const auto g = kernels::serial::basis_rows(table, 0, table.size());
  std::vector<Int> c(static_cast<std::size_t>(count));
  for (long n = 0; n < count; ++n) {
    Int rhs = phi(pts[static_cast<std::size_t>(n)]).residue();
    for (long k = 0; k < n; ++k)
      rhs -= g[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(k)];
    // g_n(a_n) = 1, so the diagonal solve is the identity.
    c[static_cast<std::size_t>(n)] = mod(rhs, table.modulus);
  }
  return c;
}

namespace {

std::vector<Int> residues_of(const MahlerSeries& s) {
  std::vector<Int> c;
  for (const PAdicInt& x : s.coeffs)
    c.push_back(x.residue());
  return c;
}

} // namespace

PAdicInt evaluate(const MahlerSeries& s, const Rat& x) {
  if (!s.ordering.set().contains(x))
    throw ValidationError(x.get_str() + " is outside the series domain");
  const long p = s.ordering.prime();
  if (s.coeffs.empty())
    return PAdicInt(p, 0, s.precision);
  const std::span<const Rat> pts(s.ordering.values().data(), s.coeffs.size());
  const auto table = kernels::make_table(p, pts, s.precision);
  const auto c = residues_of(s);
  const Rat xs[] = {x};
  const auto v = kernels::eval_series(table, c, xs);
  return PAdicInt(p, v[0], s.precision);
}

PAdicInt evaluate(const MahlerSeries& s, const PAdicInt& x) {
  const long p = s.ordering.prime();
  if (x.prime() != p)
    throw ValidationError("point over a different prime");
  long maxw = 0;
  for (long n = 0; n < s.length(); ++n)
    maxw = std::max(maxw, s.ordering.w()[static_cast<std::size_t>(n)]);
  const long digits = std::min(s.precision, x.precision() - maxw);
  if (digits < 1)
    throw PrecisionExhausted("point known to " + std::to_string(x.precision()) + " digits; series needs more than " +
                             std::to_string(maxw));
  const CompactSet& e = s.ordering.set();
  Rat rep;
  if (e.is_finite()) {
    const Int pk = ipow(p, x.precision());
    std::vector<Rat> hits;
    for (const Rat& y : e.elements())
      if (residue_of(y, p, x.precision()) == mod(x.residue(), pk))
        hits.push_back(y);
    if (hits.empty())
      throw ValidationError("point is outside the series domain");
    if (hits.size() > 1)
      throw PrecisionExhausted("point does not determine an element of the finite domain");
    rep = hits.front();
  } else {
    switch (e.contains(x.to_number())) {
    case Tri::False:
      throw ValidationError("point is outside the series domain");
    case Tri::Unknown:
      throw PrecisionExhausted("point too coarse to decide domain membership");
    case Tri::True:
      break;
    }
    rep = Rat(x.residue());
  }
  const PAdicInt full = evaluate(s, rep);
  return PAdicInt(p, mod(full.residue(), ipow(p, digits)), digits);
}

SupNormData sup_norm_data(const MahlerSeries& s, const StepFunction& phi) {
  if (!s.certified)
    throw NotCertified("sup-norm identity needs a certified expansion");
  SupNormData d;
  d.cap = s.precision;
  const long p = phi.prime();
  auto capped = [&](const Int& r) { return r == 0 ? d.cap : std::min(d.cap, valp(r, p)); };
  d.coeff_inf = d.cap;
  for (const PAdicInt& c : s.coeffs)
    d.coeff_inf = std::min(d.coeff_inf, capped(c.residue()));
  d.value_inf = d.cap;
  const Int pn = ipow(p, d.cap);
  for (const auto& [r, v] : phi.table())
    d.value_inf = std::min(d.value_inf, capped(mod(v.residue(), pn)));
  d.agree = d.coeff_inf == d.value_inf;
  return d;
}

std::vector<Rat> basis_coordinates(const RatPoly& f, const std::vector<RatPoly>& basis) {
  if (f.degree() >= static_cast<long>(basis.size()))
    throw ValidationError("basis too short for a degree " + std::to_string(f.degree()) + " polynomial");
  std::vector<Rat> out(static_cast<std::size_t>(std::max(f.degree() + 1, 0L)));
  RatPoly rest = f;
  for (long n = f.degree(); n >= 0; --n) {
    const RatPoly& b = basis[static_cast<std::size_t>(n)];
    if (b.degree() != n)
      throw ValidationError("basis polynomial " + std::to_string(n) + " has degree " + std::to_string(b.degree()));
    const Rat d = rest.coeff(n) / b.leading();
    out[static_cast<std::size_t>(n)] = d;
    if (d != 0)
      rest = rest - d * b;
  }
  return out;
}

std::vector<PAdicInt> expand_in_basis(const MahlerSeries& s, const std::vector<RatPoly>& basis) {
  const long p = s.ordering.prime();
  std::vector<PAdicInt> out;
  for (const Rat& d : basis_coordinates(s.partial_sum(), basis)) {
    if (valp(d, p) < 0)
      throw ValidationError("basis is not regular at " + std::to_string(p));
    out.emplace_back(p, residue_of(d, p, s.precision), s.precision);
  }
  return out;
}

long AdelicSeries::length() const {
  long n = 0;
  for (const auto& [p, s] : components)
    n = std::max(n, s.length());
  return n;
}

AdelicPoint AdelicSeries::coeff(long n) const {
  AdelicPoint c;
  for (const auto& [p, s] : components)
    c.tracked[p] = n < s.length() ? s.coeffs[static_cast<std::size_t>(n)] : PAdicInt(p, 0, s.precision);
  return c;
}

AdelicSeries expand_adelic(const std::map<long, StepFunction>& phi, const AdelicOrdering& o,
                           const std::map<long, long>& precision, long default_precision) {
  for (const auto& [p, f] : phi)
    if (!o.set.is_tracked(p))
      throw ValidationError("function given at untracked prime " + std::to_string(p));
  std::vector<long> primes;
  for (const auto& [p, lo] : o.local)
    primes.push_back(p);
  std::vector<std::optional<MahlerSeries>> parts(primes.size());
  detail::parallel_for(static_cast<long>(primes.size()), [&](long i) {
    const long p = primes[static_cast<std::size_t>(i)];
    const POrdering& lo = o.local.at(p);
    auto np = precision.find(p);
    const long n = np == precision.end() ? default_precision : np->second;
    auto f = phi.find(p);
    if (f != phi.end())
      parts[static_cast<std::size_t>(i)] = expand(f->second, lo, n);
    else
      parts[static_cast<std::size_t>(i)] = MahlerSeries{lo, {}, n, true, 0, n};
  });
  AdelicSeries s{o, {}};
  for (std::size_t i = 0; i < primes.size(); ++i)
    s.components.emplace(primes[i], std::move(*parts[i]));
  return s;
}

AdelicPoint evaluate(const AdelicSeries& s, const AdelicPoint& x) {
  AdelicPoint out;
  for (const auto& [p, series] : s.components) {
    auto it = x.tracked.find(p);
    if (it == x.tracked.end())
      throw ValidationError("point has no component at tracked prime " + std::to_string(p));
    out.tracked[p] = evaluate(series, it->second);
  }
  return out;
}

} // namespace pw
