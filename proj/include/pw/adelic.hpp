#ifndef PW_ADELIC_HPP
#define PW_ADELIC_HPP

#include "pw/compact_set.hpp"
#include "pw/padic.hpp"
#include "pw/pordering.hpp"
#include "pw/ratpoly.hpp"

#include <map>
#include <vector>

namespace pw {

/// A point of the profinite integers: explicit components at tracked
/// primes, one rational value standing for every other component.
struct AdelicPoint {
  std::map<long, PAdicInt> tracked;
  Rat fallback = 0;
  friend bool operator==(const AdelicPoint&, const AdelicPoint&) = default;
};

/// A polynomial with one component per prime: coefficient lists at the
/// tracked primes, a rational polynomial everywhere else.
struct AdelicPoly {
  long degree = -1;
  std::map<long, std::vector<PAdicNumber>> tracked;
  RatPoly fallback;
  /// fallback has no denominator at any prime outside `tracked`.
  bool integral_elsewhere = true;

  /// f read at every prime: tracked components are f embedded at the
  /// tracked primes of a (plus the untracked primes dividing a
  /// denominator, so that integral_elsewhere holds).
  static AdelicPoly from_rational(const RatPoly& f, const AdelicSet& a, long precision);
};

/// Component values of an adelic polynomial at an adelic point.
struct AdelicValue {
  std::map<long, PAdicNumber> tracked;
  Rat fallback = 0;
};

struct AdelicOrdering {
  AdelicSet set;
  std::vector<AdelicPoint> points;
  /// p-orderings behind the tracked components.
  std::map<long, POrdering> local;
  /// Primes p with v_p(prod_{k<n}(alpha_n - alpha_k)) > 0, per index n.
  std::vector<std::vector<long>> exceptions;
  long precision = 0;

  /// Index of the last point.
  long length() const { return static_cast<long>(points.size()) - 1; }
};

/// The first `count` points of an adelic ordering: p-orderings at tracked
/// primes and the diagonal sequence 0, 1, 2, ... everywhere else.
AdelicOrdering adelic_ordering(const AdelicSet& a, long count, long precision);

/// g_n = prod_{k<n}(x - alpha_k)/(alpha_n - alpha_k), componentwise.
AdelicPoly adelic_basis(const AdelicOrdering& o, long n);

AdelicValue evaluate(const AdelicPoly& g, const AdelicPoint& x, long precision);

/// g maps the set into the profinite integers: checked at alpha_0..alpha_deg.
bool adelic_membership(const AdelicPoly& g, const AdelicOrdering& o);

/// center + p^exponent Z_p with center in Q (negative valuation allowed).
struct RationalBall {
  Rat center;
  long exponent = 0;
};

struct ScaledSet {
  Int d = 1;
  AdelicSet set;
};

/// Least d >= 1 with d E inside the profinite integers, and d E itself.
ScaledSet scale_into_Z(const std::map<long, std::vector<RationalBall>>& components,
                       DefaultFamily fallback = DefaultFamily::Full);

/// (1/d1) f(d x).
RatPoly conjugate_poly(const RatPoly& f, const Int& d, const Int& d1);

} // namespace pw

#endif // PW_ADELIC_HPP
