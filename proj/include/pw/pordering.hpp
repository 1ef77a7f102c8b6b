#ifndef PW_PORDERING_HPP
#define PW_PORDERING_HPP

#include "pw/compact_set.hpp"
#include "pw/padic.hpp"
#include "pw/ratpoly.hpp"

#include <vector>

namespace pw {

/// A Bhargava p-ordering a_0..a_L of a compact set together with its
/// valuation sequence w[n] = v_p(prod_{k<n}(a_n - a_k)).
///
/// Points are kept as exact elements of the set (integers for ball sets,
/// the listed rationals for finite sets); point(n) gives the residue view
/// modulo p^precision.
class POrdering {
public:
  POrdering(CompactSet set, std::vector<Rat> values, std::vector<long> w, long precision);

  long prime() const { return set_.prime(); }
  const CompactSet& set() const { return set_; }
  /// Index of the last point (the ordering has length() + 1 points).
  long length() const { return static_cast<long>(values_.size()) - 1; }
  long precision() const { return precision_; }
  const std::vector<Rat>& values() const { return values_; }
  const std::vector<long>& w() const { return w_; }

  PAdicInt point(long n) const;
  std::vector<PAdicInt> points() const;

private:
  CompactSet set_;
  std::vector<Rat> values_;
  std::vector<long> w_;
  long precision_;
};

/// Greedy p-ordering with points a_0..a_L. Among minimizers the element
/// with the smallest residue modulo p^N is chosen.
///
/// Ball sets are searched by descending the tree of residue classes, which
/// only needs digits up to one past the deepest point cluster; a search that
/// would need depth N throws PrecisionExhausted. Finite sets require
/// L < |s| (LengthExceedsSet otherwise).
POrdering p_ordering(const CompactSet& s, long length, long precision);
inline POrdering p_ordering(const CompactSet& s, long length) {
  return p_ordering(s, length, default_precision());
}

/// Longer copy of o; the existing points are kept.
POrdering extend(const POrdering& o, long length);

struct LocalBasisPoly {
  enum class Form { PAdicCoeffs, RationalLift };
  long degree = 0;
  Form form = Form::PAdicCoeffs;
  /// Exact polynomial: f_{n,p} for PAdicCoeffs, h_{n,p}/p^{w(n)} for
  /// RationalLift.
  RatPoly poly;
  /// PAdicCoeffs form only: coefficients of f_{n,p} in Q_p.
  std::vector<PAdicNumber> padic;
};

/// f_{n,p}(x) = prod_{k<n}(x - a_k)/(a_n - a_k).
LocalBasisPoly local_basis(const POrdering& o, long n);

/// h_{n,p}/p^{w(n)} with h monic in Z[x], h ≡ prod_{k<n}(x - a_k)
/// (mod p^{w(n)}). When that product already has integer coefficients it is
/// used as h; otherwise every non-leading coefficient is replaced by its
/// canonical residue in [0, p^{w(n)}).
LocalBasisPoly rational_lift(const POrdering& o, long n);

/// f maps s into Z_p: checked exactly at a_0..a_deg of a p-ordering of s
/// (every element when s is finite with at most deg f elements).
bool local_membership(const RatPoly& f, const CompactSet& s, long precision);
/// Same criterion against an existing ordering with length() >= deg f.
bool local_membership(const RatPoly& f, const POrdering& o);

} // namespace pw

#endif // PW_PORDERING_HPP
