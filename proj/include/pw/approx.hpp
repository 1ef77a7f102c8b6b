#ifndef PW_APPROX_HPP
#define PW_APPROX_HPP

#include "pw/compact_set.hpp"
#include "pw/mahler.hpp"
#include "pw/ratpoly.hpp"

#include <map>

namespace pw {

struct ApproxTarget {
  StepFunction phi;
  /// Required closeness: v_p(phi(a) - f(a)) >= k on the whole component.
  long k = 1;
};

struct ApproxRequest {
  AdelicSet set;
  std::map<long, ApproxTarget> targets;
};

struct ApproxCertificate {
  RatPoly poly;
  /// Verified inf over the component of v_p(phi - f), capped at the
  /// precision of the target's values.
  std::map<long, long> closeness;
  bool member = false;
  /// Ordering precision that produced the result.
  long precision = 0;
};

/// One f in Q[x], integer-valued on the whole adelic set, with
/// f ≡ phi_p (mod p^{k_p}) on each target component. Everything in the
/// certificate is re-verified before returning; a failed check raises
/// CertificateFailed after one retry at doubled precision.
ApproxCertificate approximate(const ApproxRequest& r, long precision);

} // namespace pw

#endif // PW_APPROX_HPP
