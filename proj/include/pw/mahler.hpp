#ifndef PW_MAHLER_HPP
#define PW_MAHLER_HPP

#include "pw/adelic.hpp"
#include "pw/compact_set.hpp"
#include "pw/padic.hpp"
#include "pw/pordering.hpp"
#include "pw/ratpoly.hpp"

#include <functional>
#include <map>
#include <vector>

namespace pw {

/// A function E -> Z_p that is constant on residue classes mod p^m, given
/// by its value on each class that meets E.
class StepFunction {
public:
  /// Keys must be exactly domain.residues(m); values are reduced mod p^N.
  static StepFunction make(const CompactSet& domain, long m, const std::map<Int, Int>& values, long precision);

  long prime() const { return domain_.prime(); }
  const CompactSet& domain() const { return domain_; }
  long modulus_exp() const { return m_; }
  long precision() const { return n_; }
  const std::map<Int, PAdicInt>& table() const { return table_; }

  /// Value at a point of the domain.
  const PAdicInt& operator()(const Rat& x) const;
  const PAdicInt& at_residue(const Int& r) const;

private:
  CompactSet domain_ = CompactSet::whole(2);
  long m_ = 0;
  long n_ = 1;
  std::map<Int, PAdicInt> table_;
};

/// Tabulates f at one point of each class mod p^m. Exact only when f is
/// itself constant on those classes; otherwise this is the step-function
/// approximation that uniform continuity guarantees for m large enough.
StepFunction sample(const CompactSet& domain, long m, long precision, const std::function<Rat(const Rat&)>& f);

struct MahlerSeries {
  POrdering ordering;
  /// c_0..c_{L-1}, each modulo p^precision.
  std::vector<PAdicInt> coeffs;
  long precision = 0;
  bool certified = false;
  /// Zero run that ended the expansion.
  long window = 0;
  /// precision + max w(n) over the used indices.
  long certificate_depth = 0;

  long length() const { return static_cast<long>(coeffs.size()); }
  /// sum_n c_n f_n over Q, c_n taken as their residues in [0, p^N).
  RatPoly partial_sum() const;
};

struct ExpandOptions {
  /// Consecutive zero coefficients that end the expansion; 0 means p^m.
  long window = 0;
  /// Most coefficients to try; 0 picks a cap from N, p and m.
  long max_length = 0;
};

/// Mahler expansion of phi in the basis of the ordering o, with c_n given by
/// c_n = phi(a_n) - sum_{k<n} c_k f_k(a_n) modulo p^N. Stops once `window`
/// consecutive coefficients vanish and the truncated series provably agrees
/// with phi modulo p^N on all of the domain.
MahlerSeries expand(const StepFunction& phi, const POrdering& o, long precision, ExpandOptions opts = {});

/// The same coefficients by forward substitution in the exact matrix
/// (f_k(a_n)), computed without the modular kernels.
std::vector<Int> solve_triangular(const StepFunction& phi, const POrdering& o, long count, long precision);

PAdicInt evaluate(const MahlerSeries& s, const PAdicInt& x);
PAdicInt evaluate(const MahlerSeries& s, const Rat& x);

struct SupNormData {
  /// min(N, inf_n v_p(c_n)).
  long coeff_inf = 0;
  /// min(N, inf_y v_p(phi(y))).
  long value_inf = 0;
  long cap = 0;
  bool agree = false;
};

SupNormData sup_norm_data(const MahlerSeries& s, const StepFunction& phi);

/// Coordinates of f in a basis with exactly one polynomial of each degree.
std::vector<Rat> basis_coordinates(const RatPoly& f, const std::vector<RatPoly>& basis);

/// The partial sum of s rewritten in another regular basis, mod p^N.
/// Throws ValidationError if a coordinate is not p-integral.
std::vector<PAdicInt> expand_in_basis(const MahlerSeries& s, const std::vector<RatPoly>& basis);

struct AdelicSeries {
  AdelicOrdering ordering;
  std::map<long, MahlerSeries> components;

  long length() const;
  /// Coefficient tuple c_n; untracked components are 0.
  AdelicPoint coeff(long n) const;
};

/// Componentwise expansion at every tracked prime of o. Tracked primes
/// without a function get the zero function; missing precisions default to
/// `default_precision`.
AdelicSeries expand_adelic(const std::map<long, StepFunction>& phi, const AdelicOrdering& o,
                           const std::map<long, long>& precision, long default_precision);

AdelicPoint evaluate(const AdelicSeries& s, const AdelicPoint& x);

} // namespace pw

#endif // PW_MAHLER_HPP
