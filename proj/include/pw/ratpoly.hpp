#ifndef PW_RATPOLY_HPP
#define PW_RATPOLY_HPP

#include "pw/arith.hpp"
#include "pw/padic.hpp"

#include <span>
#include <string>
#include <vector>

namespace pw {

/// Dense polynomial over Q; coeffs()[i] is the coefficient of x^i.
/// The zero polynomial has no coefficients and degree -1.
class RatPoly {
public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rat> coeffs);

  static RatPoly constant(const Rat& c);
  static RatPoly monomial(const Rat& c, long degree);
  /// prod_k (x - roots[k]).
  static RatPoly from_roots(std::span<const Rat> roots);
  /// binom(x, n) = x(x-1)...(x-n+1)/n!.
  static RatPoly binomial(long n);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rat>& coeffs() const { return c_; }
  /// Coefficient of x^i, 0 beyond the degree.
  Rat coeff(long i) const;
  /// Leading coefficient; 0 for the zero polynomial.
  Rat leading() const;

  Rat operator()(const Rat& x) const;
  /// Horner evaluation in Q_p.
  PAdicNumber eval_padic(const PAdicNumber& x) const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const Rat& s, const RatPoly& a);
  friend bool operator==(const RatPoly& a, const RatPoly& b) = default;

  /// x |-> f(scale * x).
  RatPoly scaled_argument(const Rat& scale) const;

  /// Least common multiple of coefficient denominators.
  Int denominator_lcm() const;

  /// Coefficients in the binomial basis: f = sum_k b_k binom(x, k),
  /// b_k = (Delta^k f)(0).
  std::vector<Rat> binomial_coordinates() const;

private:
  void trim();
  std::vector<Rat> c_;
};

} // namespace pw

#endif // PW_RATPOLY_HPP
