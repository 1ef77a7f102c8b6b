#ifndef PW_KERNELS_HPP
#define PW_KERNELS_HPP

// Data-parallel inner loops. Every kernel in pw::kernels has a serial
// reference in pw::kernels::serial computed along an independent route
// (exact integer/rational products instead of per-factor valuation and unit
// bookkeeping). Tests compare the two; bench/ times them.

#include "pw/arith.hpp"

#include <span>
#include <vector>

namespace pw::kernels {

/// A p-adic quantity split as p^v * u, u a unit known modulo p^digits.
struct Split {
  long v = 0;
  Int u = 1;
};

/// Data derived from ordering points a_0..a_L that every kernel needs:
/// w[k] = v_p(prod_{j<k}(a_k - a_j)) and the inverse of the unit part of
/// that product modulo p^digits.
struct OrderingTable {
  long p = 2;
  long digits = 1;
  Int modulus = 2;
  std::vector<Rat> points;
  std::vector<long> w;
  std::vector<Int> den_inv;

  std::size_t size() const { return points.size(); }
};

/// a - b split into valuation and unit modulo `modulus` (a != b, both
/// p-integral).
Split split_difference(const Rat& a, const Rat& b, long p, const Int& modulus);

OrderingTable make_table(long p, std::span<const Rat> points, long digits);

/// Rows [row_begin, row_end) of the lower triangular matrix
/// G[n][k] = g_k(a_n) mod p^digits with g_k(x) = prod_{j<k}(x - a_j)/(a_k - a_j).
/// Row n has n + 1 entries; G[n][n] = 1.
std::vector<std::vector<Int>> basis_rows(const OrderingTable& t, std::size_t row_begin, std::size_t row_end);

/// S(x) = sum_{n < coeffs.size()} coeffs[n] g_n(x) mod p^digits for each x.
/// The x must lie in the set the ordering belongs to; a point where some
/// g_n(x) is not p-integral yields nullopt-like sentinel -1.
std::vector<Int> eval_series(const OrderingTable& t, std::span<const Int> coeffs, std::span<const Rat> xs);

/// For each candidate y: sum_k v_p(y - a_k), kInfinity if y is one of the a_k.
std::vector<long> ordering_scores(long p, std::span<const Rat> points, std::span<const Rat> candidates);

namespace serial {

OrderingTable make_table(long p, std::span<const Rat> points, long digits);
std::vector<std::vector<Int>> basis_rows(const OrderingTable& t, std::size_t row_begin, std::size_t row_end);
std::vector<Int> eval_series(const OrderingTable& t, std::span<const Int> coeffs, std::span<const Rat> xs);
std::vector<long> ordering_scores(long p, std::span<const Rat> points, std::span<const Rat> candidates);

} // namespace serial

} // namespace pw::kernels

#endif // PW_KERNELS_HPP
