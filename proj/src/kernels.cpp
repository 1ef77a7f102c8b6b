#include "pw/kernels.hpp"

#include "pw/errors.hpp"

#include <omp.h>

namespace pw::kernels {

namespace {

bool is_integer(const Rat& x) { return x.get_den() == 1; }

std::vector<Int> powers(long p, long digits) {
  std::vector<Int> out(static_cast<std::size_t>(digits) + 1);
  out[0] = 1;
  for (long i = 1; i <= digits; ++i)
    out[i] = out[i - 1] * p;
  return out;
}

} // namespace

Split split_difference(const Rat& a, const Rat& b, long p, const Int& modulus) {
  Split s;
  if (is_integer(a) && is_integer(b)) {
    Int d = Int(a.get_num()) - Int(b.get_num());
    auto [v, u] = split_power(d, p);
    s.v = v;
    s.u = mod(u, modulus);
    return s;
  }
  Rat d = a - b;
  auto [v, u] = split_power(Int(d.get_num()), p);
  s.v = v;
  s.u = mod(u * inv_mod(Int(d.get_den()), modulus), modulus);
  return s;
}

OrderingTable make_table(long p, std::span<const Rat> points, long digits) {
  OrderingTable t;
  t.p = p;
  t.digits = digits;
  t.modulus = ipow(p, digits);
  t.points.assign(points.begin(), points.end());
  const long n = static_cast<long>(points.size());
  t.w.assign(static_cast<std::size_t>(n), 0);
  t.den_inv.assign(static_cast<std::size_t>(n), Int(1));
#pragma omp parallel for schedule(dynamic, 8)
  for (long k = 0; k < n; ++k) {
    long v = 0;
    Int u = 1;
    for (long j = 0; j < k; ++j) {
      Split s = split_difference(t.points[k], t.points[j], p, t.modulus);
      v += s.v;
      u = mod(u * s.u, t.modulus);
    }
    t.w[k] = v;
    t.den_inv[k] = inv_mod(u, t.modulus);
  }
  return t;
}

std::vector<std::vector<Int>> basis_rows(const OrderingTable& t, std::size_t row_begin, std::size_t row_end) {
  if (row_end > t.size() || row_begin > row_end)
    throw ValidationError("basis row range outside the ordering");
  const auto pw = powers(t.p, t.digits);
  const long count = static_cast<long>(row_end - row_begin);
  std::vector<std::vector<Int>> rows(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(dynamic, 4)
  for (long r = 0; r < count; ++r) {
    const std::size_t n = row_begin + static_cast<std::size_t>(r);
    std::vector<Int> row(n + 1);
    long v = 0;
    Int u = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      const long e = v - t.w[k];
      if (e >= t.digits)
        row[k] = 0;
      else
        row[k] = mod(pw[static_cast<std::size_t>(e < 0 ? 0 : e)] * u * t.den_inv[k], t.modulus);
      if (k < n) {
        Split s = split_difference(t.points[n], t.points[k], t.p, t.modulus);
        v += s.v;
        u = mod(u * s.u, t.modulus);
      }
    }
    rows[static_cast<std::size_t>(r)] = std::move(row);
  }
  return rows;
}

std::vector<Int> eval_series(const OrderingTable& t, std::span<const Int> coeffs, std::span<const Rat> xs) {
  if (coeffs.size() > t.size())
    throw ValidationError("series longer than its ordering");
  const auto pw = powers(t.p, t.digits);
  const long count = static_cast<long>(xs.size());
  std::vector<Int> out(xs.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long i = 0; i < count; ++i) {
    const Rat& x = xs[static_cast<std::size_t>(i)];
    Int acc = 0;
    long v = 0;
    Int u = 1;
    bool integral = true;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
      const long e = v - t.w[n];
      if (e < 0) {
        integral = false;
        break;
      }
      if (e < t.digits)
        acc += coeffs[n] * pw[static_cast<std::size_t>(e)] * u * t.den_inv[n];
      if (x == t.points[n])
        break; // every later g_n vanishes at x
      Split s = split_difference(x, t.points[n], t.p, t.modulus);
      v += s.v;
      u = mod(u * s.u, t.modulus);
    }
    out[static_cast<std::size_t>(i)] = integral ? mod(acc, t.modulus) : Int(-1);
  }
  return out;
}

std::vector<long> ordering_scores(long p, std::span<const Rat> points, std::span<const Rat> candidates) {
  const long count = static_cast<long>(candidates.size());
  std::vector<long> out(candidates.size(), 0);
#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    const Rat& y = candidates[static_cast<std::size_t>(i)];
    long total = 0;
    for (const Rat& a : points) {
      if (a == y) {
        total = kInfinity;
        break;
      }
      if (y.get_den() == 1 && a.get_den() == 1)
        total += valp(Int(Int(y.get_num()) - Int(a.get_num())), p);
      else
        total += valp(Rat(y - a), p);
    }
    out[static_cast<std::size_t>(i)] = total;
  }
  return out;
}

} // namespace pw::kernels
