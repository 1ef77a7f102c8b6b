#include "pw/errors.hpp"
#include "pw/kernels.hpp"

namespace pw::kernels::serial {

namespace {

// Exact prod_{j<k}(x - a_j).
Rat falling(const Rat& x, std::span<const Rat> a, std::size_t k) {
  Rat r = 1;
  for (std::size_t j = 0; j < k; ++j)
    r *= x - a[j];
  return r;
}

} // namespace

OrderingTable make_table(long p, std::span<const Rat> points, long digits) {
  OrderingTable t;
  t.p = p;
  t.digits = digits;
  t.modulus = ipow(p, digits);
  t.points.assign(points.begin(), points.end());
  for (std::size_t k = 0; k < points.size(); ++k) {
    Rat d = falling(points[k], points, k);
    long v = valp(d, p);
    Rat unit = v >= 0 ? Rat(d / Rat(ipow(p, v))) : Rat(d * Rat(ipow(p, -v)));
    t.w.push_back(v);
    t.den_inv.push_back(inv_mod(residue_of(unit, p, digits), t.modulus));
  }
  return t;
}

std::vector<std::vector<Int>> basis_rows(const OrderingTable& t, std::size_t row_begin, std::size_t row_end) {
  if (row_end > t.size() || row_begin > row_end)
    throw ValidationError("basis row range outside the ordering");
  std::vector<Rat> den;
  for (std::size_t k = 0; k < row_end; ++k)
    den.push_back(falling(t.points[k], t.points, k));
  std::vector<std::vector<Int>> rows;
  for (std::size_t n = row_begin; n < row_end; ++n) {
    std::vector<Int> row;
    Rat num = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      row.push_back(residue_of(Rat(num / den[k]), t.p, t.digits));
      if (k < n)
        num *= t.points[n] - t.points[k];
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<Int> eval_series(const OrderingTable& t, std::span<const Int> coeffs, std::span<const Rat> xs) {
  std::vector<Rat> den;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    den.push_back(falling(t.points[k], t.points, k));
  std::vector<Int> out;
  for (const Rat& x : xs) {
    Int acc = 0;
    bool integral = true;
    Rat num = 1;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
      Rat g = num / den[n];
      if (valp(g, t.p) < 0) {
        integral = false;
        break;
      }
      acc += coeffs[n] * residue_of(g, t.p, t.digits);
      num *= x - t.points[n];
    }
    out.push_back(integral ? mod(acc, t.modulus) : Int(-1));
  }
  return out;
}

std::vector<long> ordering_scores(long p, std::span<const Rat> points, std::span<const Rat> candidates) {
  std::vector<long> out;
  for (const Rat& y : candidates) {
    long total = 0;
    for (const Rat& a : points) {
      long v = valp(Rat(y - a), p);
      if (is_infinite(v)) {
        total = kInfinity;
        break;
      }
      total += v;
    }
    out.push_back(total);
  }
  return out;
}

} // namespace pw::kernels::serial
