#include "pw/ratpoly.hpp"

#include <algorithm>

namespace pw {

RatPoly::RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0)
    c_.pop_back();
}

RatPoly RatPoly::constant(const Rat& c) { return RatPoly(std::vector<Rat>{c}); }

RatPoly RatPoly::monomial(const Rat& c, long degree) {
  std::vector<Rat> v(static_cast<std::size_t>(degree) + 1, Rat(0));
  v.back() = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::from_roots(std::span<const Rat> roots) {
  std::vector<Rat> c{Rat(1)};
  for (const Rat& r : roots) {
    std::vector<Rat> next(c.size() + 1, Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return RatPoly(std::move(c));
}

RatPoly RatPoly::binomial(long n) {
  std::vector<Rat> roots;
  roots.reserve(static_cast<std::size_t>(n));
  Int fact = 1;
  for (long k = 0; k < n; ++k) {
    roots.emplace_back(k);
    fact *= k + 1;
  }
  return Rat(1, 1) / Rat(fact) * from_roots(roots);
}

Rat RatPoly::coeff(long i) const {
  if (i < 0 || i > degree())
    return 0;
  return c_[static_cast<std::size_t>(i)];
}

Rat RatPoly::leading() const { return c_.empty() ? Rat(0) : c_.back(); }

Rat RatPoly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

PAdicNumber RatPoly::eval_padic(const PAdicNumber& x) const {
  const long p = x.prime();
  PAdicNumber acc = PAdicNumber::zero(p);
  const long n = x.is_zero() ? std::max(1L, std::min(x.absolute_precision(), default_precision())) : x.precision();
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * x + embed(*it, p, n);
  return acc;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rat> c(std::max(a.c_.size(), b.c_.size()), Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i)
    c[i] += b.c_[i];
  return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + Rat(-1) * b; }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<Rat> c(a.c_.size() + b.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] += a.c_[i] * b.c_[j];
  return RatPoly(std::move(c));
}

RatPoly operator*(const Rat& s, const RatPoly& a) {
  std::vector<Rat> c = a.c_;
  for (Rat& x : c)
    x *= s;
  return RatPoly(std::move(c));
}

RatPoly RatPoly::scaled_argument(const Rat& scale) const {
  std::vector<Rat> c = c_;
  Rat pw = 1;
  for (Rat& x : c) {
    x *= pw;
    pw *= scale;
  }
  return RatPoly(std::move(c));
}

Int RatPoly::denominator_lcm() const {
  Int l = 1;
  for (const Rat& x : c_)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

std::vector<Rat> RatPoly::binomial_coordinates() const {
  const long d = degree();
  if (d < 0)
    return {};
  std::vector<Rat> vals;
  vals.reserve(static_cast<std::size_t>(d) + 1);
  for (long i = 0; i <= d; ++i)
    vals.push_back((*this)(Rat(i)));
  std::vector<Rat> out;
  out.reserve(vals.size());
  for (long k = 0; k <= d; ++k) {
    out.push_back(vals[0]);
    for (long i = 0; i + 1 < static_cast<long>(vals.size()); ++i)
      vals[i] = vals[i + 1] - vals[i];
    vals.pop_back();
  }
  return out;
}

} // namespace pw
