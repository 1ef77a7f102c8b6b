#include "pw/pordering.hpp"

#include "pw/errors.hpp"
#include "pw/kernels.hpp"

#include <algorithm>

namespace pw {

POrdering::POrdering(CompactSet set, std::vector<Rat> values, std::vector<long> w, long precision)
    : set_(std::move(set)), values_(std::move(values)), w_(std::move(w)), precision_(precision) {}

PAdicInt POrdering::point(long n) const {
  return PAdicInt(prime(), residue_of(values_.at(static_cast<std::size_t>(n)), prime(), precision_), precision_);
}

std::vector<PAdicInt> POrdering::points() const {
  std::vector<PAdicInt> out;
  out.reserve(values_.size());
  for (long n = 0; n <= length(); ++n)
    out.push_back(point(n));
  return out;
}

namespace {

// Branch-and-bound over the tree of residue classes of a ball set. For y in
// a class r + p^d Z_p that contains none of the points, sum_k v(y - a_k) is
// constant, so only classes holding points need to be split further.
class TreeSearch {
public:
  TreeSearch(const CompactSet& set, long precision, const std::vector<std::vector<long>>& digits)
      : set_(set), p_(set.prime()), n_(precision), digits_(digits) {}

  void run(std::size_t point_count) {
    std::vector<std::size_t> all(point_count);
    for (std::size_t i = 0; i < point_count; ++i)
      all[i] = i;
    descend(Int(0), 0, Int(1), all, 0);
  }

  long best_value() const { return best_; }
  const Int& best_point() const { return best_y_; }

private:
  void consider(long value, const Int& y) {
    if (value < best_ || (value == best_ && y < best_y_)) {
      best_ = value;
      best_y_ = y;
    }
  }

  void descend(const Int& r, long d, const Int& pd, const std::vector<std::size_t>& idx, long acc) {
    if (idx.empty()) {
      consider(acc, set_.smallest_in_class(r, d));
      return;
    }
    const long here = static_cast<long>(idx.size());
    if (acc + d * here > best_)
      return;
    if (d >= n_)
      throw PrecisionExhausted("p-ordering search needs more than " + std::to_string(n_) + " digits");
    std::vector<std::vector<std::size_t>> buckets(static_cast<std::size_t>(p_));
    for (std::size_t k : idx)
      buckets[static_cast<std::size_t>(digits_[k][static_cast<std::size_t>(d)])].push_back(k);
    const Int next = pd * p_;
    for (long j = 0; j < p_; ++j) {
      if (!buckets[static_cast<std::size_t>(j)].empty())
        continue;
      Int child = r + j * pd;
      if (set_.meets_class(child, d + 1))
        consider(acc + d * here, set_.smallest_in_class(child, d + 1));
    }
    for (long j = 0; j < p_; ++j) {
      const auto& bucket = buckets[static_cast<std::size_t>(j)];
      if (bucket.empty())
        continue;
      Int child = r + j * pd;
      if (!set_.meets_class(child, d + 1))
        continue;
      const long inside = static_cast<long>(bucket.size());
      const long child_acc = acc + d * (here - inside);
      if (child_acc + (d + 1) * inside > best_)
        continue;
      descend(child, d + 1, next, bucket, child_acc);
    }
  }

  const CompactSet& set_;
  long p_;
  long n_;
  const std::vector<std::vector<long>>& digits_;
  long best_ = kInfinity;
  Int best_y_;
};

std::vector<long> base_p_digits(const Int& x, long p, long count) {
  std::vector<long> out(static_cast<std::size_t>(count), 0);
  Int rest = x;
  for (long i = 0; i < count && rest != 0; ++i) {
    Int q, r;
    mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), rest.get_mpz_t(), static_cast<unsigned long>(p));
    out[static_cast<std::size_t>(i)] = r.get_si();
    rest = q;
  }
  return out;
}

void grow_ball_ordering(const CompactSet& s, long precision, std::vector<Rat>& values, std::vector<long>& w,
                        long length) {
  const long p = s.prime();
  if (precision <= s.max_exponent())
    throw PrecisionExhausted("precision must exceed the deepest ball exponent");
  std::vector<std::vector<long>> digits;
  for (const Rat& a : values)
    digits.push_back(base_p_digits(Int(a.get_num()), p, precision));
  while (static_cast<long>(values.size()) <= length) {
    TreeSearch search(s, precision, digits);
    search.run(values.size());
    values.emplace_back(search.best_point());
    w.push_back(search.best_value());
    digits.push_back(base_p_digits(search.best_point(), p, precision));
  }
}

void grow_finite_ordering(const CompactSet& s, long precision, std::vector<Rat>& values, std::vector<long>& w,
                          long length) {
  const long p = s.prime();
  if (length >= static_cast<long>(s.size()))
    throw LengthExceedsSet("finite set has " + std::to_string(s.size()) + " elements; ordering needs " +
                           std::to_string(length + 1));
  const auto& elems = s.elements();
  std::vector<Int> res;
  res.reserve(elems.size());
  for (const Rat& e : elems)
    res.push_back(residue_of(e, p, precision));
  while (static_cast<long>(values.size()) <= length) {
    auto scores = kernels::ordering_scores(p, values, elems);
    std::size_t best = elems.size();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      if (is_infinite(scores[i]))
        continue;
      if (best == elems.size() || scores[i] < scores[best] ||
          (scores[i] == scores[best] && (res[i] < res[best] || (res[i] == res[best] && elems[i] < elems[best]))))
        best = i;
    }
    for (const Rat& a : values)
      if (valp(Rat(elems[best] - a), p) >= precision)
        throw PrecisionExhausted("ordering points agree modulo p^" + std::to_string(precision));
    values.push_back(elems[best]);
    w.push_back(values.size() == 1 ? 0 : scores[best]);
  }
}

void grow(const CompactSet& s, long precision, std::vector<Rat>& values, std::vector<long>& w, long length) {
  if (s.is_finite())
    grow_finite_ordering(s, precision, values, w, length);
  else
    grow_ball_ordering(s, precision, values, w, length);
}

} // namespace

POrdering p_ordering(const CompactSet& s, long length, long precision) {
  if (length < 0)
    throw ValidationError("ordering length must be non-negative");
  if (precision < 1)
    throw ValidationError("precision must be positive");
  std::vector<Rat> values;
  std::vector<long> w;
  grow(s, precision, values, w, length);
  return POrdering(s, std::move(values), std::move(w), precision);
}

POrdering extend(const POrdering& o, long length) {
  if (length <= o.length())
    return o;
  std::vector<Rat> values = o.values();
  std::vector<long> w = o.w();
  grow(o.set(), o.precision(), values, w, length);
  return POrdering(o.set(), std::move(values), std::move(w), o.precision());
}

LocalBasisPoly local_basis(const POrdering& o, long n) {
  if (n < 0 || n > o.length())
    throw ValidationError("basis degree outside the ordering");
  const auto& a = o.values();
  Rat den = 1;
  for (long k = 0; k < n; ++k)
    den *= a[n] - a[k];
  LocalBasisPoly out;
  out.degree = n;
  out.form = LocalBasisPoly::Form::PAdicCoeffs;
  out.poly = Rat(1) / den * RatPoly::from_roots(std::span<const Rat>(a.data(), static_cast<std::size_t>(n)));
  for (const Rat& c : out.poly.coeffs())
    out.padic.push_back(embed(c, o.prime(), o.precision()));
  return out;
}

LocalBasisPoly rational_lift(const POrdering& o, long n) {
  if (n < 0 || n > o.length())
    throw ValidationError("basis degree outside the ordering");
  const long w = o.w()[static_cast<std::size_t>(n)];
  if (o.precision() < w)
    throw PrecisionExhausted("rational lift needs " + std::to_string(w) + " digits, ordering has " +
                             std::to_string(o.precision()));
  const long p = o.prime();
  RatPoly g = RatPoly::from_roots(std::span<const Rat>(o.values().data(), static_cast<std::size_t>(n)));
  bool integral = std::all_of(g.coeffs().begin(), g.coeffs().end(), [](const Rat& c) { return c.get_den() == 1; });
  std::vector<Rat> h = g.coeffs();
  if (!integral)
    for (long i = 0; i < n; ++i)
      h[static_cast<std::size_t>(i)] = Rat(residue_of(h[static_cast<std::size_t>(i)], p, w));
  LocalBasisPoly out;
  out.degree = n;
  out.form = LocalBasisPoly::Form::RationalLift;
  out.poly = Rat(1) / Rat(ipow(p, w)) * RatPoly(std::move(h));
  return out;
}

bool local_membership(const RatPoly& f, const POrdering& o) {
  if (f.is_zero())
    return true;
  if (o.length() < f.degree())
    throw ValidationError("ordering too short for the membership criterion");
  for (long k = 0; k <= f.degree(); ++k)
    if (valp(f(o.values()[static_cast<std::size_t>(k)]), o.prime()) < 0)
      return false;
  return true;
}

bool local_membership(const RatPoly& f, const CompactSet& s, long precision) {
  if (f.is_zero())
    return true;
  if (s.is_finite() && static_cast<long>(s.size()) <= f.degree()) {
    return std::all_of(s.elements().begin(), s.elements().end(),
                       [&](const Rat& x) { return valp(f(x), s.prime()) >= 0; });
  }
  return local_membership(f, p_ordering(s, f.degree(), precision));
}

} // namespace pw
