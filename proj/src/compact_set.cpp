#include "pw/compact_set.hpp"

#include "pw/errors.hpp"

#include <algorithm>
#include <set>

namespace pw {

namespace {

bool ball_contains_ball(long p, const Ball& outer, const Ball& inner) {
  if (outer.exponent > inner.exponent)
    return false;
  return mod(inner.center, ipow(p, outer.exponent)) == outer.center;
}

bool ball_inside(const CompactSet& s, const Ball& b) {
  const long p = s.prime();
  bool meets = false;
  for (const Ball& k : s.ball_list()) {
    if (ball_contains_ball(p, k, b))
      return true;
    if (k.exponent > b.exponent && mod(k.center, ipow(p, b.exponent)) == b.center)
      meets = true;
  }
  if (!meets)
    return false;
  const Int step = ipow(p, b.exponent);
  for (long j = 0; j < p; ++j)
    if (!ball_inside(s, Ball{b.center + j * step, b.exponent + 1}))
      return false;
  return true;
}

bool covers(const CompactSet& s, const std::vector<Ball>& balls) {
  return std::all_of(balls.begin(), balls.end(), [&](const Ball& b) { return ball_inside(s, b); });
}

} // namespace

CompactSet CompactSet::balls(long p, std::vector<Ball> balls) {
  require_prime(p);
  if (balls.empty())
    throw EmptySet("ball list denotes the empty set");
  for (Ball& b : balls) {
    if (b.exponent < 0)
      throw ValidationError("ball exponent must be non-negative");
    b.center = mod(b.center, ipow(p, b.exponent));
  }
  std::sort(balls.begin(), balls.end(), [](const Ball& a, const Ball& b) {
    return a.exponent != b.exponent ? a.exponent < b.exponent : a.center < b.center;
  });
  balls.erase(std::unique(balls.begin(), balls.end()), balls.end());
  // Larger balls sort first, so a ball is dropped iff an earlier one covers it.
  std::vector<Ball> kept;
  for (const Ball& b : balls) {
    bool covered = std::any_of(kept.begin(), kept.end(),
                               [&](const Ball& k) { return ball_contains_ball(p, k, b); });
    if (!covered)
      kept.push_back(b);
  }
  CompactSet s;
  s.p_ = p;
  s.kind_ = Kind::Balls;
  s.balls_ = std::move(kept);
  return s;
}

CompactSet CompactSet::finite(long p, std::vector<Rat> elements) {
  require_prime(p);
  if (elements.empty())
    throw EmptySet("finite set with no elements");
  for (Rat& x : elements) {
    x.canonicalize();
    if (valp(x, p) < 0)
      throw ValidationError("finite set element " + x.get_str() + " is not in Z_" + std::to_string(p));
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  CompactSet s;
  s.p_ = p;
  s.kind_ = Kind::Finite;
  s.elements_ = std::move(elements);
  return s;
}

CompactSet normalize(const CompactSet& s) {
  return s.is_finite() ? CompactSet::finite(s.prime(), s.elements()) : CompactSet::balls(s.prime(), s.ball_list());
}

bool equivalent(const CompactSet& a, const CompactSet& b) {
  if (a.prime() != b.prime() || a.kind() != b.kind())
    return false;
  if (a.is_finite())
    return a.elements() == b.elements();
  return covers(b, a.ball_list()) && covers(a, b.ball_list());
}

long CompactSet::max_exponent() const {
  long m = 0;
  for (const Ball& b : balls_)
    m = std::max(m, b.exponent);
  return m;
}

std::vector<Int> CompactSet::residues(long m) const {
  if (m < 0)
    throw ValidationError("negative residue depth");
  const Int pm = ipow(p_, m);
  std::set<Int> out;
  if (is_finite()) {
    for (const Rat& x : elements_)
      out.insert(residue_of(x, p_, m));
  } else {
    for (const Ball& b : balls_) {
      if (b.exponent >= m) {
        out.insert(mod(b.center, pm));
        continue;
      }
      const Int step = ipow(p_, b.exponent);
      for (Int r = b.center; r < pm; r += step)
        out.insert(r);
    }
  }
  return {out.begin(), out.end()};
}

long CompactSet::count_mod_p() const { return static_cast<long>(residues(1).size()); }

Tri CompactSet::contains(const PAdicNumber& x) const {
  if (x.prime() != p_)
    throw ValidationError("membership query over a different prime");
  if (!x.is_zero() && x.valuation() < 0)
    return Tri::False;
  if (x.is_exact_zero())
    return contains(Rat(0)) ? Tri::True : Tri::False;
  const long known = x.absolute_precision();
  const Int value = x.is_zero() ? Int(0) : Int(x.unit() * ipow(p_, x.valuation()));
  if (is_finite()) {
    const Int pm = ipow(p_, known);
    for (const Rat& e : elements_)
      if (residue_of(e, p_, known) == mod(value, pm))
        return Tri::Unknown;
    return Tri::False;
  }
  bool unknown = false;
  for (const Ball& b : balls_) {
    const long depth = std::min(known, b.exponent);
    const Int pd = ipow(p_, depth);
    if (mod(value, pd) != mod(b.center, pd))
      continue;
    if (known >= b.exponent)
      return Tri::True;
    unknown = true;
  }
  return unknown ? Tri::Unknown : Tri::False;
}

bool CompactSet::contains(const Rat& x) const {
  if (valp(x, p_) < 0)
    return false;
  if (is_finite())
    return std::binary_search(elements_.begin(), elements_.end(), x);
  for (const Ball& b : balls_)
    if (residue_of(x, p_, b.exponent) == b.center)
      return true;
  return false;
}

bool CompactSet::meets_class(const Int& r, long d) const {
  if (is_finite()) {
    for (const Rat& x : elements_)
      if (residue_of(x, p_, d) == r)
        return true;
    return false;
  }
  for (const Ball& b : balls_) {
    const Int pm = ipow(p_, std::min(b.exponent, d));
    if (mod(b.center, pm) == mod(r, pm))
      return true;
  }
  return false;
}

Int CompactSet::smallest_in_class(const Int& r, long d) const {
  std::optional<Int> best;
  for (const Ball& b : balls_) {
    if (b.exponent <= d) {
      const Int pk = ipow(p_, b.exponent);
      if (mod(r, pk) == b.center)
        return r;
    } else if (mod(b.center, ipow(p_, d)) == r) {
      if (!best || b.center < *best)
        best = b.center;
    }
  }
  if (!best)
    throw ValidationError("residue class does not meet the set");
  return *best;
}

std::optional<CompactSet> CompactSet::restrict_to_class(const Int& r, long d) const {
  const Int pd = ipow(p_, d);
  const Int rr = mod(r, pd);
  if (is_finite()) {
    std::vector<Rat> kept;
    for (const Rat& x : elements_)
      if (residue_of(x, p_, d) == rr)
        kept.push_back(x);
    if (kept.empty())
      return std::nullopt;
    return finite(p_, std::move(kept));
  }
  std::vector<Ball> kept;
  for (const Ball& b : balls_) {
    if (b.exponent <= d) {
      if (mod(rr, ipow(p_, b.exponent)) == b.center)
        return balls(p_, {Ball{rr, d}});
    } else if (mod(b.center, pd) == rr) {
      kept.push_back(b);
    }
  }
  if (kept.empty())
    return std::nullopt;
  return balls(p_, std::move(kept));
}

void AdelicSet::validate() const {
  for (const auto& [p, s] : tracked) {
    require_prime(p);
    if (s.prime() != p)
      throw ValidationError("component at " + std::to_string(p) + " is over prime " + std::to_string(s.prime()));
  }
}

CompactSet component(const AdelicSet& a, long p) {
  require_prime(p);
  auto it = a.tracked.find(p);
  if (it != a.tracked.end())
    return it->second;
  return a.fallback == DefaultFamily::Full ? CompactSet::whole(p) : CompactSet::maximal_ideal(p);
}

} // namespace pw
