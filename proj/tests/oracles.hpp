#ifndef PW_TESTS_ORACLES_HPP
#define PW_TESTS_ORACLES_HPP

// Brute-force reference computations shared by the unit and acceptance
// tests. Everything here is deliberately naive.

#include "pw/compact_set.hpp"
#include "pw/mahler.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <vector>

namespace pw::oracle {

inline long score(const std::vector<Rat>& chosen, const Rat& y, long p) {
  long s = 0;
  for (const Rat& a : chosen)
    s += valp(Rat(y - a), p);
  return s;
}

/// Every p-ordering of a finite set of length `count` (all greedy-valid
/// sequences), as their w-sequences.
inline void all_orderings(const std::vector<Rat>& elems, long p, std::size_t count, std::vector<Rat>& chosen,
                          std::vector<long>& w, std::vector<std::vector<long>>& out) {
  if (chosen.size() == count) {
    out.push_back(w);
    return;
  }
  long best = kInfinity;
  for (const Rat& y : elems)
    if (std::find(chosen.begin(), chosen.end(), y) == chosen.end())
      best = std::min(best, score(chosen, y, p));
  for (const Rat& y : elems) {
    if (std::find(chosen.begin(), chosen.end(), y) != chosen.end() || score(chosen, y, p) != best)
      continue;
    chosen.push_back(y);
    w.push_back(chosen.size() == 1 ? 0 : best);
    all_orderings(elems, p, count, chosen, w, out);
    chosen.pop_back();
    w.pop_back();
  }
}

/// min over residues r of the set mod p^depth of sum_k v_p(r - a_k), each
/// term capped at depth (so the value is exact when the true minimum is
/// attained below the cap).
inline long residue_minimum(const CompactSet& s, const std::vector<Rat>& chosen, long depth) {
  const long p = s.prime();
  long best = kInfinity;
  for (const Int& r : s.residues(depth)) {
    long total = 0;
    for (const Rat& a : chosen)
      total += std::min(depth, valp(Rat(Rat(r) - a), p));
    best = std::min(best, total);
  }
  return best;
}

/// Forward differences: c_n = sum_k (-1)^{n-k} C(n,k) f(k).
inline std::vector<Rat> forward_differences(const std::vector<Rat>& values) {
  std::vector<Rat> row = values, out;
  while (!row.empty()) {
    out.push_back(row.front());
    for (std::size_t i = 0; i + 1 < row.size(); ++i)
      row[i] = row[i + 1] - row[i];
    row.pop_back();
  }
  return out;
}

inline CompactSet random_ball_set(std::mt19937& rng, long p, long max_exp, int max_balls) {
  std::uniform_int_distribution<long> exps(0, max_exp);
  std::uniform_int_distribution<int> nb(1, max_balls);
  std::vector<Ball> balls;
  for (int i = nb(rng); i > 0; --i) {
    const long e = exps(rng);
    const Int pe = ipow(p, e);
    std::uniform_int_distribution<long> centers(0, pe.get_si() - 1);
    balls.push_back(Ball{Int(centers(rng)), e});
  }
  return CompactSet::balls(p, balls);
}

inline StepFunction random_step(std::mt19937& rng, const CompactSet& s, long m, long n) {
  const Int pn = ipow(s.prime(), n);
  std::uniform_int_distribution<long> vals(0, pn.get_si() - 1);
  std::map<Int, Int> table;
  for (const Int& r : s.residues(m))
    table[r] = vals(rng);
  return StepFunction::make(s, m, table, n);
}

/// max-depth residue sweep: min over residues r of E mod p^depth of
/// v_p(f(r) - phi(r)), using a point of E in each class.
inline long sweep_closeness(const RatPoly& f, const StepFunction& phi, long depth) {
  const CompactSet& s = phi.domain();
  const long p = s.prime();
  long best = kInfinity;
  for (const Int& r : s.residues(depth)) {
    const Rat x = s.is_finite() ? s.restrict_to_class(r, depth)->elements().front()
                                : Rat(s.smallest_in_class(r, depth));
    best = std::min(best, valp(Rat(f(x) - Rat(phi(x).residue())), p));
  }
  return best;
}

} // namespace pw::oracle

#endif // PW_TESTS_ORACLES_HPP
