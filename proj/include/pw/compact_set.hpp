#ifndef PW_COMPACT_SET_HPP
#define PW_COMPACT_SET_HPP

#include "pw/arith.hpp"
#include "pw/padic.hpp"

#include <map>
#include <optional>
#include <vector>

namespace pw {

/// The ball center + p^exponent Z_p, center canonical in [0, p^exponent).
struct Ball {
  Int center;
  long exponent = 0;
  friend bool operator==(const Ball&, const Ball&) = default;
};

enum class Tri { False, True, Unknown };

/// A nonempty compact subset of Z_p: a finite union of balls, or a finite
/// set of p-integral rationals. Always held in normalized form.
class CompactSet {
public:
  enum class Kind { Balls, Finite };

  /// Normalizes; throws EmptySet for an empty list.
  static CompactSet balls(long p, std::vector<Ball> balls);
  static CompactSet finite(long p, std::vector<Rat> elements);
  static CompactSet whole(long p) { return balls(p, {Ball{0, 0}}); }
  /// p Z_p.
  static CompactSet maximal_ideal(long p) { return balls(p, {Ball{0, 1}}); }

  long prime() const { return p_; }
  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  const std::vector<Ball>& ball_list() const { return balls_; }
  const std::vector<Rat>& elements() const { return elements_; }
  /// Number of elements of a finite set.
  std::size_t size() const { return elements_.size(); }
  /// Largest ball exponent (0 for finite sets).
  long max_exponent() const;

  /// Sorted residues modulo p^m of the points of the set.
  std::vector<Int> residues(long m) const;
  /// |residues(1)|.
  long count_mod_p() const;

  Tri contains(const PAdicNumber& x) const;
  bool contains(const Rat& x) const;

  /// E intersected with r + p^d Z_p, or nullopt when empty.
  std::optional<CompactSet> restrict_to_class(const Int& r, long d) const;
  bool meets_class(const Int& r, long d) const;
  /// Smallest non-negative integer in E ∩ (r + p^d Z_p), for ball sets
  /// (the class must meet the set).
  Int smallest_in_class(const Int& r, long d) const;

  friend bool operator==(const CompactSet&, const CompactSet&) = default;

private:
  long p_ = 2;
  Kind kind_ = Kind::Balls;
  std::vector<Ball> balls_;
  std::vector<Rat> elements_;
};

/// Re-normalizes a set (idempotent; sets are normalized on construction).
CompactSet normalize(const CompactSet& s);

/// Same subset of Z_p, however the balls are split.
bool equivalent(const CompactSet& a, const CompactSet& b);

enum class DefaultFamily { Full, MaximalIdeal };

/// A product of compact sets over all primes: finitely many tracked
/// components plus a symbolic default (Z_p or p Z_p) everywhere else.
struct AdelicSet {
  std::map<long, CompactSet> tracked;
  DefaultFamily fallback = DefaultFamily::Full;

  /// Checks that keys are primes matching their components.
  void validate() const;
  bool is_tracked(long p) const { return tracked.count(p) != 0; }
  friend bool operator==(const AdelicSet&, const AdelicSet&) = default;
};

/// The p-component: the tracked set, else the default family at p.
CompactSet component(const AdelicSet& a, long p);

} // namespace pw

#endif // PW_COMPACT_SET_HPP
