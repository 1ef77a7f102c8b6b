#include "pw/errors.hpp"
#include "pw/kernels.hpp"
#include "pw/mahler.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace pw;

namespace {

StepFunction square_on_z2(long m, long n) {
  return sample(CompactSet::whole(2), m, n, [](const Rat& x) -> Rat { return x * x; });
}

std::vector<Int> residues(const MahlerSeries& s) {
  std::vector<Int> out;
  for (const PAdicInt& c : s.coeffs)
    out.push_back(c.residue());
  return out;
}

} // namespace

TEST_CASE("expand: x^2 on Z_2") {
  StepFunction phi = square_on_z2(6, 6);
  MahlerSeries s = expand(phi, p_ordering(CompactSet::whole(2), 0, 32), 6);
  CHECK(s.certified);
  CHECK(residues(s) == std::vector<Int>{0, 1, 2});
  CHECK(s.partial_sum() == RatPoly({0, 0, 1}));
  CHECK(evaluate(s, PAdicInt(2, 3, 20)).residue() == 9);
  CHECK(evaluate(s, Rat(3)).residue() == 9);
}

TEST_CASE("expand: constants and the zero function") {
  std::map<Int, Int> five{{0, 5}, {1, 5}, {2, 5}};
  StepFunction c = StepFunction::make(CompactSet::whole(3), 1, five, 4);
  MahlerSeries s = expand(c, p_ordering(CompactSet::whole(3), 0, 16), 4);
  CHECK(residues(s) == std::vector<Int>{5});
  CHECK(evaluate(s, PAdicInt(3, 17, 8)).residue() == 5);

  std::map<Int, Int> zero{{0, 0}, {1, 0}};
  StepFunction z = StepFunction::make(CompactSet::whole(2), 1, zero, 4);
  MahlerSeries sz = expand(z, p_ordering(CompactSet::whole(2), 0, 16), 4);
  CHECK(sz.coeffs.empty());
  CHECK(sz.certified);
  SupNormData d = sup_norm_data(sz, z);
  CHECK(d.coeff_inf == 4);
  CHECK(d.value_inf == 4);
}

TEST_CASE("expand: indicator of 1+2Z_2 matches finite differences") {
  std::map<Int, Int> ind{{0, 0}, {1, 1}};
  StepFunction phi = StepFunction::make(CompactSet::whole(2), 1, ind, 4);
  MahlerSeries s = expand(phi, p_ordering(CompactSet::whole(2), 0, 32), 4);
  CHECK(s.certified);
  std::vector<Rat> values;
  for (long n = 0; n < 12; ++n)
    values.emplace_back(n % 2);
  auto diffs = oracle::forward_differences(values);
  for (long n = 0; n < 12; ++n) {
    const Int want = residue_of(diffs[static_cast<std::size_t>(n)], 2, 4);
    const Int got = n < s.length() ? s.coeffs[static_cast<std::size_t>(n)].residue() : Int(0);
    CHECK(got == want);
  }
  // certified sum reproduces the indicator mod 16 on every residue mod 2^8
  RatPoly f = s.partial_sum();
  for (long r = 0; r < 256; ++r)
    CHECK(residue_of(f(Rat(r)), 2, 4) == r % 2);
}

TEST_CASE("sup_norm_data") {
  StepFunction sq = square_on_z2(5, 6);
  MahlerSeries s = expand(sq, p_ordering(CompactSet::whole(2), 0, 32), 6);
  SupNormData d = sup_norm_data(s, sq);
  CHECK(d.coeff_inf == 0);
  CHECK(d.value_inf == 0);
  CHECK(d.agree);

  StepFunction twice = sample(CompactSet::whole(2), 4, 6, [](const Rat& x) -> Rat { return 2 * x; });
  MahlerSeries t = expand(twice, p_ordering(CompactSet::whole(2), 0, 32), 6);
  SupNormData e = sup_norm_data(t, twice);
  CHECK(e.coeff_inf == 1);
  CHECK(e.value_inf == 1);

  MahlerSeries fake = t;
  fake.certified = false;
  CHECK_THROWS_AS(sup_norm_data(fake, twice), NotCertified);
}

TEST_CASE("expand validates its inputs") {
  StepFunction phi = square_on_z2(2, 4);
  CHECK_THROWS_AS(expand(phi, p_ordering(CompactSet::whole(3), 0, 8), 4), ValidationError);
  CHECK_THROWS_AS(expand(phi, p_ordering(CompactSet::whole(2), 0, 8), 5), PrecisionExhausted);
  CHECK_THROWS_AS(StepFunction::make(CompactSet::whole(2), 1, {{0, 1}}, 4), ValidationError);
  ExpandOptions tight;
  tight.max_length = 3;
  StepFunction ind = StepFunction::make(CompactSet::whole(2), 2, {{0, 0}, {1, 1}, {2, 0}, {3, 0}}, 6);
  CHECK_THROWS_AS(expand(ind, p_ordering(CompactSet::whole(2), 0, 32), 6, tight), CertificateFailed);
}

TEST_CASE("recursion agrees with the exact triangular solve; properties hold") {
  std::mt19937 rng(31);
  for (int t = 0; t < 24; ++t) {
    const long p = t % 2 ? 3 : 2;
    const long m = 1 + t % 3;
    CompactSet s = t % 4 < 2 ? CompactSet::whole(p) : oracle::random_ball_set(rng, p, 2, 3);
    StepFunction phi = oracle::random_step(rng, s, m, 6);
    MahlerSeries ser = expand(phi, p_ordering(s, 0, 40), 6);
    REQUIRE(ser.certified);
    const long L = ser.length() + 5;
    auto direct = solve_triangular(phi, ser.ordering, L, 6);
    for (long n = 0; n < L; ++n) {
      const Int got = n < ser.length() ? ser.coeffs[static_cast<std::size_t>(n)].residue() : Int(0);
      CHECK(direct[static_cast<std::size_t>(n)] == got);
    }
    // Certificate soundness by a direct sweep a few digits past m.
    CHECK(oracle::sweep_closeness(ser.partial_sum(), phi, m + 3) >= 6);
    // Sup-norm identity.
    CHECK(sup_norm_data(ser, phi).agree);
    // Re-expanding the evaluated series gives the same coefficients.
    std::map<Int, Int> again;
    for (const auto& [r, v] : phi.table()) {
      const Rat x = s.is_finite() ? s.restrict_to_class(r, m)->elements().front() : Rat(s.smallest_in_class(r, m));
      again[r] = evaluate(ser, x).residue();
    }
    StepFunction phi2 = StepFunction::make(s, m, again, 6);
    CHECK(residues(expand(phi2, ser.ordering, 6)) == residues(ser));
  }
}

TEST_CASE("expansion on a finite set interpolates") {
  CompactSet f = CompactSet::finite(3, {Rat(0), Rat(1), Rat(3), Rat(4), Rat(9), Rat(1, 2)});
  std::mt19937 rng(37);
  StepFunction phi = oracle::random_step(rng, f, 3, 5);
  MahlerSeries s = expand(phi, p_ordering(f, 0, 20), 5);
  CHECK(s.certified);
  for (const Rat& x : f.elements())
    CHECK(evaluate(s, x).residue() == phi(x).residue());
}

TEST_CASE("rewriting in another regular basis") {
  StepFunction sq = square_on_z2(4, 5);
  MahlerSeries s = expand(sq, p_ordering(CompactSet::whole(2), 0, 32), 5);
  std::vector<RatPoly> monomials{RatPoly({1}), RatPoly({0, 1}), RatPoly({0, 0, 1})};
  auto c = expand_in_basis(s, monomials);
  CHECK(c[0].residue() == 0);
  CHECK(c[1].residue() == 0);
  CHECK(c[2].residue() == 1);
}

TEST_CASE("expand_adelic") {
  AdelicSet a;
  a.tracked.emplace(2, CompactSet::whole(2));
  a.tracked.emplace(3, CompactSet::whole(3));
  AdelicOrdering o = adelic_ordering(a, 1, 32);
  std::map<long, StepFunction> phi;
  phi.emplace(2, square_on_z2(5, 6));
  phi.emplace(3, StepFunction::make(CompactSet::whole(3), 0, {{0, 1}}, 6));
  AdelicSeries s = expand_adelic(phi, o, {}, 6);
  CHECK(residues(s.components.at(2)) == std::vector<Int>{0, 1, 2});
  CHECK(residues(s.components.at(3)) == std::vector<Int>{1});
  CHECK(s.coeff(1).tracked.at(2).residue() == 1);
  CHECK(s.coeff(1).tracked.at(3).residue() == 0);

  AdelicSeries single = expand_adelic({{2, square_on_z2(5, 6)}}, adelic_ordering([] {
    AdelicSet b;
    b.tracked.emplace(2, CompactSet::whole(2));
    return b;
  }(), 1, 32), {}, 6);
  CHECK(residues(single.components.at(2)) == residues(expand(square_on_z2(5, 6), p_ordering(CompactSet::whole(2), 0, 32), 6)));

  AdelicSeries zero = expand_adelic({}, o, {}, 6);
  CHECK(zero.length() == 0);

  AdelicPoint x;
  x.tracked[2] = PAdicInt(2, 5, 20);
  x.tracked[3] = PAdicInt(3, 5, 20);
  AdelicPoint y = evaluate(s, x);
  CHECK(y.tracked.at(2).residue() == 25);
  CHECK(y.tracked.at(3).residue() == 1);
}

TEST_CASE("parallel kernels agree with the serial reference") {
  std::mt19937 rng(41);
  for (long p : {2L, 3L, 5L}) {
    CompactSet s = oracle::random_ball_set(rng, p, 2, 3);
    POrdering o = p_ordering(s, 40, 40);
    const auto& pts = o.values();
    auto a = kernels::make_table(p, pts, 8);
    auto b = kernels::serial::make_table(p, pts, 8);
    CHECK(a.w == b.w);
    CHECK(a.den_inv == b.den_inv);
    CHECK(kernels::basis_rows(a, 0, a.size()) == kernels::serial::basis_rows(b, 0, b.size()));
    std::vector<Int> coeffs;
    std::uniform_int_distribution<long> v(0, 1000);
    for (std::size_t i = 0; i < pts.size(); ++i)
      coeffs.push_back(mod(Int(v(rng)), a.modulus));
    std::vector<Rat> xs;
    for (const Int& r : s.residues(s.max_exponent() + 2))
      xs.emplace_back(r);
    CHECK(kernels::eval_series(a, coeffs, xs) == kernels::serial::eval_series(b, coeffs, xs));
    CHECK(kernels::ordering_scores(p, pts, xs) == kernels::serial::ordering_scores(p, pts, xs));
  }
}
