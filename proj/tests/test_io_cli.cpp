#include "pw/cli.hpp"
#include "pw/errors.hpp"
#include "pw/io.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace pw;
using io::json;

namespace {

struct Result {
  int code;
  std::string out;
  json j;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "pw");
  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  json j;
  try {
    j = json::parse(out.str());
  } catch (...) {
  }
  return {code, out.str(), j};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const std::string path = "/tmp/pw_test_" + name;
  std::ofstream(path) << body;
  return path;
}

} // namespace

TEST_CASE("parsers") {
  CHECK(io::parse_rat(" -3/6 ") == Rat(-1, 2));
  CHECK_THROWS_AS(io::parse_rat("1/0"), ValidationError);
  CHECK_THROWS_AS(io::parse_rat("1.5"), ValidationError);
  CHECK(io::parse_poly("1/2*x^2-1/2*x") == RatPoly::binomial(2));
  CHECK(io::parse_poly("x + 1") == RatPoly({1, 1}));
  CHECK(io::parse_poly("-x^3 + 2x - 7/3") == RatPoly({Rat(-7, 3), 2, 0, -1}));
  CHECK(io::parse_poly("0").is_zero());
  CHECK_THROWS_AS(io::parse_poly("x^"), ValidationError);
  CHECK_THROWS_AS(io::parse_poly(""), ValidationError);
  CHECK(io::format_poly(RatPoly::binomial(2)) == "1/2*x^2-1/2*x");
  CHECK(io::format_poly(RatPoly({-1, 0, -3})) == "-3*x^2-1");

  CHECK(io::parse_set("p=2; balls: 0+p^1, 1+p^1").ball_list() == std::vector<Ball>{{0, 1}, {1, 1}});
  CHECK(io::parse_set("p=3; finite: 0, 3, 1/2").size() == 3);
  CHECK(io::parse_set("p=5; pZp") == CompactSet::maximal_ideal(5));
  CHECK(io::parse_set("p=2; balls: 5+2^2").ball_list() == std::vector<Ball>{{1, 2}});
  CHECK(io::parse_set("p=2; balls: 1+2Z_2").ball_list() == std::vector<Ball>{{1, 1}});
  CHECK(io::parse_set("p=3; balls: 2+p^2Zp").ball_list() == std::vector<Ball>{{2, 2}});
  CHECK_THROWS_AS(io::parse_set("p=4; Zp"), ValidationError);
  CHECK_THROWS_AS(io::parse_set("p=2; balls: 1+3^2"), ValidationError);
  CHECK_THROWS_AS(io::parse_set("p=2; finite:"), EmptySet);

  AdelicSet a = io::parse_adelic("default=pZp; p=2; balls: 1+p^1; p=3; finite: 0, 3, 6");
  CHECK(a.fallback == DefaultFamily::MaximalIdeal);
  CHECK(a.tracked.size() == 2);
  CHECK(io::parse_adelic(io::format_adelic(a)) == a);
  CHECK(io::parse_adelic("default=Zp").tracked.empty());
  CHECK_THROWS_AS(io::parse_adelic("default=Qp"), ValidationError);
}

TEST_CASE("json round trips") {
  std::mt19937 rng(47);
  AdelicSet a;
  a.tracked.emplace(2, oracle::random_ball_set(rng, 2, 3, 3));
  a.tracked.emplace(3, CompactSet::finite(3, {Rat(0), Rat(1, 2), Rat(5)}));
  CHECK(io::adelic_from_json(io::to_json(a)) == a);

  const Int big = ipow(7, 40);
  CHECK(io::int_from_json(io::to_json(big)) == big);
  CHECK(io::rat_from_json(io::to_json(Rat(big, 3))) == Rat(big, 3));

  PAdicNumber x = embed(Rat(5, 12), 2, 9);
  CHECK(io::padic_number_from_json(io::to_json(x)) == x);
  PAdicNumber z = PAdicNumber::zero(3, 4);
  CHECK(io::padic_number_from_json(io::to_json(z)) == z);

  POrdering o = p_ordering(a.tracked.at(2), 6, 20);
  json oj = io::to_json(o);
  CHECK(io::to_json(io::ordering_from_json(oj)) == oj);

  BasisFamily b = regular_basis(a, 2, 20);
  CHECK(io::to_json(io::basis_from_json(io::to_json(b))) == io::to_json(b));

  CharIdeal c = char_ideal(a, 2, 20);
  CHECK(io::to_json(io::char_ideal_from_json(io::to_json(c))) == io::to_json(c));

  StepFunction phi = oracle::random_step(rng, a.tracked.at(2), 3, 5);
  CHECK(io::to_json(io::step_function_from_json(io::to_json(phi))) == io::to_json(phi));

  MahlerSeries s = expand(phi, p_ordering(phi.domain(), 0, 30), 5);
  CHECK(io::to_json(io::series_from_json(io::to_json(s))) == io::to_json(s));

  AdelicOrdering ao = adelic_ordering(a, 3, 20);
  CHECK(io::to_json(io::adelic_ordering_from_json(io::to_json(ao))) == io::to_json(ao));
  AdelicPoly g = adelic_basis(ao, 2);
  CHECK(io::to_json(io::adelic_poly_from_json(io::to_json(g))) == io::to_json(g));

  ApproxRequest r;
  r.set = a;
  r.targets.emplace(3, ApproxTarget{StepFunction::make(a.tracked.at(3), 1, {{0, 1}, {2, 0}}, 3), 2});
  CHECK(io::to_json(io::approx_request_from_json(io::to_json(r))) == io::to_json(r));
  ApproxCertificate cert = approximate(r, 20);
  CHECK(io::to_json(io::approx_certificate_from_json(io::to_json(cert))) == io::to_json(cert));

  ScaledSet sc = scale_into_Z({{2, {{Rat(1, 2), 1}}}});
  CHECK(io::to_json(io::scaled_set_from_json(io::to_json(sc))) == io::to_json(sc));
}

TEST_CASE("cli examples") {
  Result o = call({"ordering", "--set", "p=2; balls: 0+p^1, 1+p^1", "--length", "4"});
  CHECK(o.code == 0);
  CHECK(o.j["w"] == json({0, 0, 1, 1}));
  std::vector<Rat> pts;
  for (const json& x : o.j["points"])
    pts.push_back(io::rat_from_json(x));
  CHECK(pts == std::vector<Rat>{0, 1, 2, 3});

  Result c = call({"charideal", "--adelic", "default=Zp", "--degree", "4"});
  CHECK(c.code == 0);
  CHECK(c.j["D"] == 24);

  Result m = call({"member", "--poly", "1/2*x^2-1/2*x", "--adelic", "default=Zp"});
  CHECK(m.code == 0);
  CHECK(m.j["member"] == true);
}

TEST_CASE("cli verbs and exit codes") {
  CHECK(call({"basis", "--adelic", "default=Zp; p=3; pZp", "--degree", "3"}).code == 0);
  CHECK(call({"adelic-ordering", "--adelic", "default=Zp", "--length", "5"}).j["exceptions"][4] == json({2, 3}));
  CHECK(call({"adelic-ordering", "--adelic", "default=pZp", "--length", "2"}).code == 4);
  Result nf = call({"charideal", "--adelic", "default=pZp", "--degree", "2"});
  CHECK(nf.code == 0);
  CHECK(nf.j["fractional"] == false);
  CHECK(nf.j["outcome"] == "NotFinitelyGenerated");
  CHECK(call({"basis", "--adelic", "default=pZp", "--degree", "2"}).code == 4);
  Result sc = call({"scale", "--adelic", "p=2; balls: 1/2+p^1", "--poly", "x+1", "--d1", "2"});
  CHECK(sc.code == 0);
  CHECK(sc.j["d"] == 2);
  CHECK(sc.j["conjugate"]["text"] == "x+1/2");

  CHECK(call({"ordering", "--set", "p=2; bogus", "--length", "3"}).code == 2);
  CHECK(call({"ordering", "--set", "p=2; Zp"}).code == 2);
  CHECK(call({"nonsense"}).code == 2);
  Result pe = call({"ordering", "--set", "p=2; balls: 1+p^9", "--length", "3", "--precision", "4"});
  CHECK(pe.code == 3);
  CHECK(pe.j["error"] == "PrecisionExhausted");

  const std::string sq = temp_file("sq.json", R"({"set": "p=2; Zp", "m": 3, "N": 4,
      "table": {"0":0,"1":1,"2":4,"3":9,"4":16,"5":25,"6":36,"7":49}})");
  Result e = call({"expand", "--request", sq});
  CHECK(e.code == 0);
  CHECK(e.j["coeffs"] == json({0, 1, 2}));
  CHECK(e.j["certified"] == true);

  const std::string ad = temp_file("ad.json", R"({"set": "default=Zp; p=2; Zp; p=3; Zp",
      "functions": {"2": {"m": 1, "N": 4, "table": {"0": 0, "1": 1}}, "3": {"m": 0, "N": 4, "table": {"0": 1}}}})");
  Result ea = call({"expand", "--request", ad});
  CHECK(ea.code == 0);
  CHECK(ea.j["components"]["3"]["coeffs"] == json({1}));

  const std::string ap = temp_file("ap.json", R"({"set": "default=Zp", "targets": {
      "2": {"phi": {"m": 2, "N": 3, "table": {"0": 0, "1": 1, "2": 4, "3": 1}}, "k": 3},
      "3": {"phi": {"m": 0, "N": 2, "table": {"0": 2}}, "k": 2}}})");
  Result a = call({"approx", "--request", ap});
  CHECK(a.code == 0);
  CHECK(a.j["certificate"]["member"] == true);

  const std::string out = "/tmp/pw_test_out.json";
  std::remove(out.c_str());
  CHECK(call({"charideal", "--adelic", "default=Zp", "--degree", "3", "--out", out}).code == 0);
  std::ifstream in(out);
  CHECK(json::parse(in)["D"] == 6);
  CHECK(call({"expand", "--request", "/nonexistent.json"}).code == 2);
}

TEST_CASE("cli output is deterministic and re-parses") {
  const std::vector<std::string> args{"basis", "--adelic", "default=Zp; p=2; balls: 1+p^1; p=5; balls: 0+p^1, 3+p^2",
                                      "--degree", "5"};
  Result a = call(args), b = call(args);
  CHECK(a.out == b.out);
  CHECK(io::to_json(io::basis_from_json(a.j)).dump(2) + "\n" == a.out);
}

TEST_CASE("PW_PRECISION") {
  setenv("PW_PRECISION", "3", 1);
  CHECK(call({"ordering", "--set", "p=2; Zp", "--length", "4"}).j["precision"] == 3);
  setenv("PW_PRECISION", "zero", 1);
  CHECK(call({"ordering", "--set", "p=2; Zp", "--length", "4"}).code == 2);
  unsetenv("PW_PRECISION");
}
