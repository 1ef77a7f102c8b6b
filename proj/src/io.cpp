#include "pw/io.hpp"

#include "pw/errors.hpp"

#include <algorithm>
#include <cctype>

namespace pw::io {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c)))
      out += c;
  return out;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

long parse_long(const std::string& text, const std::string& what) {
  std::string t = trim(text);
  std::string body = !t.empty() && (t[0] == '-' || t[0] == '+') ? t.substr(1) : t;
  if (!all_digits(body) || body.size() > 17)
    throw ValidationError("bad " + what + ": '" + text + "'");
  long v = std::stol(body);
  return t[0] == '-' ? -v : v;
}

long parse_prime_header(const std::string& seg) {
  const std::string s = strip_spaces(seg);
  if (s.rfind("p=", 0) != 0)
    throw ValidationError("expected 'p=<prime>', got '" + seg + "'");
  const long p = parse_long(s.substr(2), "prime");
  require_prime(p);
  return p;
}

// "c+p^e" with c rational; p may be written literally and a trailing "Z_p"
// is allowed ("1+2Z_2", "1+p^2Zp").
std::pair<Rat, long> parse_ball(const std::string& item, long p) {
  const std::string s = strip_spaces(item);
  const std::size_t plus = s.rfind('+');
  if (plus == std::string::npos || plus == 0)
    throw ValidationError("ball must look like 'c+p^e': '" + item + "'");
  const std::string center = s.substr(0, plus);
  std::string radius = s.substr(plus + 1);
  for (const std::string suffix : {"Z_" + std::to_string(p), std::string("Z_p"), std::string("Zp")})
    if (radius.size() > suffix.size() && radius.ends_with(suffix)) {
      radius.resize(radius.size() - suffix.size());
      break;
    }
  const std::size_t caret = radius.find('^');
  const std::string base = radius.substr(0, caret);
  if (base != "p" && base != std::to_string(p))
    throw ValidationError("ball radius must be a power of p: '" + item + "'");
  const long e = caret == std::string::npos ? 1 : parse_long(radius.substr(caret + 1), "ball exponent");
  return {parse_rat(center), e};
}

std::vector<std::string> list_after(const std::string& body, const std::string& keyword) {
  std::string rest = trim(body.substr(keyword.size()));
  if (!rest.empty() && rest[0] == ':')
    rest = trim(rest.substr(1));
  if (rest.empty())
    throw EmptySet("'" + keyword + "' with no entries");
  return split(rest, ',');
}

CompactSet parse_body(const std::string& body, long p) {
  const std::string compact = strip_spaces(body);
  if (compact == "Zp")
    return CompactSet::whole(p);
  if (compact == "pZp")
    return CompactSet::maximal_ideal(p);
  if (body.rfind("balls", 0) == 0) {
    std::vector<Ball> balls;
    for (const std::string& item : list_after(body, "balls")) {
      auto [c, e] = parse_ball(item, p);
      if (e < 0)
        throw ValidationError("ball exponent must be non-negative: '" + item + "'");
      if (valp(c, p) < 0)
        throw ValidationError("ball center must be p-integral: '" + item + "'");
      balls.push_back(Ball{residue_of(c, p, e), e});
    }
    return CompactSet::balls(p, std::move(balls));
  }
  if (body.rfind("finite", 0) == 0) {
    std::vector<Rat> elems;
    for (const std::string& item : list_after(body, "finite"))
      elems.push_back(parse_rat(item));
    return CompactSet::finite(p, std::move(elems));
  }
  throw ValidationError("expected 'balls:', 'finite:', 'Zp' or 'pZp', got '" + body + "'");
}

DefaultFamily parse_default(const std::string& seg) {
  const std::string s = strip_spaces(seg);
  if (s == "default=Zp")
    return DefaultFamily::Full;
  if (s == "default=pZp")
    return DefaultFamily::MaximalIdeal;
  throw ValidationError("default must be 'Zp' or 'pZp', got '" + seg + "'");
}

std::vector<std::string> segments(const std::string& text) {
  std::vector<std::string> out;
  for (const std::string& s : split(text, ';'))
    if (!s.empty())
      out.push_back(s);
  return out;
}

std::string key(long p) { return std::to_string(p); }

long prime_key(const std::string& k) {
  const long p = parse_long(k, "prime key");
  require_prime(p);
  return p;
}

json long_or_null(long v) { return is_infinite(v) ? json(nullptr) : json(v); }
long long_or_inf(const json& j) { return j.is_null() ? kInfinity : j.get<long>(); }

} // namespace

Rat parse_rat(const std::string& text) {
  std::string s = strip_spaces(text);
  bool neg = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    neg = s[0] == '-';
    s = s.substr(1);
  }
  const std::size_t slash = s.find('/');
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ValidationError("bad rational: '" + text + "'");
  const Int d(den);
  if (d == 0)
    throw ValidationError("zero denominator: '" + text + "'");
  Int n(num);
  return make_rat(neg ? Int(-n) : n, d);
}

CompactSet parse_set(const std::string& text) {
  const auto segs = segments(text);
  if (segs.size() != 2)
    throw ValidationError("set must look like 'p=<prime>; <body>': '" + text + "'");
  const long p = parse_prime_header(segs[0]);
  return parse_body(segs[1], p);
}

AdelicSet parse_adelic(const std::string& text) {
  AdelicSet a;
  const auto segs = segments(text);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (strip_spaces(segs[i]).rfind("default=", 0) == 0) {
      a.fallback = parse_default(segs[i]);
      continue;
    }
    const long p = parse_prime_header(segs[i]);
    if (i + 1 >= segs.size())
      throw ValidationError("component p=" + key(p) + " has no body");
    if (a.tracked.count(p))
      throw ValidationError("prime " + key(p) + " given twice");
    a.tracked.emplace(p, parse_body(segs[++i], p));
  }
  return a;
}

std::map<long, std::vector<RationalBall>> parse_rational_balls(const std::string& text, DefaultFamily* fallback) {
  std::map<long, std::vector<RationalBall>> out;
  const auto segs = segments(text);
  for (std::size_t i = 0; i < segs.size(); ++i) {
    if (strip_spaces(segs[i]).rfind("default=", 0) == 0) {
      const DefaultFamily f = parse_default(segs[i]);
      if (fallback)
        *fallback = f;
      continue;
    }
    const long p = parse_prime_header(segs[i]);
    if (i + 1 >= segs.size() || segs[i + 1].rfind("balls", 0) != 0)
      throw ValidationError("component p=" + key(p) + " needs a 'balls:' body");
    if (out.count(p))
      throw ValidationError("prime " + key(p) + " given twice");
    for (const std::string& item : list_after(segs[++i], "balls")) {
      auto [c, e] = parse_ball(item, p);
      out[p].push_back(RationalBall{c, e});
    }
  }
  return out;
}

RatPoly parse_poly(const std::string& text) {
  const std::string s = strip_spaces(text);
  if (s.empty())
    throw ValidationError("empty polynomial");
  std::vector<std::string> terms;
  std::size_t start = 0;
  for (std::size_t i = 1; i < s.size(); ++i)
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != '^' && s[i - 1] != '*' && s[i - 1] != '/') {
      terms.push_back(s.substr(start, i - start));
      start = i;
    }
  terms.push_back(s.substr(start));
  std::map<long, Rat> acc;
  for (std::string t : terms) {
    bool neg = false;
    if (!t.empty() && (t[0] == '+' || t[0] == '-')) {
      neg = t[0] == '-';
      t = t.substr(1);
    }
    if (t.empty())
      throw ValidationError("dangling sign in polynomial '" + text + "'");
    const std::size_t xpos = t.find('x');
    Rat c = 1;
    long deg = 0;
    if (xpos == std::string::npos) {
      c = parse_rat(t);
    } else {
      std::string coef = t.substr(0, xpos);
      if (!coef.empty() && coef.back() == '*')
        coef.pop_back();
      if (!coef.empty())
        c = parse_rat(coef);
      const std::string power = t.substr(xpos + 1);
      if (power.empty())
        deg = 1;
      else if (power[0] == '^' && all_digits(power.substr(1)))
        deg = parse_long(power.substr(1), "exponent");
      else
        throw ValidationError("bad power in term '" + t + "'");
    }
    acc[deg] += neg ? Rat(-c) : c;
  }
  std::vector<Rat> coeffs(static_cast<std::size_t>(acc.rbegin()->first + 1));
  for (const auto& [d, c] : acc)
    coeffs[static_cast<std::size_t>(d)] = c;
  return RatPoly(std::move(coeffs));
}

std::string format_set(const CompactSet& s) {
  std::string out = "p=" + key(s.prime()) + "; ";
  if (s.is_finite()) {
    out += "finite: ";
    for (std::size_t i = 0; i < s.elements().size(); ++i)
      out += (i ? ", " : "") + to_string(s.elements()[i]);
  } else {
    out += "balls: ";
    for (std::size_t i = 0; i < s.ball_list().size(); ++i) {
      const Ball& b = s.ball_list()[i];
      out += (i ? ", " : "") + to_string(b.center) + "+p^" + std::to_string(b.exponent);
    }
  }
  return out;
}

std::string format_adelic(const AdelicSet& a) {
  std::string out = a.fallback == DefaultFamily::Full ? "default=Zp" : "default=pZp";
  for (const auto& [p, s] : a.tracked)
    out += "; " + format_set(s);
  return out;
}

std::string format_poly(const RatPoly& f) {
  if (f.is_zero())
    return "0";
  std::string out;
  for (long n = f.degree(); n >= 0; --n) {
    const Rat c = f.coeff(n);
    if (c == 0)
      continue;
    const Rat mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? "-" : "+";
    if (n == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1)
      out += to_string(mag) + "*";
    out += n == 1 ? "x" : "x^" + std::to_string(n);
  }
  return out;
}

json to_json(const Int& x) {
  if (x.fits_slong_p())
    return json(x.get_si());
  return json(x.get_str());
}

json to_json(const Rat& x) { return json{{"num", to_json(Int(x.get_num()))}, {"den", to_json(Int(x.get_den()))}}; }

json to_json(const PAdicNumber& x) {
  return json{{"p", x.prime()},
              {"valuation", long_or_null(x.valuation())},
              {"unit", to_json(x.unit())},
              {"precision", long_or_null(x.precision())}};
}

json to_json(const PAdicInt& x) { return json{{"p", x.prime()}, {"residue", to_json(x.residue())}, {"N", x.precision()}}; }

json to_json(const CompactSet& s) {
  json j{{"p", s.prime()}};
  if (s.is_finite()) {
    j["kind"] = "finite";
    json e = json::array();
    for (const Rat& x : s.elements())
      e.push_back(to_json(x));
    j["elements"] = e;
  } else {
    j["kind"] = "balls";
    json b = json::array();
    for (const Ball& x : s.ball_list())
      b.push_back(json{{"center", to_json(x.center)}, {"exponent", x.exponent}});
    j["balls"] = b;
  }
  return j;
}

json to_json(const AdelicSet& a) {
  json t = json::object();
  for (const auto& [p, s] : a.tracked)
    t[key(p)] = to_json(s);
  return json{{"default", a.fallback == DefaultFamily::Full ? "Zp" : "pZp"}, {"tracked", t}};
}

json to_json(const RatPoly& f) {
  json c = json::array();
  for (const Rat& x : f.coeffs())
    c.push_back(to_json(x));
  return json{{"coeffs", c}, {"text", format_poly(f)}, {"degree", f.degree()}};
}

json to_json(const POrdering& o) {
  json pts = json::array();
  for (const Rat& x : o.values())
    pts.push_back(to_json(x));
  return json{{"p", o.prime()}, {"set", to_json(o.set())}, {"points", pts}, {"w", o.w()}, {"precision", o.precision()}};
}

json to_json(const CharIdeal& c) {
  json e = json::object();
  for (const auto& [p, x] : c.exponents)
    e[key(p)] = x;
  json j{{"degree", c.degree},
         {"fractional", c.fractional},
         {"outcome", c.fractional ? "Fractional" : "NotFinitelyGenerated"},
         {"exponents", e}};
  if (c.fractional)
    j["D"] = to_json(c.denominator());
  else
    j["witness"] = c.witness;
  return j;
}

json to_json(const BasisFamily& b) {
  json polys = json::array();
  for (const RatPoly& f : b.polys)
    polys.push_back(to_json(f));
  json depth = json::object();
  for (const auto& [p, n] : b.certified_depth)
    depth[key(p)] = n;
  return json{{"set", to_json(b.set)}, {"polys", polys}, {"certified_depth", depth}};
}

json to_json(const StepFunction& f) {
  json t = json::object();
  for (const auto& [r, v] : f.table())
    t[r.get_str()] = to_json(v.residue());
  return json{{"p", f.prime()}, {"set", to_json(f.domain())}, {"m", f.modulus_exp()}, {"N", f.precision()}, {"table", t}};
}

json to_json(const MahlerSeries& s) {
  json c = json::array();
  for (const PAdicInt& x : s.coeffs)
    c.push_back(to_json(x.residue()));
  json o = to_json(s.ordering);
  // Only the points the coefficients refer to.
  o["points"] = json(std::vector<json>(o["points"].begin(), o["points"].begin() + static_cast<long>(s.coeffs.size())));
  o["w"] = json(std::vector<long>(s.ordering.w().begin(), s.ordering.w().begin() + static_cast<long>(s.coeffs.size())));
  return json{{"ordering", o},
              {"coeffs", c},
              {"N", s.precision},
              {"certified", s.certified},
              {"window", s.window},
              {"certificate_depth", s.certificate_depth}};
}

json to_json(const AdelicSeries& s) {
  json c = json::object();
  for (const auto& [p, series] : s.components)
    c[key(p)] = to_json(series);
  return json{{"components", c}, {"length", s.length()}};
}

json to_json(const AdelicPoint& x) {
  json t = json::object();
  for (const auto& [p, v] : x.tracked)
    t[key(p)] = to_json(v);
  return json{{"tracked", t}, {"default", to_json(x.fallback)}};
}

json to_json(const AdelicPoly& g) {
  json t = json::object();
  for (const auto& [p, cs] : g.tracked) {
    json l = json::array();
    for (const PAdicNumber& c : cs)
      l.push_back(to_json(c));
    t[key(p)] = l;
  }
  return json{{"degree", g.degree}, {"tracked", t}, {"default", to_json(g.fallback)},
              {"integral_elsewhere", g.integral_elsewhere}};
}

json to_json(const AdelicOrdering& o) {
  json pts = json::array();
  for (const AdelicPoint& x : o.points)
    pts.push_back(to_json(x));
  json local = json::object();
  for (const auto& [p, lo] : o.local)
    local[key(p)] = to_json(lo);
  return json{{"set", to_json(o.set)},
              {"points", pts},
              {"local", local},
              {"exceptions", o.exceptions},
              {"precision", o.precision}};
}

json to_json(const ScaledSet& s) { return json{{"d", to_json(s.d)}, {"set", to_json(s.set)}}; }

json to_json(const ApproxTarget& t) { return json{{"phi", to_json(t.phi)}, {"k", t.k}}; }

json to_json(const ApproxRequest& r) {
  json t = json::object();
  for (const auto& [p, x] : r.targets)
    t[key(p)] = to_json(x);
  return json{{"set", to_json(r.set)}, {"targets", t}};
}

json to_json(const ApproxCertificate& c) {
  json close = json::object();
  for (const auto& [p, k] : c.closeness)
    close[key(p)] = k;
  return json{{"poly", to_json(c.poly)},
              {"certificate",
               json{{"closeness", close}, {"member", c.member}, {"precision", c.precision}, {"degree", c.poly.degree()}}}};
}

Int int_from_json(const json& j) {
  if (j.is_number_integer())
    return Int(j.get<long>());
  if (j.is_string()) {
    const std::string s = trim(j.get<std::string>());
    const std::string body = !s.empty() && s[0] == '-' ? s.substr(1) : s;
    if (!all_digits(body))
      throw ValidationError("bad integer: '" + s + "'");
    return Int(s);
  }
  throw ValidationError("expected an integer, got " + j.dump());
}

Rat rat_from_json(const json& j) {
  if (j.is_object()) {
    const Int d = int_from_json(j.at("den"));
    if (d == 0)
      throw ValidationError("zero denominator");
    return make_rat(int_from_json(j.at("num")), d);
  }
  if (j.is_string())
    return parse_rat(j.get<std::string>());
  return Rat(int_from_json(j));
}

PAdicNumber padic_number_from_json(const json& j) {
  const long p = j.at("p").get<long>();
  require_prime(p);
  const long v = long_or_inf(j.at("valuation"));
  const long n = long_or_inf(j.at("precision"));
  if (is_infinite(v))
    return PAdicNumber::zero(p, n);
  return PAdicNumber::from_parts(p, v, int_from_json(j.at("unit")), n);
}

PAdicInt padic_int_from_json(const json& j) {
  const long p = j.at("p").get<long>();
  require_prime(p);
  return PAdicInt(p, int_from_json(j.at("residue")), j.at("N").get<long>());
}

CompactSet set_from_json(const json& j) {
  if (j.is_string())
    return parse_set(j.get<std::string>());
  const long p = j.at("p").get<long>();
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "finite") {
    std::vector<Rat> e;
    for (const json& x : j.at("elements"))
      e.push_back(rat_from_json(x));
    return CompactSet::finite(p, std::move(e));
  }
  if (kind == "balls") {
    std::vector<Ball> b;
    for (const json& x : j.at("balls"))
      b.push_back(Ball{int_from_json(x.at("center")), x.at("exponent").get<long>()});
    return CompactSet::balls(p, std::move(b));
  }
  throw ValidationError("set kind must be 'balls' or 'finite'");
}

AdelicSet adelic_from_json(const json& j) {
  if (j.is_string())
    return parse_adelic(j.get<std::string>());
  AdelicSet a;
  const std::string d = j.value("default", std::string("Zp"));
  if (d == "Zp")
    a.fallback = DefaultFamily::Full;
  else if (d == "pZp")
    a.fallback = DefaultFamily::MaximalIdeal;
  else
    throw ValidationError("default must be 'Zp' or 'pZp'");
  if (j.contains("tracked"))
    for (const auto& [k, s] : j.at("tracked").items())
      a.tracked.emplace(prime_key(k), set_from_json(s));
  a.validate();
  return a;
}

RatPoly poly_from_json(const json& j) {
  if (j.is_string())
    return parse_poly(j.get<std::string>());
  std::vector<Rat> c;
  for (const json& x : j.at("coeffs"))
    c.push_back(rat_from_json(x));
  return RatPoly(std::move(c));
}

POrdering ordering_from_json(const json& j) {
  std::vector<Rat> pts;
  for (const json& x : j.at("points"))
    pts.push_back(rat_from_json(x));
  auto w = j.at("w").get<std::vector<long>>();
  if (w.size() != pts.size())
    throw ValidationError("ordering has " + std::to_string(pts.size()) + " points but " + std::to_string(w.size()) +
                          " w entries");
  return POrdering(set_from_json(j.at("set")), std::move(pts), std::move(w), j.at("precision").get<long>());
}

CharIdeal char_ideal_from_json(const json& j) {
  CharIdeal c;
  c.degree = j.at("degree").get<long>();
  c.fractional = j.at("fractional").get<bool>();
  for (const auto& [k, e] : j.at("exponents").items())
    c.exponents[prime_key(k)] = e.get<long>();
  c.witness = j.value("witness", std::string());
  return c;
}

BasisFamily basis_from_json(const json& j) {
  BasisFamily b;
  b.set = adelic_from_json(j.at("set"));
  for (const json& f : j.at("polys"))
    b.polys.push_back(poly_from_json(f));
  for (const auto& [k, n] : j.at("certified_depth").items())
    b.certified_depth[prime_key(k)] = n.get<long>();
  return b;
}

StepFunction step_function_from_json(const json& j, const CompactSet* domain) {
  CompactSet s = j.contains("set") ? set_from_json(j.at("set"))
                 : domain          ? *domain
                                   : throw ValidationError("step function needs a 'set'");
  if (j.contains("p") && j.at("p").get<long>() != s.prime())
    throw ValidationError("step function prime differs from its set");
  std::map<Int, Int> values;
  for (const auto& [k, v] : j.at("table").items())
    values[int_from_json(json(k))] = int_from_json(v);
  return StepFunction::make(s, j.at("m").get<long>(), values, j.at("N").get<long>());
}

MahlerSeries series_from_json(const json& j) {
  const POrdering o = ordering_from_json(j.at("ordering"));
  MahlerSeries s{o, {}, j.at("N").get<long>(), j.at("certified").get<bool>(), j.value("window", 0L),
                 j.value("certificate_depth", 0L)};
  for (const json& c : j.at("coeffs"))
    s.coeffs.emplace_back(o.prime(), int_from_json(c), s.precision);
  if (s.length() > o.length() + 1)
    throw ValidationError("series has more coefficients than ordering points");
  return s;
}

AdelicPoint adelic_point_from_json(const json& j) {
  AdelicPoint x;
  for (const auto& [k, v] : j.at("tracked").items())
    x.tracked[prime_key(k)] = padic_int_from_json(v);
  x.fallback = rat_from_json(j.at("default"));
  return x;
}

AdelicPoly adelic_poly_from_json(const json& j) {
  AdelicPoly g;
  g.degree = j.at("degree").get<long>();
  for (const auto& [k, l] : j.at("tracked").items()) {
    std::vector<PAdicNumber> cs;
    for (const json& c : l)
      cs.push_back(padic_number_from_json(c));
    g.tracked[prime_key(k)] = std::move(cs);
  }
  g.fallback = poly_from_json(j.at("default"));
  g.integral_elsewhere = j.value("integral_elsewhere", true);
  return g;
}

AdelicOrdering adelic_ordering_from_json(const json& j) {
  AdelicOrdering o;
  o.set = adelic_from_json(j.at("set"));
  for (const json& x : j.at("points"))
    o.points.push_back(adelic_point_from_json(x));
  for (const auto& [k, lo] : j.at("local").items())
    o.local.emplace(prime_key(k), ordering_from_json(lo));
  o.exceptions = j.at("exceptions").get<std::vector<std::vector<long>>>();
  o.precision = j.at("precision").get<long>();
  return o;
}

ScaledSet scaled_set_from_json(const json& j) {
  return ScaledSet{int_from_json(j.at("d")), adelic_from_json(j.at("set"))};
}

ApproxRequest approx_request_from_json(const json& j) {
  ApproxRequest r;
  r.set = adelic_from_json(j.at("set"));
  if (j.contains("targets"))
    for (const auto& [k, t] : j.at("targets").items()) {
      const long p = prime_key(k);
      const CompactSet dom = component(r.set, p);
      r.targets.emplace(p, ApproxTarget{step_function_from_json(t.at("phi"), &dom), t.at("k").get<long>()});
    }
  return r;
}

ApproxCertificate approx_certificate_from_json(const json& j) {
  ApproxCertificate c;
  c.poly = poly_from_json(j.at("poly"));
  const json& cert = j.at("certificate");
  for (const auto& [k, v] : cert.at("closeness").items())
    c.closeness[prime_key(k)] = v.get<long>();
  c.member = cert.at("member").get<bool>();
  c.precision = cert.at("precision").get<long>();
  return c;
}

} // namespace pw::io
