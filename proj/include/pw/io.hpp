#ifndef PW_IO_HPP
#define PW_IO_HPP

#include "pw/adelic.hpp"
#include "pw/approx.hpp"
#include "pw/compact_set.hpp"
#include "pw/globalbasis.hpp"
#include "pw/mahler.hpp"
#include "pw/pordering.hpp"
#include "pw/ratpoly.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace pw::io {

using json = nlohmann::json;

// Text forms.
//
//   set:     "p=2; balls: 0+p^1, 1+p^1"   "p=3; finite: 0, 3, 1/2"
//            "p=5; Zp"   "p=5; pZp"
//   adelic:  "default=Zp; p=2; balls: 1+p^1; p=3; finite: 0, 3, 6"
//   poly:    "1/2*x^2 - 1/2*x + 3"

Rat parse_rat(const std::string& text);
CompactSet parse_set(const std::string& text);
AdelicSet parse_adelic(const std::string& text);
/// Components with rational centers and possibly negative exponents, in the
/// set syntax ("p=2; balls: 1/2+p^1").
std::map<long, std::vector<RationalBall>> parse_rational_balls(const std::string& text,
                                                               DefaultFamily* fallback = nullptr);
RatPoly parse_poly(const std::string& text);

std::string format_set(const CompactSet& s);
std::string format_adelic(const AdelicSet& a);
std::string format_poly(const RatPoly& f);

// JSON. Integers are numbers when they fit in 64 bits and decimal strings
// otherwise; rationals are {"num", "den"}; keys are sorted.

json to_json(const Int& x);
json to_json(const Rat& x);
json to_json(const PAdicNumber& x);
json to_json(const PAdicInt& x);
json to_json(const CompactSet& s);
json to_json(const AdelicSet& a);
json to_json(const RatPoly& f);
json to_json(const POrdering& o);
json to_json(const CharIdeal& c);
json to_json(const BasisFamily& b);
json to_json(const StepFunction& f);
json to_json(const MahlerSeries& s);
json to_json(const AdelicSeries& s);
json to_json(const AdelicPoint& x);
json to_json(const AdelicPoly& g);
json to_json(const AdelicOrdering& o);
json to_json(const ScaledSet& s);
json to_json(const ApproxTarget& t);
json to_json(const ApproxRequest& r);
json to_json(const ApproxCertificate& c);

Int int_from_json(const json& j);
Rat rat_from_json(const json& j);
PAdicNumber padic_number_from_json(const json& j);
PAdicInt padic_int_from_json(const json& j);
/// Object form or a DSL string.
CompactSet set_from_json(const json& j);
AdelicSet adelic_from_json(const json& j);
/// Coefficient list form or a grammar string.
RatPoly poly_from_json(const json& j);
POrdering ordering_from_json(const json& j);
CharIdeal char_ideal_from_json(const json& j);
BasisFamily basis_from_json(const json& j);
/// `domain` is used when the object has no "set".
StepFunction step_function_from_json(const json& j, const CompactSet* domain = nullptr);
MahlerSeries series_from_json(const json& j);
AdelicPoint adelic_point_from_json(const json& j);
AdelicPoly adelic_poly_from_json(const json& j);
AdelicOrdering adelic_ordering_from_json(const json& j);
ScaledSet scaled_set_from_json(const json& j);
ApproxRequest approx_request_from_json(const json& j);
ApproxCertificate approx_certificate_from_json(const json& j);

} // namespace pw::io

#endif // PW_IO_HPP
