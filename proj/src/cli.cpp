#include "pw/cli.hpp"

#include "pw/adelic.hpp"
#include "pw/approx.hpp"
#include "pw/errors.hpp"
#include "pw/globalbasis.hpp"
#include "pw/io.hpp"
#include "pw/mahler.hpp"
#include "pw/pordering.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

namespace pw::cli {

namespace {

using io::json;

struct Options {
  std::string set;
  std::string adelic;
  std::string poly;
  std::string request;
  std::string out;
  long degree = -1;
  long length = -1;
  long precision = 0;
  std::string d1 = "1";
};

json read_request(const std::string& path) {
  if (path.empty())
    throw ValidationError("--request <json-file> is required");
  std::ifstream in(path);
  if (!in)
    throw ValidationError("cannot read request file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("request is not valid JSON: ") + e.what());
  }
}

void require(const std::string& value, const char* flag) {
  if (value.empty())
    throw ValidationError(std::string(flag) + " is required");
}

void require(long value, const char* flag) {
  if (value < 0)
    throw ValidationError(std::string(flag) + " is required and must be non-negative");
}

json cmd_ordering(const Options& o, long n) {
  require(o.set, "--set");
  require(o.length, "--length");
  if (o.length < 1)
    throw ValidationError("--length must be at least 1");
  return io::to_json(p_ordering(io::parse_set(o.set), o.length - 1, n));
}

json cmd_charideal(const Options& o, long n) {
  require(o.adelic, "--adelic");
  require(o.degree, "--degree");
  return io::to_json(char_ideal(io::parse_adelic(o.adelic), o.degree, n));
}

json cmd_basis(const Options& o, long n) {
  require(o.adelic, "--adelic");
  require(o.degree, "--degree");
  return io::to_json(regular_basis(io::parse_adelic(o.adelic), o.degree, n));
}

json cmd_member(const Options& o, long n) {
  require(o.poly, "--poly");
  const RatPoly f = io::parse_poly(o.poly);
  if (!o.set.empty())
    return json{{"member", local_membership(f, io::parse_set(o.set), n)}, {"poly", io::to_json(f)}};
  require(o.adelic, "--adelic or --set");
  return json{{"member", global_membership(f, io::parse_adelic(o.adelic), n)}, {"poly", io::to_json(f)}};
}

json cmd_expand(const Options& o, long n) {
  const json req = read_request(o.request);
  if (req.contains("functions")) {
    const AdelicSet a = req.contains("set") ? io::adelic_from_json(req.at("set")) : io::parse_adelic(o.adelic);
    std::map<long, StepFunction> phi;
    std::map<long, long> digits;
    long longest = 1;
    for (const auto& [k, f] : req.at("functions").items()) {
      const long p = std::stol(k);
      const CompactSet dom = component(a, p);
      phi.emplace(p, io::step_function_from_json(f, &dom));
    }
    if (req.contains("N"))
      for (const auto& [k, v] : req.at("N").items())
        digits[std::stol(k)] = v.get<long>();
    for (const auto& [p, f] : phi)
      longest = std::max(longest, f.precision());
    const AdelicOrdering ord = adelic_ordering(a, 1, n);
    return io::to_json(expand_adelic(phi, ord, digits, longest));
  }
  const json& fj = req.contains("function") ? req.at("function") : req;
  const StepFunction phi = io::step_function_from_json(fj);
  const long digits = req.contains("function") && req.contains("N") ? req.at("N").get<long>() : phi.precision();
  return io::to_json(expand(phi, p_ordering(phi.domain(), 0, n), digits));
}

json cmd_approx(const Options& o, long n) {
  const json req = read_request(o.request);
  const long digits = req.contains("precision") ? req.at("precision").get<long>() : n;
  return io::to_json(approximate(io::approx_request_from_json(req), digits));
}

json cmd_adelic_ordering(const Options& o, long n) {
  require(o.adelic, "--adelic");
  require(o.length, "--length");
  return io::to_json(adelic_ordering(io::parse_adelic(o.adelic), o.length, n));
}

json cmd_scale(const Options& o, long) {
  require(o.adelic, "--adelic");
  DefaultFamily fallback = DefaultFamily::Full;
  const auto comps = io::parse_rational_balls(o.adelic, &fallback);
  const ScaledSet s = scale_into_Z(comps, fallback);
  json j = io::to_json(s);
  if (!o.poly.empty()) {
    const Int d1(io::parse_rat(o.d1));
    j["conjugate"] = io::to_json(conjugate_poly(io::parse_poly(o.poly), s.d, d1));
  }
  return j;
}

long precision_from_env() {
  const char* env = std::getenv("PW_PRECISION");
  if (!env || !*env)
    return default_precision();
  try {
    std::size_t used = 0;
    const long v = std::stol(env, &used);
    if (used != std::string(env).size() || v < 1)
      throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw ValidationError(std::string("PW_PRECISION must be a positive integer, got '") + env + "'");
  }
}

int report(std::ostream& out, std::ostream& err, int code, const char* kind, const std::string& message) {
  out << json{{"error", kind}, {"message", message}, {"exit", code}}.dump(2) << "\n";
  err << "pw: " << kind << ": " << message << "\n";
  return code;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Integer-valued polynomials on p-adic and adelic compact sets"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--precision", o.precision, "p-adic digits (default: PW_PRECISION or 32)")->check(CLI::PositiveNumber);
  app.add_option("--out", o.out, "write JSON here instead of stdout");

  using Handler = std::function<json(const Options&, long)>;
  std::vector<std::pair<CLI::App*, Handler>> verbs;
  auto verb = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    verbs.emplace_back(sub, std::move(h));
    return sub;
  };
  auto* ordering = verb("ordering", "p-ordering of a compact set", cmd_ordering);
  ordering->add_option("--set", o.set, "set, e.g. \"p=2; balls: 0+p^1, 1+p^1\"");
  ordering->add_option("--length", o.length, "number of points");
  auto* charideal = verb("charideal", "characteristic module I_n", cmd_charideal);
  charideal->add_option("--adelic", o.adelic, "adelic set, e.g. \"default=Zp; p=2; balls: 1+p^1\"");
  charideal->add_option("--degree", o.degree, "n");
  auto* basis = verb("basis", "regular Z-basis up to a degree", cmd_basis);
  basis->add_option("--adelic", o.adelic, "adelic set");
  basis->add_option("--degree", o.degree, "largest degree");
  auto* member = verb("member", "integer-valuedness test", cmd_member);
  member->add_option("--poly", o.poly, "polynomial, e.g. \"1/2*x^2-1/2*x\"");
  member->add_option("--adelic", o.adelic, "adelic set");
  member->add_option("--set", o.set, "local set instead of an adelic one");
  auto* expand_cmd = verb("expand", "Mahler expansion of a step function", cmd_expand);
  expand_cmd->add_option("--request", o.request, "JSON step function or {function, N} or {set, functions, N}");
  expand_cmd->add_option("--adelic", o.adelic, "adelic set for a {functions} request without \"set\"");
  auto* approx = verb("approx", "simultaneous approximation", cmd_approx);
  approx->add_option("--request", o.request, "JSON approximation request");
  auto* aord = verb("adelic-ordering", "adelic ordering", cmd_adelic_ordering);
  aord->add_option("--adelic", o.adelic, "adelic set");
  aord->add_option("--length", o.length, "number of points");
  auto* scale = verb("scale", "scale a set with denominators into the profinite integers", cmd_scale);
  scale->add_option("--adelic", o.adelic, "components, e.g. \"p=2; balls: 1/2+p^1\"");
  scale->add_option("--poly", o.poly, "also conjugate this polynomial: (1/d1) f(d x)");
  scale->add_option("--d1", o.d1, "value-side scale for --poly");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    const long n = o.precision > 0 ? o.precision : precision_from_env();
    json result;
    for (auto& [sub, handler] : verbs)
      if (sub->parsed())
        result = handler(o, n);
    const std::string text = result.dump(2) + "\n";
    if (o.out.empty()) {
      out << text;
    } else {
      std::ofstream file(o.out);
      if (!file)
        throw ValidationError("cannot write '" + o.out + "'");
      file << text;
    }
    return kOk;
  } catch (const ValidationError& e) {
    return report(out, err, kInvalid, "ValidationError", e.what());
  } catch (const PrecisionExhausted& e) {
    return report(out, err, kPrecision, "PrecisionExhausted", e.what());
  } catch (const CertificateFailed& e) {
    return report(out, err, kPrecision, "CertificateFailed", e.what());
  } catch (const NotFinitelyGenerated& e) {
    return report(out, err, kNoSuchObject, "NotFinitelyGenerated", e.what());
  } catch (const NoAdelicOrdering& e) {
    return report(out, err, kNoSuchObject, "NoAdelicOrdering", e.what());
  } catch (const Error& e) {
    return report(out, err, kNoSuchObject, "Error", e.what());
  } catch (const json::exception& e) {
    return report(out, err, kInvalid, "ValidationError", e.what());
  } catch (const std::exception& e) {
    return report(out, err, kFailure, "InternalError", e.what());
  }
}

int run(int argc, char** argv) { return run(argc, argv, std::cout, std::cerr); }

} // namespace pw::cli
