#ifndef HYBRID_JSON_IO_HPP
#define HYBRID_JSON_IO_HPP

#include <cstdint>
#include <limits>
#include <string>

#include "json.hpp"

#include "hybrid/errors.hpp"
#include "hybrid/hybrid_number.hpp"
#include "hybrid/identities.hpp"
#include "hybrid/quad_ext.hpp"
#include "hybrid/rational.hpp"
#include "hybrid/sequences.hpp"

namespace hybrid::io {

// Insertion-ordered so hybrids always emit s, i, e, h in that order.
using Json = nlohmann::ordered_json;

/// Integers that fit in int64 become JSON numbers, larger ones decimal strings.
inline Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const Rational r = Rational::parse(j.get<std::string>());
    if (r.is_integer()) return r.numerator();
  }
  throw ParseError("expected an integer, got " + j.dump());
}

inline Json to_json(const Rational& r) { return r.to_string(); }

/// Accepts "num/den", "num", or a bare JSON integer.
inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("expected a rational string, got " + j.dump());
}

inline Json to_json(const QuadExt& u) {
  Json j;
  j["x"] = to_json(u.x());
  j["y"] = to_json(u.y());
  j["D"] = integer_json(u.discriminant());
  return j;
}

inline QuadExt quad_ext_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("y") || !j.contains("D")) {
    throw ParseError("expected {\"x\", \"y\", \"D\"}, got " + j.dump());
  }
  return {rational_from_json(j.at("x")), rational_from_json(j.at("y")), integer_from_json(j.at("D"))};
}

inline Json to_json(const HybridNumber<Rational>& z) {
  Json j;
  j["s"] = to_json(z.scalar);
  j["i"] = to_json(z.i);
  j["e"] = to_json(z.eps);
  j["h"] = to_json(z.h);
  return j;
}

inline HybridNumber<Rational> hybrid_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("expected a hybrid object, got " + j.dump());
  for (const char* key : {"s", "i", "e", "h"}) {
    if (!j.contains(key)) throw ParseError(std::string("hybrid object missing key '") + key + "'");
  }
  return {rational_from_json(j.at("s")), rational_from_json(j.at("i")), rational_from_json(j.at("e")),
          rational_from_json(j.at("h"))};
}

inline Json to_json(const HoradamParams& params) {
  Json j;
  j["p"] = integer_json(params.p);
  j["q"] = integer_json(params.q);
  j["a"] = integer_json(params.a);
  j["b"] = integer_json(params.b);
  return j;
}

/// One JSON line per identity case; variants are only listed in audit mode.
inline Json to_json(const VerificationReport& report, bool audit) {
  Json j;
  j["identity"] = report.identity_case.name;
  j["params"] = to_json(report.identity_case.params);
  Json indices = Json::object();
  for (const auto& [name, value] : report.identity_case.indices) indices[name] = value;
  j["indices"] = std::move(indices);
  j["extended_domain"] = report.identity_case.extended_domain;
  j["lhs"] = to_json(report.lhs);
  j["rhs_printed"] = to_json(report.rhs_printed);
  j["printed_pass"] = report.printed_pass();
  if (audit) {
    Json variants = Json::array();
    for (const auto& v : report.rhs_variants) {
      Json vj;
      vj["label"] = v.label;
      vj["value"] = to_json(v.value);
      vj["pass"] = v.pass;
      variants.push_back(std::move(vj));
    }
    j["rhs_variants"] = std::move(variants);
  }
  j["reference"] = report.reference.empty() ? std::string("printed") : report.reference;
  j["verdict"] = std::string(to_string(report.verdict()));
  j["pass"] = report.accepted();
  return j;
}

inline Json tally_json(const std::map<std::string, IdentityTally>& tally) {
  Json j = Json::object();
  for (const auto& [name, t] : tally) {
    Json tj;
    tj["cases"] = t.cases;
    tj["accepted"] = t.accepted;
    tj["printed_failures"] = t.printed_failures;
    j[name] = std::move(tj);
  }
  return j;
}

inline Json summary_json(const SuiteReport& suite) {
  std::size_t cases = 0;
  std::size_t failed = 0;
  std::size_t printed_failures = 0;
  for (const auto& r : suite.reports) {
    if (r.identity_case.extended_domain) continue;
    ++cases;
    failed += r.accepted() ? 0 : 1;
    printed_failures += r.printed_pass() ? 0 : 1;
  }
  Json s;
  s["cases"] = cases;
  s["failed"] = failed;
  s["printed_failures"] = printed_failures;
  s["by_identity"] = tally_json(suite.tally(false));
  s["extended_domain"] = tally_json(suite.tally(true));
  s["status"] = suite.success() ? "pass" : "fail";
  Json j;
  j["summary"] = std::move(s);
  return j;
}

}  // namespace hybrid::io

#endif  // HYBRID_JSON_IO_HPP
