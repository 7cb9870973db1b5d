#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cskit/demo.hpp"
#include "cskit/hankel.hpp"
#include "cskit/jacobi.hpp"
#include "cskit/poly_family.hpp"
#include "cskit/series.hpp"
#include "cskit/transforms.hpp"
#include "cskit/varfun.hpp"

namespace cskit {

// Key order is part of the output contract (byte-identical runs), hence the
// ordered flavor everywhere.
using json = nlohmann::ordered_json;

// Rationals cross the boundary as strings "p" or "p/q", never as numbers;
// only structural integers (orders, indices, sizes) are JSON numbers.
json rational_to_json(const Rational& q);
json rationals_to_json(const std::vector<Rational>& v);
json integers_to_json(const std::vector<Integer>& v);
json series_to_json(const FormalPowerSeries& s);

json to_json(const PsdVerdict& v);
json to_json(const HankelReport& r);
json to_json(const MembershipVerdict& v);
json to_json(const VarianceFunction& v);
json to_json(const JacobiCoefficients& jc);
json to_json(const PolynomialFamily& fam);
json to_json(const GramMatrix& g);
json to_json(const DOrthReport& r);
json to_json(const DemoReport& r);

// Payload readers. All throw Error(InvalidInput) with the offending key in
// the message; rationals are accepted as "p/q" strings or JSON integers,
// never as floating-point numbers.
json parse_payload_text(const std::string& text);
Rational rational_from_json(const json& j, const std::string& what);
std::vector<Rational> rationals_from_json(const json& j, const std::string& what);
const json& require_key(const json& payload, const std::string& key);
FormalPowerSeries series_from_key(const json& payload, const std::string& key);
MomentSequence moments_from_key(const json& payload, const std::string& key);
FreeCumulantSequence cumulants_from_key(const json& payload, const std::string& key);

// Renders any result object as indented "key: value" lines for --format
// text; arrays print space-separated on one line.
std::string render_text(const json& j);

} // namespace cskit
