#include "cskit/json_io.hpp"

#include <sstream>

#include "cskit/errors.hpp"

namespace cskit {

json rational_to_json(const Rational& q) { return q.str(); }

json rationals_to_json(const std::vector<Rational>& v) {
    json out = json::array();
    for (const Rational& q : v) out.push_back(q.str());
    return out;
}

json integers_to_json(const std::vector<Integer>& v) {
    json out = json::array();
    for (const Integer& n : v) out.push_back(n.str());
    return out;
}

json series_to_json(const FormalPowerSeries& s) { return rationals_to_json(s.coeffs()); }

json to_json(const PsdVerdict& v) {
    json out;
    switch (v.kind) {
        case PsdVerdict::Kind::Positive: out["kind"] = "POSITIVE"; break;
        case PsdVerdict::Kind::Refuted: out["kind"] = "REFUTED"; break;
        case PsdVerdict::Kind::Degenerate: out["kind"] = "DEGENERATE"; break;
    }
    if (v.index >= 0) out["index"] = v.index;
    if (v.kind == PsdVerdict::Kind::Refuted) out["value"] = v.value.str();
    return out;
}

json to_json(const HankelReport& r) {
    json out;
    out["shift"] = r.shift;
    out["size"] = r.size;
    out["minors"] = rationals_to_json(r.minors);
    out["verdict"] = to_json(r.verdict);
    return out;
}

json to_json(const MembershipVerdict& v) {
    json out;
    out["claim"] = membership_claim_name(v.claim);
    if (!v.criterion.empty()) {
        json crit;
        for (const auto& [name, value] : v.criterion) crit[name] = value.str();
        out["criterion"] = crit;
    }
    if (v.witness) out["witness"] = to_json(*v.witness);
    out["order_checked"] = v.order_checked;
    return out;
}

json to_json(const VarianceFunction& v) {
    json out;
    out["varfun"] = series_to_json(v.series);
    out["order"] = v.series.order();
    out["normalized"] = v.normalized;
    out["class"] = var_class_name(v.cls);
    if (!v.provenance.empty()) out["provenance"] = v.provenance;
    return out;
}

json to_json(const JacobiCoefficients& jc) {
    json out;
    out["b"] = rationals_to_json(jc.b);
    out["c"] = rationals_to_json(jc.c);
    out["terminated"] = jc.terminated;
    return out;
}

json to_json(const PolynomialFamily& fam) {
    json out;
    json polys = json::array();
    for (const Polynomial& p : fam.polys) polys.push_back(rationals_to_json(p.coeffs()));
    out["polys"] = polys;
    out["source"] = fam.source;
    return out;
}

json to_json(const GramMatrix& g) {
    json out;
    json rows = json::array();
    for (const auto& row : g.entries) rows.push_back(rationals_to_json(row));
    out["entries"] = rows;
    out["order"] = static_cast<int>(g.entries.size()) - 1;
    return out;
}

json to_json(const DOrthReport& r) {
    json out;
    out["pattern_ok"] = r.pattern_ok;
    json violations = json::array();
    for (const GramViolation& v : r.violations) {
        json entry;
        entry["n"] = v.n;
        entry["k"] = v.k;
        entry["value"] = v.value.str();
        violations.push_back(entry);
    }
    out["violations"] = violations;
    out["hankel_evidence"] = to_json(r.hankel_evidence);
    out["order_checked"] = r.order_checked;
    out["degenerate"] = r.degenerate;
    return out;
}

json to_json(const DemoReport& r) {
    json out;
    out["fuss"] = integers_to_json(r.fuss);
    out["s"] = integers_to_json(r.s);
    out["kappa"] = integers_to_json(r.kappa);
    out["det_witness"] = r.det_witness.str();
    out["varfun"] = to_json(r.varfun);
    json checks;
    for (const auto& [name, ok] : r.identity_checks) checks[name] = ok;
    out["identity_checks"] = checks;
    return out;
}

json parse_payload_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw Error(errc::InvalidInput, "the payload is not valid JSON");
    return j;
}

Rational rational_from_json(const json& j, const std::string& what) {
    if (j.is_number_integer())
        return Rational(Integer(j.get<long long>()));
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number())
        throw Error(errc::InvalidInput,
                    what + ": floating-point numbers are not exact; pass \"p/q\" strings");
    throw Error(errc::InvalidInput, what + ": expected a rational string");
}

std::vector<Rational> rationals_from_json(const json& j, const std::string& what) {
    if (!j.is_array())
        throw Error(errc::InvalidInput, what + ": expected an array of rational strings");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const json& item : j) out.push_back(rational_from_json(item, what));
    return out;
}

const json& require_key(const json& payload, const std::string& key) {
    if (!payload.is_object() || !payload.contains(key))
        throw Error(errc::InvalidInput, "the payload needs a \"" + key + "\" field");
    return payload.at(key);
}

FormalPowerSeries series_from_key(const json& payload, const std::string& key) {
    std::vector<Rational> v = rationals_from_json(require_key(payload, key), key);
    if (v.empty())
        throw Error(errc::InvalidInput, "\"" + key + "\" must not be empty");
    return FormalPowerSeries(std::move(v));
}

MomentSequence moments_from_key(const json& payload, const std::string& key) {
    return MomentSequence(rationals_from_json(require_key(payload, key), key));
}

FreeCumulantSequence cumulants_from_key(const json& payload, const std::string& key) {
    return FreeCumulantSequence(rationals_from_json(require_key(payload, key), key));
}

namespace {

void render_text_impl(const json& j, const std::string& prefix, std::ostringstream& os) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            const json& value = it.value();
            if (value.is_object() || (value.is_array() && !value.empty() &&
                                      (value.front().is_object() || value.front().is_array()))) {
                os << prefix << it.key() << ":\n";
                render_text_impl(value, prefix + "  ", os);
            } else {
                os << prefix << it.key() << ": ";
                render_text_impl(value, "", os);
            }
        }
    } else if (j.is_array()) {
        if (!j.empty() && (j.front().is_object() || j.front().is_array())) {
            for (std::size_t i = 0; i < j.size(); ++i) {
                os << prefix << "- ";
                if (j[i].is_object() || j[i].is_array()) {
                    std::ostringstream inner;
                    render_text_impl(j[i], "", inner);
                    std::string text = inner.str();
                    // fold the nested rendering onto indented lines
                    std::istringstream lines(text);
                    std::string line;
                    bool first = true;
                    while (std::getline(lines, line)) {
                        if (first) {
                            os << line << "\n";
                            first = false;
                        } else {
                            os << prefix << "  " << line << "\n";
                        }
                    }
                }
            }
        } else {
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) os << ' ';
                if (j[i].is_string()) os << j[i].get<std::string>();
                else os << j[i].dump();
            }
            os << "\n";
        }
    } else if (j.is_string()) {
        os << j.get<std::string>() << "\n";
    } else {
        os << j.dump() << "\n";
    }
}

} // namespace

std::string render_text(const json& j) {
    std::ostringstream os;
    render_text_impl(j, "", os);
    return os.str();
}

} // namespace cskit
