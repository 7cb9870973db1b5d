#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "cskit/demo.hpp"
#include "cskit/errors.hpp"
#include "cskit/json_io.hpp"
#include "cskit/noncrossing.hpp"
#include "cskit/poly_family.hpp"

namespace {

using cskit::json;

struct Common {
    int order = 12;
    std::string format = "json";
    std::string in_path;
};

void add_common(CLI::App* cmd, Common& c) {
    cmd->add_option("--order", c.order, "truncation order")->capture_default_str();
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    cmd->add_option("--in", c.in_path, "read the JSON payload from this file instead of stdin");
}

json read_payload(const Common& c) {
    std::string text;
    if (!c.in_path.empty()) {
        std::ifstream in(c.in_path);
        if (!in)
            throw cskit::Error(cskit::errc::InvalidInput, "cannot open '" + c.in_path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    } else {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    }
    if (text.find_first_not_of(" \t\r\n") == std::string::npos)
        throw cskit::Error(cskit::errc::InvalidInput,
                           "this operation needs a JSON payload on stdin or via --in");
    return cskit::parse_payload_text(text);
}

void emit(const json& out, const Common& c) {
    if (c.format == "text")
        std::cout << cskit::render_text(out);
    else
        std::cout << out.dump(2) << "\n";
}

cskit::VarClass class_from_string(const std::string& s) {
    if (s == "IN_V") return cskit::VarClass::InV;
    if (s == "IN_V_INFINITY") return cskit::VarClass::InVInfinity;
    if (s == "UNKNOWN") return cskit::VarClass::Unknown;
    throw cskit::Error(cskit::errc::InvalidInput, "unknown class label '" + s + "'");
}

// Reads {"<key>": [...], "<class_key>": "IN_V"|...} into a variance function.
// With `poly` the coefficients are a complete polynomial and are zero-extended
// to whatever order the operation needs; otherwise the truncation order is
// exactly what the payload provides.
cskit::VarianceFunction varfun_from_payload(const json& payload, const std::string& key,
                                            const std::string& class_key, bool poly,
                                            int needed_order) {
    std::vector<cskit::Rational> coeffs =
        cskit::rationals_from_json(cskit::require_key(payload, key), key);
    if (coeffs.empty())
        throw cskit::Error(cskit::errc::InvalidInput, "\"" + key + "\" must not be empty");
    cskit::VarClass cls = cskit::VarClass::Unknown;
    std::string provenance;
    if (payload.contains(class_key) && !payload.at(class_key).is_null()) {
        if (!payload.at(class_key).is_string())
            throw cskit::Error(cskit::errc::InvalidInput,
                               "\"" + class_key + "\" must be a class label string");
        cls = class_from_string(payload.at(class_key).get<std::string>());
        provenance = "asserted by caller";
    }
    if (poly) {
        int degree = static_cast<int>(coeffs.size()) - 1;
        cskit::VarianceFunction v =
            cskit::VarianceFunction::from_polynomial(coeffs, std::max(degree, needed_order));
        v.cls = cls;
        v.provenance = provenance;
        return v;
    }
    return cskit::VarianceFunction(cskit::FormalPowerSeries(std::move(coeffs)), cls, provenance);
}

cskit::PolynomialFamily family_from_payload(const json& payload) {
    const json& rows = cskit::require_key(payload, "family");
    if (!rows.is_array() || rows.empty())
        throw cskit::Error(cskit::errc::InvalidInput,
                           "\"family\" must be a nonempty array of coefficient arrays");
    cskit::PolynomialFamily fam;
    for (const json& row : rows)
        fam.polys.emplace_back(cskit::rationals_from_json(row, "family"));
    fam.source = "payload";
    return fam;
}

struct ConvertOpts : Common {
    std::string op;
    std::string p = "0";
    std::string c = "1";
    std::string t = "1";
    std::string b = "1";
    int n = 0;
};

json run_convert(const ConvertOpts& o) {
    using namespace cskit;
    auto series_result = [](const FormalPowerSeries& s) {
        json out;
        out["series"] = series_to_json(s);
        out["order"] = s.order();
        return out;
    };
    auto moments_result = [](const MomentSequence& m) {
        json out;
        out["moments"] = rationals_to_json(m.moments);
        out["order"] = m.order();
        return out;
    };
    auto cumulants_result = [](const FreeCumulantSequence& k) {
        json out;
        out["cumulants"] = rationals_to_json(k.cumulants);
        out["order"] = k.order();
        return out;
    };

    if (o.op == "fuss-catalan")
        return moments_result(
            fuss_catalan_power(parse_rational(o.b), parse_rational(o.p), o.order));

    json payload = read_payload(o);
    if (o.op == "add")
        return series_result(
            series_add(series_from_key(payload, "a"), series_from_key(payload, "b")));
    if (o.op == "sub")
        return series_result(
            series_sub(series_from_key(payload, "a"), series_from_key(payload, "b")));
    if (o.op == "neg") return series_result(series_neg(series_from_key(payload, "a")));
    if (o.op == "scale")
        return series_result(series_scale(parse_rational(o.c), series_from_key(payload, "a")));
    if (o.op == "mul")
        return series_result(
            series_mul(series_from_key(payload, "a"), series_from_key(payload, "b")));
    if (o.op == "div")
        return series_result(
            series_div(series_from_key(payload, "a"), series_from_key(payload, "b")));
    if (o.op == "compose")
        return series_result(
            series_compose(series_from_key(payload, "a"), series_from_key(payload, "b")));
    if (o.op == "revert") return series_result(series_revert(series_from_key(payload, "a")));
    if (o.op == "pow")
        return series_result(
            series_pow_rational(series_from_key(payload, "a"), parse_rational(o.p)));
    if (o.op == "shift-up")
        return series_result(series_shift_up(series_from_key(payload, "a")));
    if (o.op == "shift-down")
        return series_result(series_shift_down(series_from_key(payload, "a")));

    if (o.op == "m2k")
        return cumulants_result(moments_to_free_cumulants(moments_from_key(payload, "moments")));
    if (o.op == "k2m")
        return moments_result(free_cumulants_to_moments(cumulants_from_key(payload, "cumulants")));
    if (o.op == "nc-moment") {
        Rational value = moments_via_noncrossing(cumulants_from_key(payload, "cumulants"), o.n);
        json out;
        out["n"] = o.n;
        out["value"] = value.str();
        return out;
    }
    if (o.op == "dilate")
        return moments_result(dilate(moments_from_key(payload, "moments"), parse_rational(o.t)));
    if (o.op == "add-conv")
        return cumulants_result(free_additive_convolve(cumulants_from_key(payload, "cumulants"),
                                                       cumulants_from_key(payload, "cumulants2")));
    if (o.op == "conv-power") {
        ConvolutionPower power =
            free_convolution_power(cumulants_from_key(payload, "cumulants"), parse_rational(o.t));
        json out = cumulants_result(power.cumulants);
        out["formal"] = power.formal;
        return out;
    }
    if (o.op == "m2s") {
        STransformSeries s = moments_to_S(moments_from_key(payload, "moments"));
        json out;
        out["s_series"] = series_to_json(s.series);
        out["order"] = s.order();
        return out;
    }
    if (o.op == "s2m")
        return moments_result(moments_from_S(STransformSeries(series_from_key(payload, "s_series"))));
    if (o.op == "mul-conv")
        return moments_result(
            free_multiplicative_convolve(STransformSeries(series_from_key(payload, "s_series")),
                                         STransformSeries(series_from_key(payload, "s_series2"))));
    throw cskit::Error(cskit::errc::InvalidInput, "unhandled op '" + o.op + "'");
}

struct VarfunOpts : Common {
    std::string op;
    bool poly = false;
    std::string param = "0";
    std::string a = "0";
    std::string b = "0";
    std::string c = "1";
    std::vector<std::string> factors;
};

json run_varfun(const VarfunOpts& o) {
    using namespace cskit;
    if (o.op == "product-form") {
        std::vector<std::pair<Rational, Rational>> factors;
        for (const std::string& f : o.factors) {
            auto pos = f.find(':');
            if (pos == std::string::npos)
                throw Error(errc::InvalidInput, "--factor expects b:p, got '" + f + "'");
            factors.emplace_back(parse_rational(f.substr(0, pos)),
                                 parse_rational(f.substr(pos + 1)));
        }
        return to_json(product_form_varfun(parse_rational(o.a), parse_rational(o.b),
                                           parse_rational(o.c), factors, o.order));
    }

    json payload = read_payload(o);
    if (o.op == "from-moments")
        return to_json(varfun_from_moments(moments_from_key(payload, "moments")));
    if (o.op == "from-s")
        return to_json(
            varfun_from_S(STransformSeries(series_from_key(payload, "s_series")), o.order));
    if (o.op == "to-moments") {
        VarianceFunction v = varfun_from_payload(payload, "varfun", "class", o.poly, o.order - 2);
        MomentSequence m = moments_from_varfun(v, o.order);
        json out;
        out["moments"] = rationals_to_json(m.moments);
        out["order"] = m.order();
        return out;
    }

    VarFunOp tag;
    if (o.op == "scale-mean") tag = VarFunOp::ScaleMean;
    else if (o.op == "add-linear") tag = VarFunOp::AddLinear;
    else if (o.op == "sum-minus-one") tag = VarFunOp::SumMinusOne;
    else if (o.op == "scalar-combine") tag = VarFunOp::ScalarCombine;
    else if (o.op == "sub-square") tag = VarFunOp::SubSquare;
    else if (o.op == "add-square") tag = VarFunOp::AddSquare;
    else if (o.op == "reflect") tag = VarFunOp::Reflect;
    else throw Error(errc::InvalidInput, "unhandled op '" + o.op + "'");

    VarianceFunction v1 = varfun_from_payload(payload, "varfun", "class", o.poly, 2);
    std::optional<VarianceFunction> v2;
    if (tag == VarFunOp::SumMinusOne)
        v2 = varfun_from_payload(payload, "varfun2", "class2", o.poly, 2);
    return to_json(apply_varfun_op(tag, v1, v2 ? &*v2 : nullptr, parse_rational(o.param)));
}

struct TripleOpts : Common {
    std::string a = "0";
    std::string b = "0";
    std::string c = "0";
};

json run_check_cubic(const TripleOpts& o) {
    using namespace cskit;
    CubicMembership m =
        cubic_membership(parse_rational(o.a), parse_rational(o.b), parse_rational(o.c));
    json out;
    out["in_V"] = m.in_v.claim == MembershipClaim::InV;
    out["in_Vinf"] = m.in_v_inf.claim == MembershipClaim::InVInfinity;
    json crit_v, crit_vinf;
    for (const auto& [name, value] : m.in_v.criterion) crit_v[name] = value.str();
    for (const auto& [name, value] : m.in_v_inf.criterion) crit_vinf[name] = value.str();
    out["v_criterion"] = crit_v;
    out["vinf_criterion"] = crit_vinf;
    return out;
}

json run_check_quartic(const TripleOpts& o) {
    using namespace cskit;
    MembershipVerdict v = quartic_axis_membership(parse_rational(o.a));
    json out;
    out["in_V"] = v.claim == MembershipClaim::InV;
    json crit;
    for (const auto& [name, value] : v.criterion) crit[name] = value.str();
    out["criterion"] = crit;
    return out;
}

struct EvidenceOpts : Common {
    std::string target = "V";
    bool poly = false;
};

json run_evidence(const EvidenceOpts& o) {
    using namespace cskit;
    json payload = read_payload(o);
    VarianceFunction v = varfun_from_payload(payload, "varfun", "class", o.poly, o.order);
    MembershipTarget target =
        o.target == "VINF" ? MembershipTarget::VInfinity : MembershipTarget::V;
    MembershipVerdict verdict = membership_evidence(v, o.order, target);
    json out = to_json(v);
    out["verdict"] = to_json(verdict);
    return out;
}

struct PolysOpts : Common {
    std::string op;
    std::string form = "a";
    bool poly = false;
};

json run_polys(const PolysOpts& o) {
    using namespace cskit;
    json payload = read_payload(o);
    if (o.op == "from-varfun") {
        VarianceFunction v = varfun_from_payload(payload, "varfun", "class", o.poly, o.order - 1);
        return to_json(polynomials_from_varfun(v, o.order));
    }
    if (o.op == "from-recursion") {
        RecursionSpec spec;
        spec.form = o.form == "b" ? RecursionSpec::Form::Ccr : RecursionSpec::Form::General;
        spec.coeffs = rationals_from_json(require_key(payload, "coeffs"), "coeffs");
        return to_json(polynomials_from_recursion(spec, o.order));
    }
    if (o.op == "gf-check") {
        PolynomialFamily fam = family_from_payload(payload);
        VarianceFunction v = varfun_from_payload(payload, "varfun", "class", o.poly, o.order);
        json out;
        out["identity_holds"] = generating_function_identity_check(fam, v, o.order);
        out["order_checked"] = o.order;
        return out;
    }
    // gram
    PolynomialFamily fam = family_from_payload(payload);
    MomentSequence m = moments_from_key(payload, "moments");
    return to_json(gram_matrix(fam, m));
}

struct DOrthOpts : Common {
    int d = 1;
    bool poly = false;
};

json run_dorth(const DOrthOpts& o) {
    using namespace cskit;
    json payload = read_payload(o);
    VarianceFunction v =
        varfun_from_payload(payload, "varfun", "class", o.poly, 2 * o.order - 2);
    return to_json(d_orthogonality_check(v, o.d, o.order));
}

struct HankelOpts : Common {
    int shift = 0;
    int size = 1;
};

json run_hankel(const HankelOpts& o) {
    using namespace cskit;
    json payload = read_payload(o);
    std::vector<Rational> seq = rationals_from_json(require_key(payload, "sequence"), "sequence");
    return to_json(hankel_minors(seq, o.shift, o.size));
}

json run_jacobi(const Common& o) {
    using namespace cskit;
    json payload = read_payload(o);
    return to_json(jacobi_from_moments(moments_from_key(payload, "moments")));
}

json run_gf_reduce(const Common& o) {
    using namespace cskit;
    json payload = read_payload(o);
    ReducedGeneratingFunction reduced =
        reduce_general_gf(series_from_key(payload, "m_series"),
                          series_from_key(payload, "n_series"),
                          moments_from_key(payload, "moments"));
    json out;
    out["t"] = reduced.t.str();
    out["varfun"] = to_json(reduced.varfun);
    return out;
}

struct DemoOpts : Common {
    std::string sequence;
};

json run_demo_cmd(const DemoOpts& o) {
    using namespace cskit;
    if (o.sequence.empty()) return to_json(run_demo(o.order));
    json out;
    out["sequence"] = o.sequence;
    if (o.sequence == "fuss")
        out["values"] = integers_to_json(fuss_sequence(o.order));
    else if (o.sequence == "moments")
        out["values"] = integers_to_json(a098746_sequence(o.order));
    else
        out["values"] = integers_to_json(a106228_sequence(o.order));
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact calculator for Cauchy-Stieltjes variance functions and free-probability transforms"};
    app.require_subcommand(1);

    ConvertOpts convert_opts;
    CLI::App* convert = app.add_subcommand(
        "convert", "series arithmetic and moment/cumulant/S-transform conversions");
    add_common(convert, convert_opts);
    convert->add_option("--op", convert_opts.op, "operation")
        ->required()
        ->check(CLI::IsMember({"add", "sub", "neg", "scale", "mul", "div", "compose", "revert",
                               "pow", "shift-up", "shift-down", "m2k", "k2m", "nc-moment",
                               "dilate", "add-conv", "conv-power", "m2s", "s2m", "mul-conv",
                               "fuss-catalan"}));
    convert->add_option("--p", convert_opts.p, "rational exponent (pow, fuss-catalan)");
    convert->add_option("--c", convert_opts.c, "rational factor (scale)");
    convert->add_option("--t", convert_opts.t, "rational parameter (dilate, conv-power)");
    convert->add_option("--b", convert_opts.b, "rational parameter (fuss-catalan)");
    convert->add_option("--n", convert_opts.n, "moment index (nc-moment)");
    convert->callback([&] { emit(run_convert(convert_opts), convert_opts); });

    VarfunOpts varfun_opts;
    CLI::App* varfun = app.add_subcommand(
        "varfun", "variance-function constructions and the operation algebra");
    add_common(varfun, varfun_opts);
    varfun->add_option("--op", varfun_opts.op, "operation")
        ->required()
        ->check(CLI::IsMember({"from-moments", "to-moments", "from-s", "product-form",
                               "scale-mean", "add-linear", "sum-minus-one", "scalar-combine",
                               "sub-square", "add-square", "reflect"}));
    varfun->add_flag("--poly", varfun_opts.poly,
                     "treat the varfun payload as a complete polynomial");
    varfun->add_option("--param", varfun_opts.param,
                       "rational parameter of the operation (c or a)");
    varfun->add_option("--a", varfun_opts.a, "linear coefficient (product-form)");
    varfun->add_option("--b", varfun_opts.b, "quadratic coefficient (product-form)");
    varfun->add_option("--c", varfun_opts.c, "linear factor coefficient (product-form)");
    varfun->add_option("--factor", varfun_opts.factors,
                       "product factor b:p, repeatable (product-form)");
    varfun->callback([&] { emit(run_varfun(varfun_opts), varfun_opts); });

    TripleOpts cubic_opts;
    CLI::App* cubic = app.add_subcommand("check-cubic",
                                         "membership criterion for 1 + a m + b m^2 + c m^3");
    add_common(cubic, cubic_opts);
    cubic->add_option("--a", cubic_opts.a, "linear coefficient");
    cubic->add_option("--b", cubic_opts.b, "quadratic coefficient");
    cubic->add_option("--c", cubic_opts.c, "cubic coefficient");
    cubic->callback([&] { emit(run_check_cubic(cubic_opts), cubic_opts); });

    TripleOpts quartic_opts;
    CLI::App* quartic =
        app.add_subcommand("check-quartic", "membership criterion for 1 + a m^4");
    add_common(quartic, quartic_opts);
    quartic->add_option("--a", quartic_opts.a, "quartic coefficient");
    quartic->callback([&] { emit(run_check_quartic(quartic_opts), quartic_opts); });

    EvidenceOpts evidence_opts;
    CLI::App* evidence = app.add_subcommand(
        "evidence", "finite-order Hankel evidence for a membership claim");
    add_common(evidence, evidence_opts);
    evidence->add_option("--target", evidence_opts.target, "claim to probe")
        ->check(CLI::IsMember({"V", "VINF"}))
        ->capture_default_str();
    evidence->add_flag("--poly", evidence_opts.poly,
                       "treat the varfun payload as a complete polynomial");
    evidence->callback([&] { emit(run_evidence(evidence_opts), evidence_opts); });

    PolysOpts polys_opts;
    CLI::App* polys = app.add_subcommand(
        "polys", "polynomial families, generating-function checks, Gram matrices");
    add_common(polys, polys_opts);
    polys->add_option("--op", polys_opts.op, "operation")
        ->required()
        ->check(CLI::IsMember({"from-varfun", "from-recursion", "gf-check", "gram"}));
    polys->add_option("--form", polys_opts.form, "recursion coefficient form (from-recursion)")
        ->check(CLI::IsMember({"a", "b"}))
        ->capture_default_str();
    polys->add_flag("--poly", polys_opts.poly,
                    "treat the varfun payload as a complete polynomial");
    polys->callback([&] { emit(run_polys(polys_opts), polys_opts); });

    DOrthOpts dorth_opts;
    CLI::App* dorth = app.add_subcommand("d-orth", "d-orthogonality zero-pattern check");
    add_common(dorth, dorth_opts);
    dorth->add_option("--d", dorth_opts.d, "orthogonality depth d")->required();
    dorth->add_flag("--poly", dorth_opts.poly,
                    "treat the varfun payload as a complete polynomial");
    dorth->callback([&] { emit(run_dorth(dorth_opts), dorth_opts); });

    HankelOpts hankel_opts;
    CLI::App* hankel =
        app.add_subcommand("hankel", "leading principal minors of a Hankel matrix");
    add_common(hankel, hankel_opts);
    hankel->add_option("--shift", hankel_opts.shift, "index shift s in H[i][j] = a_{i+j+s}")
        ->capture_default_str();
    hankel->add_option("--size", hankel_opts.size, "matrix size")->required();
    hankel->callback([&] { emit(run_hankel(hankel_opts), hankel_opts); });

    Common jacobi_opts;
    CLI::App* jacobi =
        app.add_subcommand("jacobi", "three-term recursion coefficients from moments");
    add_common(jacobi, jacobi_opts);
    jacobi->callback([&] { emit(run_jacobi(jacobi_opts), jacobi_opts); });

    Common reduce_opts;
    CLI::App* reduce = app.add_subcommand(
        "gf-reduce", "reduce a general generating-function pair to t and a variance function");
    add_common(reduce, reduce_opts);
    reduce->callback([&] { emit(run_gf_reduce(reduce_opts), reduce_opts); });

    DemoOpts demo_opts;
    CLI::App* demo = app.add_subcommand(
        "demo", "end-to-end Fuss-number example with all identity checks");
    add_common(demo, demo_opts);
    demo->add_option("--sequence", demo_opts.sequence,
                     "print one sequence instead of the full report")
        ->check(CLI::IsMember({"fuss", "moments", "cumulants"}));
    demo->callback([&] { emit(run_demo_cmd(demo_opts), demo_opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const cskit::Error& e) {
        json err;
        err["error"]["code"] = e.code();
        err["error"]["message"] = e.what();
        std::cout << err.dump(2) << "\n";
        return 1;
    } catch (const std::exception& e) {
        json err;
        err["error"]["code"] = "InternalError";
        err["error"]["message"] = e.what();
        std::cout << err.dump(2) << "\n";
        return 1;
    }
    return 0;
}
