#include "czeta/cli/app.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "czeta/abel.hpp"
#include "czeta/bernoulli.hpp"
#include "czeta/cli/config.hpp"
#include "czeta/cli/records.hpp"
#include "czeta/errors.hpp"
#include "czeta/numeric/zeta_numeric.hpp"
#include "czeta/zeta_exact.hpp"

namespace czeta::cli {

namespace {

constexpr double kNumericAgreementTol = 1e-8;
constexpr double kFunceqResidualTol = 1e-9;
constexpr double kAbelOracleTol = 1e-6;
constexpr double kInversionSlack = 1e-6;
constexpr int kAbelOracleMaxM = 8;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Outcome {
    std::vector<OutputRecord> records;
    bool failed = false;
};

struct Overrides {
    std::optional<std::string> config;
    std::optional<int> em_n;
    std::optional<int> em_j;
    std::optional<double> tol;
    std::optional<double> radius;
    std::optional<double> x_max;
    std::optional<int> panels_ray;
    std::optional<int> panels_arc;
    std::optional<int> nodes;
    std::optional<double> refine_tol;
    std::optional<int> max_refinements;
    std::optional<int> threads;
    bool em_direct = false;
};

Settings resolve_settings(const Overrides& o) {
    Settings s;
    if (const auto path = config_path(o.config)) {
        apply_config_file(*path, s);
    }
    if (o.em_n) s.numeric.em_terms_N = *o.em_n;
    if (o.em_j) s.numeric.em_terms_J = *o.em_j;
    if (o.tol) s.numeric.target_tol = *o.tol;
    if (o.em_direct) s.numeric.reflect_left = false;
    if (o.radius) s.contour.radius = *o.radius;
    if (o.x_max) s.contour.x_max = *o.x_max;
    if (o.panels_ray) s.contour.panels_ray = *o.panels_ray;
    if (o.panels_arc) s.contour.panels_arc = *o.panels_arc;
    if (o.nodes) s.contour.nodes_per_panel = *o.nodes;
    if (o.refine_tol) s.contour.refine_tol = *o.refine_tol;
    if (o.max_refinements) s.contour.max_refinements = *o.max_refinements;
    s.numeric.validate();
    s.contour.validate();
    return s;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(text);
    while (std::getline(in, part, sep)) {
        parts.push_back(part);
    }
    if (!text.empty() && text.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

double parse_real(const std::string& text, const char* what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (text.empty() || used != text.size() || !std::isfinite(v)) {
        throw UsageError(std::string(what) + ": '" + text + "' is not a finite number");
    }
    return v;
}

ComplexValue parse_point(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.empty() || parts.size() > 2) {
        throw UsageError("--s expects RE or RE,IM");
    }
    return {parse_real(parts[0], "--s"), parts.size() == 2 ? parse_real(parts[1], "--s") : 0.0};
}

OutputRecord classical_record(const ClassicalValue& v) {
    const std::string route(route_name(v.route));
    const std::string arg = std::to_string(v.argument);
    if (v.argument <= 0) {
        return OutputRecord::exact_rational(v.value.coefficient(), route, arg);
    }
    return OutputRecord::exact_pi(v.value, route, arg);
}

Outcome cmd_bernoulli(int max_index, const std::string& method) {
    Outcome o;
    auto emit = [&](const BernoulliTable& t, const char* route) {
        for (int n = 0; n <= t.max_index(); ++n) {
            o.records.push_back(OutputRecord::exact_rational(t[n], route, std::to_string(n)));
        }
    };
    if (method == "series") {
        emit(bernoulli_via_series(max_index), "series");
    } else if (method == "recurrence") {
        emit(bernoulli_via_recurrence(max_index), "recurrence");
    } else {
        const auto a = bernoulli_via_series(max_index);
        const auto b = bernoulli_via_recurrence(max_index);
        emit(a, "series");
        emit(b, "recurrence");
        const bool agree = (a == b);
        o.records.push_back(OutputRecord::check(agree, "series=recurrence", "0.." + std::to_string(max_index)));
        o.failed = !agree;
    }
    return o;
}

Route route_from_name(const std::string& name) {
    for (const Route r : {Route::ClosedForm, Route::ResidueSeries, Route::GeneratingFunction, Route::AbelSummation,
                          Route::FunctionalEquation}) {
        if (route_name(r) == name) {
            return r;
        }
    }
    throw UsageError("unknown route '" + name + "'");
}

Outcome cmd_zeta_exact(int k, const std::string& route) {
    if (k == 1) {
        throw UsageError("zeta(1) is a pole: the series diverges and no route assigns a value");
    }
    if (k > 1 && k % 2 != 0) {
        throw UsageError("zeta(" + std::to_string(k) +
                         ") is not a classical value; use an integer <= 0 or an even integer >= 2");
    }
    const auto applicable = routes_for(k);
    Outcome o;
    if (route == "all") {
        std::vector<ClassicalValue> values;
        for (const Route r : applicable) {
            values.push_back(classical_value(k, r));
            o.records.push_back(classical_record(values.back()));
        }
        const bool agree = std::all_of(values.begin(), values.end(),
                                       [&](const ClassicalValue& v) { return v.value == values.front().value; });
        if (!agree) {
            o.records.push_back(OutputRecord::check(false, "agreement", std::to_string(k)));
            o.failed = true;
        }
        return o;
    }
    const Route r = route_from_name(route);
    if (std::find(applicable.begin(), applicable.end(), r) == applicable.end()) {
        throw UsageError("route " + route + " does not apply to argument " + std::to_string(k));
    }
    o.records.push_back(classical_record(classical_value(k, r)));
    return o;
}

Outcome cmd_zeta_numeric(ComplexValue s, const std::string& method, const Settings& settings, std::ostream& err) {
    Outcome o;
    const std::string arg = format_complex(s);
    if (method == "hankel") {
        o.records.push_back(OutputRecord::numeric(zeta_hankel(s, settings.contour), "hankel", arg));
        return o;
    }
    if (method == "em") {
        o.records.push_back(OutputRecord::numeric(zeta_em(s, settings.numeric), "em", arg));
        return o;
    }
    const ComplexValue em = zeta_em(s, settings.numeric);
    std::optional<ComplexValue> hankel;
    try {
        hankel = zeta_hankel(s, settings.contour);
    } catch (const TooCloseToPositiveIntegerPole&) {
        err << "note: s is near a positive integer; the contour route is skipped\n";
    }
    if (hankel) {
        o.records.push_back(OutputRecord::numeric(*hankel, "hankel", arg));
    }
    o.records.push_back(OutputRecord::numeric(em, "em", arg));
    if (hankel) {
        const double diff = std::abs(*hankel - em);
        o.records.push_back(OutputRecord::residual(diff, "hankel-em", arg));
        // absolute near the critical strip, relative once |zeta| grows
        o.failed = !(diff <= kNumericAgreementTol * std::max(1.0, std::abs(em)));
    }
    return o;
}

Outcome cmd_abel(int m, bool oracle) {
    if (oracle && m > kAbelOracleMaxM) {
        throw UsageError("--numeric-oracle supports m <= " + std::to_string(kAbelOracleMaxM));
    }
    Outcome o;
    const std::string arg = std::to_string(m);
    const BigRational exact = abel_sum_exact(m);
    o.records.push_back(OutputRecord::exact_rational(exact, "abel", arg));
    if (oracle) {
        const double estimate = abel_numeric_estimate(m);
        const double diff = std::abs(estimate - exact.to_double());
        o.records.push_back(OutputRecord::numeric(ComplexValue(estimate, 0.0), "numeric-oracle", arg));
        o.records.push_back(OutputRecord::residual(diff, "oracle-exact", arg));
        o.failed = !(diff <= kAbelOracleTol);
    }
    return o;
}

Outcome cmd_verify_funceq(int exact_max, const std::string& grid, const Settings& settings) {
    Outcome o;
    for (int n = 1; n <= exact_max; ++n) {
        const bool ok = funceq_exact_check(2 * n);
        o.records.push_back(OutputRecord::check(ok, "funceq-exact", std::to_string(2 * n)));
        o.failed = o.failed || !ok;
    }
    for (int m = 0; m < exact_max; ++m) {
        const bool ok = simple_funceq_check(m);
        o.records.push_back(OutputRecord::check(ok, "funceq-simple", std::to_string(m)));
        o.failed = o.failed || !ok;
    }
    const auto parts = split(grid, ':');
    if (parts.size() != 5) {
        throw UsageError("--grid expects RE0:RE1:IM0:IM1:STEPS");
    }
    const double steps_real = parse_real(parts[4], "--grid STEPS");
    if (steps_real != std::floor(steps_real) || steps_real < 1 || steps_real > 100) {
        throw UsageError("--grid STEPS must be an integer in [1, 100]");
    }
    const auto points = rectangular_grid(parse_real(parts[0], "--grid RE0"), parse_real(parts[1], "--grid RE1"),
                                         parse_real(parts[2], "--grid IM0"), parse_real(parts[3], "--grid IM1"),
                                         static_cast<int>(steps_real));
    const auto residuals = funceq_residual_grid(points, settings.numeric);
    bool grid_ok = true;
    for (std::size_t i = 0; i < points.size(); ++i) {
        o.records.push_back(OutputRecord::residual(residuals[i], "funceq-residual", format_complex(points[i])));
        grid_ok = grid_ok && residuals[i] <= kFunceqResidualTol;
    }
    o.records.push_back(OutputRecord::check(grid_ok, "funceq-residual", grid));
    o.failed = o.failed || !grid_ok;
    return o;
}

Outcome cmd_verify_cotangent(const std::string& x_text, long terms) {
    BigRational x;
    try {
        x = BigRational::parse(x_text);
    } catch (const ParseError& e) {
        throw UsageError(std::string("--x: ") + e.what());
    }
    Outcome o;
    const double diff = cotangent_check(x, terms);
    const double bound = cotangent_tail_bound(x, terms);
    o.records.push_back(OutputRecord::residual(diff, "cotangent", x.str()));
    o.records.push_back(OutputRecord::check(diff <= bound, "tail-bound", x.str()));
    o.failed = !(diff <= bound);
    return o;
}

Outcome cmd_verify_inversion(const std::string& s_text, long poles, const Settings& settings) {
    const ComplexValue s = parse_point(s_text);
    const auto sides = inverted_contour_sides(s, poles, settings.numeric);
    const std::string arg = format_complex(s);
    const bool ok = sides.difference <= sides.tail_bound + kInversionSlack;
    Outcome o;
    o.records.push_back(OutputRecord::numeric(sides.direct, "direct", arg));
    o.records.push_back(OutputRecord::numeric(sides.residue, "residue", arg));
    o.records.push_back(OutputRecord::residual(sides.difference, "difference", arg));
    o.records.push_back(OutputRecord::check(ok, "tail-bound", arg));
    o.failed = !ok;
    return o;
}

Outcome cmd_table_classical(int max_arg) {
    Outcome o;
    for (int k = -max_arg; k <= 0; ++k) {
        o.records.push_back(classical_record(zeta_nonpositive(-k)));
    }
    for (int k = 2; k <= max_arg; k += 2) {
        o.records.push_back(classical_record(zeta_even_positive(k / 2)));
    }
    return o;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact and numeric values of the Riemann zeta function", "czeta"};
    app.require_subcommand(1);

    std::string format = "json";
    bool as_float = false;
    Overrides o;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "md"}));
    app.add_flag("--as-float", as_float, "Render exact values as floating point");
    app.add_option("--config", o.config, std::string("key=value settings file (else $") + kConfigEnvVar + ")");
    app.add_option("--em-n", o.em_n, "Euler-Maclaurin cutoff N");
    app.add_option("--em-j", o.em_j, "Euler-Maclaurin correction terms J");
    app.add_option("--tol", o.tol, "Numeric target tolerance");
    app.add_option("--radius", o.radius, "Contour radius");
    app.add_option("--x-max", o.x_max, "Contour length along the real axis (0 = automatic)");
    app.add_option("--panels-ray", o.panels_ray, "Quadrature panels per ray");
    app.add_option("--panels-arc", o.panels_arc, "Quadrature panels on the arc");
    app.add_option("--nodes", o.nodes, "Gauss-Legendre nodes per panel");
    app.add_option("--refine-tol", o.refine_tol, "Relative change accepted between refinements");
    app.add_option("--max-refinements", o.max_refinements, "Panel doublings before giving up");
    app.add_flag("--em-direct", o.em_direct, "Sum Euler-Maclaurin directly for re(s) < 0");
    app.add_option("--threads", o.threads, "OpenMP threads")->check(CLI::Range(1, 1024));

    auto* bern = app.add_subcommand("bernoulli", "Bernoulli numbers B_0 .. B_N");
    int bern_max = 0;
    std::string bern_method = "series";
    bern->add_option("--max", bern_max, "Largest index")->required()->check(CLI::Range(0, 2000));
    bern->add_option("--method", bern_method)->check(CLI::IsMember({"series", "recurrence", "both"}));

    auto* zeta = app.add_subcommand("zeta", "Values of zeta");
    zeta->require_subcommand(1);
    auto* zeta_exact = zeta->add_subcommand("exact", "Exact value at a classical point");
    int exact_k = 0;
    std::string exact_route = "closed";
    zeta_exact->add_option("K", exact_k, "Integer <= 0 or even integer >= 2")->required()->check(
        CLI::Range(-500, 500));
    zeta_exact->add_option("--route", exact_route)
        ->check(CLI::IsMember({"closed", "residue", "genfun", "abel", "funceq", "all"}));
    auto* zeta_numeric = zeta->add_subcommand("numeric", "Numeric value at a complex point");
    double num_re = 0.0;
    double num_im = 0.0;
    std::string num_method = "both";
    zeta_numeric->add_option("RE", num_re)->required();
    zeta_numeric->add_option("IM", num_im);
    zeta_numeric->add_option("--method", num_method)->check(CLI::IsMember({"hankel", "em", "both"}));

    auto* abel = app.add_subcommand("abel", "Abel sum of 1^M - 2^M + 3^M - ...");
    int abel_m = 0;
    bool abel_oracle = false;
    abel->add_option("M", abel_m)->required()->check(CLI::Range(0, 500));
    abel->add_flag("--numeric-oracle", abel_oracle, "Also estimate the limit numerically");

    auto* verify = app.add_subcommand("verify", "Identity checks");
    verify->require_subcommand(1);
    auto* v_funceq = verify->add_subcommand("funceq", "Functional equation, exactly and on a grid");
    int funceq_max = 15;
    std::string funceq_grid = "0.1:0.9:0:10:5";
    v_funceq->add_option("--exact-max", funceq_max)->check(CLI::Range(0, 200));
    v_funceq->add_option("--grid", funceq_grid, "RE0:RE1:IM0:IM1:STEPS");
    auto* v_cot = verify->add_subcommand("cotangent", "Partial fractions of pi cot(pi x)");
    std::string cot_x;
    long cot_terms = 0;
    v_cot->add_option("--x", cot_x, "Rational P/Q in (0, 1)")->required();
    v_cot->add_option("--terms", cot_terms)->required()->check(CLI::Range(1L, 1000000000L));
    auto* v_inv = verify->add_subcommand("contour-inversion", "Contour turned inside out");
    std::string inv_s;
    long inv_poles = 0;
    v_inv->add_option("--s", inv_s, "RE[,IM] with RE <= -1/2")->required();
    v_inv->add_option("--poles", inv_poles)->required()->check(CLI::Range(1L, 100000000L));

    auto* table = app.add_subcommand("table", "Tables of values");
    table->require_subcommand(1);
    auto* t_classical = table->add_subcommand("classical", "zeta(-M) .. zeta(0) and zeta(2) .. zeta(M)");
    int table_max = 0;
    t_classical->add_option("--max", table_max)->required()->check(CLI::Range(0, 200));

    for (CLI::App* sub : {bern, zeta, zeta_exact, zeta_numeric, abel, verify, v_funceq, v_cot, v_inv, table,
                          t_classical}) {
        sub->fallthrough();
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        const Settings settings = resolve_settings(o);
        if (o.threads) {
            kernels::set_threads(*o.threads);
        }
        Outcome outcome;
        if (bern->parsed()) {
            outcome = cmd_bernoulli(bern_max, bern_method);
        } else if (zeta_exact->parsed()) {
            outcome = cmd_zeta_exact(exact_k, exact_route);
        } else if (zeta_numeric->parsed()) {
            outcome = cmd_zeta_numeric(ComplexValue(num_re, num_im), num_method, settings, err);
        } else if (abel->parsed()) {
            outcome = cmd_abel(abel_m, abel_oracle);
        } else if (v_funceq->parsed()) {
            outcome = cmd_verify_funceq(funceq_max, funceq_grid, settings);
        } else if (v_cot->parsed()) {
            outcome = cmd_verify_cotangent(cot_x, cot_terms);
        } else if (v_inv->parsed()) {
            outcome = cmd_verify_inversion(inv_s, inv_poles, settings);
        } else if (t_classical->parsed()) {
            outcome = cmd_table_classical(table_max);
        }
        if (as_float) {
            for (auto& r : outcome.records) {
                r = r.as_float();
            }
        }
        out << render(outcome.records, parse_format(format)) << '\n';
        return outcome.failed ? kExitFailedCheck : kExitOk;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const InternalInconsistency& e) {
        err << "internal inconsistency: " << e.what() << '\n';
        return kExitFailedCheck;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace czeta::cli
