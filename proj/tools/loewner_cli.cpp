// loewner -- command line surface over the operator monotonicity toolkit:
// PSD certificates for monotonicity/convexity, counterexample search,
// measure fitting and evaluation, Pick representations, Stieltjes inversion,
// and the transform algebra on positive operator monotone functions.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "loewner/catalog.hpp"
#include "loewner/criteria.hpp"
#include "loewner/inversion.hpp"
#include "loewner/json_io.hpp"
#include "loewner/transforms.hpp"

namespace {

using loewner::Complex;
using loewner::Interval;
using loewner::ScalarFunction;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_endpoint(const std::string& s) {
    if (s == "inf" || s == "+inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    return std::stod(s);
}

Interval parse_interval(const std::string& s) {
    const auto colon = s.find(':');
    if (colon == std::string::npos) throw UsageError("interval must look like 'a:b', got " + s);
    try {
        return Interval(parse_endpoint(s.substr(0, colon)), parse_endpoint(s.substr(colon + 1)));
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad interval: ") + e.what());
    }
}

std::vector<double> parse_points(const std::string& spec) {
    std::vector<double> out;
    if (spec.rfind("log:", 0) == 0 || spec.rfind("lin:", 0) == 0) {
        const bool log_spaced = spec[1] == 'o';
        std::istringstream is(spec.substr(4));
        std::string n_s, a_s, b_s;
        if (!std::getline(is, n_s, ':') || !std::getline(is, a_s, ':') || !std::getline(is, b_s))
            throw UsageError("point spec must look like log:N:a:b or lin:N:a:b");
        const int n = std::stoi(n_s);
        const double a = std::stod(a_s), b = std::stod(b_s);
        if (n < 1 || !(a < b) || (log_spaced && !(a > 0)))
            throw UsageError("bad point spec: " + spec);
        for (int i = 0; i < n; ++i) {
            const double u = n == 1 ? 0.5 : static_cast<double>(i) / (n - 1);
            out.push_back(log_spaced ? a * std::pow(b / a, u) : a + (b - a) * u);
        }
        return out;
    }
    std::istringstream is(spec);
    std::string tok;
    while (std::getline(is, tok, ',')) out.push_back(std::stod(tok));
    if (out.empty()) throw UsageError("empty point list: " + spec);
    return out;
}

ScalarFunction resolve_function(const std::string& fn, double p, bool p_given, double lambda,
                                bool lambda_given) {
    if (fn.empty()) throw UsageError("no function given (use --fn)");
    try {
        if (!fn.empty() && fn.front() == '{') return loewner::function_from_spec(json::parse(fn));
        json params = json::object();
        if (p_given) params["p"] = p;
        if (lambda_given) params["lambda"] = lambda;
        return loewner::catalog_lookup(fn, params);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad function spec: ") + e.what());
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw std::runtime_error("cannot open output file " + out_path);
    os << text;
}

void stamp(json& j, bool no_timestamp) {
    if (no_timestamp) return;
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&now));
    j["timestamp"] = buf;
}

std::string csv_rows(const std::vector<double>& xs, const std::vector<double>& ys,
                     const std::string& header) {
    std::ostringstream os;
    os << header << '\n' << std::setprecision(17);
    for (std::size_t i = 0; i < xs.size(); ++i) os << xs[i] << ',' << ys[i] << '\n';
    return os.str();
}

loewner::SampleSet read_csv_samples(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw UsageError("cannot open sample file " + path);
    std::vector<double> ts, vs;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string a, b;
        if (!std::getline(ls, a, ',') || !std::getline(ls, b)) continue;
        try {
            ts.push_back(std::stod(a));
            vs.push_back(std::stod(b));
        } catch (...) {
            continue;  // header or stray text row
        }
    }
    return loewner::make_samples(std::move(ts), std::move(vs));
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("LOEWNER_SEED")) return std::strtoull(env, nullptr, 10);
    return 1234;
}

json load_config(const std::string& path) {
    if (path.empty()) return json::object();
    std::ifstream is(path);
    if (!is) throw UsageError("cannot open config file " + path);
    try {
        return json::parse(is);
    } catch (const std::exception& e) {
        throw UsageError(std::string("bad config json: ") + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical toolkit for operator monotone and operator convex functions"};
    app.require_subcommand(1);

    // shared settings; flags win over --config values
    std::string fn_spec, config_path, out_path, interval_s;
    double p_param = 0.0, lambda_param = 0.0;
    int order = 3, trials = 200, budget = 200;
    std::uint64_t seed = default_seed();
    double tol = loewner::kDefaultPsdTol, eps = 1e-3, ridge = 0.0, epsilon_mollify = 0.0;
    bool no_timestamp = false, concave = false;
    std::string nodes_s = "log:200:1e-4:1e4", ts_s = "log:50:0.05:20",
                samples_s = "log:100:0.05:20";
    std::string kind_s = "half-line", data_path, scan_path, op_name, measure_path, bump_s;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--fn", fn_spec, "catalog name or inline JSON function spec");
        sub->add_option("--p", p_param, "power parameter for --fn power");
        sub->add_option("--lambda", lambda_param, "lambda for --fn extreme");
        sub->add_option("--config", config_path, "JSON config file (flags win)");
        sub->add_option("--out", out_path, "output path (default stdout)");
        sub->add_option("--seed", seed, "base seed (env LOEWNER_SEED)");
        sub->add_flag("--no-timestamp", no_timestamp, "omit timestamp field from JSON outputs");
        return sub;
    };

    auto* c_check = add_common(app.add_subcommand("check", "certify/refute n-monotonicity"));
    c_check->add_option("--interval", interval_s, "check interval a:b (default: function domain)");
    c_check->add_option("--n", order, "matrix order");
    c_check->add_option("--trials", trials, "sampled grids");
    c_check->add_option("--tol", tol, "relative PSD tolerance");
    c_check->add_option("--mollify", epsilon_mollify, "mollify f first with this epsilon");

    auto* c_convex =
        add_common(app.add_subcommand("convex-check", "certify/refute n-convexity"));
    c_convex->add_option("--interval", interval_s, "check interval a:b");
    c_convex->add_option("--n", order, "matrix order");
    c_convex->add_option("--trials", trials, "sampled grids");
    c_convex->add_option("--tol", tol, "relative PSD tolerance");
    c_convex->add_flag("--concave", concave, "test concavity of f instead");

    auto* c_cx = add_common(
        app.add_subcommand("counterexample", "search for an order-violating matrix pair"));
    c_cx->add_option("--interval", interval_s, "spectra interval a:b");
    c_cx->add_option("--n", order, "matrix order");
    c_cx->add_option("--budget", budget, "sample budget");
    c_cx->add_option("--tol", tol, "violation threshold");

    auto* c_fit = add_common(app.add_subcommand("fit", "fit a representing measure via NNLS"));
    c_fit->add_option("--data", data_path, "CSV of t,f(t) samples");
    c_fit->add_option("--samples", samples_s, "synthesize samples of --fn at these points");
    c_fit->add_option("--nodes", nodes_s, "node grid spec (log:N:a:b)");
    c_fit->add_option("--kind", kind_s, "unit-interval | half-line");
    c_fit->add_option("--ridge", ridge, "optional ridge regularization");

    auto* c_eval = add_common(app.add_subcommand("eval", "evaluate a function or measure"));
    c_eval->add_option("--measure", measure_path, "measure JSON file");
    c_eval->add_option("--ts", ts_s, "evaluation points");

    auto* c_pick = add_common(
        app.add_subcommand("pick", "Pick representation via the T-transform measure"));
    c_pick->add_option("--nodes", nodes_s, "node grid for the Tf fit");
    c_pick->add_option("--samples", samples_s, "sample points for the Tf fit");
    c_pick->add_option("--scan", scan_path, "write upper-half-plane positivity scan CSV here");

    auto* c_invert = add_common(
        app.add_subcommand("invert", "boundary-value density scan / Stieltjes functional"));
    c_invert->add_option("--pick", measure_path, "pick representation JSON file (else --fn)");
    c_invert->add_option("--eps", eps, "boundary offset epsilon");
    c_invert->add_option("--grid", ts_s, "lambda grid for the density scan");
    c_invert->add_option("--bump", bump_s,
                         "center:radius of a unit bump; reports the Stieltjes functional");

    auto* c_tr = add_common(app.add_subcommand("transform", "apply a transform, emit samples"));
    c_tr->add_option("--op", op_name, "sharp|star|T|lambda|mobius-to-unit|mobius-to-halfline")
        ->required();
    c_tr->add_option("--ts", ts_s, "sample points");

    app.add_subcommand("catalog", "list built-in functions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const json cfg = load_config(config_path);
        auto merged_str = [&](CLI::App* sub, const char* flag, std::string& slot,
                              const char* key) {
            if (sub->count(flag) == 0 && cfg.contains(key)) slot = cfg[key].get<std::string>();
        };
        auto merged_num = [&](CLI::App* sub, const char* flag, auto& slot, const char* key) {
            if (sub->count(flag) == 0 && cfg.contains(key))
                slot = cfg[key].get<std::decay_t<decltype(slot)>>();
        };

        if (app.got_subcommand("catalog")) {
            std::ostringstream os;
            for (const auto& [name, what] : loewner::catalog_entries())
                os << std::left << std::setw(10) << name << " " << what << '\n';
            emit(os.str(), out_path);
            return kExitPass;
        }

        if (app.got_subcommand(c_check) || app.got_subcommand(c_convex)) {
            CLI::App* sub = app.got_subcommand(c_check) ? c_check : c_convex;
            merged_str(sub, "--fn", fn_spec, "fn");
            merged_str(sub, "--interval", interval_s, "interval");
            merged_num(sub, "--n", order, "n");
            merged_num(sub, "--trials", trials, "trials");
            merged_num(sub, "--seed", seed, "seed");
            merged_num(sub, "--tol", tol, "tol");
            ScalarFunction f = resolve_function(fn_spec, p_param, sub->count("--p") > 0,
                                                lambda_param, sub->count("--lambda") > 0);
            if (epsilon_mollify > 0.0) f = loewner::mollify(f, epsilon_mollify);
            const Interval iv = interval_s.empty() ? f.domain : parse_interval(interval_s);
            const loewner::Certificate cert =
                app.got_subcommand(c_check)
                    ? loewner::check_monotone(f, iv, order, trials, seed, tol)
                    : loewner::check_convex(f, iv, order, trials, seed, concave, tol);
            json j = loewner::certificate_to_json(cert);
            stamp(j, no_timestamp);
            emit(j.dump(2), out_path);
            return cert.passed() ? kExitPass : kExitFail;
        }

        if (app.got_subcommand(c_cx)) {
            merged_str(c_cx, "--fn", fn_spec, "fn");
            merged_num(c_cx, "--budget", budget, "budget");
            merged_num(c_cx, "--seed", seed, "seed");
            ScalarFunction f = resolve_function(fn_spec, p_param, c_cx->count("--p") > 0,
                                                lambda_param, c_cx->count("--lambda") > 0);
            const Interval iv = interval_s.empty() ? f.domain : parse_interval(interval_s);
            const double cx_tol = c_cx->count("--tol") ? tol : 1e-6;
            const auto hit = loewner::counterexample_pair(f, iv, order, budget, seed, cx_tol);
            json j;
            j["found"] = hit.has_value();
            if (hit) {
                j["x"] = loewner::matrix_to_json(hit->x.m);
                j["y"] = loewner::matrix_to_json(hit->y.m);
                j["min_eig"] = hit->min_eigenvalue;
            }
            stamp(j, no_timestamp);
            emit(j.dump(2), out_path);
            return hit ? kExitPass : kExitFail;
        }

        if (app.got_subcommand(c_fit)) {
            merged_str(c_fit, "--fn", fn_spec, "fn");
            merged_str(c_fit, "--nodes", nodes_s, "nodes");
            merged_str(c_fit, "--kind", kind_s, "kind");
            loewner::SampleSet samples;
            if (!data_path.empty()) {
                samples = read_csv_samples(data_path);
            } else {
                ScalarFunction f = resolve_function(fn_spec, p_param, c_fit->count("--p") > 0,
                                                    lambda_param, c_fit->count("--lambda") > 0);
                std::vector<double> ts = parse_points(samples_s), vs;
                for (double t : ts) vs.push_back(f.eval(t));
                samples = loewner::make_samples(std::move(ts), std::move(vs));
            }
            loewner::FitOptions opt;
            opt.ridge = ridge;
            const auto fit = loewner::fit_measure(
                samples, parse_points(nodes_s), loewner::measure_kind_from_string(kind_s), opt);
            json j = loewner::measure_to_json(fit.measure);
            j["report"] = loewner::fit_report_to_json(fit.report);
            j["total_mass"] = loewner::total_mass(fit.measure);
            stamp(j, no_timestamp);
            emit(j.dump(2), out_path);
            return kExitPass;
        }

        if (app.got_subcommand(c_eval)) {
            const std::vector<double> ts = parse_points(ts_s);
            std::vector<double> ys;
            if (!measure_path.empty()) {
                std::ifstream is(measure_path);
                if (!is) throw UsageError("cannot open measure file " + measure_path);
                const auto mu = loewner::measure_from_json(json::parse(is));
                for (double t : ts) ys.push_back(loewner::eval_measure(mu, t));
            } else {
                ScalarFunction f = resolve_function(fn_spec, p_param, c_eval->count("--p") > 0,
                                                    lambda_param, c_eval->count("--lambda") > 0);
                for (double t : ts) ys.push_back(f.eval(t));
            }
            emit(csv_rows(ts, ys, "t,f"), out_path);
            return kExitPass;
        }

        if (app.got_subcommand(c_pick)) {
            merged_str(c_pick, "--fn", fn_spec, "fn");
            ScalarFunction f = resolve_function(fn_spec, p_param, c_pick->count("--p") > 0,
                                                lambda_param, c_pick->count("--lambda") > 0);
            const double f1 = f.eval(1.0);
            const double fp1 = loewner::stencil_derivative1(f, 1.0);
            const ScalarFunction tf = loewner::t_transform(f);
            std::vector<double> ts = parse_points(samples_s), vs;
            for (double t : ts) vs.push_back(tf.eval(t));
            auto fit = loewner::fit_measure(loewner::make_samples(std::move(ts), std::move(vs)),
                                            parse_points(nodes_s), loewner::MeasureKind::HalfLine);
            const double mass = loewner::total_mass(fit.measure);
            if (std::abs(mass - 1.0) > 1e-3)
                throw std::runtime_error("pick: fitted Tf measure mass " + std::to_string(mass) +
                                         " too far from 1; is the function operator monotone?");
            for (double& w : fit.measure.weights) w /= mass;
            fit.measure.atom_at_zero /= mass;
            fit.measure.atom_at_one_or_infinity /= mass;
            const auto rep = loewner::to_pick(f1, fp1, fit.measure);

            double min_im = std::numeric_limits<double>::infinity();
            std::ostringstream scan;
            scan << "re,im,im_f\n" << std::setprecision(17);
            for (int i = 0; i < 20; ++i)
                for (int k = 0; k < 10; ++k) {
                    const Complex z(-50.0 + 100.0 * i / 19.0, std::pow(10.0, -3.0 + 6.0 * k / 9.0));
                    const double im = loewner::eval_pick(rep, z).imag();
                    min_im = std::min(min_im, im);
                    scan << z.real() << ',' << z.imag() << ',' << im << '\n';
                }
            if (!scan_path.empty()) emit(scan.str(), scan_path);

            json j = loewner::pick_to_json(rep);
            j["f1"] = f1;
            j["fp1"] = fp1;
            j["fit_report"] = loewner::fit_report_to_json(fit.report);
            j["min_im_on_scan"] = min_im;
            stamp(j, no_timestamp);
            emit(j.dump(2), out_path);
            return kExitPass;
        }

        if (app.got_subcommand(c_invert)) {
            merged_str(c_invert, "--fn", fn_spec, "fn");
            merged_num(c_invert, "--eps", eps, "eps");
            std::function<Complex(Complex)> fc;
            std::vector<double> features;
            if (!measure_path.empty()) {
                std::ifstream is(measure_path);
                if (!is) throw UsageError("cannot open pick file " + measure_path);
                const auto rep = loewner::pick_from_json(json::parse(is));
                features = rep.nu.nodes;
                fc = [rep](Complex z) { return loewner::eval_pick(rep, z); };
            } else {
                ScalarFunction f = resolve_function(fn_spec, p_param, c_invert->count("--p") > 0,
                                                    lambda_param, c_invert->count("--lambda") > 0);
                if (!f.has_complex_eval())
                    throw UsageError("invert: function has no complex evaluator");
                fc = f.complex_eval;
            }
            const std::vector<double> grid = parse_points(ts_s);
            const std::vector<double> dens = loewner::density_scan(fc, grid, eps);
            emit(csv_rows(grid, dens, "lambda,density"), out_path);
            if (!bump_s.empty()) {
                const auto colon = bump_s.find(':');
                if (colon == std::string::npos) throw UsageError("--bump must be center:radius");
                const double c = std::stod(bump_s.substr(0, colon));
                const double r = std::stod(bump_s.substr(colon + 1));
                const double val = loewner::stieltjes_functional(
                    fc, loewner::bump_test_function(c, r), eps, features);
                json j{{"eps", eps}, {"bump_center", c}, {"bump_radius", r}, {"functional", val}};
                stamp(j, no_timestamp);
                std::cout << j.dump(2) << '\n';
            }
            return kExitPass;
        }

        if (app.got_subcommand(c_tr)) {
            ScalarFunction f = resolve_function(fn_spec, p_param, c_tr->count("--p") > 0,
                                                lambda_param, c_tr->count("--lambda") > 0);
            ScalarFunction g;
            if (op_name == "sharp") g = loewner::sharp(f);
            else if (op_name == "star") g = loewner::star(f);
            else if (op_name == "T") g = loewner::t_transform(f);
            else if (op_name == "lambda") g = loewner::lambda_map(f);
            else if (op_name == "mobius-to-unit")
                g = loewner::mobius_transport(f, loewner::MobiusDirection::ToUnitInterval);
            else if (op_name == "mobius-to-halfline")
                g = loewner::mobius_transport(f, loewner::MobiusDirection::ToHalfline);
            else throw UsageError("unknown transform op '" + op_name + "'");
            const std::vector<double> ts = parse_points(ts_s);
            std::vector<double> ys;
            for (double t : ts) ys.push_back(g.eval(t));
            emit(csv_rows(ts, ys, "t," + op_name), out_path);
            return kExitPass;
        }

        throw UsageError("no subcommand");
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
}
