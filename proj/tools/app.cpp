#include "app.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "xyness/entropy.hpp"
#include "xyness/oracle.hpp"
#include "xyness/quadrature.hpp"
#include "xyness/spectral.hpp"
#include "xyness/validate.hpp"
#include "xyness/vanhove.hpp"

#ifndef XYNESS_VERSION
#define XYNESS_VERSION "dev"
#endif

namespace xyness::cli {

using json = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flag storage shared by the subcommands; optional means "not given".
struct Options {
    std::optional<int> n;
    std::optional<double> lambda, beta_l, beta_r, tol;
    std::string config_path, out_path, format, series_path, which = "s0", mode = "quick";
    std::string lambda_grid, n_grid, beta_pairs;
    int L = 400, jobs = 0, points = 0;
    double T = 300.0, dt = 0.1, t = 1.0, beta = 1.0, t_max = 50.0;
    bool dump_config = false, timestamp = false;
};

struct Resolved {
    int n = 1;
    double lambda = 1.0, beta_l = 1.0, beta_r = 2.0, tol = default_tol;
};

Resolved resolve(const Options& o)
{
    Resolved r;
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in)
            throw UsageError("cannot open config file " + o.config_path);
        json j;
        try {
            j = json::parse(in);
        } catch (const json::exception& ex) {
            throw UsageError(std::string("malformed config file: ") + ex.what());
        }
        if (!j.is_object())
            throw UsageError("config file must hold a flat JSON object");
        for (auto it = j.begin(); it != j.end(); ++it) {
            const std::string& k = it.key();
            const json& v = it.value();
            if (k == "n" && v.is_number_integer())
                r.n = v.get<int>();
            else if (k == "lambda" && v.is_number())
                r.lambda = v.get<double>();
            else if (k == "beta_l" && v.is_number())
                r.beta_l = v.get<double>();
            else if (k == "beta_r" && v.is_number())
                r.beta_r = v.get<double>();
            else if (k == "tol" && v.is_number())
                r.tol = v.get<double>();
            else
                throw UsageError("unknown or mistyped config key '" + k + "'");
        }
    }
    if (o.n)
        r.n = *o.n;
    if (o.lambda)
        r.lambda = *o.lambda;
    if (o.beta_l)
        r.beta_l = *o.beta_l;
    if (o.beta_r)
        r.beta_r = *o.beta_r;
    if (o.tol)
        r.tol = *o.tol;
    if (!(r.tol > 0.0))
        throw UsageError("tol must be positive");
    return r;
}

ModelConfig make_config(const Resolved& r)
{
    try {
        return ModelConfig(r.n, r.lambda, r.beta_l, r.beta_r);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
}

json config_json(const Resolved& r)
{
    return json{{"n", r.n}, {"lambda", r.lambda}, {"beta_l", r.beta_l}, {"beta_r", r.beta_r}, {"tol", r.tol}};
}

std::string utc_now()
{
    const std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

json manifest(const std::string& command, const Options& o, const Resolved& r, json extra = json::object())
{
    json m{{"tool", "xyness"}, {"version", XYNESS_VERSION}, {"command", command}, {"config", config_json(r)}};
    for (auto it = extra.begin(); it != extra.end(); ++it)
        m[it.key()] = it.value();
    m["output"] = o.out_path.empty() ? "stdout" : o.out_path;
    m["deterministic"] = true;
    if (o.timestamp)
        m["timestamp"] = utc_now();
    return m;
}

json number(double v)
{
    if (std::isfinite(v))
        return v;
    return nullptr;
}

// Writes to --out when given, otherwise to the command's stdout.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : os_(&fallback)
    {
        if (!path.empty()) {
            file_ = std::make_unique<std::ofstream>(path);
            if (!*file_)
                throw UsageError("cannot open output file " + path);
            os_ = file_.get();
        }
    }
    std::ostream& operator*() { return *os_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* os_;
};

void comment_manifest(std::ostream& os, const json& m)
{
    os << "# manifest " << m.dump() << "\n";
}

std::string csv_field(double v)
{
    return format_double(v);
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"')
            q += '"';
        q += c;
    }
    return q + "\"";
}

// -------------------------------------------------------------------- ep

int cmd_ep(const Options& o, std::ostream& out)
{
    const Resolved r = resolve(o);
    const ModelConfig cfg = make_config(r);
    EntropyReport rep = ep_micro(cfg, r.tol);
    rep.ep_vanhove = ep_vanhove(cfg);
    const json m = manifest("ep", o, r);
    Sink sink(o.out_path, out);
    if (o.format == "csv") {
        comment_manifest(*sink, m);
        *sink << "n,lambda,beta_l,beta_r,ep_micro,ep_second_order,ep_vanhove,current_micro,quad_error,form_used\n";
        *sink << r.n << "," << csv_field(r.lambda) << "," << csv_field(r.beta_l) << "," << csv_field(r.beta_r) << ","
              << csv_field(rep.ep_micro) << "," << csv_field(rep.ep_second_order) << ","
              << csv_field(rep.ep_vanhove) << "," << csv_field(rep.current_micro) << ","
              << csv_field(rep.quad_error) << "," << to_string(rep.form_used) << "\n";
    } else {
        json j{{"manifest", m},
               {"config", config_json(r)},
               {"ep_micro", rep.ep_micro},
               {"ep_second_order", rep.ep_second_order},
               {"ep_vanhove", rep.ep_vanhove},
               {"current_micro", rep.current_micro},
               {"quad_error", rep.quad_error},
               {"form_used", to_string(rep.form_used)},
               {"path_gap", rep.path_gap}};
        *sink << j.dump(2) << "\n";
    }
    return 0;
}

// ----------------------------------------------------------------- sweep

struct SweepRow {
    int n;
    double lambda, beta_l, beta_r;
    EntropyReport rep;
    std::string error;
};

std::vector<std::pair<double, double>> parse_beta_pairs(const std::string& spec, const Resolved& r)
{
    std::vector<std::pair<double, double>> out;
    if (spec.empty()) {
        out.emplace_back(r.beta_l, r.beta_r);
        return out;
    }
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw UsageError("beta pair '" + item + "' must look like beta_l:beta_r");
        try {
            out.emplace_back(std::stod(item.substr(0, colon)), std::stod(item.substr(colon + 1)));
        } catch (const std::exception&) {
            throw UsageError("bad beta pair '" + item + "'");
        }
    }
    return out;
}

int cmd_sweep(const Options& o, std::ostream& out)
{
    const Resolved r = resolve(o);
    const std::vector<double> lambdas = o.lambda_grid.empty() ? std::vector<double>{r.lambda} : parse_real_grid(o.lambda_grid);
    const std::vector<int> ns = o.n_grid.empty() ? std::vector<int>{r.n} : parse_int_grid(o.n_grid);
    const auto pairs = parse_beta_pairs(o.beta_pairs, r);

    std::vector<SweepRow> rows;
    for (int n : ns)
        for (double l : lambdas)
            for (auto [bl, br] : pairs) {
                make_config({n, l, bl, br, r.tol}); // rejects bad points before any work
                rows.push_back({n, l, bl, br, {}, ""});
            }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < rows.size(); i = next++) {
            SweepRow& row = rows[i];
            try {
                const ModelConfig cfg(row.n, row.lambda, row.beta_l, row.beta_r);
                row.rep = ep_micro(cfg, r.tol);
                row.rep.ep_vanhove = ep_vanhove(cfg);
            } catch (const std::exception& ex) {
                row.error = ex.what();
            }
        }
    };
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t jobs = std::min<std::size_t>(o.jobs > 0 ? std::size_t(o.jobs) : hw, std::max<std::size_t>(rows.size(), 1));
    std::vector<std::thread> pool;
    for (std::size_t j = 1; j < jobs; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();

    json extra{{"lambda_grid", lambdas}, {"n_grid", ns}};
    json bp = json::array();
    for (auto [bl, br] : pairs)
        bp.push_back({bl, br});
    extra["beta_pairs"] = bp;
    Sink sink(o.out_path, out);
    comment_manifest(*sink, manifest("sweep", o, r, extra));
    *sink << "n,lambda,beta_l,beta_r,ep_micro,ep_second_order,ep_vanhove,ratio_ep_micro_over_lambda2,quad_err,error\n";
    bool failed = false;
    for (const SweepRow& row : rows) {
        *sink << row.n << "," << csv_field(row.lambda) << "," << csv_field(row.beta_l) << "," << csv_field(row.beta_r)
              << ",";
        if (row.error.empty()) {
            const double ratio = row.lambda != 0.0 ? row.rep.ep_micro / (row.lambda * row.lambda) : NAN;
            *sink << csv_field(row.rep.ep_micro) << "," << csv_field(row.rep.ep_second_order) << ","
                  << csv_field(row.rep.ep_vanhove) << "," << csv_field(ratio) << "," << csv_field(row.rep.quad_error)
                  << ",\n";
        } else {
            failed = true;
            *sink << ",,,,," << csv_escape(row.error) << "\n";
        }
    }
    return failed ? 1 : 0;
}

// ------------------------------------------------------------- plot-data

int cmd_plotdata(const Options& o, std::ostream& out)
{
    const Resolved r = resolve(o);
    const ModelConfig cfg = make_config(r);
    json extra{{"which", o.which}};
    std::vector<std::vector<double>> data;
    if (o.which == "s0") {
        const int pts = o.points > 0 ? o.points : 500;
        for (int j = 0; j < pts; ++j) {
            const double e = double(j) / (pts - 1);
            data.push_back({e, s0_function(cfg, e)});
        }
        extra["columns"] = {"e", "S0"};
    } else if (o.which == "correlation") {
        const int pts = o.points > 0 ? o.points : 501;
        for (int j = 0; j < pts; ++j) {
            const double t = o.t_max * j / (pts - 1);
            const cplx p = reservoir_correlation(o.beta, t);
            data.push_back({t, p.real(), p.imag()});
        }
        extra["beta"] = o.beta;
        extra["t_max"] = o.t_max;
        extra["columns"] = {"t", "re_psi", "im_psi"};
    } else if (o.which == "integrand") {
        const int pts = o.points > 0 ? o.points : 1000;
        for (int j = 0; j < pts; ++j) {
            const double k = std::numbers::pi * j / (pts - 1);
            data.push_back({k, momentum_integrand(cfg, k)});
        }
        extra["columns"] = {"k", "S_over_Q"};
    } else {
        throw UsageError("unknown plot-data selector '" + o.which + "' (use s0, correlation or integrand)");
    }
    extra["points"] = data.size();
    Sink sink(o.out_path, out);
    comment_manifest(*sink, manifest("plot-data", o, r, extra));
    for (const auto& row : data) {
        for (std::size_t c = 0; c < row.size(); ++c)
            *sink << (c ? " " : "") << format_double(row[c]);
        *sink << "\n";
    }
    return 0;
}

// ----------------------------------------------------------- correlation

int cmd_correlation(const Options& o, std::ostream& out)
{
    const Resolved r = resolve(o);
    if (!(o.dt > 0.0) || o.t_max < 0.0)
        throw UsageError("correlation needs dt > 0 and t-max >= 0");
    const int steps = int(std::lround(o.t_max / o.dt));
    json extra{{"beta", o.beta}, {"t_max", o.t_max}, {"dt", o.dt}};
    std::vector<std::array<double, 3>> rows;
    for (int j = 0; j <= steps; ++j) {
        const double t = j * o.dt;
        const cplx p = reservoir_correlation(o.beta, t, std::min(r.tol, 1e-12));
        rows.push_back({t, p.real(), p.imag()});
    }
    Sink sink(o.out_path, out);
    const json m = manifest("correlation", o, r, extra);
    if (o.format == "json") {
        json arr = json::array();
        for (const auto& row : rows)
            arr.push_back({{"t", row[0]}, {"re_psi", row[1]}, {"im_psi", row[2]}});
        *sink << json{{"manifest", m}, {"samples", arr}}.dump(2) << "\n";
    } else {
        comment_manifest(*sink, m);
        *sink << "t,re_psi,im_psi\n";
        for (const auto& row : rows)
            *sink << csv_field(row[0]) << "," << csv_field(row[1]) << "," << csv_field(row[2]) << "\n";
    }
    return 0;
}

// -------------------------------------------------------------- spectrum

int cmd_spectrum(const Options& o, std::ostream& out)
{
    const Resolved r = resolve(o);
    const ModelConfig cfg = make_config(r);
    const SampleSpectrum s = sample_eigensystem(cfg.n());
    json j{{"manifest", manifest("spectrum", o, r)}, {"sample_eigenvalues", s.eigenvalues}, {"omega", s.omega}};
    if (cfg.lambda() == 0.0) {
        j["decoupled"] = true;
        j["point_spectrum"] = s.eigenvalues;
    } else {
        j["decoupled"] = false;
        j["point_spectrum"] = coupled_point_spectrum(cfg);
        json roots = json::object();
        roots["sigma_minus"] = point_spectrum_roots(cfg.n(), cfg.lambda(), -1);
        roots["sigma_plus"] = point_spectrum_roots(cfg.n(), cfg.lambda(), 1);
        j["edge_roots"] = roots;
    }
    Sink sink(o.out_path, out);
    *sink << j.dump(2) << "\n";
    return 0;
}

// ------------------------------------------------------------- transient

int cmd_transient(const Options& o, std::ostream& out)
{
    const Resolved r = resolve(o);
    const ModelConfig cfg = make_config(r);
    if (!(o.t >= 0.0))
        throw UsageError("transient needs t >= 0");
    const TransientDensity td = transient_density(cfg, o.t);
    const DaviesRates rates = davies_rates(cfg);
    json extra{{"t", o.t}};
    const json m = manifest("transient", o, r, extra);
    Sink sink(o.out_path, out);
    if (o.format == "csv") {
        comment_manifest(*sink, m);
        *sink << "i,eigenvalue,omega,gamma,coefficient\n";
        for (std::size_t i = 0; i < td.coefficients.size(); ++i)
            *sink << i + 1 << "," << csv_field(rates.eigenvalues[i]) << "," << csv_field(rates.omega[i]) << ","
                  << csv_field(rates.gamma[i]) << "," << csv_field(td.coefficients[i]) << "\n";
    } else {
        json mat = json::array();
        for (int i = 0; i < td.matrix.rows(); ++i) {
            json row = json::array();
            for (int k = 0; k < td.matrix.cols(); ++k)
                row.push_back(td.matrix(i, k));
            mat.push_back(row);
        }
        json im = json::array();
        for (const cplx& p : rates.psi0)
            im.push_back(p.imag());
        *sink << json{{"manifest", m},
                      {"t", o.t},
                      {"eigenvalues", rates.eigenvalues},
                      {"omega", rates.omega},
                      {"gamma", rates.gamma},
                      {"im_psi0", im},
                      {"coefficients", td.coefficients},
                      {"matrix", mat}}
                     .dump(2)
              << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------- oracle

int cmd_oracle(const Options& o, std::ostream& out)
{
    const Resolved r = resolve(o);
    const ModelConfig cfg = make_config(r);
    const OracleRun run = run_oracle(cfg, o.L, o.T, o.dt, r.tol);
    json extra{{"L", o.L}, {"T", o.T}, {"dt", o.dt}};
    if (!o.series_path.empty())
        extra["series"] = o.series_path;
    const json m = manifest("oracle", o, r, extra);
    {
        Sink sink(o.out_path, out);
        *sink << json{{"manifest", m},
                      {"L", run.L},
                      {"T", run.T},
                      {"dt", run.dt},
                      {"cesaro", run.cesaro},
                      {"reference", run.reference},
                      {"deviation", run.deviation},
                      {"relative_deviation", number(run.relative_deviation)},
                      {"trace_drift", run.trace_drift}}
                     .dump(2)
              << "\n";
    }
    if (!o.series_path.empty()) {
        std::ofstream csv(o.series_path);
        if (!csv)
            throw UsageError("cannot open series file " + o.series_path);
        comment_manifest(csv, m);
        csv << "t,current,cesaro\n";
        for (std::size_t i = 0; i < run.times.size(); ++i)
            csv << csv_field(run.times[i]) << "," << csv_field(run.currents[i]) << ","
                << csv_field(run.running_cesaro[i]) << "\n";
    }
    return 0;
}

// -------------------------------------------------------------- validate

int cmd_validate(const Options& o, std::ostream& out)
{
    ValidationMode mode;
    if (o.mode == "quick")
        mode = ValidationMode::quick;
    else if (o.mode == "full")
        mode = ValidationMode::full;
    else
        throw UsageError("validate mode must be quick or full");
    const auto results = run_validation(mode);
    bool ok = true;
    std::size_t w = 0;
    for (const auto& c : results)
        w = std::max(w, c.module.size() + c.name.size() + 3);
    for (const auto& c : results) {
        ok = ok && c.pass;
        std::ostringstream sec;
        sec << std::fixed << std::setprecision(2) << c.seconds << "s";
        out << (c.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(int(w)) << (c.module + " : " + c.name) << "  "
            << std::setw(8) << sec.str() << c.detail << "\n";
    }
    out << (ok ? "all checks passed" : "some checks failed") << "\n";
    return ok ? 0 : 1;
}

// ---------------------------------------------------- effective-coupling

int cmd_effective(const Options& o, std::ostream& out)
{
    const Resolved r = resolve(o);
    const ModelConfig cfg = make_config(r);
    EffectiveCouplingReport rep;
    try {
        rep = effective_coupling_check(cfg);
    } catch (const std::invalid_argument& ex) {
        throw UsageError(ex.what());
    }
    json rows = json::array();
    for (const auto& row : rep.rows)
        rows.push_back({{"frequency", row.frequency},
                        {"psi_hat_left", row.psi_hat_left},
                        {"psi_hat_right", row.psi_hat_right},
                        {"positive", row.positive}});
    Sink sink(o.out_path, out);
    *sink << json{{"manifest", manifest("effective-coupling", o, r)},
                  {"one_particle_energies", rep.one_particle_energies},
                  {"condition_satisfied", rep.pass},
                  {"frequencies", rows}}
                 .dump(2)
          << "\n";
    return 0;
}

void add_model_flags(CLI::App* sub, Options& o)
{
    sub->add_option_function<int>("--n", [&o](const int& v) { o.n = v; }, "half sample width");
    sub->add_option_function<double>("--lambda", [&o](const double& v) { o.lambda = v; }, "bond coupling");
    sub->add_option_function<double>("--beta-l", [&o](const double& v) { o.beta_l = v; }, "left inverse temperature");
    sub->add_option_function<double>("--beta-r", [&o](const double& v) { o.beta_r = v; }, "right inverse temperature");
    sub->add_option_function<double>("--tol", [&o](const double& v) { o.tol = v; }, "absolute quadrature tolerance");
    sub->add_option("--config", o.config_path, "flat JSON config file (n, lambda, beta_l, beta_r, tol)");
    sub->add_flag("--dump-config", o.dump_config, "print the resolved config as JSON and exit");
}

void add_output_flags(CLI::App* sub, Options& o, const std::string& default_format)
{
    sub->add_option("--out", o.out_path, "output file (default stdout)");
    sub->add_option("--format", o.format, "json or csv (default " + default_format + ")")->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--timestamp", o.timestamp, "record the UTC time in the manifest");
}

} // namespace

std::string format_double(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> parse_real_grid(const std::string& spec)
{
    std::vector<double> out;
    try {
        if (spec.find(':') != std::string::npos) {
            std::stringstream ss(spec);
            std::string a, b, s;
            std::getline(ss, a, ':');
            std::getline(ss, b, ':');
            std::getline(ss, s, ':');
            const double lo = std::stod(a), hi = std::stod(b), step = s.empty() ? 1.0 : std::stod(s);
            if (step == 0.0 || (hi - lo) / step < -1e-12)
                throw UsageError("grid '" + spec + "' has a step that never reaches its end");
            const long count = std::lround(std::floor((hi - lo) / step + 1e-9)) + 1;
            if (count > 1000000)
                throw UsageError("grid '" + spec + "' is too large");
            for (long i = 0; i < count; ++i)
                out.push_back(lo + double(i) * step);
        } else {
            std::stringstream ss(spec);
            std::string item;
            while (std::getline(ss, item, ','))
                out.push_back(std::stod(item));
        }
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("cannot parse grid '" + spec + "'");
    }
    if (out.empty())
        throw UsageError("empty grid '" + spec + "'");
    return out;
}

std::vector<int> parse_int_grid(const std::string& spec)
{
    std::vector<int> out;
    for (double v : parse_real_grid(spec)) {
        if (v != std::round(v))
            throw UsageError("n grid '" + spec + "' must contain integers");
        out.push_back(int(std::lround(v)));
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Steady-state current and entropy production of the open XY chain", "xyness"};
    app.set_version_flag("--version", XYNESS_VERSION);
    app.require_subcommand(1);
    Options o;

    auto* ep = app.add_subcommand("ep", "microscopic, second-order and van Hove entropy production");
    add_model_flags(ep, o);
    add_output_flags(ep, o, "json");

    auto* sweep = app.add_subcommand("sweep", "entropy production over a (n, lambda, beta) grid as CSV");
    add_model_flags(sweep, o);
    sweep->add_option("--out", o.out_path, "output file (default stdout)");
    sweep->add_flag("--timestamp", o.timestamp, "record the UTC time in the manifest");
    sweep->add_option("--lambda-grid", o.lambda_grid, "a:b:step or comma list");
    sweep->add_option("--n-grid", o.n_grid, "a:b, a:b:step or comma list");
    sweep->add_option("--beta-pairs", o.beta_pairs, "comma list of beta_l:beta_r (default --beta-l/--beta-r)");
    sweep->add_option("--jobs", o.jobs, "worker threads (default: hardware concurrency)");

    auto* plot = app.add_subcommand("plot-data", "two/three-column plot data");
    add_model_flags(plot, o);
    plot->add_option("--out", o.out_path, "output file (default stdout)");
    plot->add_flag("--timestamp", o.timestamp, "record the UTC time in the manifest");
    plot->add_option("--which", o.which, "s0, correlation or integrand");
    plot->add_option("--points", o.points, "number of samples");
    plot->add_option("--beta", o.beta, "inverse temperature for the correlation");
    plot->add_option("--t-max", o.t_max, "largest time for the correlation");

    auto* corr = app.add_subcommand("correlation", "reservoir time correlation psi(t)");
    add_model_flags(corr, o);
    add_output_flags(corr, o, "csv");
    corr->add_option("--beta", o.beta, "inverse temperature");
    corr->add_option("--t-max", o.t_max, "largest time");
    corr->add_option("--dt", o.dt, "time step");

    auto* spec = app.add_subcommand("spectrum", "sample eigenvalues, edge weights and coupled point spectrum");
    add_model_flags(spec, o);
    spec->add_option("--out", o.out_path, "output file (default stdout)");
    spec->add_flag("--timestamp", o.timestamp, "record the UTC time in the manifest");

    auto* trans = app.add_subcommand("transient", "van Hove transient sample density");
    add_model_flags(trans, o);
    add_output_flags(trans, o, "json");
    trans->add_option("--t", o.t, "rescaled time");

    auto* orc = app.add_subcommand("oracle", "finite-lattice Cesaro current against the closed form");
    add_model_flags(orc, o);
    orc->add_option("--out", o.out_path, "JSON summary file (default stdout)");
    orc->add_flag("--timestamp", o.timestamp, "record the UTC time in the manifest");
    orc->add_option("--L", o.L, "lattice half-width");
    orc->add_option("--T", o.T, "averaging horizon");
    orc->add_option("--dt", o.dt, "sampling step");
    orc->add_option("--series", o.series_path, "CSV file for t, J(t), running Cesaro mean");

    auto* val = app.add_subcommand("validate", "run the invariant suites");
    val->add_option("mode", o.mode, "quick or full");

    auto* eff = app.add_subcommand("effective-coupling", "Bohr frequencies and reservoir spectral densities");
    add_model_flags(eff, o);
    eff->add_option("--out", o.out_path, "output file (default stdout)");
    eff->add_flag("--timestamp", o.timestamp, "record the UTC time in the manifest");

    std::vector<const char*> argv{"xyness"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << XYNESS_VERSION << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (o.dump_config) {
            out << config_json(resolve(o)).dump(2) << "\n";
            return 0;
        }
        if (ep->parsed())
            return cmd_ep(o, out);
        if (sweep->parsed())
            return cmd_sweep(o, out);
        if (plot->parsed())
            return cmd_plotdata(o, out);
        if (corr->parsed())
            return cmd_correlation(o, out);
        if (spec->parsed())
            return cmd_spectrum(o, out);
        if (trans->parsed())
            return cmd_transient(o, out);
        if (orc->parsed())
            return cmd_oracle(o, out);
        if (val->parsed())
            return cmd_validate(o, out);
        if (eff->parsed())
            return cmd_effective(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        // guard violations and domain errors of the computation itself
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace xyness::cli
