// bqa command-line front end: reproduces the standard experiments as CSV
// data plus a JSON summary, from flags or a JSON config. Links the C API
// only.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bqa.h"
#include "json.hpp"

using nlohmann::json;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Fatal {
    int exit_code;
    std::string code;
    std::string message;
};

void check(bqa_status st, const std::string& context) {
    if (st == BQA_OK) return;
    const char* code = "internal";
    int exit_code = 1;
    switch (st) {
        case BQA_ERR_DOMAIN:
            code = "domain";
            exit_code = 2;
            break;
        case BQA_ERR_INVALID_ARG:
            code = "invalid_argument";
            exit_code = 2;
            break;
        case BQA_ERR_CONVERGENCE:
            code = "convergence";
            exit_code = 1;
            break;
        default:
            break;
    }
    throw Fatal{exit_code, code, context + ": " + bqa_last_error()};
}

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i)
        g[i] = (i == n - 1) ? hi : lo + (hi - lo) * i / (n - 1);
    return g;
}

struct Config {
    std::string experiment;
    double A0 = 3.0;
    double sigma2 = 0.1;
    double B0 = 40.0;
    int p = 5;
    double C = 0.0;
    double chi = 0.0;
    double h = 0.0;
    int N = 40;
    int s_points = 2001;
    double s_min = 0.0;
    double s_max = 1.0;
    double jump_threshold = 0.05;
    double onset_eps = 1e-3;
    double a_min = 0.0;
    double a_max = 5.0;
    int a_points = 26;
    double b_min = -2.0;
    double b_max = 8.0;
    int b_points = 51;
    double c_min = 0.0;
    double c_max = 6.0;
    double c_step = 0.1;
    double theta_min = 0.05;
    double theta_max = 2.2;
    int theta_points = 100;
    std::string out = "bqa-out";
};

json config_to_json(const Config& c) {
    return json{{"experiment", c.experiment},
                {"A0", c.A0},
                {"sigma2", c.sigma2},
                {"B0", c.B0},
                {"p", c.p},
                {"C", c.C},
                {"chi", c.chi},
                {"h", c.h},
                {"N", c.N},
                {"s_points", c.s_points},
                {"s_min", c.s_min},
                {"s_max", c.s_max},
                {"jump_threshold", c.jump_threshold},
                {"onset_eps", c.onset_eps},
                {"a_min", c.a_min},
                {"a_max", c.a_max},
                {"a_points", c.a_points},
                {"b_min", c.b_min},
                {"b_max", c.b_max},
                {"b_points", c.b_points},
                {"c_min", c.c_min},
                {"c_max", c.c_max},
                {"c_step", c.c_step},
                {"theta_min", c.theta_min},
                {"theta_max", c.theta_max},
                {"theta_points", c.theta_points},
                {"out", c.out}};
}

template <typename T>
void maybe_get(const json& j, const char* key, T& into) {
    if (j.contains(key)) into = j.at(key).get<T>();
}

void config_merge_json(const json& j, Config& c) {
    maybe_get(j, "experiment", c.experiment);
    maybe_get(j, "A0", c.A0);
    maybe_get(j, "sigma2", c.sigma2);
    maybe_get(j, "B0", c.B0);
    maybe_get(j, "p", c.p);
    maybe_get(j, "C", c.C);
    maybe_get(j, "chi", c.chi);
    maybe_get(j, "h", c.h);
    maybe_get(j, "N", c.N);
    maybe_get(j, "s_points", c.s_points);
    maybe_get(j, "s_min", c.s_min);
    maybe_get(j, "s_max", c.s_max);
    maybe_get(j, "jump_threshold", c.jump_threshold);
    maybe_get(j, "onset_eps", c.onset_eps);
    maybe_get(j, "a_min", c.a_min);
    maybe_get(j, "a_max", c.a_max);
    maybe_get(j, "a_points", c.a_points);
    maybe_get(j, "b_min", c.b_min);
    maybe_get(j, "b_max", c.b_max);
    maybe_get(j, "b_points", c.b_points);
    maybe_get(j, "c_min", c.c_min);
    maybe_get(j, "c_max", c.c_max);
    maybe_get(j, "c_step", c.c_step);
    maybe_get(j, "theta_min", c.theta_min);
    maybe_get(j, "theta_max", c.theta_max);
    maybe_get(j, "theta_points", c.theta_points);
    maybe_get(j, "out", c.out);
}

void validate_config(const Config& c) {
    auto bad = [](const std::string& msg) {
        throw Fatal{2, "config", "config: " + msg};
    };
    if (!(c.A0 > 0.0 && c.sigma2 > 0.0 && c.B0 > 0.0))
        bad("A0, sigma2 and B0 must be positive");
    if (c.p < 2) bad("p must be an integer >= 2");
    if (!(c.chi >= 0.0 && c.chi < 2.0 * kPi)) bad("chi must lie in [0, 2*pi)");
    if (c.N < 1) bad("N must be >= 1");
    if (c.s_points < 2) bad("s_points must be >= 2");
    if (!(c.s_min >= 0.0 && c.s_max <= 1.0 && c.s_min < c.s_max))
        bad("require 0 <= s_min < s_max <= 1");
    if (!(c.jump_threshold > 0.0)) bad("jump_threshold must be positive");
    if (!(c.onset_eps > 0.0)) bad("onset_eps must be positive");
    if (c.a_points < 1 || c.b_points < 1) bad("a_points/b_points must be >= 1");
    if (!(c.a_min <= c.a_max && c.b_min <= c.b_max)) bad("bad A/B grid bounds");
    if (!(c.c_step > 0.0) || c.c_min > c.c_max) bad("bad C grid");
    if (!(c.theta_min > 0.0 && c.theta_max < kPi &&
          c.theta_min <= c.theta_max))
        bad("theta grid must lie strictly inside (0, pi)");
    if (c.theta_points < 2) bad("theta_points must be >= 2");
    if (c.out.empty()) bad("out must not be empty");
}

bqa_schedule sched_of(const Config& c) { return {c.A0, c.sigma2, c.B0}; }
bqa_model_params params_of(const Config& c) { return {c.p, c.C, c.chi, c.h}; }

// ---- output plumbing -------------------------------------------------

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Fatal{1, "io", "cannot open " + path.string()};
    f << text;
    if (!f) throw Fatal{1, "io", "short write to " + path.string()};
}

void finalize(const Config& cfg, const std::string& csv_name,
              const std::string& csv_body, const json& results) {
    const std::filesystem::path dir(cfg.out);
    std::filesystem::create_directories(dir);
    write_file(dir / csv_name, csv_body);
    json summary;
    summary["config"] = config_to_json(cfg);
    summary["experiment"] = cfg.experiment;
    summary["outputs"] = json{{"csv", csv_name}};
    summary["results"] = results;
    summary["tool"] = "bqa";
    summary["version"] = bqa_version();
    write_file(dir / "summary.json", summary.dump(2) + "\n");
}

std::string sweep_csv(bqa_sweep_result* sw) {
    std::string body = "s,theta_min,phi_min,alpha_min,beta_min,m,v_min\n";
    const size_t n = bqa_sweep_size(sw);
    for (size_t i = 0; i < n; ++i) {
        double s, m, v;
        bqa_angles a;
        check(bqa_sweep_point(sw, i, &s, &a, &m, &v), "sweep point");
        body += fmt17(s) + "," + fmt17(a.theta) + "," + fmt17(a.phi) + "," +
                fmt17(a.alpha) + "," + fmt17(a.beta) + "," + fmt17(m) + "," +
                fmt17(v) + "\n";
    }
    return body;
}

json report_json(const bqa_transition_report& rep) {
    json j;
    switch (rep.kind) {
        case BQA_TRANSITION_NONE: j["kind"] = "none"; break;
        case BQA_TRANSITION_FIRST_ORDER: j["kind"] = "first_order"; break;
        case BQA_TRANSITION_SECOND_ORDER: j["kind"] = "second_order"; break;
        default: j["kind"] = "first_and_second"; break;
    }
    if (rep.has_first) {
        j["s_first"] = rep.s_first;
        j["jump"] = rep.jump;
    }
    if (rep.has_second) j["s_second"] = rep.s_second;
    return j;
}

// ---- experiments ------------------------------------------------------

void run_single_spin(const Config& cfg) {
    const bqa_schedule sched = sched_of(cfg);
    const std::vector<double> grid =
        linspace(cfg.s_min, cfg.s_max, cfg.s_points);
    std::string body = "s,A,B,p_plus1,p_zero,p_minus1,energy\n";
    double probs[3], energy = 0.0;
    for (const double s : grid) {
        double A, B;
        check(bqa_schedule_eval(&sched, s, &A, &B), "schedule");
        check(bqa_single_spin_ground_state(&sched, cfg.h, s, probs, &energy),
              "single-spin ground state");
        body += fmt17(s) + "," + fmt17(A) + "," + fmt17(B) + "," +
                fmt17(probs[0]) + "," + fmt17(probs[1]) + "," +
                fmt17(probs[2]) + "," + fmt17(energy) + "\n";
    }
    json results;
    results["final_probs"] = {probs[0], probs[1], probs[2]};
    results["final_energy"] = energy;
    finalize(cfg, "single-spin.csv", body, results);
}

void run_sweep(const Config& cfg, bool rotated) {
    if (!rotated && cfg.chi != 0.0)
        throw Fatal{2, "config",
                    "sweep requires chi = 0; use rotated-sweep for a rotated "
                    "driver"};
    const bqa_schedule sched = sched_of(cfg);
    const bqa_model_params params = params_of(cfg);
    const std::vector<double> grid =
        linspace(cfg.s_min, cfg.s_max, cfg.s_points);
    bqa_sweep_result* sw = nullptr;
    check(bqa_sweep_run(&sched, &params, grid.data(), grid.size(),
                        rotated ? 1 : 0, &sw),
          "sweep");
    const std::string body = sweep_csv(sw);
    bqa_transition_report rep;
    check(bqa_classify_transitions(sw, cfg.jump_threshold, cfg.onset_eps,
                                   &rep),
          "classification");
    bqa_sweep_free(sw);
    json results;
    results["transition"] = report_json(rep);
    finalize(cfg, cfg.experiment + ".csv", body, results);
}

void run_phase_ab(const Config& cfg) {
    if (cfg.chi != 0.0)
        throw Fatal{2, "config", "phase-ab requires chi = 0"};
    const bqa_model_params params = params_of(cfg);
    const std::vector<double> av = linspace(cfg.a_min, cfg.a_max, cfg.a_points);
    const std::vector<double> bv = linspace(cfg.b_min, cfg.b_max, cfg.b_points);
    bqa_phase_ab* ph = nullptr;
    check(bqa_phase_diagram_ab(&params, av.data(), av.size(), bv.data(),
                               bv.size(), &ph),
          "phase-ab");
    std::string body = "A,B,theta_min,phi_min,alpha_min,beta_min,m,v_min\n";
    for (size_t ia = 0; ia < av.size(); ++ia) {
        for (size_t ib = 0; ib < bv.size(); ++ib) {
            bqa_angles a;
            double m, v;
            check(bqa_phase_ab_cell(ph, ia, ib, &a, &m, &v), "phase-ab cell");
            body += fmt17(av[ia]) + "," + fmt17(bv[ib]) + "," +
                    fmt17(a.theta) + "," + fmt17(a.phi) + "," + fmt17(a.alpha) +
                    "," + fmt17(a.beta) + "," + fmt17(m) + "," + fmt17(v) +
                    "\n";
        }
    }
    bqa_phase_ab_free(ph);
    json results;
    results["a_points"] = av.size();
    results["b_points"] = bv.size();
    finalize(cfg, "phase-ab.csv", body, results);
}

void run_phase_sc(const Config& cfg) {
    if (cfg.chi != 0.0)
        throw Fatal{2, "config", "phase-sc requires chi = 0"};
    const bqa_schedule sched = sched_of(cfg);
    std::vector<double> cv;
    for (double c = cfg.c_min; c <= cfg.c_max + 1e-12; c += cfg.c_step)
        cv.push_back(c);
    const double res = (cfg.s_max - cfg.s_min) / (cfg.s_points - 1);
    bqa_phase_sc* ph = nullptr;
    check(bqa_phase_diagram_sc(&sched, cfg.p, cv.data(), cv.size(), res,
                               cfg.s_min, cfg.s_max, cfg.jump_threshold,
                               cfg.onset_eps, &ph),
          "phase-sc");
    std::string body = "C,s_first,jump\n";
    int terminated_at = -1;
    for (size_t i = 0; i < cv.size(); ++i) {
        double C, s_first, jump;
        int has_first;
        check(bqa_phase_sc_point(ph, i, &C, &has_first, &s_first, &jump),
              "phase-sc point");
        body += fmt17(C) + ",";
        if (has_first) {
            body += fmt17(s_first);
        }
        body += "," + fmt17(has_first ? jump : 0.0) + "\n";
        if (!has_first && terminated_at < 0) terminated_at = static_cast<int>(i);
    }
    bqa_phase_sc_free(ph);
    json results;
    if (terminated_at >= 0)
        results["first_c_without_first_order"] = cv[terminated_at];
    finalize(cfg, "phase-sc.csv", body, results);
}

void run_second_order_curve(const Config& cfg) {
    const bqa_model_params params = params_of(cfg);
    const std::vector<double> thetas =
        linspace(cfg.theta_min, cfg.theta_max, cfg.theta_points);
    std::vector<double> A(thetas.size()), B(thetas.size());
    check(bqa_second_order_curve(&params, thetas.data(), thetas.size(),
                                 A.data(), B.data()),
          "second-order-curve");
    std::string body = "theta,A,B\n";
    for (size_t i = 0; i < thetas.size(); ++i)
        body += fmt17(thetas[i]) + "," + fmt17(A[i]) + "," + fmt17(B[i]) + "\n";
    json results;
    results["points"] = thetas.size();
    finalize(cfg, "second-order-curve.csv", body, results);
}

void run_trace_distance(const Config& cfg) {
    if (cfg.chi != 0.0)
        throw Fatal{2, "config", "trace-distance requires chi = 0"};
    const bqa_schedule sched = sched_of(cfg);
    const bqa_model_params params = params_of(cfg);
    const std::vector<double> grid =
        linspace(cfg.s_min, cfg.s_max, cfg.s_points);
    bqa_trace_scan* scan = nullptr;
    check(bqa_trace_distance_scan(&sched, &params, grid.data(), grid.size(),
                                  cfg.N, &scan),
          "trace-distance");
    std::string body = "s,N,D,overlap,energy_exact,v_min_sc_times_N\n";
    double d_max = 0.0, s_at_max = 0.0;
    for (size_t i = 0; i < bqa_trace_scan_size(scan); ++i) {
        double s, d, ov, e, v;
        check(bqa_trace_scan_point(scan, i, &s, &d, &ov, &e, &v, nullptr),
              "trace-distance point");
        body += fmt17(s) + "," + std::to_string(cfg.N) + "," + fmt17(d) + "," +
                fmt17(ov) + "," + fmt17(e) + "," + fmt17(v * cfg.N) + "\n";
        if (d > d_max) {
            d_max = d;
            s_at_max = s;
        }
    }
    bqa_trace_scan_free(scan);
    json results;
    results["d_max"] = d_max;
    results["s_at_d_max"] = s_at_max;
    finalize(cfg, "trace-distance.csv", body, results);
}

void dispatch(const Config& cfg) {
    if (cfg.experiment == "single-spin")
        run_single_spin(cfg);
    else if (cfg.experiment == "sweep")
        run_sweep(cfg, false);
    else if (cfg.experiment == "rotated-sweep")
        run_sweep(cfg, true);
    else if (cfg.experiment == "phase-ab")
        run_phase_ab(cfg);
    else if (cfg.experiment == "phase-sc")
        run_phase_sc(cfg);
    else if (cfg.experiment == "second-order-curve")
        run_second_order_curve(cfg);
    else if (cfg.experiment == "trace-distance")
        run_trace_distance(cfg);
    else
        throw Fatal{2, "config", "unknown experiment: " + cfg.experiment};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Semiclassical and exact phase-transition analysis of "
        "bifurcation-based annealing of the p-spin model"};
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);

    std::string config_path;
    struct FlagSet {
        std::optional<double> A0, sigma2, B0, C, chi, h;
        std::optional<int> p, N, s_points, a_points, b_points, theta_points;
        std::optional<double> s_min, s_max, jump_threshold, onset_eps;
        std::optional<double> a_min, a_max, b_min, b_max, c_min, c_max, c_step;
        std::optional<double> theta_min, theta_max;
        std::optional<std::string> out;
    } flags;

    const std::vector<std::string> experiments = {
        "single-spin", "sweep",          "rotated-sweep",  "phase-ab",
        "phase-sc",    "second-order-curve", "trace-distance", "run"};
    std::vector<CLI::App*> subs;
    for (const auto& name : experiments) {
        CLI::App* sub = app.add_subcommand(
            name, name == "run" ? "replay an experiment from a config file"
                                : "run the " + name + " experiment");
        sub->set_help_flag("--help", "print help and exit");
        sub->add_option("--config", config_path,
                        "JSON config (a summary.json with a config object "
                        "also works)");
        sub->add_option("--A0", flags.A0, "driver peak amplitude");
        sub->add_option("--sigma2", flags.sigma2, "driver Gaussian width");
        sub->add_option("--B0", flags.B0, "detuning endpoint amplitude");
        sub->add_option("--p", flags.p, "p-spin exponent");
        sub->add_option("--C", flags.C, "catalyst amplitude");
        sub->add_option("--chi", flags.chi, "driver rotation about z");
        sub->add_option("--h", flags.h, "longitudinal field (single-spin)");
        sub->add_option("--N", flags.N, "system size (trace-distance)");
        sub->add_option("--s-points", flags.s_points, "s grid points");
        sub->add_option("--s-min", flags.s_min, "s grid start");
        sub->add_option("--s-max", flags.s_max, "s grid end");
        sub->add_option("--jump-threshold", flags.jump_threshold,
                        "first-order jump threshold");
        sub->add_option("--onset-eps", flags.onset_eps,
                        "second-order onset threshold");
        sub->add_option("--a-min", flags.a_min, "A grid start (phase-ab)");
        sub->add_option("--a-max", flags.a_max, "A grid end (phase-ab)");
        sub->add_option("--a-points", flags.a_points, "A grid points");
        sub->add_option("--b-min", flags.b_min, "B grid start (phase-ab)");
        sub->add_option("--b-max", flags.b_max, "B grid end (phase-ab)");
        sub->add_option("--b-points", flags.b_points, "B grid points");
        sub->add_option("--c-min", flags.c_min, "C grid start (phase-sc)");
        sub->add_option("--c-max", flags.c_max, "C grid end (phase-sc)");
        sub->add_option("--c-step", flags.c_step, "C grid step (phase-sc)");
        sub->add_option("--theta-min", flags.theta_min,
                        "theta grid start (second-order-curve)");
        sub->add_option("--theta-max", flags.theta_max,
                        "theta grid end (second-order-curve)");
        sub->add_option("--theta-points", flags.theta_points,
                        "theta grid points");
        sub->add_option("--out", flags.out, "output directory");
        subs.push_back(sub);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        json err{{"error", {{"code", "cli"}, {"message", e.what()}}}};
        std::fprintf(stderr, "%s\n", err.dump().c_str());
        return 2;
    }

    try {
        Config cfg;
        if (!config_path.empty()) {
            std::ifstream f(config_path);
            if (!f)
                throw Fatal{2, "config",
                            "cannot read config file " + config_path};
            json j;
            try {
                f >> j;
            } catch (const std::exception& e) {
                throw Fatal{2, "config",
                            std::string("config parse error: ") + e.what()};
            }
            if (j.contains("config")) j = j.at("config");
            try {
                config_merge_json(j, cfg);
            } catch (const std::exception& e) {
                throw Fatal{2, "config",
                            std::string("config field error: ") + e.what()};
            }
        }
        std::string sub_name;
        for (size_t i = 0; i < subs.size(); ++i)
            if (subs[i]->parsed()) sub_name = experiments[i];
        if (sub_name != "run") cfg.experiment = sub_name;
        if (cfg.experiment.empty() || cfg.experiment == "run")
            throw Fatal{2, "config",
                        "run: config file must name an experiment"};

        auto apply = [](auto& opt, auto& field) {
            if (opt.has_value()) field = *opt;
        };
        apply(flags.A0, cfg.A0);
        apply(flags.sigma2, cfg.sigma2);
        apply(flags.B0, cfg.B0);
        apply(flags.p, cfg.p);
        apply(flags.C, cfg.C);
        apply(flags.chi, cfg.chi);
        apply(flags.h, cfg.h);
        apply(flags.N, cfg.N);
        apply(flags.s_points, cfg.s_points);
        apply(flags.s_min, cfg.s_min);
        apply(flags.s_max, cfg.s_max);
        apply(flags.jump_threshold, cfg.jump_threshold);
        apply(flags.onset_eps, cfg.onset_eps);
        apply(flags.a_min, cfg.a_min);
        apply(flags.a_max, cfg.a_max);
        apply(flags.a_points, cfg.a_points);
        apply(flags.b_min, cfg.b_min);
        apply(flags.b_max, cfg.b_max);
        apply(flags.b_points, cfg.b_points);
        apply(flags.c_min, cfg.c_min);
        apply(flags.c_max, cfg.c_max);
        apply(flags.c_step, cfg.c_step);
        apply(flags.theta_min, cfg.theta_min);
        apply(flags.theta_max, cfg.theta_max);
        apply(flags.theta_points, cfg.theta_points);
        apply(flags.out, cfg.out);

        validate_config(cfg);
        dispatch(cfg);
    } catch (const Fatal& f) {
        json err{{"error", {{"code", f.code}, {"message", f.message}}}};
        std::fprintf(stderr, "%s\n", err.dump().c_str());
        return f.exit_code;
    } catch (const std::exception& e) {
        json err{{"error", {{"code", "internal"}, {"message", e.what()}}}};
        std::fprintf(stderr, "%s\n", err.dump().c_str());
        return 1;
    }
    return 0;
}
