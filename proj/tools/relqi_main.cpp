// Command-line front end: single-point measurements, (alpha, n) and
// (alpha, xi) sweeps to CSV/JSON, the self-verification report and a Wigner
// angle helper.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid arguments,
// 3 I/O failure.

#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "relqi/entanglement.hpp"
#include "relqi/kinematics.hpp"
#include "relqi/sweep.hpp"
#include "relqi/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitBadArguments = 2;
constexpr int kExitIoFailure = 3;

int run_measure(double alpha, double n, bool as_printed, relqi::OutputFormat format) {
    relqi::StateParameter p;
    relqi::Polarization pol;
    try {
        p = relqi::state_parameter(alpha);
    } catch (const std::exception&) {
        std::cerr << "--alpha: must lie strictly in (0, 1)\n";
        return kExitBadArguments;
    }
    try {
        pol = relqi::polarization(n);
    } catch (const std::exception&) {
        std::cerr << "--n: must lie in [0, 1]\n";
        return kExitBadArguments;
    }
    const relqi::SweepRecord rec =
        relqi::evaluate_point(p, pol, std::nullopt, as_printed);
    const relqi::SweepRecord recs[] = {rec};
    if (format == relqi::OutputFormat::kCsv)
        relqi::write_csv(std::cout, recs);
    else
        relqi::write_json(std::cout, recs);
    return kExitOk;
}

int run_sweep_cmd(const relqi::SweepConfig& cfg) {
    try {
        relqi::validate_config(cfg);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitBadArguments;
    }
    if (cfg.mode == relqi::SweepMode::kKinematic && cfg.w_over_m > 0.3)
        std::cerr << "warning: --w-over-m above 0.3, outside the leading-order regime\n";

    std::ofstream out(cfg.output_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output path: " << cfg.output_path << "\n";
        return kExitIoFailure;
    }
    try {
        const std::vector<relqi::SweepRecord> records = relqi::run_sweep(cfg);
        if (cfg.format == relqi::OutputFormat::kCsv)
            relqi::write_csv(out, records);
        else
            relqi::write_json(out, records);
    } catch (const std::runtime_error& e) {
        std::cerr << "sweep aborted: " << e.what() << "\n";
        return kExitVerifyFailure;
    }
    out.flush();
    if (!out) {
        std::cerr << "write failed: " << cfg.output_path << "\n";
        return kExitIoFailure;
    }
    return kExitOk;
}

int run_wigner(double beta, double p_over_m) {
    relqi::BoostRapidity xi;
    relqi::ParticleRapidity delta;
    try {
        xi = relqi::rapidity_from_beta(beta);
    } catch (const std::exception&) {
        std::cerr << "--beta: must lie in [0, 1)\n";
        return kExitBadArguments;
    }
    try {
        delta = relqi::particle_rapidity_from_momentum(p_over_m);
    } catch (const std::exception&) {
        std::cerr << "--p-over-m: must be >= 0\n";
        return kExitBadArguments;
    }
    const relqi::WignerAngle w = relqi::wigner_angle(xi, delta);
    std::cout << "xi = " << relqi::format_g17(xi.xi) << "\n"
              << "delta = " << relqi::format_g17(delta.delta) << "\n"
              << "theta_rad = " << relqi::format_g17(w.theta) << "\n"
              << "theta_deg = " << relqi::format_g17(w.theta * 180.0 / std::numbers::pi) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spin entanglement of a two-qubit state under Lorentz boosts"};
    app.require_subcommand(1);

    const std::map<std::string, relqi::OutputFormat> format_map{
        {"csv", relqi::OutputFormat::kCsv}, {"json", relqi::OutputFormat::kJson}};
    const std::map<std::string, relqi::SweepMode> mode_map{
        {"direct-n", relqi::SweepMode::kDirectN}, {"kinematic", relqi::SweepMode::kKinematic}};

    // measure
    double m_alpha = 0.0;
    double m_n = 1.0;
    bool m_as_printed = false;
    relqi::OutputFormat m_format = relqi::OutputFormat::kCsv;
    CLI::App* measure = app.add_subcommand("measure", "one record for a single (alpha, n) point");
    measure->add_option("--alpha", m_alpha, "state parameter, strictly in (0, 1)")->required();
    measure->add_option("--n", m_n, "polarization, in [0, 1]")->required();
    measure->add_flag("--as-printed", m_as_printed,
                      "also emit the 0.5x-scaled reduced concurrence");
    measure->add_option("--format", m_format, "output format")
        ->transform(CLI::CheckedTransformer(format_map, CLI::ignore_case));

    // sweep
    relqi::SweepConfig cfg;
    CLI::App* sweep = app.add_subcommand("sweep", "grid sweep to a CSV/JSON file");
    sweep->add_option("--alpha-min", cfg.alpha_min, "lower alpha endpoint");
    sweep->add_option("--alpha-max", cfg.alpha_max, "upper alpha endpoint");
    sweep->add_option("--alpha-steps", cfg.alpha_steps, "alpha grid points (>= 2)");
    sweep->add_option("--n-min", cfg.n_min, "lower n endpoint (direct-n mode)");
    sweep->add_option("--n-max", cfg.n_max, "upper n endpoint (direct-n mode)");
    sweep->add_option("--n-steps", cfg.n_steps, "inner-axis grid points (>= 2)");
    sweep->add_option("--mode", cfg.mode, "direct-n or kinematic")
        ->transform(CLI::CheckedTransformer(mode_map, CLI::ignore_case));
    CLI::Option* opt_wm = sweep->add_option("--w-over-m", cfg.w_over_m,
                                            "wavepacket width over mass (kinematic mode)");
    CLI::Option* opt_xmin = sweep->add_option("--xi-min", cfg.xi_min, "lower boost rapidity");
    CLI::Option* opt_xmax = sweep->add_option("--xi-max", cfg.xi_max, "upper boost rapidity");
    sweep->add_option("--output", cfg.output_path, "output file path")->required();
    sweep->add_option("--format", cfg.format, "output format")
        ->transform(CLI::CheckedTransformer(format_map, CLI::ignore_case));

    // verify
    relqi::VerifyOptions vopt;
    CLI::App* verify = app.add_subcommand("verify", "run every self-check suite");
    verify->add_option("--grid-density", vopt.grid_density, "grid points per axis (>= 10)")
        ->check(CLI::Range(10, 1000));
    verify->add_option("--seed", vopt.seed, "seed for the randomized suites");
    verify->add_option("--inject-fault", vopt.inject_fault)->group("");  // test hook

    // wigner
    double w_beta = 0.0;
    double w_p_over_m = 0.0;
    CLI::App* wigner = app.add_subcommand("wigner", "rapidities and Wigner angle for one boost");
    wigner->add_option("--beta", w_beta, "boost speed in units of c, in [0, 1)")->required();
    wigner->add_option("--p-over-m", w_p_over_m, "particle momentum over mass, >= 0")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitBadArguments;
    }

    if (app.got_subcommand(measure)) return run_measure(m_alpha, m_n, m_as_printed, m_format);

    if (app.got_subcommand(sweep)) {
        const bool kinematic = cfg.mode == relqi::SweepMode::kKinematic;
        for (const CLI::Option* o : {opt_wm, opt_xmin, opt_xmax}) {
            if (kinematic && o->count() == 0) {
                std::cerr << o->get_name() << ": required in kinematic mode\n";
                return kExitBadArguments;
            }
            if (!kinematic && o->count() > 0) {
                std::cerr << o->get_name() << ": only valid in kinematic mode\n";
                return kExitBadArguments;
            }
        }
        return run_sweep_cmd(cfg);
    }

    if (app.got_subcommand(verify)) {
        const std::vector<relqi::SuiteResult> results = relqi::run_verify(vopt);
        return relqi::print_verify_report(std::cout, results) == 0 ? kExitOk : kExitVerifyFailure;
    }

    if (app.got_subcommand(wigner)) return run_wigner(w_beta, w_p_over_m);

    return kExitBadArguments;  // unreachable with require_subcommand(1)
}
