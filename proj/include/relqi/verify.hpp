#pragma once
// Self-verification: every cross-check the library carries, runnable as one
// report. Hard suites gate the exit code; informational suites never fail.

#include <array>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "relqi/entanglement.hpp"
#include "relqi/sweep.hpp"

namespace relqi {

struct VerifyOptions {
    int grid_density = 20;  // >= 10
    unsigned seed = 42;
    std::string inject_fault;  // test hook: name of a suite to corrupt
};

struct SuiteResult {
    std::string name;
    bool informational = false;
    bool passed = true;
    std::string detail;
};

namespace detail {

inline std::vector<double> linspace(double lo, double hi, int steps) {
    std::vector<double> v(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) v[static_cast<std::size_t>(i)] = grid_value(lo, hi, steps, i);
    return v;
}

inline std::string point_detail(double alpha, double n, double observed, double expected) {
    std::ostringstream os;
    os << "alpha=" << format_g17(alpha) << " n=" << format_g17(n)
       << " observed=" << format_g17(observed) << " expected=" << format_g17(expected);
    return os.str();
}

}  // namespace detail

inline std::vector<SuiteResult> run_verify(const VerifyOptions& opt) {
    if (opt.grid_density < 10)
        throw std::invalid_argument("verify: grid-density must be >= 10");
    const std::vector<double> alphas = detail::linspace(0.01, 0.99, opt.grid_density);
    const std::vector<double> ns = detail::linspace(0.0, 1.0, opt.grid_density);
    std::vector<SuiteResult> results;

    {  // assemble_tau from the spin-block sum vs its closed-form entries
        SuiteResult r;
        r.name = "construction equality";
        double worst = 0.0;
        for (double a : alphas) {
            for (double n : ns) {
                const StateParameter p = state_parameter(a);
                const Polarization pol = polarization(n);
                Matrix4 closed = tau_matrix_closed(p, pol);
                if (opt.inject_fault == "construction") closed(0, 0) += 1e-6;
                const double diff = max_abs_diff(assemble_tau(p, pol).matrix, closed);
                if (diff > 1e-12 && r.passed) {
                    r.passed = false;
                    r.detail = detail::point_detail(a, n, diff, 0.0) + " (entrywise max diff)";
                }
                worst = std::max(worst, diff);
            }
        }
        if (r.passed) r.detail = "max entrywise diff " + format_g17(worst);
        results.push_back(r);
    }

    {  // closed PT eigenvalues vs Jacobi on the partial transpose
        SuiteResult r;
        r.name = "spectrum equality";
        double worst = 0.0;
        for (double a : alphas) {
            for (double n : ns) {
                const StateParameter p = state_parameter(a);
                const Polarization pol = polarization(n);
                const auto closed = pt_eigenvalues_closed(p, pol).sorted_descending();
                const auto numeric =
                    eig_hermitian(partial_transpose_b(assemble_tau(p, pol).matrix));
                for (std::size_t i = 0; i < 4; ++i) {
                    const double diff = std::abs(closed[i] - numeric[i]);
                    if (diff > 1e-10 && r.passed) {
                        r.passed = false;
                        r.detail = detail::point_detail(a, n, numeric[i], closed[i]);
                    }
                    worst = std::max(worst, diff);
                }
            }
        }
        if (r.passed) r.detail = "max eigenvalue diff " + format_g17(worst);
        results.push_back(r);
    }

    {  // closed-form negativity vs log2 of the numeric trace norm
        SuiteResult r;
        r.name = "negativity closed-vs-numeric";
        double worst = 0.0;
        for (double a : alphas) {
            for (double n : ns) {
                const StateParameter p = state_parameter(a);
                const Polarization pol = polarization(n);
                const double closed = log_negativity_closed(p, pol);
                const double numeric = log_negativity_numeric(assemble_tau(p, pol).matrix);
                const double diff = std::abs(closed - numeric);
                if (diff > 1e-10 && r.passed) {
                    r.passed = false;
                    r.detail = detail::point_detail(a, n, numeric, closed);
                }
                worst = std::max(worst, diff);
            }
        }
        if (r.passed) r.detail = "max diff " + format_g17(worst);
        results.push_back(r);
    }

    {  // the boosted pure state keeps concurrence 2 alpha sqrt(1-alpha^2)
        SuiteResult r;
        r.name = "pure concurrence invariance";
        std::mt19937 rng(opt.seed);
        std::uniform_real_distribution<double> alpha_dist(0.001, 0.999);
        std::uniform_real_distribution<double> theta_dist(0.0, std::numbers::pi / 2.0);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const StateParameter p = state_parameter(alpha_dist(rng));
            const WignerAngle w{theta_dist(rng)};
            const double c = concurrence_pure(boosted_pure_state(p, w));
            const double expected = 2.0 * p.alpha * p.beta_partner;
            const double diff = std::abs(c - expected);
            if (diff > 1e-12 && r.passed) {
                r.passed = false;
                r.detail = detail::point_detail(p.alpha, w.theta, c, expected);
            }
            worst = std::max(worst, diff);
        }
        if (r.passed) r.detail = "max diff " + format_g17(worst) + " over 1000 samples";
        results.push_back(r);
    }

    {  // negativity never decreases as n grows toward the rest frame
        SuiteResult r;
        r.name = "negativity monotonicity";
        const std::vector<double> fine = detail::linspace(0.0, 1.0, 101);
        for (double a : alphas) {
            const StateParameter p = state_parameter(a);
            double prev = -1.0;
            for (double n : fine) {
                const double cur = log_negativity_closed(p, polarization(n));
                if (cur < prev - 1e-12 && r.passed) {
                    r.passed = false;
                    r.detail = detail::point_detail(a, n, cur, prev);
                }
                prev = cur;
            }
        }
        if (r.passed) r.detail = "non-decreasing in n for every alpha column";
        results.push_back(r);
    }

    {  // every measure is invariant under alpha <-> sqrt(1-alpha^2)
        SuiteResult r;
        r.name = "alpha-partner symmetry";
        double worst = 0.0;
        for (double a : alphas) {
            for (double n : ns) {
                const StateParameter p = state_parameter(a);
                const StateParameter q = state_parameter(std::sqrt(1.0 - a * a));
                const Polarization pol = polarization(n);
                const SweepRecord ra = evaluate_point(p, pol);
                const SweepRecord rb = evaluate_point(q, pol);
                const std::array<std::array<double, 2>, 8> pairs{{
                    {ra.lambda1, rb.lambda1},
                    {ra.lambda2, rb.lambda2},
                    {ra.lambda3, rb.lambda3},
                    {ra.lambda4, rb.lambda4},
                    {ra.log_negativity, rb.log_negativity},
                    {ra.concurrence_wootters, rb.concurrence_wootters},
                    {ra.concurrence_reduced, rb.concurrence_reduced},
                    {ra.concurrence_pure_initial, rb.concurrence_pure_initial},
                }};
                for (const auto& pair : pairs) {
                    const double diff = std::abs(pair[0] - pair[1]);
                    if (diff > 1e-10 && r.passed) {
                        r.passed = false;
                        r.detail = detail::point_detail(a, n, pair[1], pair[0]);
                    }
                    worst = std::max(worst, diff);
                }
            }
        }
        if (r.passed) r.detail = "max diff " + format_g17(worst);
        results.push_back(r);
    }

    {  // on this X-state family: Wootters concurrence > 0 iff lambda2 < 0
        SuiteResult r;
        r.name = "wootters-ppt agreement";
        int checked = 0;
        for (double a : alphas) {
            for (double n : ns) {
                const StateParameter p = state_parameter(a);
                const Polarization pol = polarization(n);
                const double ab = p.alpha * p.beta_partner;
                if (std::abs(ab - ppt_threshold(pol)) < 1e-10) continue;  // boundary excluded
                const double cw = concurrence_wootters(assemble_tau(p, pol).matrix);
                const double l2 = pt_eigenvalues_closed(p, pol).lambda2;
                const bool entangled = cw > 1e-10;
                const bool npt = l2 < -1e-10;
                ++checked;
                if (entangled != npt && r.passed) {
                    r.passed = false;
                    r.detail = detail::point_detail(a, n, cw, l2) + " (concurrence vs lambda2)";
                }
            }
        }
        if (r.passed) r.detail = "agreement at " + std::to_string(checked) + " grid points";
        results.push_back(r);
    }

    {  // informational: quadrature model vs leading-order formula coefficient
        SuiteResult r;
        r.name = "polarization coefficient report";
        r.informational = true;
        std::ostringstream os;
        const WavePacket wp = wave_packet(0.01, 1.0);
        os << "deficit coefficient c in n ~ 1 - c (w/m)^2 tanh^2(xi/2) at w/m = 0.01:";
        for (double xi : {0.5, 1.0, 2.0}) {
            const BoostRapidity b = rapidity_from_xi(xi);
            const double nq = polarization_quadrature(wp, b).n;
            const double th = std::tanh(0.5 * xi);
            const double c = (1.0 - nq) / (wp.ratio() * wp.ratio() * th * th);
            os << " xi=" << xi << ": " << format_g17(c) << ";";
        }
        os << " quadrature model ~0.75, leading-order formula uses 0.25";
        r.detail = os.str();
        results.push_back(r);
    }

    {  // informational: which reduced-concurrence scaling is self-consistent
        SuiteResult r;
        r.name = "reduced concurrence scaling";
        r.informational = true;
        r.detail =
            "2*sqrt(det rho_A) scaling in use: gives 2*alpha*sqrt(1-alpha^2) at n=1 and 1 at "
            "alpha=1/sqrt(2); the 0.5x variant shown by --as-printed fails both limits, and no "
            "single scaling also yields 1/2 at n=0 (the 2*sqrt(det) form gives 1 there)";
        results.push_back(r);
    }

    return results;
}

// One line per suite; returns the process exit code (0 iff all hard suites
// passed).
inline int print_verify_report(std::ostream& os, const std::vector<SuiteResult>& results) {
    bool all_passed = true;
    for (const SuiteResult& r : results) {
        if (r.informational) {
            os << "INFO " << r.name << ": " << r.detail << "\n";
            continue;
        }
        os << (r.passed ? "PASS " : "FAIL ") << r.name << ": " << r.detail << "\n";
        all_passed = all_passed && r.passed;
    }
    os << (all_passed ? "verification passed" : "verification FAILED") << "\n";
    return all_passed ? 0 : 1;
}

}  // namespace relqi
