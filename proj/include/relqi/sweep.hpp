#pragma once
// Grid sweeps over (alpha, n) or (alpha, xi), the per-point record with every
// measure the library computes, and deterministic CSV/JSON emission. The
// writer re-asserts the record invariants before anything reaches disk.

#include <cmath>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "relqi/entanglement.hpp"

namespace relqi {

enum class SweepMode { kDirectN, kKinematic };
enum class OutputFormat { kCsv, kJson };

struct SweepConfig {
    double alpha_min = 0.01;
    double alpha_max = 0.99;
    int alpha_steps = 99;
    double n_min = 0.0;  // xi axis in kinematic mode
    double n_max = 1.0;
    int n_steps = 101;
    SweepMode mode = SweepMode::kDirectN;
    double w_over_m = 0.05;  // kinematic mode only
    double xi_min = 0.0;
    double xi_max = 3.0;
    std::string output_path;
    OutputFormat format = OutputFormat::kCsv;
};

struct SweepRecord {
    double alpha = 0.0;
    double n = 0.0;
    std::optional<double> xi;  // only set in kinematic mode
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double lambda3 = 0.0;
    double lambda4 = 0.0;
    double r_threshold = 0.0;
    double log_negativity = 0.0;
    double concurrence_wootters = 0.0;
    double concurrence_reduced = 0.0;
    double concurrence_pure_initial = 0.0;
    std::optional<double> concurrence_reduced_as_printed;  // measure --as-printed
};

inline constexpr const char* kCsvHeader =
    "alpha,n,xi,lambda1,lambda2,lambda3,lambda4,R,log_negativity,"
    "concurrence_wootters,concurrence_reduced,concurrence_pure_initial";

inline SweepRecord evaluate_point(const StateParameter& p, const Polarization& pol,
                                  std::optional<double> xi = std::nullopt,
                                  bool with_as_printed = false) {
    SweepRecord rec;
    rec.alpha = p.alpha;
    rec.n = pol.n;
    rec.xi = xi;
    const PTSpectrum s = pt_eigenvalues_closed(p, pol);
    rec.lambda1 = s.lambda1;
    rec.lambda2 = s.lambda2;
    rec.lambda3 = s.lambda3;
    rec.lambda4 = s.lambda4;
    rec.r_threshold = ppt_threshold(pol);
    rec.log_negativity = log_negativity_closed(p, pol);
    rec.concurrence_wootters = concurrence_wootters(assemble_tau(p, pol).matrix);
    rec.concurrence_reduced = concurrence_reduced(p, pol).value;
    rec.concurrence_pure_initial = concurrence_pure(initial_state(p));
    if (with_as_printed) rec.concurrence_reduced_as_printed = concurrence_reduced_halved(p, pol);
    return rec;
}

// Trace identity and sign structure, re-checked on every record before it is
// emitted; a violation aborts the sweep.
inline void assert_record_invariants(const SweepRecord& rec) {
    const double sum = rec.lambda1 + rec.lambda2 + rec.lambda3 + rec.lambda4;
    if (std::abs(sum - 1.0) > 1e-12)
        throw std::runtime_error("sweep record: PT eigenvalue sum differs from 1");
    if (rec.lambda1 < -1e-12 || rec.lambda3 < -1e-12 || rec.lambda4 < -1e-12)
        throw std::runtime_error("sweep record: sign structure violated");
}

inline void validate_config(const SweepConfig& cfg) {
    if (!(cfg.alpha_min > 0.0 && cfg.alpha_max < 1.0 && cfg.alpha_min < cfg.alpha_max))
        throw std::invalid_argument("sweep config: need 0 < alpha-min < alpha-max < 1");
    if (cfg.alpha_steps < 2) throw std::invalid_argument("sweep config: alpha-steps must be >= 2");
    if (cfg.n_steps < 2) throw std::invalid_argument("sweep config: n-steps must be >= 2");
    if (cfg.mode == SweepMode::kDirectN) {
        if (!(cfg.n_min >= 0.0 && cfg.n_max <= 1.0 && cfg.n_min < cfg.n_max))
            throw std::invalid_argument("sweep config: need 0 <= n-min < n-max <= 1");
    } else {
        if (!(cfg.w_over_m > 0.0 && cfg.w_over_m < 1.0))
            throw std::invalid_argument("sweep config: w-over-m must lie in (0, 1)");
        if (!(cfg.xi_min >= 0.0 && cfg.xi_min < cfg.xi_max))
            throw std::invalid_argument("sweep config: need 0 <= xi-min < xi-max");
    }
}

inline double grid_value(double lo, double hi, int steps, int index) {
    if (index == steps - 1) return hi;  // endpoints exactly representable
    return lo + (hi - lo) * static_cast<double>(index) / static_cast<double>(steps - 1);
}

// alpha outer, n (or xi) inner, endpoints inclusive on both axes.
inline std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
    validate_config(cfg);
    std::vector<SweepRecord> out;
    out.reserve(static_cast<std::size_t>(cfg.alpha_steps) * static_cast<std::size_t>(cfg.n_steps));
    for (int ia = 0; ia < cfg.alpha_steps; ++ia) {
        const StateParameter p =
            state_parameter(grid_value(cfg.alpha_min, cfg.alpha_max, cfg.alpha_steps, ia));
        for (int in = 0; in < cfg.n_steps; ++in) {
            if (cfg.mode == SweepMode::kDirectN) {
                const Polarization pol =
                    polarization(grid_value(cfg.n_min, cfg.n_max, cfg.n_steps, in));
                out.push_back(evaluate_point(p, pol));
            } else {
                const double xi = grid_value(cfg.xi_min, cfg.xi_max, cfg.n_steps, in);
                const Polarization pol =
                    polarization_leading_order(wave_packet(cfg.w_over_m, 1.0), rapidity_from_xi(xi));
                out.push_back(evaluate_point(p, pol, xi));
            }
        }
    }
    return out;
}

// 17 significant digits: enough to reproduce the double exactly on re-parse,
// and byte-stable across runs.
inline std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline void write_csv(std::ostream& os, std::span<const SweepRecord> records) {
    bool as_printed = false;
    for (const SweepRecord& r : records) as_printed = as_printed || r.concurrence_reduced_as_printed.has_value();
    os << kCsvHeader;
    if (as_printed) os << ",concurrence_reduced_as_printed";
    os << "\n";
    for (const SweepRecord& r : records) {
        assert_record_invariants(r);
        os << format_g17(r.alpha) << ',' << format_g17(r.n) << ','
           << (r.xi ? format_g17(*r.xi) : "") << ',' << format_g17(r.lambda1) << ','
           << format_g17(r.lambda2) << ',' << format_g17(r.lambda3) << ','
           << format_g17(r.lambda4) << ',' << format_g17(r.r_threshold) << ','
           << format_g17(r.log_negativity) << ',' << format_g17(r.concurrence_wootters) << ','
           << format_g17(r.concurrence_reduced) << ',' << format_g17(r.concurrence_pure_initial);
        if (r.concurrence_reduced_as_printed)
            os << ',' << format_g17(*r.concurrence_reduced_as_printed);
        else if (as_printed)
            os << ',';
        os << "\n";
    }
}

inline nlohmann::json record_to_json(const SweepRecord& r) {
    assert_record_invariants(r);
    nlohmann::json j;
    j["alpha"] = r.alpha;
    j["n"] = r.n;
    if (r.xi)
        j["xi"] = *r.xi;
    else
        j["xi"] = nullptr;
    j["lambda1"] = r.lambda1;
    j["lambda2"] = r.lambda2;
    j["lambda3"] = r.lambda3;
    j["lambda4"] = r.lambda4;
    j["R"] = r.r_threshold;
    j["log_negativity"] = r.log_negativity;
    j["concurrence_wootters"] = r.concurrence_wootters;
    j["concurrence_reduced"] = r.concurrence_reduced;
    j["concurrence_pure_initial"] = r.concurrence_pure_initial;
    if (r.concurrence_reduced_as_printed)
        j["concurrence_reduced_as_printed"] = *r.concurrence_reduced_as_printed;
    return j;
}

inline void write_json(std::ostream& os, std::span<const SweepRecord> records) {
    nlohmann::json arr = nlohmann::json::array();
    for (const SweepRecord& r : records) arr.push_back(record_to_json(r));
    os << arr.dump(2) << "\n";
}

// Parses what write_csv emits; the extra --as-printed column is accepted.
inline std::vector<SweepRecord> parse_csv(std::istream& is) {
    std::vector<SweepRecord> out;
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("parse_csv: empty input");
    if (line.rfind(kCsvHeader, 0) != 0) throw std::runtime_error("parse_csv: unexpected header");
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (line.back() == ',') cells.push_back("");
        if (cells.size() < 12) throw std::runtime_error("parse_csv: short row");
        SweepRecord r;
        r.alpha = std::stod(cells[0]);
        r.n = std::stod(cells[1]);
        if (!cells[2].empty()) r.xi = std::stod(cells[2]);
        r.lambda1 = std::stod(cells[3]);
        r.lambda2 = std::stod(cells[4]);
        r.lambda3 = std::stod(cells[5]);
        r.lambda4 = std::stod(cells[6]);
        r.r_threshold = std::stod(cells[7]);
        r.log_negativity = std::stod(cells[8]);
        r.concurrence_wootters = std::stod(cells[9]);
        r.concurrence_reduced = std::stod(cells[10]);
        r.concurrence_pure_initial = std::stod(cells[11]);
        if (cells.size() > 12 && !cells[12].empty())
            r.concurrence_reduced_as_printed = std::stod(cells[12]);
        out.push_back(r);
    }
    return out;
}

}  // namespace relqi
