#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "relqi/sweep.hpp"

using namespace relqi;

TEST_CASE("evaluate_point at a pinned reference point") {
    const SweepRecord r = evaluate_point(state_parameter(0.6), polarization(0.5));
    REQUIRE(r.alpha == Catch::Approx(0.6).margin(1e-15));
    REQUIRE(r.n == 0.5);
    REQUIRE_FALSE(r.xi.has_value());
    REQUIRE(r.lambda1 == Catch::Approx(0.4875).margin(1e-15));
    REQUIRE(r.lambda2 == Catch::Approx(-0.1125).margin(1e-15));
    REQUIRE(r.lambda3 == Catch::Approx(0.50563207915827966).margin(1e-14));
    REQUIRE(r.lambda4 == Catch::Approx(0.11936792084172034).margin(1e-14));
    REQUIRE(r.r_threshold == Catch::Approx(0.3).margin(1e-15));
    REQUIRE(r.log_negativity == Catch::Approx(0.29278174922784587).margin(1e-12));
    REQUIRE(r.concurrence_wootters == Catch::Approx(0.225).margin(1e-12));
    REQUIRE(r.concurrence_reduced == Catch::Approx(0.99015150355892507).margin(1e-12));
    REQUIRE(r.concurrence_pure_initial == Catch::Approx(0.96).margin(1e-14));
    REQUIRE_FALSE(r.concurrence_reduced_as_printed.has_value());

    const SweepRecord h =
        evaluate_point(state_parameter(0.6), polarization(0.5), std::nullopt, true);
    REQUIRE(h.concurrence_reduced_as_printed.has_value());
    REQUIRE(*h.concurrence_reduced_as_printed ==
            Catch::Approx(0.5 * 0.99015150355892507).margin(1e-12));
}

TEST_CASE("record invariants guard emission") {
    SweepRecord r = evaluate_point(state_parameter(0.5), polarization(0.5));
    REQUIRE_NOTHROW(assert_record_invariants(r));
    r.lambda1 += 1e-6;
    REQUIRE_THROWS_AS(assert_record_invariants(r), std::runtime_error);

    SweepRecord bad_sign = evaluate_point(state_parameter(0.5), polarization(0.5));
    bad_sign.lambda3 = -1e-3;
    bad_sign.lambda1 += 1e-3;
    REQUIRE_THROWS_AS(assert_record_invariants(bad_sign), std::runtime_error);
}

TEST_CASE("the csv writer re-asserts invariants before emission") {
    std::vector<SweepRecord> rows = {evaluate_point(state_parameter(0.5), polarization(0.5))};
    rows[0].lambda2 -= 1e-6;
    std::ostringstream out;
    REQUIRE_THROWS_AS(write_csv(out, rows), std::runtime_error);
    REQUIRE_THROWS_AS(write_json(out, rows), std::runtime_error);
}

TEST_CASE("config validation") {
    SweepConfig ok;
    REQUIRE_NOTHROW(validate_config(ok));

    SweepConfig bad = ok;
    bad.alpha_min = 0.8;
    bad.alpha_max = 0.2;
    REQUIRE_THROWS_AS(validate_config(bad), std::invalid_argument);

    bad = ok;
    bad.alpha_steps = 1;
    REQUIRE_THROWS_AS(validate_config(bad), std::invalid_argument);

    bad = ok;
    bad.n_max = 1.5;
    REQUIRE_THROWS_AS(validate_config(bad), std::invalid_argument);

    bad = ok;
    bad.mode = SweepMode::kKinematic;
    bad.w_over_m = 0.0;
    REQUIRE_THROWS_AS(validate_config(bad), std::invalid_argument);

    bad = ok;
    bad.mode = SweepMode::kKinematic;
    bad.w_over_m = 0.1;
    bad.xi_min = 2.0;
    bad.xi_max = 1.0;
    REQUIRE_THROWS_AS(validate_config(bad), std::invalid_argument);
}

TEST_CASE("direct-n sweep grid layout") {
    SweepConfig cfg;
    cfg.alpha_steps = 5;
    cfg.n_steps = 7;
    const std::vector<SweepRecord> rows = run_sweep(cfg);
    REQUIRE(rows.size() == 35);

    // alpha outer, n inner; endpoints exact on both axes
    for (int i = 0; i < 7; ++i) REQUIRE(rows[i].alpha == rows[0].alpha);
    REQUIRE(rows.front().alpha == cfg.alpha_min);
    REQUIRE(rows.back().alpha == cfg.alpha_max);
    REQUIRE(rows.front().n == 0.0);
    REQUIRE(rows[6].n == 1.0);
    for (const SweepRecord& r : rows) REQUIRE_FALSE(r.xi.has_value());
}

TEST_CASE("kinematic sweep records xi and the leading-order n") {
    SweepConfig cfg;
    cfg.mode = SweepMode::kKinematic;
    cfg.alpha_steps = 3;
    cfg.n_steps = 4;
    cfg.w_over_m = 0.1;
    cfg.xi_min = 0.0;
    cfg.xi_max = 3.0;
    const std::vector<SweepRecord> rows = run_sweep(cfg);
    REQUIRE(rows.size() == 12);
    REQUIRE(rows[0].xi.has_value());
    REQUIRE(*rows[0].xi == 0.0);
    REQUIRE(rows[0].n == 1.0);
    REQUIRE(*rows[3].xi == 3.0);
    const double expected =
        polarization_leading_order(wave_packet(0.1, 1.0), rapidity_from_xi(3.0)).n;
    REQUIRE(rows[3].n == expected);
}

TEST_CASE("csv round trip preserves every field exactly") {
    SweepConfig cfg;
    cfg.alpha_steps = 4;
    cfg.n_steps = 5;
    const std::vector<SweepRecord> rows = run_sweep(cfg);

    std::ostringstream out;
    write_csv(out, rows);
    const std::string text = out.str();

    REQUIRE(text.rfind(kCsvHeader, 0) == 0);

    std::istringstream in(text);
    const std::vector<SweepRecord> parsed = parse_csv(in);
    REQUIRE(parsed.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        REQUIRE(parsed[i].alpha == rows[i].alpha);
        REQUIRE(parsed[i].n == rows[i].n);
        REQUIRE(parsed[i].xi == rows[i].xi);
        REQUIRE(parsed[i].lambda1 == rows[i].lambda1);
        REQUIRE(parsed[i].lambda2 == rows[i].lambda2);
        REQUIRE(parsed[i].lambda3 == rows[i].lambda3);
        REQUIRE(parsed[i].lambda4 == rows[i].lambda4);
        REQUIRE(parsed[i].r_threshold == rows[i].r_threshold);
        REQUIRE(parsed[i].log_negativity == rows[i].log_negativity);
        REQUIRE(parsed[i].concurrence_wootters == rows[i].concurrence_wootters);
        REQUIRE(parsed[i].concurrence_reduced == rows[i].concurrence_reduced);
        REQUIRE(parsed[i].concurrence_pure_initial == rows[i].concurrence_pure_initial);
    }

    // two runs are byte-identical
    std::ostringstream again;
    write_csv(again, run_sweep(cfg));
    REQUIRE(again.str() == text);
}

TEST_CASE("json emission carries the csv field names") {
    SweepConfig cfg;
    cfg.alpha_steps = 2;
    cfg.n_steps = 3;
    const std::vector<SweepRecord> rows = run_sweep(cfg);

    std::ostringstream out;
    write_json(out, rows);
    const nlohmann::json arr = nlohmann::json::parse(out.str());
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        REQUIRE(arr[i]["alpha"].get<double>() == rows[i].alpha);
        REQUIRE(arr[i]["n"].get<double>() == rows[i].n);
        REQUIRE(arr[i]["xi"].is_null());
        REQUIRE(arr[i]["lambda2"].get<double>() == rows[i].lambda2);
        REQUIRE(arr[i]["R"].get<double>() == rows[i].r_threshold);
        REQUIRE(arr[i]["log_negativity"].get<double>() == rows[i].log_negativity);
        REQUIRE(arr[i]["concurrence_wootters"].get<double>() == rows[i].concurrence_wootters);
        REQUIRE(arr[i]["concurrence_reduced"].get<double>() == rows[i].concurrence_reduced);
        REQUIRE(arr[i]["concurrence_pure_initial"].get<double>() ==
                rows[i].concurrence_pure_initial);
    }
}

TEST_CASE("grid endpoints are exact") {
    REQUIRE(grid_value(0.0, 1.0, 101, 0) == 0.0);
    REQUIRE(grid_value(0.0, 1.0, 101, 100) == 1.0);
    REQUIRE(grid_value(0.01, 0.99, 99, 98) == 0.99);
}
