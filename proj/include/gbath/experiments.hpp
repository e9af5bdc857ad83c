#pragma once

#include <vector>

#include "gbath/covariance.hpp"
#include "gbath/measures.hpp"
#include "gbath/params.hpp"

namespace gbath {

enum class InitialStateKind { separable_squeezed, two_mode_squeezed };

struct MeasureSelection {
    bool simon = true;
    bool log_negativity = true;
    bool discord = true;
    bool classical = true;
    bool mutual_information = true;

    static MeasureSelection all() { return {}; }
    static MeasureSelection none() { return {false, false, false, false, false}; }
};

// One (t, T) grid sweep over an evolved initial state.
struct SweepJob {
    InitialStateKind initial_state = InitialStateKind::two_mode_squeezed;
    double r = 0.0;
    SystemParams params;
    std::vector<double> t_grid;
    std::vector<double> temperature_grid;
    MeasureSelection measures;
    LogBase base = LogBase::natural;

    void validate() const;
};

struct SweepRow {
    double t;
    double temperature;
    CorrelationReport report;
};

// Row order is deterministic: temperature-major, then t ascending.
struct SweepTable {
    SweepJob job;
    std::vector<SweepRow> rows;
};

// n evenly spaced points from lo to hi inclusive (n = 1 gives {lo}).
std::vector<double> linspace(double lo, double hi, int n);

CovarianceMatrix make_initial_state(InitialStateKind kind, double r);

SweepTable run_sweep(const SweepJob& job);

// First zero crossing of E_N(t): coarse scan with step horizon/scan_points,
// then bisection until |E_N| <= tolerance. A crossing is registered only once
// E_N drops below -tolerance, so round-off jitter around zero never counts.
struct SuddenDeathResult {
    enum class Status { found, none_within_horizon };
    Status status = Status::none_within_horizon;
    double crossing_time = 0.0;  // valid when status == found
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double residual = 0.0;  // |E_N(crossing_time)|
    bool initial_not_entangled = false;

    bool found() const { return status == Status::found; }
};

SuddenDeathResult sudden_death_time(const CovarianceMatrix& initial, const SystemParams& params,
                                    Temperature T, double horizon, int scan_points = 1000,
                                    double tolerance = 1e-9);

// Canned jobs behind the four reference surfaces: two-mode squeezed r = 4,
// m = 1, omega1 = omega2 = 1, lambda = 0.1, t in [0, 20] (81 points),
// T in [0, 4] (41 points). Figure 1 -> E_N, 2 -> D, 3 -> C, 4 -> I.
SweepJob figure_job(int figure);

// Sudden-death times across a list of parameter sets that differ only in
// lambda (ascending). When every crossing is found, the times must be
// strictly decreasing; a violation is a numerical-domain error.
std::vector<SuddenDeathResult> lambda_sensitivity(const CovarianceMatrix& initial,
                                                  const std::vector<SystemParams>& params_list,
                                                  Temperature T, double horizon);

}  // namespace gbath
