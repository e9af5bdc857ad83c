#include "gbath/experiments.hpp"

#include <cmath>
#include <string>

#include "gbath/dynamics.hpp"

namespace gbath {

namespace {

void validate_grid(const std::vector<double>& grid, const char* name) {
    if (grid.empty()) throw InvalidParameter(std::string("sweep: ") + name + " grid is empty");
    double prev = -1.0;
    for (double v : grid) {
        if (!std::isfinite(v) || v < 0.0)
            throw InvalidParameter(std::string("sweep: ") + name +
                                   " grid values must be finite and >= 0");
        if (v <= prev)
            throw InvalidParameter(std::string("sweep: ") + name +
                                   " grid must be strictly increasing");
        prev = v;
    }
}

}  // namespace

void SweepJob::validate() const {
    params.validate();
    Squeezing check_r(r);  // throws on negative or non-finite
    validate_grid(t_grid, "t");
    validate_grid(temperature_grid, "T");
}

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 1) throw InvalidParameter("linspace: need at least one point");
    if (!std::isfinite(lo) || !std::isfinite(hi) || hi < lo)
        throw InvalidParameter("linspace: invalid range");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n));
    if (n == 1) {
        out.push_back(lo);
        return out;
    }
    for (int i = 0; i < n; ++i)
        out.push_back(i == n - 1 ? hi : lo + (hi - lo) * static_cast<double>(i) / (n - 1));
    return out;
}

CovarianceMatrix make_initial_state(InitialStateKind kind, double r) {
    const Squeezing squeezing(r);
    return kind == InitialStateKind::separable_squeezed ? separable_squeezed_state(squeezing)
                                                        : two_mode_squeezed_state(squeezing);
}

SweepTable run_sweep(const SweepJob& job) {
    job.validate();
    const CovarianceMatrix initial = make_initial_state(job.initial_state, job.r);
    SweepTable table;
    table.job = job;
    table.rows.reserve(job.t_grid.size() * job.temperature_grid.size());
    for (double temperature : job.temperature_grid) {
        const Temperature T(temperature);
        for (double t : job.t_grid) {
            try {
                SweepRow row;
                row.t = t;
                row.temperature = temperature;
                row.report = correlation_report(evolve(initial, job.params, T, t), job.base);
                table.rows.push_back(row);
            } catch (const Error& e) {
                throw Error(e.code(), "sweep cell (t=" + std::to_string(t) +
                                          ", T=" + std::to_string(temperature) + "): " + e.what());
            }
        }
    }
    return table;
}

SuddenDeathResult sudden_death_time(const CovarianceMatrix& initial, const SystemParams& params,
                                    Temperature T, double horizon, int scan_points,
                                    double tolerance) {
    params.validate();
    if (!std::isfinite(horizon) || horizon <= 0.0)
        throw InvalidParameter("sudden_death_time: horizon must be finite and > 0");
    if (scan_points < 1) throw InvalidParameter("sudden_death_time: need at least one scan point");
    if (!std::isfinite(tolerance) || tolerance <= 0.0)
        throw InvalidParameter("sudden_death_time: tolerance must be finite and > 0");
    if (!is_physical(initial, 1e-8))
        throw InvalidState("sudden_death_time: initial state is not physical");

    const auto en_at = [&](double t) {
        return log_negativity(evolve(initial, params, T, t));
    };

    SuddenDeathResult result;
    const double en0 = en_at(0.0);
    if (en0 <= tolerance) {
        result.status = SuddenDeathResult::Status::found;
        result.crossing_time = 0.0;
        result.bracket_lo = 0.0;
        result.bracket_hi = 0.0;
        result.residual = std::abs(en0);
        result.initial_not_entangled = true;
        return result;
    }

    double t_prev = 0.0;
    for (int i = 1; i <= scan_points; ++i) {
        const double t = horizon * static_cast<double>(i) / scan_points;
        const double en = en_at(t);
        if (en < -tolerance) {
            double lo = t_prev, hi = t;
            double mid = 0.5 * (lo + hi);
            double value = en_at(mid);
            for (int iter = 0; iter < 200 && std::abs(value) > tolerance && hi - lo > 1e-15;
                 ++iter) {
                if (value > 0.0)
                    lo = mid;
                else
                    hi = mid;
                mid = 0.5 * (lo + hi);
                value = en_at(mid);
            }
            result.status = SuddenDeathResult::Status::found;
            result.crossing_time = mid;
            result.bracket_lo = lo;
            result.bracket_hi = hi;
            result.residual = std::abs(value);
            return result;
        }
        t_prev = t;
    }
    result.status = SuddenDeathResult::Status::none_within_horizon;
    result.bracket_lo = 0.0;
    result.bracket_hi = horizon;
    return result;
}

SweepJob figure_job(int figure) {
    if (figure < 1 || figure > 4)
        throw InvalidParameter("figure_job: unknown figure id " + std::to_string(figure) +
                               " (valid: 1, 2, 3, 4)");
    SweepJob job;
    job.initial_state = InitialStateKind::two_mode_squeezed;
    job.r = 4.0;
    job.params = SystemParams(1.0, 1.0, 1.0, 0.1);
    job.t_grid = linspace(0.0, 20.0, 81);
    job.temperature_grid = linspace(0.0, 4.0, 41);
    job.base = LogBase::natural;
    job.measures = MeasureSelection::none();
    switch (figure) {
        case 1: job.measures.log_negativity = true; break;
        case 2: job.measures.discord = true; break;
        case 3: job.measures.classical = true; break;
        case 4: job.measures.mutual_information = true; break;
    }
    return job;
}

std::vector<SuddenDeathResult> lambda_sensitivity(const CovarianceMatrix& initial,
                                                  const std::vector<SystemParams>& params_list,
                                                  Temperature T, double horizon) {
    if (params_list.empty()) throw InvalidParameter("lambda_sensitivity: empty parameter list");
    const SystemParams& first = params_list.front();
    double prev_lambda = 0.0;
    for (const SystemParams& p : params_list) {
        p.validate();
        if (p.mass != first.mass || p.omega1 != first.omega1 || p.omega2 != first.omega2)
            throw InvalidParameter("lambda_sensitivity: parameter sets may differ only in lambda");
        if (p.lambda <= prev_lambda)
            throw InvalidParameter("lambda_sensitivity: lambda values must be strictly ascending");
        prev_lambda = p.lambda;
    }

    std::vector<SuddenDeathResult> results;
    results.reserve(params_list.size());
    bool all_found = true;
    for (const SystemParams& p : params_list) {
        results.push_back(sudden_death_time(initial, p, T, horizon));
        all_found = all_found && results.back().found();
    }
    if (all_found) {
        for (std::size_t i = 1; i < results.size(); ++i)
            if (!(results[i].crossing_time < results[i - 1].crossing_time))
                throw NumericalDomainError(
                    "lambda_sensitivity: crossing times are not strictly decreasing in lambda");
    }
    return results;
}

}  // namespace gbath
