#include "gbath.h"

#include <cstring>
#include <new>
#include <string>

#include "gbath/csv.hpp"
#include "gbath/dynamics.hpp"
#include "gbath/experiments.hpp"
#include "gbath/measures.hpp"

extern "C" {
struct gbath_state {
    gbath::CovarianceMatrix sigma;
};
struct gbath_sweep {
    gbath::SweepTable table;
};
}

namespace {

thread_local std::string g_last_error;

gbath_status status_from(gbath::ErrorCode code) {
    switch (code) {
        case gbath::ErrorCode::invalid_parameter: return GBATH_ERROR_INVALID_ARGUMENT;
        case gbath::ErrorCode::invalid_state: return GBATH_ERROR_INVALID_STATE;
        case gbath::ErrorCode::numerical_domain: return GBATH_ERROR_NUMERICAL;
        case gbath::ErrorCode::io: return GBATH_ERROR_IO;
    }
    return GBATH_ERROR_INTERNAL;
}

template <typename Fn>
gbath_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return GBATH_OK;
    } catch (const gbath::Error& e) {
        g_last_error = e.what();
        return status_from(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return GBATH_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return GBATH_ERROR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return GBATH_ERROR_INTERNAL;
    }
}

gbath_status fail_argument(const char* message) {
    g_last_error = message;
    return GBATH_ERROR_INVALID_ARGUMENT;
}

gbath::SystemParams to_params(const gbath_params& p) {
    return gbath::SystemParams(p.mass, p.omega1, p.omega2, p.lambda);
}

gbath_report to_c_report(const gbath::CorrelationReport& r) {
    gbath_report out;
    out.simon_s = r.simon_s;
    out.log_negativity = r.log_negativity;
    out.discord = r.discord;
    out.classical = r.classical;
    out.mutual_information = r.mutual_information;
    out.nu_bar_minus = r.nu_bar_minus;
    out.nu_tilde_minus = r.nu_tilde_minus;
    out.discord_raw = r.discord_raw;
    switch (r.epsilon_branch) {
        case gbath::EpsilonBranch::product_shortcut:
            out.epsilon_branch = GBATH_EPSILON_PRODUCT_SHORTCUT;
            break;
        case gbath::EpsilonBranch::branch1: out.epsilon_branch = GBATH_EPSILON_BRANCH1; break;
        case gbath::EpsilonBranch::branch2: out.epsilon_branch = GBATH_EPSILON_BRANCH2; break;
    }
    return out;
}

gbath::SweepJob to_job(const gbath_sweep_spec& spec) {
    gbath::SweepJob job;
    switch (spec.initial_state) {
        case GBATH_STATE_SEPARABLE_SQUEEZED:
            job.initial_state = gbath::InitialStateKind::separable_squeezed;
            break;
        case GBATH_STATE_TWO_MODE_SQUEEZED:
            job.initial_state = gbath::InitialStateKind::two_mode_squeezed;
            break;
        default: throw gbath::InvalidParameter("unknown initial_state in sweep spec");
    }
    job.r = spec.r;
    job.params = to_params(spec.params);
    job.t_grid = gbath::linspace(spec.t_min, spec.t_max, spec.t_points);
    job.temperature_grid = gbath::linspace(spec.temp_min, spec.temp_max, spec.temp_points);
    job.measures.simon = (spec.measures & GBATH_MEASURE_SIMON) != 0;
    job.measures.log_negativity = (spec.measures & GBATH_MEASURE_LOG_NEGATIVITY) != 0;
    job.measures.discord = (spec.measures & GBATH_MEASURE_DISCORD) != 0;
    job.measures.classical = (spec.measures & GBATH_MEASURE_CLASSICAL) != 0;
    job.measures.mutual_information = (spec.measures & GBATH_MEASURE_MUTUAL_INFORMATION) != 0;
    switch (spec.log_base) {
        case GBATH_LOG_NATURAL: job.base = gbath::LogBase::natural; break;
        case GBATH_LOG_BASE2: job.base = gbath::LogBase::base2; break;
        default: throw gbath::InvalidParameter("unknown log_base in sweep spec");
    }
    return job;
}

}  // namespace

extern "C" {

const char* gbath_version(void) { return "0.1.0"; }

const char* gbath_status_name(gbath_status status) {
    switch (status) {
        case GBATH_OK: return "ok";
        case GBATH_ERROR_INVALID_ARGUMENT: return "invalid argument";
        case GBATH_ERROR_NUMERICAL: return "numerical domain error";
        case GBATH_ERROR_IO: return "i/o error";
        case GBATH_ERROR_INVALID_STATE: return "invalid state";
        case GBATH_ERROR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* gbath_last_error(void) { return g_last_error.c_str(); }

gbath_status gbath_state_separable_squeezed(double r, gbath_state** out) {
    if (!out) return fail_argument("out pointer is null");
    return guarded([&] {
        *out = new gbath_state{gbath::separable_squeezed_state(gbath::Squeezing(r))};
    });
}

gbath_status gbath_state_two_mode_squeezed(double r, gbath_state** out) {
    if (!out) return fail_argument("out pointer is null");
    return guarded([&] {
        *out = new gbath_state{gbath::two_mode_squeezed_state(gbath::Squeezing(r))};
    });
}

gbath_status gbath_state_from_entries(const double entries[16], gbath_state** out) {
    if (!entries || !out) return fail_argument("null pointer argument");
    return guarded([&] {
        Eigen::Matrix4d m;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) m(i, j) = entries[4 * i + j];
        *out = new gbath_state{gbath::CovarianceMatrix::from_matrix(m)};
    });
}

gbath_status gbath_state_entries(const gbath_state* state, double out_entries[16]) {
    if (!state || !out_entries) return fail_argument("null pointer argument");
    return guarded([&] {
        const Eigen::Matrix4d& m = state->sigma.matrix();
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) out_entries[4 * i + j] = m(i, j);
    });
}

gbath_status gbath_state_is_physical(const gbath_state* state, double tol, int* out) {
    if (!state || !out) return fail_argument("null pointer argument");
    return guarded([&] { *out = gbath::is_physical(state->sigma, tol) ? 1 : 0; });
}

void gbath_state_free(gbath_state* state) { delete state; }

gbath_status gbath_steady_state(const gbath_params* params, double temperature, gbath_state** out) {
    if (!params || !out) return fail_argument("null pointer argument");
    return guarded([&] {
        *out = new gbath_state{
            gbath::steady_state(to_params(*params), gbath::Temperature(temperature))};
    });
}

gbath_status gbath_evolve(const gbath_state* initial, const gbath_params* params,
                          double temperature, double time, gbath_state** out) {
    if (!initial || !params || !out) return fail_argument("null pointer argument");
    return guarded([&] {
        *out = new gbath_state{gbath::evolve(initial->sigma, to_params(*params),
                                             gbath::Temperature(temperature), time)};
    });
}

gbath_status gbath_measure(const gbath_state* state, gbath_log_base base, gbath_report* out) {
    if (!state || !out) return fail_argument("null pointer argument");
    if (base != GBATH_LOG_NATURAL && base != GBATH_LOG_BASE2)
        return fail_argument("unknown log base");
    return guarded([&] {
        const gbath::LogBase b =
            base == GBATH_LOG_BASE2 ? gbath::LogBase::base2 : gbath::LogBase::natural;
        *out = to_c_report(gbath::correlation_report(state->sigma, b));
    });
}

gbath_status gbath_asymptotic_simon(const gbath_params* params, double temperature, double* out) {
    if (!params || !out) return fail_argument("null pointer argument");
    return guarded([&] {
        *out = gbath::asymptotic_simon(to_params(*params), gbath::Temperature(temperature));
    });
}

gbath_status gbath_asymptotic_log_negativity(const gbath_params* params, double temperature,
                                             double* out) {
    if (!params || !out) return fail_argument("null pointer argument");
    return guarded([&] {
        *out =
            gbath::asymptotic_log_negativity(to_params(*params), gbath::Temperature(temperature));
    });
}

gbath_status gbath_figure_spec(int figure, gbath_sweep_spec* out) {
    if (!out) return fail_argument("out pointer is null");
    return guarded([&] {
        const gbath::SweepJob job = gbath::figure_job(figure);  // validates the id
        gbath_sweep_spec spec;
        std::memset(&spec, 0, sizeof spec);
        spec.initial_state = GBATH_STATE_TWO_MODE_SQUEEZED;
        spec.r = job.r;
        spec.params = {job.params.mass, job.params.omega1, job.params.omega2, job.params.lambda};
        spec.t_min = job.t_grid.front();
        spec.t_max = job.t_grid.back();
        spec.t_points = static_cast<int>(job.t_grid.size());
        spec.temp_min = job.temperature_grid.front();
        spec.temp_max = job.temperature_grid.back();
        spec.temp_points = static_cast<int>(job.temperature_grid.size());
        spec.measures = 0;
        if (job.measures.simon) spec.measures |= GBATH_MEASURE_SIMON;
        if (job.measures.log_negativity) spec.measures |= GBATH_MEASURE_LOG_NEGATIVITY;
        if (job.measures.discord) spec.measures |= GBATH_MEASURE_DISCORD;
        if (job.measures.classical) spec.measures |= GBATH_MEASURE_CLASSICAL;
        if (job.measures.mutual_information) spec.measures |= GBATH_MEASURE_MUTUAL_INFORMATION;
        spec.log_base = GBATH_LOG_NATURAL;
        *out = spec;
    });
}

gbath_status gbath_sweep_run(const gbath_sweep_spec* spec, gbath_sweep** out) {
    if (!spec || !out) return fail_argument("null pointer argument");
    return guarded([&] { *out = new gbath_sweep{gbath::run_sweep(to_job(*spec))}; });
}

size_t gbath_sweep_row_count(const gbath_sweep* sweep) {
    return sweep ? sweep->table.rows.size() : 0;
}

gbath_status gbath_sweep_row(const gbath_sweep* sweep, size_t index, double* t,
                             double* temperature, gbath_report* report) {
    if (!sweep) return fail_argument("null sweep handle");
    if (index >= sweep->table.rows.size()) return fail_argument("row index out of range");
    const gbath::SweepRow& row = sweep->table.rows[index];
    if (t) *t = row.t;
    if (temperature) *temperature = row.temperature;
    if (report) *report = to_c_report(row.report);
    return GBATH_OK;
}

gbath_status gbath_sweep_write_csv(const gbath_sweep* sweep, const char* path) {
    if (!sweep || !path) return fail_argument("null pointer argument");
    return guarded([&] { gbath::write_csv_file(sweep->table, path); });
}

void gbath_sweep_free(gbath_sweep* sweep) { delete sweep; }

gbath_status gbath_sudden_death(const gbath_state* initial, const gbath_params* params,
                                double temperature, double horizon, double tolerance,
                                gbath_sudden_death_result* out) {
    if (!initial || !params || !out) return fail_argument("null pointer argument");
    return guarded([&] {
        const gbath::SuddenDeathResult result = gbath::sudden_death_time(
            initial->sigma, to_params(*params), gbath::Temperature(temperature), horizon, 1000,
            tolerance == 0.0 ? 1e-9 : tolerance);
        out->found = result.found() ? 1 : 0;
        out->initial_not_entangled = result.initial_not_entangled ? 1 : 0;
        out->crossing_time = result.crossing_time;
        out->bracket_lo = result.bracket_lo;
        out->bracket_hi = result.bracket_hi;
        out->residual = result.residual;
    });
}

}  // extern "C"
