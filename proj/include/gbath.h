#ifndef GBATH_H
#define GBATH_H

/* C API of the gbath shared library: covariance-matrix simulation of two
 * bosonic modes in a common thermal bath, with separability, entanglement and
 * discord measures. Objects are opaque handles created and destroyed through
 * this interface; every fallible call returns a gbath_status and leaves a
 * human-readable detail message in gbath_last_error() on failure.
 *
 * Conventions: natural units hbar = k = 1; quadrature order (x, p_x, y, p_y);
 * vacuum covariance = identity / 2; 4x4 matrices passed as double[16] in
 * row-major order.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gbath_status {
    GBATH_OK = 0,
    GBATH_ERROR_INVALID_ARGUMENT = 2,
    GBATH_ERROR_NUMERICAL = 3,
    GBATH_ERROR_IO = 4,
    GBATH_ERROR_INVALID_STATE = 5,
    GBATH_ERROR_INTERNAL = 6
} gbath_status;

typedef enum gbath_log_base { GBATH_LOG_NATURAL = 0, GBATH_LOG_BASE2 = 1 } gbath_log_base;

typedef enum gbath_epsilon_branch {
    GBATH_EPSILON_PRODUCT_SHORTCUT = 0,
    GBATH_EPSILON_BRANCH1 = 1,
    GBATH_EPSILON_BRANCH2 = 2
} gbath_epsilon_branch;

typedef enum gbath_initial_state {
    GBATH_STATE_SEPARABLE_SQUEEZED = 0,
    GBATH_STATE_TWO_MODE_SQUEEZED = 1
} gbath_initial_state;

/* Mass, the two mode frequencies and the dissipation constant; all > 0. */
typedef struct gbath_params {
    double mass;
    double omega1;
    double omega2;
    double lambda;
} gbath_params;

typedef struct gbath_state gbath_state;
typedef struct gbath_sweep gbath_sweep;

const char* gbath_version(void);
const char* gbath_status_name(gbath_status status);
/* Detail message of the most recent failure on this thread ("" if none). */
const char* gbath_last_error(void);

/* --- states --------------------------------------------------------- */

gbath_status gbath_state_separable_squeezed(double r, gbath_state** out);
gbath_status gbath_state_two_mode_squeezed(double r, gbath_state** out);
/* Builds a state from 16 row-major entries; the matrix is symmetrized. */
gbath_status gbath_state_from_entries(const double entries[16], gbath_state** out);
gbath_status gbath_state_entries(const gbath_state* state, double out_entries[16]);
/* *out = 1 if physical within tol (doubled symplectic eigenvalue >= 1 - tol
 * and positive definite one-mode blocks), else 0. */
gbath_status gbath_state_is_physical(const gbath_state* state, double tol, int* out);
void gbath_state_free(gbath_state* state);

/* --- dynamics ------------------------------------------------------- */

gbath_status gbath_steady_state(const gbath_params* params, double temperature, gbath_state** out);
gbath_status gbath_evolve(const gbath_state* initial, const gbath_params* params,
                          double temperature, double time, gbath_state** out);

/* --- measures ------------------------------------------------------- */

typedef struct gbath_report {
    double simon_s;
    double log_negativity; /* bits */
    double discord;        /* clamped: raw values in [-1e-10, 0] report as 0 */
    double classical;
    double mutual_information;
    double nu_bar_minus;
    double nu_tilde_minus;
    double discord_raw;
    int epsilon_branch; /* gbath_epsilon_branch */
} gbath_report;

gbath_status gbath_measure(const gbath_state* state, gbath_log_base base, gbath_report* out);
gbath_status gbath_asymptotic_simon(const gbath_params* params, double temperature, double* out);
gbath_status gbath_asymptotic_log_negativity(const gbath_params* params, double temperature,
                                             double* out);

/* --- sweeps --------------------------------------------------------- */

enum {
    GBATH_MEASURE_SIMON = 1,
    GBATH_MEASURE_LOG_NEGATIVITY = 2,
    GBATH_MEASURE_DISCORD = 4,
    GBATH_MEASURE_CLASSICAL = 8,
    GBATH_MEASURE_MUTUAL_INFORMATION = 16,
    GBATH_MEASURE_ALL = 31
};

typedef struct gbath_sweep_spec {
    int initial_state; /* gbath_initial_state */
    double r;
    gbath_params params;
    double t_min, t_max;
    int t_points;
    double temp_min, temp_max;
    int temp_points;
    unsigned measures; /* GBATH_MEASURE_* bitmask */
    int log_base;      /* gbath_log_base */
} gbath_sweep_spec;

/* Canned sweep behind reference figure 1..4 (two-mode squeezed r = 4,
 * lambda = 0.1, omega1 = omega2 = m = 1; t in [0,20] x 81, T in [0,4] x 41;
 * measure E_N / D / C / I respectively). */
gbath_status gbath_figure_spec(int figure, gbath_sweep_spec* out);

/* Evaluates the grid (temperature-major rows, t ascending within). */
gbath_status gbath_sweep_run(const gbath_sweep_spec* spec, gbath_sweep** out);
size_t gbath_sweep_row_count(const gbath_sweep* sweep);
gbath_status gbath_sweep_row(const gbath_sweep* sweep, size_t index, double* t,
                             double* temperature, gbath_report* report);
/* CSV schema: t,T,S,E_N,D,C,I,nu_bar_minus,nu_tilde_minus,epsilon_branch with
 * unselected measure columns omitted; 12 significant digits; '\n' endings. */
gbath_status gbath_sweep_write_csv(const gbath_sweep* sweep, const char* path);
void gbath_sweep_free(gbath_sweep* sweep);

/* --- entanglement sudden death -------------------------------------- */

typedef struct gbath_sudden_death_result {
    int found; /* 1 if E_N crosses zero within the horizon */
    int initial_not_entangled;
    double crossing_time;
    double bracket_lo;
    double bracket_hi;
    double residual; /* |E_N| at crossing_time */
} gbath_sudden_death_result;

/* Coarse scan (horizon/1000) for a sign change of E_N(t), then bisection to
 * |E_N| <= tolerance (pass 0 for the default 1e-9). A non-entangled initial
 * state reports found at t = 0 with initial_not_entangled = 1. */
gbath_status gbath_sudden_death(const gbath_state* initial, const gbath_params* params,
                                double temperature, double horizon, double tolerance,
                                gbath_sudden_death_result* out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* GBATH_H */
