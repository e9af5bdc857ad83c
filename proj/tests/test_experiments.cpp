#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "gbath/csv.hpp"
#include "gbath/experiments.hpp"
#include "test_support.hpp"

using namespace gbath;
using gbath::test::near;

namespace {

const SystemParams kFig(1.0, 1.0, 1.0, 0.1);

// Sudden-death times for the reference configuration (two-mode squeezed r = 4,
// lambda = 0.1, m = omega = 1), frozen from a fixed-step RK4 integration of
// the covariance ODE (step 1e-4) bisected to |E_N| <= 1e-9.
constexpr double kCrossingT05 = 7.098667716980;
constexpr double kCrossingT1 = 3.058072566986;
constexpr double kCrossingT2 = 1.382169350982;
constexpr double kCrossingT4 = 0.652560184896;
constexpr double kCrossingLambda005 = 2.764338701963;
constexpr double kCrossingLambda02 = 0.691084675491;

// Equal-frequency closed form: with m = omega = 1 every invariant depends on
// time only through w = exp(-2 lambda t), and E_N = 0 at
// w* = (1 - coth(1/2T)) / (exp(-r) - coth(1/2T)).
double crossing_closed_form(double temperature, double r, double lambda) {
    const double coth = thermal_coth(1.0, Temperature(temperature));
    const double w = (1.0 - coth) / (std::exp(-r) - coth);
    return -std::log(w) / (2.0 * lambda);
}

}  // namespace

TEST_CASE("linspace") {
    const auto grid = linspace(0.0, 20.0, 81);
    CHECK(grid.size() == 81);
    CHECK(grid.front() == 0.0);
    CHECK(grid.back() == 20.0);
    CHECK(near(grid[1], 0.25, 1e-15));
    CHECK(linspace(3.0, 9.0, 1) == std::vector<double>{3.0});
    CHECK_THROWS_AS(linspace(0.0, 1.0, 0), InvalidParameter);
    CHECK_THROWS_AS(linspace(1.0, 0.0, 5), InvalidParameter);
}

TEST_CASE("sweep jobs validate their grids") {
    SweepJob job;
    job.r = 4.0;
    job.params = kFig;
    job.t_grid = {0.0, 1.0};
    job.temperature_grid = {0.0, 1.0};
    CHECK_NOTHROW(job.validate());

    SweepJob bad = job;
    bad.t_grid = {};
    CHECK_THROWS_AS(bad.validate(), InvalidParameter);
    bad = job;
    bad.t_grid = {1.0, 1.0};
    CHECK_THROWS_AS(bad.validate(), InvalidParameter);
    bad = job;
    bad.temperature_grid = {1.0, 0.5};
    CHECK_THROWS_AS(bad.validate(), InvalidParameter);
    bad = job;
    bad.t_grid = {-1.0, 0.0};
    CHECK_THROWS_AS(bad.validate(), InvalidParameter);
    bad = job;
    bad.r = -2.0;
    CHECK_THROWS_AS(bad.validate(), InvalidParameter);
}

TEST_CASE("run_sweep") {
    SUBCASE("1x1 grid at t = 0 reproduces the initial entanglement") {
        SweepJob job;
        job.initial_state = InitialStateKind::two_mode_squeezed;
        job.r = 4.0;
        job.params = kFig;
        job.t_grid = {0.0};
        job.temperature_grid = {1.0};
        const SweepTable table = run_sweep(job);
        REQUIRE(table.rows.size() == 1);
        CHECK(near(table.rows[0].report.log_negativity, 5.770780163555854, 1e-9));
    }
    SUBCASE("row order is temperature-major, then t ascending") {
        SweepJob job;
        job.r = 1.0;
        job.params = kFig;
        job.t_grid = {0.0, 1.0, 2.0};
        job.temperature_grid = {0.0, 2.0};
        const SweepTable table = run_sweep(job);
        REQUIRE(table.rows.size() == 6);
        CHECK(table.rows[0].temperature == 0.0);
        CHECK(table.rows[2].t == 2.0);
        CHECK(table.rows[3].temperature == 2.0);
        CHECK(table.rows[3].t == 0.0);
    }
    SUBCASE("late rows agree with the steady-state measures") {
        SweepJob job;
        job.r = 4.0;
        job.params = kFig;
        job.t_grid = {100.0 / kFig.lambda};
        job.temperature_grid = {1.0};
        const SweepTable table = run_sweep(job);
        const auto steady_report =
            correlation_report(steady_state(kFig, Temperature(1.0)), LogBase::natural);
        CHECK(near(table.rows[0].report.simon_s, steady_report.simon_s, 1e-7));
        CHECK(near(table.rows[0].report.log_negativity, steady_report.log_negativity, 1e-7));
        CHECK(near(table.rows[0].report.discord, steady_report.discord, 1e-7));
    }
    SUBCASE("separable jobs keep S strictly positive after t = 0") {
        SweepJob job;
        job.initial_state = InitialStateKind::separable_squeezed;
        job.r = 4.0;
        job.params = kFig;
        job.t_grid = linspace(0.25, 20.0, 80);
        job.temperature_grid = {0.0, 1.0, 4.0};
        for (const SweepRow& row : run_sweep(job).rows) CHECK(row.report.simon_s > 0.0);
    }
    SUBCASE("identical jobs produce identical tables") {
        const SweepJob job = figure_job(2);
        std::ostringstream first, second;
        write_csv(run_sweep(job), first);
        write_csv(run_sweep(job), second);
        CHECK(first.str() == second.str());
    }
}

TEST_CASE("figure jobs") {
    const SweepJob fig1 = figure_job(1);
    CHECK(fig1.initial_state == InitialStateKind::two_mode_squeezed);
    CHECK(fig1.r == 4.0);
    CHECK(fig1.params.lambda == 0.1);
    CHECK(fig1.t_grid.size() == 81);
    CHECK(fig1.temperature_grid.size() == 41);
    CHECK(fig1.measures.log_negativity);
    CHECK_FALSE(fig1.measures.simon);
    CHECK_FALSE(fig1.measures.discord);
    CHECK(figure_job(2).measures.discord);
    CHECK(figure_job(3).measures.classical);
    CHECK(figure_job(4).measures.mutual_information);
    SUBCASE("all four jobs share the same grids") {
        for (int id : {2, 3, 4}) {
            CHECK(figure_job(id).t_grid == fig1.t_grid);
            CHECK(figure_job(id).temperature_grid == fig1.temperature_grid);
        }
    }
    CHECK_THROWS_AS(figure_job(0), InvalidParameter);
    CHECK_THROWS_AS(figure_job(5), InvalidParameter);
}

TEST_CASE("figure-1 sweep: entanglement dies for T > 0, survives at T = 0") {
    const SweepTable table = run_sweep(figure_job(1));
    const auto tmss = two_mode_squeezed_state(Squeezing(4.0));
    REQUIRE(table.rows.size() == 81 * 41);
    for (std::size_t block = 0; block < 41; ++block) {
        bool negative = false;
        for (std::size_t i = 0; i < 81; ++i)
            negative = negative || table.rows[block * 81 + i].report.log_negativity < 0.0;
        const double temperature = table.rows[block * 81].temperature;
        if (temperature == 0.0) {
            CHECK_FALSE(negative);
            continue;
        }
        // Every T > 0 has a finite crossing. For the two coolest grid rows
        // (T = 0.1, 0.2) it falls beyond the t <= 20 window, so the sign
        // change shows up in the row set only once t* < 20.
        const auto result = sudden_death_time(tmss, kFig, Temperature(temperature), 200.0);
        REQUIRE(result.found());
        CHECK(negative == (result.crossing_time < 20.0));
        if (temperature >= 0.3) CHECK(negative);
    }
}

TEST_CASE("figure 2-4 sweeps: non-negative columns and additivity per row") {
    const SweepTable table = run_sweep(figure_job(2));
    for (const SweepRow& row : table.rows) {
        CHECK(row.report.discord >= 0.0);
        CHECK(row.report.classical >= -1e-12);
        CHECK(row.report.mutual_information >= -1e-12);
        CHECK(near(row.report.mutual_information, row.report.classical + row.report.discord_raw,
                   1e-12));
    }
}

TEST_CASE("sudden-death search") {
    const auto tmss = two_mode_squeezed_state(Squeezing(4.0));
    SUBCASE("frozen regression constants") {
        const auto t05 = sudden_death_time(tmss, kFig, Temperature(0.5), 200.0);
        const auto t1 = sudden_death_time(tmss, kFig, Temperature(1.0), 200.0);
        const auto t2 = sudden_death_time(tmss, kFig, Temperature(2.0), 200.0);
        const auto t4 = sudden_death_time(tmss, kFig, Temperature(4.0), 200.0);
        REQUIRE(t05.found());
        REQUIRE(t1.found());
        REQUIRE(t2.found());
        REQUIRE(t4.found());
        CHECK(near(t05.crossing_time, kCrossingT05, 1e-6));
        CHECK(near(t1.crossing_time, kCrossingT1, 1e-6));
        CHECK(near(t2.crossing_time, kCrossingT2, 1e-6));
        CHECK(near(t4.crossing_time, kCrossingT4, 1e-6));
        // consistency with the equal-frequency closed form
        CHECK(near(t2.crossing_time, crossing_closed_form(2.0, 4.0, 0.1), 1e-7));
        CHECK(near(t05.crossing_time, crossing_closed_form(0.5, 4.0, 0.1), 1e-7));
        // residual and bracket invariants
        CHECK(t2.residual <= 1e-9);
        CHECK(t2.bracket_lo <= t2.crossing_time);
        CHECK(t2.crossing_time <= t2.bracket_hi);
        CHECK_FALSE(t2.initial_not_entangled);
    }
    SUBCASE("crossing times decrease with temperature") {
        const double a = sudden_death_time(tmss, kFig, Temperature(1.0), 200.0).crossing_time;
        const double b = sudden_death_time(tmss, kFig, Temperature(2.0), 200.0).crossing_time;
        const double c = sudden_death_time(tmss, kFig, Temperature(4.0), 200.0).crossing_time;
        CHECK(a > b);
        CHECK(b > c);
    }
    SUBCASE("T = 0: no crossing within the horizon") {
        const auto result = sudden_death_time(tmss, kFig, Temperature(0.0), 200.0);
        CHECK_FALSE(result.found());
    }
    SUBCASE("grid refinement leaves the crossing in place") {
        const auto coarse = sudden_death_time(tmss, kFig, Temperature(2.0), 200.0, 1000);
        const auto fine = sudden_death_time(tmss, kFig, Temperature(2.0), 200.0, 2000);
        CHECK(std::abs(coarse.crossing_time - fine.crossing_time) <= 2e-8);
    }
    SUBCASE("non-entangled initial state reports a flagged crossing at t = 0") {
        const auto sep = separable_squeezed_state(Squeezing(4.0));
        const auto result = sudden_death_time(sep, kFig, Temperature(1.0), 50.0);
        CHECK(result.found());
        CHECK(result.initial_not_entangled);
        CHECK(result.crossing_time == 0.0);
    }
    SUBCASE("argument validation") {
        CHECK_THROWS_AS(sudden_death_time(tmss, kFig, Temperature(1.0), 0.0), InvalidParameter);
        CHECK_THROWS_AS(sudden_death_time(tmss, kFig, Temperature(1.0), -5.0), InvalidParameter);
        const auto bad = CovarianceMatrix::from_matrix(0.25 * Eigen::Matrix4d::Identity());
        CHECK_THROWS_AS(sudden_death_time(bad, kFig, Temperature(1.0), 10.0), InvalidState);
    }
}

TEST_CASE("lambda sensitivity") {
    const auto tmss = two_mode_squeezed_state(Squeezing(4.0));
    const std::vector<SystemParams> ladder = {SystemParams(1.0, 1.0, 1.0, 0.05),
                                              SystemParams(1.0, 1.0, 1.0, 0.1),
                                              SystemParams(1.0, 1.0, 1.0, 0.2)};
    SUBCASE("crossing times strictly decrease with lambda at T = 2") {
        const auto results = lambda_sensitivity(tmss, ladder, Temperature(2.0), 200.0);
        REQUIRE(results.size() == 3);
        CHECK(near(results[0].crossing_time, kCrossingLambda005, 1e-6));
        CHECK(near(results[1].crossing_time, kCrossingT2, 1e-6));
        CHECK(near(results[2].crossing_time, kCrossingLambda02, 1e-6));
        CHECK(results[0].crossing_time > results[1].crossing_time);
        CHECK(results[1].crossing_time > results[2].crossing_time);
    }
    SUBCASE("single-element list is trivially ordered") {
        const auto results =
            lambda_sensitivity(tmss, {SystemParams(1.0, 1.0, 1.0, 0.1)}, Temperature(2.0), 100.0);
        CHECK(results.size() == 1);
        CHECK(results[0].found());
    }
    SUBCASE("T = 0: nothing found, ordering check skipped") {
        const auto results = lambda_sensitivity(tmss, ladder, Temperature(0.0), 50.0);
        for (const auto& result : results) CHECK_FALSE(result.found());
    }
    SUBCASE("list validation") {
        CHECK_THROWS_AS(lambda_sensitivity(tmss, {}, Temperature(2.0), 100.0), InvalidParameter);
        CHECK_THROWS_AS(lambda_sensitivity(tmss,
                                           {SystemParams(1.0, 1.0, 1.0, 0.2),
                                            SystemParams(1.0, 1.0, 1.0, 0.1)},
                                           Temperature(2.0), 100.0),
                        InvalidParameter);
        CHECK_THROWS_AS(lambda_sensitivity(tmss,
                                           {SystemParams(1.0, 1.0, 1.0, 0.1),
                                            SystemParams(2.0, 1.0, 1.0, 0.2)},
                                           Temperature(2.0), 100.0),
                        InvalidParameter);
    }
}

TEST_CASE("number formatting") {
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(0.25) == "0.25");
    CHECK(format_number(5.770780163555854) == "5.77078016356");
    CHECK(format_number(-186.18489515652226) == "-186.184895157");
    CHECK(format_number(1e-30) == "1e-30");
    CHECK(format_number(0.05) == "0.05");
}

TEST_CASE("CSV emission") {
    SweepJob job;
    job.r = 4.0;
    job.params = kFig;
    job.t_grid = {0.0, 1.0};
    job.temperature_grid = {0.5};
    SUBCASE("full header and row shape") {
        std::ostringstream out;
        write_csv(run_sweep(job), out);
        std::istringstream lines(out.str());
        std::string header;
        std::getline(lines, header);
        CHECK(header == "t,T,S,E_N,D,C,I,nu_bar_minus,nu_tilde_minus,epsilon_branch");
        std::string row;
        std::getline(lines, row);
        CHECK(row.substr(0, 6) == "0,0.5,");
        CHECK(row.find("branch1") != std::string::npos);
        int rows = 1;
        while (std::getline(lines, row)) ++rows;
        CHECK(rows == 2);
    }
    SUBCASE("unselected measure columns are omitted") {
        job.measures = MeasureSelection::none();
        job.measures.log_negativity = true;
        std::ostringstream out;
        write_csv(run_sweep(job), out);
        std::string header = out.str().substr(0, out.str().find('\n'));
        CHECK(header == "t,T,E_N,nu_bar_minus,nu_tilde_minus,epsilon_branch");
    }
    SUBCASE("unwritable path raises an i/o error") {
        CHECK_THROWS_AS(write_csv_file(run_sweep(job), "/nonexistent-dir/x.csv"), IoError);
    }
}
