// gbath command-line front end. Talks to the simulation core exclusively
// through the C API in gbath.h.

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gbath.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

struct CliError {
    int exit_code;
    std::string message;
};

int exit_code_for(gbath_status status) {
    switch (status) {
        case GBATH_OK: return kExitOk;
        case GBATH_ERROR_INVALID_ARGUMENT:
        case GBATH_ERROR_INVALID_STATE: return kExitValidation;
        case GBATH_ERROR_NUMERICAL: return kExitNumerical;
        case GBATH_ERROR_IO: return kExitIo;
        case GBATH_ERROR_INTERNAL: return 1;
    }
    return 1;
}

void check(gbath_status status) {
    if (status != GBATH_OK)
        throw CliError{exit_code_for(status), std::string(gbath_status_name(status)) + ": " +
                                                  gbath_last_error()};
}

// 12 significant digits, locale-independent; -0 collapses to "0".
std::string fmt(double value) {
    if (value == 0.0) value = 0.0;
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

// Report-display rounding: boundary values that are zero up to accumulated
// round-off print as 0. Raw values go to CSV untouched.
std::string fmt_measure(double value) { return fmt(std::abs(value) < 1e-13 ? 0.0 : value); }

const char* branch_name(int branch) {
    switch (branch) {
        case GBATH_EPSILON_PRODUCT_SHORTCUT: return "product_shortcut";
        case GBATH_EPSILON_BRANCH1: return "branch1";
        case GBATH_EPSILON_BRANCH2: return "branch2";
    }
    return "unknown";
}

// --- configuration: flag > file > built-in default -----------------------

const std::set<std::string> kFileKeys = {"state",  "r",        "m",     "omega1",   "omega2",
                                         "lambda", "T_min",    "T_max", "T_points", "t_min",
                                         "t_max",  "t_points", "log_base", "out"};

const std::map<std::string, std::string> kDefaults = {
    {"m", "1"},        {"omega1", "1"},   {"omega2", "1"},      {"lambda", "0.1"},
    {"T_min", "0"},    {"T_max", "4"},    {"T_points", "41"},   {"t_min", "0"},
    {"t_max", "20"},   {"t_points", "81"}, {"log_base", "natural"}, {"out", "sweep.csv"},
    {"horizon", "200"}, {"tol", "1e-9"},
};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::map<std::string, std::string> load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError{kExitIo, "cannot open config file: " + path};
    std::map<std::string, std::string> values;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw CliError{kExitValidation, path + ":" + std::to_string(lineno) +
                                                ": expected 'key = value', got '" + line + "'"};
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!kFileKeys.count(key))
            throw CliError{kExitValidation,
                           path + ":" + std::to_string(lineno) + ": unknown config key: " + key};
        values[key] = value;
    }
    return values;
}

class Config {
public:
    Config(std::map<std::string, std::string> flags, std::map<std::string, std::string> file)
        : flags_(std::move(flags)), file_(std::move(file)) {}

    std::string require(const std::string& key) const {
        if (auto v = find(key)) return *v;
        throw CliError{kExitValidation, "missing required key: " + key};
    }

    std::optional<std::string> find(const std::string& key) const {
        if (auto it = flags_.find(key); it != flags_.end()) return it->second;
        if (auto it = file_.find(key); it != file_.end()) return it->second;
        if (auto it = kDefaults.find(key); it != kDefaults.end()) return it->second;
        return std::nullopt;
    }

    double number(const std::string& key) const {
        const std::string text = require(key);
        try {
            std::size_t used = 0;
            const double v = std::stod(text, &used);
            if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument(text);
            return v;
        } catch (const std::exception&) {
            throw CliError{kExitValidation, "invalid numeric value for key " + key + ": " + text};
        }
    }

    int integer(const std::string& key) const {
        const double v = number(key);
        const int i = static_cast<int>(v);
        if (static_cast<double>(i) != v)
            throw CliError{kExitValidation, "key " + key + " must be an integer, got " + require(key)};
        return i;
    }

    gbath_params params() const {
        return {number("m"), number("omega1"), number("omega2"), number("lambda")};
    }

    gbath_initial_state state_kind() const {
        const std::string s = require("state");
        if (s == "sep") return GBATH_STATE_SEPARABLE_SQUEEZED;
        if (s == "tmss") return GBATH_STATE_TWO_MODE_SQUEEZED;
        throw CliError{kExitValidation, "invalid value for key state: '" + s + "' (expected sep|tmss)"};
    }

    gbath_log_base log_base() const {
        const std::string s = require("log_base");
        if (s == "natural") return GBATH_LOG_NATURAL;
        if (s == "base2") return GBATH_LOG_BASE2;
        throw CliError{kExitValidation,
                       "invalid value for key log_base: '" + s + "' (expected natural|base2)"};
    }

    gbath_sweep_spec sweep_spec() const {
        gbath_sweep_spec spec{};
        spec.initial_state = state_kind();
        spec.r = number("r");
        spec.params = params();
        spec.t_min = number("t_min");
        spec.t_max = number("t_max");
        spec.t_points = integer("t_points");
        spec.temp_min = number("T_min");
        spec.temp_max = number("T_max");
        spec.temp_points = integer("T_points");
        spec.measures = GBATH_MEASURE_ALL;
        spec.log_base = log_base();
        return spec;
    }

private:
    std::map<std::string, std::string> flags_;
    std::map<std::string, std::string> file_;
};

struct StateHandle {
    gbath_state* ptr = nullptr;
    ~StateHandle() { gbath_state_free(ptr); }
};

struct SweepHandle {
    gbath_sweep* ptr = nullptr;
    ~SweepHandle() { gbath_sweep_free(ptr); }
};

StateHandle make_state(const Config& config) {
    StateHandle state;
    if (config.state_kind() == GBATH_STATE_SEPARABLE_SQUEEZED)
        check(gbath_state_separable_squeezed(config.number("r"), &state.ptr));
    else
        check(gbath_state_two_mode_squeezed(config.number("r"), &state.ptr));
    return state;
}

void print_matrix(const double entries[16]) {
    for (int i = 0; i < 4; ++i) {
        std::cout << " ";
        for (int j = 0; j < 4; ++j) std::cout << " " << fmt(entries[4 * i + j]);
        std::cout << "\n";
    }
}

void print_params_line(const Config& config) {
    const gbath_params p = config.params();
    std::cout << "params: m = " << fmt(p.mass) << ", omega1 = " << fmt(p.omega1)
              << ", omega2 = " << fmt(p.omega2) << ", lambda = " << fmt(p.lambda) << "\n";
}

void print_report(const gbath_report& report, gbath_log_base base) {
    const char* units = base == GBATH_LOG_BASE2 ? "bits" : "nats";
    std::cout << "S              = " << fmt_measure(report.simon_s) << "\n"
              << "E_N            = " << fmt_measure(report.log_negativity) << " bits\n"
              << "D              = " << fmt_measure(report.discord) << " " << units << "\n"
              << "C              = " << fmt_measure(report.classical) << " " << units << "\n"
              << "I              = " << fmt_measure(report.mutual_information) << " " << units
              << "\n"
              << "nu_bar_minus   = " << fmt(report.nu_bar_minus) << "\n"
              << "nu_tilde_minus = " << fmt(report.nu_tilde_minus) << "\n"
              << "epsilon_branch = " << branch_name(report.epsilon_branch) << "\n";
}

// --- subcommands ----------------------------------------------------------

int cmd_evolve(const Config& config) {
    const double t = config.number("t");
    const double temperature = config.number("T");
    StateHandle initial = make_state(config);
    StateHandle evolved;
    const gbath_params p = config.params();
    check(gbath_evolve(initial.ptr, &p, temperature, t, &evolved.ptr));
    gbath_report report;
    check(gbath_measure(evolved.ptr, config.log_base(), &report));
    double entries[16];
    check(gbath_state_entries(evolved.ptr, entries));

    std::cout << "state: " << config.require("state") << " (r = " << fmt(config.number("r"))
              << ")\n";
    print_params_line(config);
    std::cout << "t = " << fmt(t) << ", T = " << fmt(temperature)
              << ", log_base = " << config.require("log_base") << "\n\nsigma(t):\n";
    print_matrix(entries);
    std::cout << "\n";
    print_report(report, config.log_base());
    return kExitOk;
}

int cmd_steady(const Config& config) {
    const double temperature = config.number("T");
    const gbath_params p = config.params();
    StateHandle state;
    check(gbath_steady_state(&p, temperature, &state.ptr));
    double entries[16];
    check(gbath_state_entries(state.ptr, entries));
    double s_inf = 0, en_inf = 0;
    check(gbath_asymptotic_simon(&p, temperature, &s_inf));
    check(gbath_asymptotic_log_negativity(&p, temperature, &en_inf));

    print_params_line(config);
    std::cout << "T = " << fmt(temperature) << "\n\nsigma(infinity):\n";
    print_matrix(entries);
    std::cout << "\nS(infinity)   = " << fmt(s_inf) << "\n"
              << "E_N(infinity) = " << fmt(en_inf) << " bits\n";
    return kExitOk;
}

int run_sweep_to_file(const gbath_sweep_spec& spec, const std::string& path) {
    const auto start = std::chrono::steady_clock::now();
    SweepHandle sweep;
    check(gbath_sweep_run(&spec, &sweep.ptr));
    check(gbath_sweep_write_csv(sweep.ptr, path.c_str()));
    const auto elapsed = std::chrono::duration<double, std::milli>(
        std::chrono::steady_clock::now() - start);
    std::cerr << path << ": " << gbath_sweep_row_count(sweep.ptr) << " rows, "
              << fmt(elapsed.count()) << " ms\n";
    return kExitOk;
}

int cmd_sweep(const Config& config) {
    return run_sweep_to_file(config.sweep_spec(), config.require("out"));
}

int cmd_sudden_death(const Config& config) {
    const double temperature = config.number("T");
    const double horizon = config.number("horizon");
    const double tolerance = config.number("tol");
    if (!(horizon > 0)) throw CliError{kExitValidation, "invalid value for key horizon: must be > 0"};
    StateHandle initial = make_state(config);
    const gbath_params p = config.params();
    gbath_sudden_death_result result;
    check(gbath_sudden_death(initial.ptr, &p, temperature, horizon, tolerance, &result));
    if (!result.found) {
        std::cout << "no crossing within horizon " << fmt(horizon) << "\n";
        return kExitOk;
    }
    if (result.initial_not_entangled)
        std::cout << "initial state not entangled (E_N(0) <= 0); crossing at t = 0\n";
    std::cout << "t* = " << fmt(result.crossing_time) << "\n"
              << "bracket = [" << fmt(result.bracket_lo) << ", " << fmt(result.bracket_hi)
              << "]\n"
              << "|E_N(t*)| = " << fmt(result.residual) << "\n";
    return kExitOk;
}

int cmd_figures(const std::vector<int>& figures, const std::string& outdir) {
    if (figures.empty()) throw CliError{kExitValidation, "missing required key: figure ids"};
    for (int figure : figures) {
        gbath_sweep_spec spec;
        check(gbath_figure_spec(figure, &spec));
        const std::string path = outdir + "/fig" + std::to_string(figure) + ".csv";
        run_sweep_to_file(spec, path);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Two-mode Gaussian states in a common thermal bath: covariance dynamics,\n"
                 "separability, logarithmic negativity, Gaussian discord and correlations."};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "print help for all subcommands");

    std::map<std::string, std::string> flag_values;
    std::string config_path;

    const auto add_key = [&flag_values](CLI::App* cmd, const std::string& key,
                                        const std::string& help) {
        cmd->add_option_function<std::string>(
            "--" + key, [&flag_values, key](const std::string& v) { flag_values[key] = v; }, help);
    };
    const auto add_common = [&](CLI::App* cmd, bool with_grids) {
        cmd->add_option("--config", config_path, "flat key = value config file (flags win)");
        add_key(cmd, "state", "initial state: sep | tmss");
        add_key(cmd, "r", "squeezing parameter (>= 0)");
        add_key(cmd, "m", "mass [default 1]");
        add_key(cmd, "omega1", "frequency of mode 1 [default 1]");
        add_key(cmd, "omega2", "frequency of mode 2 [default 1]");
        add_key(cmd, "lambda", "dissipation constant [default 0.1]");
        add_key(cmd, "log_base", "entropy log base: natural | base2 [default natural]");
        if (with_grids) {
            add_key(cmd, "T_min", "lowest temperature [default 0]");
            add_key(cmd, "T_max", "highest temperature [default 4]");
            add_key(cmd, "T_points", "temperature grid size [default 41]");
            add_key(cmd, "t_min", "earliest time [default 0]");
            add_key(cmd, "t_max", "latest time [default 20]");
            add_key(cmd, "t_points", "time grid size [default 81]");
            add_key(cmd, "out", "output CSV path [default sweep.csv]");
        }
    };

    CLI::App* evolve = app.add_subcommand("evolve", "evolve one state and print its measures");
    add_common(evolve, false);
    add_key(evolve, "t", "evolution time (>= 0)");
    add_key(evolve, "T", "bath temperature (>= 0)");

    CLI::App* steady = app.add_subcommand("steady", "asymptotic (Gibbs) state and its measures");
    add_common(steady, false);
    add_key(steady, "T", "bath temperature (>= 0)");

    CLI::App* sweep = app.add_subcommand("sweep", "evaluate a (t, T) grid and write CSV");
    add_common(sweep, true);

    CLI::App* sudden = app.add_subcommand("sudden-death", "first zero crossing of E_N(t)");
    add_common(sudden, false);
    add_key(sudden, "T", "bath temperature (>= 0)");
    add_key(sudden, "horizon", "scan horizon [default 200]");
    add_key(sudden, "tol", "bisection tolerance on |E_N| [default 1e-9]");

    CLI::App* figures = app.add_subcommand("figures", "write canned sweeps fig<k>.csv");
    std::vector<std::string> figure_ids;
    std::string outdir = ".";
    figures->add_option("ids", figure_ids, "figure ids (subset of 1 2 3 4)");
    figures->add_option("--outdir", outdir, "output directory [default .]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        std::map<std::string, std::string> file_values;
        if (!config_path.empty()) file_values = load_config_file(config_path);
        const Config config(flag_values, file_values);

        if (evolve->parsed()) return cmd_evolve(config);
        if (steady->parsed()) return cmd_steady(config);
        if (sweep->parsed()) return cmd_sweep(config);
        if (sudden->parsed()) return cmd_sudden_death(config);
        if (figures->parsed()) {
            std::vector<int> ids;
            for (const std::string& text : figure_ids) {
                try {
                    std::size_t used = 0;
                    const int id = std::stoi(text, &used);
                    if (used != text.size()) throw std::invalid_argument(text);
                    ids.push_back(id);
                } catch (const std::exception&) {
                    throw CliError{kExitValidation,
                                   "invalid figure id: '" + text + "' (valid: 1 2 3 4)"};
                }
            }
            return cmd_figures(ids, outdir);
        }
        return kExitValidation;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    }
}
