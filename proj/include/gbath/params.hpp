#pragma once

#include <cmath>
#include <string>

#include "gbath/errors.hpp"

namespace gbath {

// Two uncoupled harmonic modes of equal mass coupled to a common bath.
// Natural units throughout: hbar = k = 1.
struct SystemParams {
    double mass = 1.0;
    double omega1 = 1.0;
    double omega2 = 1.0;
    double lambda = 0.1;  // dissipation constant; must stay > 0 so the drift is stable

    SystemParams() = default;
    SystemParams(double mass_, double omega1_, double omega2_, double lambda_)
        : mass(mass_), omega1(omega1_), omega2(omega2_), lambda(lambda_) {
        validate();
    }

    void validate() const {
        require_positive(mass, "mass");
        require_positive(omega1, "omega1");
        require_positive(omega2, "omega2");
        require_positive(lambda, "lambda");
    }

private:
    static void require_positive(double v, const char* name) {
        if (!std::isfinite(v) || v <= 0.0)
            throw InvalidParameter(std::string(name) + " must be finite and > 0, got " + std::to_string(v));
    }
};

// Bath temperature, T >= 0. T = 0 is a valid limit and handled without
// evaluating coth at an infinite argument.
struct Temperature {
    double value = 0.0;

    Temperature() = default;
    explicit Temperature(double v) : value(v) {
        if (!std::isfinite(v) || v < 0.0)
            throw InvalidParameter("temperature must be finite and >= 0, got " + std::to_string(v));
    }
};

// Squeezing parameter r >= 0 of the initial-state constructors.
struct Squeezing {
    double value = 0.0;

    Squeezing() = default;
    explicit Squeezing(double v) : value(v) {
        if (!std::isfinite(v) || v < 0.0)
            throw InvalidParameter("squeezing parameter must be finite and >= 0, got " + std::to_string(v));
    }
};

}  // namespace gbath
