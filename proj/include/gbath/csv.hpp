#pragma once

#include <ostream>
#include <string>

#include "gbath/experiments.hpp"

namespace gbath {

// 12 significant digits, locale-independent, '.' decimal separator;
// negative zero is normalized to "0".
std::string format_number(double value);

// Schema: t,T,S,E_N,D,C,I,nu_bar_minus,nu_tilde_minus,epsilon_branch with the
// measure columns of unselected measures omitted; '\n' line endings.
std::string csv_header(const SweepJob& job);
void write_csv(const SweepTable& table, std::ostream& out);
void write_csv_file(const SweepTable& table, const std::string& path);

}  // namespace gbath
