#include "gbath/csv.hpp"

#include <charconv>
#include <fstream>

namespace gbath {

std::string format_number(double value) {
    if (value == 0.0) value = 0.0;  // collapse -0
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

std::string csv_header(const SweepJob& job) {
    std::string header = "t,T";
    if (job.measures.simon) header += ",S";
    if (job.measures.log_negativity) header += ",E_N";
    if (job.measures.discord) header += ",D";
    if (job.measures.classical) header += ",C";
    if (job.measures.mutual_information) header += ",I";
    header += ",nu_bar_minus,nu_tilde_minus,epsilon_branch";
    return header;
}

void write_csv(const SweepTable& table, std::ostream& out) {
    out << csv_header(table.job) << '\n';
    for (const SweepRow& row : table.rows) {
        out << format_number(row.t) << ',' << format_number(row.temperature);
        if (table.job.measures.simon) out << ',' << format_number(row.report.simon_s);
        if (table.job.measures.log_negativity)
            out << ',' << format_number(row.report.log_negativity);
        if (table.job.measures.discord) out << ',' << format_number(row.report.discord);
        if (table.job.measures.classical) out << ',' << format_number(row.report.classical);
        if (table.job.measures.mutual_information)
            out << ',' << format_number(row.report.mutual_information);
        out << ',' << format_number(row.report.nu_bar_minus) << ','
            << format_number(row.report.nu_tilde_minus) << ','
            << to_string(row.report.epsilon_branch) << '\n';
    }
}

void write_csv_file(const SweepTable& table, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    write_csv(table, out);
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace gbath
