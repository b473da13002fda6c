#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "fifogap/experiment.hpp"

namespace fifogap {

inline constexpr std::array<std::string_view, 16> kRecordColumns = {
    "distribution", "block_size", "trial",     "sub_seed", "n",        "p0",
    "r_star",       "p_fifo",     "p_star",    "k_bar",    "m",        "gap_lower",
    "ratio_lb",     "ratio_ub",   "bound_ratio", "condition_holds"};

/// 17 significant digits, enough to round-trip any double.
std::string format_double(double v);

/// UTF-8 CSV with a header row in kRecordColumns order. Missing optionals are
/// empty fields; fields containing ',' or '"' are quoted.
void write_records_csv(std::ostream& out, const std::vector<TrialRecord>& records);

/// Header-keyed reader: columns may appear in any order, but every column
/// in kRecordColumns must be present. Throws ValidationError with a line
/// number on any malformed row.
std::vector<TrialRecord> read_records_csv(std::istream& in);

/// Splits one CSV line (RFC 4180 quoting, no embedded newlines).
std::vector<std::string> split_csv_line(std::string_view line);

}  // namespace fifogap
