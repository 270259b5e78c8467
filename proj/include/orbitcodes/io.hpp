#pragma once

// Text forms shared by the CLI and JSON reports. A row vector is a digit
// string ("100000"); entries >= 10 use lowercase letters, so q <= 36.

#include <string>
#include <string_view>
#include <vector>

#include "orbitcodes/linalg.hpp"

namespace orbitcodes {

Vec parse_row(std::string_view text, fq_t q);
std::string format_row(std::span<const fq_t> row);

/// Comma-separated rows: "1000,0011,1011".
MatFq parse_rows(std::string_view text, fq_t q);
/// One row per line.
std::string format_matrix(const MatFq& m);
std::vector<std::string> matrix_row_strings(const MatFq& m);

}  // namespace orbitcodes
