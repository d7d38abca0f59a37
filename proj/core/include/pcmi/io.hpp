#pragma once

// Text formats: matrix files, the axiom report document, curve CSV and the
// fixed-width verdict table.

#include <filesystem>
#include <string>
#include <string_view>

#include "pcmi/axioms.hpp"
#include "pcmi/pcm.hpp"

namespace pcmi {

/// One row per line, entries separated by whitespace and/or commas. Each
/// entry is a decimal literal or "p/q" with positive integers p, q. Blank
/// lines and lines starting with '#' are skipped.
///
/// Throws kParseError with a line/column position, or any Pcm validation
/// error with both the entry coordinates and the line of the offending row.
Pcm parse_matrix(std::string_view text);
Pcm read_matrix_file(const std::filesystem::path& path);

/// Space separated rows with 17 significant digits, so parse_matrix gives
/// back the same doubles.
std::string render_matrix(const Pcm& m);

/// Fixed notation with `digits` decimals ("0.333333333" for digits = 9).
std::string format_value(double v, int digits = 9);

/// Self-describing JSON document with sorted keys; identical reports give
/// identical bytes.
std::string report_to_document(const AxiomReport& report);
/// Inverse of report_to_document. Throws kParseError on malformed input.
AxiomReport report_from_document(std::string_view text);

/// Rows = indices, columns = P1..P6. Empirical cells use ✓ (no violation
/// found), ✗ (violation found), ~ (heuristic pass) and - (not applicable);
/// a second block lists the established analytical results.
std::string render_table(const AxiomReport& report);

/// "param,value" header followed by one line per sample.
std::string curve_to_csv(const CurveSeries& series);

}  // namespace pcmi
