#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "bellcong/congruences.hpp"

namespace bellcong {

enum class OutputFormat { Text, Jsonl, Csv };

std::optional<OutputFormat> parse_output_format(std::string_view name) noexcept;

/// Header line for the CSV format (no trailing newline).
std::string csv_header();

/// One report as a single line (no trailing newline).
///
///  text:  THEOREM1 p=7 m=2 lhs=0 rhs=0 PASS
///  jsonl: {"identity":"THEOREM1","p":7,"params":{"m":2},"lhs":"0","rhs":"0","pass":true}
///  csv:   THEOREM1,7,2,,,true,0,0
///
/// Residues are decimal; polynomials are ascending coefficient lists
/// (JSON arrays of decimal strings, semicolon-joined in CSV).
std::string format_report(const VerificationReport& report, OutputFormat format);

}  // namespace bellcong
