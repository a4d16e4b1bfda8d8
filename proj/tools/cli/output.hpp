#pragma once

#include "su11kit/report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace su11kit::cli {

enum class OutputFormat { json, csv };

/// {metadata, entries} with entries sorted by check_id. Non-finite
/// residuals serialize as null.
std::string report_json(const VerificationReport& report);

/// check_id,params,residual,tolerance,pass,notes with params as k=v;k=v.
std::string report_csv(const VerificationReport& report);

/// RFC 4180 quoting when the field holds a comma, quote or newline.
std::string csv_field(const std::string& text);

/// Header plus rows of numbers at 17 significant digits, LF endings.
std::string numeric_csv(const std::vector<std::string>& header,
                        const std::vector<std::vector<double>>& rows);

/// Writes to the path, or stdout for an empty path or "-". Throws
/// UsageError if the file cannot be written.
void write_output(const std::string& path, const std::string& text);

/// Current UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

}  // namespace su11kit::cli
