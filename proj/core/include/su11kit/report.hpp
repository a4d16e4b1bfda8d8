#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace su11kit {

using ParamValue = std::variant<double, long long, std::string>;
using ParamMap = std::map<std::string, ParamValue>;

struct ReportEntry {
  std::string check_id;
  ParamMap params;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string notes;
};

/// Named residuals with tolerances and verdicts. pass is derived from
/// residual <= tolerance (a NaN residual never passes) and check ids are
/// unique within one report.
class VerificationReport {
 public:
  const ReportEntry& add(std::string check_id, ParamMap params,
                         double residual, double tolerance,
                         std::string notes = {});

  /// Merges another report's entries; check ids must stay unique.
  void append(const VerificationReport& other);

  /// Entries ordered by check_id.
  std::vector<ReportEntry> sorted_entries() const;

  const std::vector<ReportEntry>& entries() const { return entries_; }
  const ReportEntry* find(const std::string& check_id) const;
  bool all_pass() const;
  std::size_t failure_count() const;

  std::map<std::string, std::string>& metadata() { return metadata_; }
  const std::map<std::string, std::string>& metadata() const { return metadata_; }

 private:
  std::vector<ReportEntry> entries_;
  std::map<std::string, std::string> metadata_;
};

/// Formats a double with 17 significant digits, e.g. for check-id suffixes.
std::string format_number(double value);

}  // namespace su11kit
