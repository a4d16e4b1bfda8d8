#include "output.hpp"

#include "parse.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>

namespace su11kit::cli {

namespace {

std::string param_text(const ParamValue& value) {
  if (const auto* d = std::get_if<double>(&value)) return format_number(*d);
  if (const auto* i = std::get_if<long long>(&value)) return std::to_string(*i);
  return std::get<std::string>(value);
}

nlohmann::ordered_json param_json(const ParamValue& value) {
  if (const auto* d = std::get_if<double>(&value)) {
    return std::isfinite(*d) ? nlohmann::ordered_json(*d) : nlohmann::ordered_json();
  }
  if (const auto* i = std::get_if<long long>(&value)) return *i;
  return std::get<std::string>(value);
}

}  // namespace

std::string report_json(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.metadata()) meta[key] = value;
  doc["metadata"] = meta;
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const ReportEntry& e : report.sorted_entries()) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : e.params) params[key] = param_json(value);
    nlohmann::ordered_json row;
    row["check_id"] = e.check_id;
    row["params"] = params;
    row["residual"] = std::isfinite(e.residual) ? nlohmann::ordered_json(e.residual)
                                                : nlohmann::ordered_json();
    row["tolerance"] = e.tolerance;
    row["pass"] = e.pass;
    row["notes"] = e.notes;
    entries.push_back(std::move(row));
  }
  doc["entries"] = entries;
  return doc.dump(2) + "\n";
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string report_csv(const VerificationReport& report) {
  std::string out = "check_id,params,residual,tolerance,pass,notes\n";
  for (const ReportEntry& e : report.sorted_entries()) {
    std::string params;
    for (const auto& [key, value] : e.params) {
      if (!params.empty()) params += ';';
      params += key + "=" + param_text(value);
    }
    out += csv_field(e.check_id) + ',' + csv_field(params) + ',' +
           format_number(e.residual) + ',' + format_number(e.tolerance) + ',' +
           (e.pass ? "true" : "false") + ',' + csv_field(e.notes) + '\n';
  }
  return out;
}

std::string numeric_csv(const std::vector<std::string>& header,
                        const std::vector<std::vector<double>>& rows) {
  std::string out;
  for (std::size_t j = 0; j < header.size(); ++j) {
    out += (j ? "," : "") + csv_field(header[j]);
  }
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out += ',';
      out += format_number(row[j]);
    }
    out += '\n';
  }
  return out;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw UsageError("cannot open '" + path + "' for writing");
  file << text;
  file.close();
  if (!file) throw UsageError("failed writing '" + path + "'");
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace su11kit::cli
