#include "su11kit/report.hpp"

#include "su11kit/numkernel.hpp"

#include <algorithm>
#include <cstdio>

namespace su11kit {

const ReportEntry& VerificationReport::add(std::string check_id,
                                           ParamMap params, double residual,
                                           double tolerance, std::string notes) {
  if (find(check_id) != nullptr) {
    throw DomainError("VerificationReport: duplicate check_id " + check_id);
  }
  ReportEntry entry;
  entry.check_id = std::move(check_id);
  entry.params = std::move(params);
  entry.residual = residual;
  entry.tolerance = tolerance;
  entry.pass = residual <= tolerance;
  entry.notes = std::move(notes);
  entries_.push_back(std::move(entry));
  return entries_.back();
}

void VerificationReport::append(const VerificationReport& other) {
  for (const auto& e : other.entries_) {
    if (find(e.check_id) != nullptr) {
      throw DomainError("VerificationReport: duplicate check_id " + e.check_id);
    }
    entries_.push_back(e);
  }
}

std::vector<ReportEntry> VerificationReport::sorted_entries() const {
  std::vector<ReportEntry> out = entries_;
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.check_id < b.check_id;
  });
  return out;
}

const ReportEntry* VerificationReport::find(const std::string& check_id) const {
  for (const auto& e : entries_) {
    if (e.check_id == check_id) return &e;
  }
  return nullptr;
}

bool VerificationReport::all_pass() const { return failure_count() == 0; }

std::size_t VerificationReport::failure_count() const {
  return static_cast<std::size_t>(std::count_if(
      entries_.begin(), entries_.end(), [](const auto& e) { return !e.pass; }));
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace su11kit
