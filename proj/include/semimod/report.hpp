#pragma once

// Machine-readable reports: a version header, then `id|status|witness|millis`
// records sorted by id.

#include <string>
#include <vector>

namespace semimod {

inline constexpr const char* kVersion = "0.1.0";

struct ReportRecord {
  std::string id;
  std::string status;
  std::string witness;
  long long millis = 0;
};

class Report {
 public:
  void add(std::string id, std::string status, std::string witness = {}, long long millis = 0);
  const std::vector<ReportRecord>& records() const { return records_; }
  bool empty() const { return records_.empty(); }

  /// Stable-sorted by id; '|' and line breaks in fields become '/' and ' '.
  std::string str() const;
  /// Throws ParameterError when the file cannot be written.
  void write(const std::string& path) const;

 private:
  std::vector<ReportRecord> records_;
};

}  // namespace semimod
