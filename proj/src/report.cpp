#include "semimod/report.hpp"

#include <algorithm>
#include <fstream>

#include "semimod/core.hpp"

namespace semimod {

namespace {

std::string field(std::string s) {
  for (char& c : s) {
    if (c == '|') c = '/';
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

}  // namespace

void Report::add(std::string id, std::string status, std::string witness, long long millis) {
  records_.push_back({field(std::move(id)), field(std::move(status)), field(std::move(witness)), millis});
}

std::string Report::str() const {
  auto sorted = records_;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const ReportRecord& a, const ReportRecord& b) { return a.id < b.id; });
  std::string out = std::string("# semimod report ") + kVersion + "\n";
  for (const auto& r : sorted) {
    out += r.id + "|" + r.status + "|" + r.witness + "|" + std::to_string(r.millis) + "\n";
  }
  return out;
}

void Report::write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParameterError("cannot write report " + path);
  out << str();
  if (!out) throw ParameterError("cannot write report " + path);
}

}  // namespace semimod
