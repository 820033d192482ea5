#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace hochlab {

enum class Status { Pass, Fail, Unstable, Error };

std::string status_name(Status s);
Status parse_status(const std::string& s);

struct Record {
  std::string module;   // suite name
  std::string name;
  std::string anchor;   // statement being checked
  Status status = Status::Pass;
  std::string witness;
  long timing_ms = 0;   // excluded from the stable section
};

struct Report {
  std::vector<Record> records;

  // Orders records by module, then name.
  void sort();
  bool any_failure() const;  // Fail or Error; Unstable does not count
};

enum class Format { Json, Tsv, Text };
Format parse_format(const std::string& name);

nlohmann::json to_json(const Report& report, bool with_timing = true);
Report report_from_json(const nlohmann::json& doc);
std::string emit(const Report& report, Format format, bool with_timing = true);

}  // namespace hochlab
