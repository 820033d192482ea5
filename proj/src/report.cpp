#include "hochlab/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hochlab {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Unstable: return "unstable";
    case Status::Error: return "error";
  }
  return "error";
}

Status parse_status(const std::string& s) {
  if (s == "pass") return Status::Pass;
  if (s == "fail") return Status::Fail;
  if (s == "unstable") return Status::Unstable;
  if (s == "error") return Status::Error;
  throw std::invalid_argument("unknown status: " + s);
}

void Report::sort() {
  std::stable_sort(records.begin(), records.end(), [](const Record& a, const Record& b) {
    return std::tie(a.module, a.name) < std::tie(b.module, b.name);
  });
}

bool Report::any_failure() const {
  return std::any_of(records.begin(), records.end(),
                     [](const Record& r) { return r.status == Status::Fail || r.status == Status::Error; });
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "tsv") return Format::Tsv;
  if (name == "text") return Format::Text;
  throw std::invalid_argument("unknown format: " + name);
}

nlohmann::json to_json(const Report& report, bool with_timing) {
  auto out = nlohmann::json::array();
  for (const auto& r : report.records) {
    nlohmann::json j{{"module", r.module},
                     {"name", r.name},
                     {"anchor", r.anchor},
                     {"status", status_name(r.status)},
                     {"witness", r.witness}};
    if (with_timing) j["timing"] = {{"ms", r.timing_ms}};
    out.push_back(std::move(j));
  }
  return out;
}

Report report_from_json(const nlohmann::json& doc) {
  Report report;
  for (const auto& j : doc) {
    Record r;
    r.module = j.at("module").get<std::string>();
    r.name = j.at("name").get<std::string>();
    r.anchor = j.at("anchor").get<std::string>();
    r.status = parse_status(j.at("status").get<std::string>());
    r.witness = j.at("witness").get<std::string>();
    if (j.contains("timing")) r.timing_ms = j["timing"].at("ms").get<long>();
    report.records.push_back(std::move(r));
  }
  return report;
}

namespace {

std::string tsv_field(std::string s) {
  for (char& c : s)
    if (c == '\t' || c == '\n') c = ' ';
  return s;
}

}  // namespace

std::string emit(const Report& report, Format format, bool with_timing) {
  std::ostringstream out;
  switch (format) {
    case Format::Json:
      out << to_json(report, with_timing).dump(2) << "\n";
      break;
    case Format::Tsv:
      for (const auto& r : report.records)
        out << tsv_field(r.module) << '\t' << tsv_field(r.name) << '\t' << tsv_field(r.anchor) << '\t'
            << status_name(r.status) << '\t' << tsv_field(r.witness) << '\t' << (with_timing ? r.timing_ms : 0)
            << "\n";
      break;
    case Format::Text:
      for (const auto& r : report.records) {
        out << status_name(r.status) << "  " << r.module << "/" << r.name;
        if (!r.witness.empty()) out << "  (" << r.witness << ")";
        if (with_timing) out << "  " << r.timing_ms << " ms";
        out << "\n";
      }
      break;
  }
  return out.str();
}

}  // namespace hochlab
