#pragma once

// JSON and CSV encodings of reports. JSON documents are
// {"meta": {...}, "data": ...}; CSV has a header row, UTF-8, LF endings.

#include <string>
#include <vector>

#include <json.hpp>

#include "wavenum/conumber_sieve.hpp"
#include "wavenum/modular_rep.hpp"

namespace wavenum::io {

using nlohmann::json;

inline constexpr const char* kFormatVersion = "1.0";

json to_json(const WindowReport& report, bool include_timing = true);
WindowReport window_report_from_json(const json& j);

json to_json(const ScheduleEntry& entry);
ScheduleEntry schedule_entry_from_json(const json& j);

json to_json(const ModularTable& table);
json to_json(const EqualityFilterReport& report);

json document(const std::string& command, json config, json data);

/// iteration,lo,hi,surviving,oracle,verdict
std::string windows_csv(const std::vector<WindowReport>& windows);
/// iteration,lo,hi,largest_prime,count_identified,estimate,relative_error,budget_exhausted
std::string schedule_csv(const std::vector<ScheduleEntry>& schedule);
/// k,r<p>...,product
std::string table_csv(const ModularTable& table);

/// Shortest round-trip decimal form of a double, as used in the CSV columns.
std::string format_double(double v);

} // namespace wavenum::io
