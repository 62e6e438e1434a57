#ifndef MODLINK_REPORT_HPP
#define MODLINK_REPORT_HPP

#include <string>

#include <json.hpp>

#include "modlink/sheaf.hpp"

namespace modlink {

using Json = nlohmann::ordered_json;

/// Structured outcome of one CLI command. Exit code 0 for success or a
/// definitive verdict, 2 for Inconclusive, 1 for errors.
struct CommandResult {
  std::string command;
  Json result;
  int exit_code = 0;
};

enum class ReportFormat { Text, Json };

Json iso_to_json(const IsoVerdict& v);
Json linkage_to_json(const LinkageReport& r);
Json sheaf_report_to_json(const SheafReport& r);
Json module_to_json(const PresentedModule& M);

std::string render_report(const CommandResult& r, ReportFormat format);

}  // namespace modlink

#endif
