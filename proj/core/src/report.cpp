#include "modlink/report.hpp"

#include <sstream>

namespace modlink {

Json module_to_json(const PresentedModule& M) {
  Json j;
  j["gens"] = M.gens();
  j["relations"] = M.relations().to_text();
  if (M.degrees()) j["degrees"] = *M.degrees();
  j["graded"] = M.graded();
  return j;
}

Json iso_to_json(const IsoVerdict& v) {
  Json j;
  switch (v.kind) {
    case IsoVerdict::Kind::Yes: j["verdict"] = "Yes"; break;
    case IsoVerdict::Kind::No: j["verdict"] = "No"; break;
    default: j["verdict"] = "Inconclusive"; break;
  }
  if (v.kind == IsoVerdict::Kind::No) j["reason"] = v.reason;
  if (v.kind == IsoVerdict::Kind::Inconclusive) j["trials"] = v.trials;
  if (v.fwd && v.bwd) {
    Json w;
    w["forward"] = v.fwd->matrix().to_text();
    w["backward"] = v.bwd->matrix().to_text();
    j["matrices"] = w;
  }
  return j;
}

Json linkage_to_json(const LinkageReport& r) {
  Json j;
  j["verdict"] = link_verdict_label(r.verdict);
  Json ev = Json::array();
  for (const auto& e : r.evidence) {
    Json item;
    item["name"] = e.name;
    item["value"] = e.value;
    if (e.iso) item["iso"] = iso_to_json(*e.iso);
    ev.push_back(item);
  }
  j["evidence"] = ev;
  if (r.partner_first) j["computed_partner_first"] = module_to_json(*r.partner_first);
  if (r.partner_second) j["computed_partner_second"] = module_to_json(*r.partner_second);
  return j;
}

Json sheaf_report_to_json(const SheafReport& r) {
  Json j;
  j["verdict"] = r.overall;
  if (!r.checks.empty()) {
    Json checks = Json::array();
    for (const auto& c : r.checks) {
      Json item;
      item["name"] = c.name;
      item["pass"] = c.pass;
      if (!c.detail.empty()) item["detail"] = c.detail;
      checks.push_back(item);
    }
    j["checks"] = checks;
  }
  if (!r.chart_verdicts.empty()) {
    Json charts = Json::array();
    for (const auto& cv : r.chart_verdicts) {
      Json item;
      item["chart"] = cv.chart;
      item["verdict"] = cv.verdict;
      if (cv.link) item["report"] = linkage_to_json(*cv.link);
      charts.push_back(item);
    }
    j["chart_reports"] = charts;
  }
  if (r.rank) j["rank"] = *r.rank;
  if (r.corank) j["corank"] = Json::array({r.corank->first, r.corank->second});
  return j;
}

namespace {

void render_text(const Json& j, std::ostream& os, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object() || it.value().is_array()) {
        os << pad << it.key() << ":\n";
        render_text(it.value(), os, indent + 1);
      } else {
        os << pad << it.key() << ": " << (it.value().is_string()
                                              ? it.value().get<std::string>()
                                              : it.value().dump())
           << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& item : j) {
      if (item.is_object() || item.is_array()) {
        os << pad << "-\n";
        render_text(item, os, indent + 1);
      } else {
        os << pad << "- "
           << (item.is_string() ? item.get<std::string>() : item.dump()) << "\n";
      }
    }
  } else {
    os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render_report(const CommandResult& r, ReportFormat format) {
  if (format == ReportFormat::Json) {
    Json out;
    out["command"] = r.command;
    out["result"] = r.result;
    out["exit_code"] = r.exit_code;
    return out.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "command: " << r.command << "\n";
  render_text(r.result, os, 0);
  os << "exit: " << r.exit_code << "\n";
  return os.str();
}

}  // namespace modlink
