#ifndef MODLINK_SESSION_HPP
#define MODLINK_SESSION_HPP

#include <map>
#include <string>
#include <vector>

#include "modlink/sheaf.hpp"

namespace modlink {

/// Parsed session: named rings, ideals, modules and sheaves in declaration
/// order. Every reference resolves to an earlier declaration.
struct SessionFile {
  std::uint32_t prime = 32003;

  std::vector<std::pair<std::string, std::string>> declarations;  // (kind, name)
  std::map<std::string, QRingPtr> rings;
  std::map<std::string, QuotIdeal> ideals;
  std::map<std::string, PresentedModule> modules;
  std::map<std::string, GluedSheaf> sheaves;

  std::map<std::string, std::string> object_ring;  // ideal/module name -> ring name
  struct ChartMeta {
    std::string chart, ring, module;
  };
  std::map<std::string, std::vector<ChartMeta>> sheaf_charts;

  const QRingPtr& ring(const std::string& name) const;
  const QuotIdeal& ideal(const std::string& name) const;
  const PresentedModule& module(const std::string& name) const;
  const GluedSheaf& sheaf(const std::string& name) const;

  bool equal_to(const SessionFile& o) const;
};

/// Line-oriented grammar, `#` comments; errors carry the line number.
SessionFile parse_session(const std::string& text);

/// Canonical text: parse(render(parse(t))) resolves identically to parse(t).
std::string render_session(const SessionFile& s);

}  // namespace modlink

#endif
