#ifndef MODLINK_COMMAND_HPP
#define MODLINK_COMMAND_HPP

#include "modlink/report.hpp"
#include "modlink/session.hpp"

namespace modlink {

struct RunOptions {
  SearchContext ctx;
  bool verify = false;  // turn on internal exactness checks
};

/// Dispatch one command against a parsed session. Unknown commands and
/// arity mistakes raise Error.
CommandResult run_command(const SessionFile& session, const std::vector<std::string>& args,
                          const RunOptions& opts = {});

}  // namespace modlink

#endif
