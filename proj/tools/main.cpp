#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "modlink/command.hpp"

int main(int argc, char** argv) {
  CLI::App app{"linkage computations for modules and sheaves over quotient rings"};
  app.allow_extras();

  std::string session_path;
  std::string format = "text";
  std::uint64_t seed = 0;
  int trials = 64;
  bool verify = false;
  app.add_option("--session", session_path, "session file defining rings, ideals, modules, sheaves")
      ->required();
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "seed for the isomorphism witness search");
  app.add_option("--trials", trials, "random trials in the witness search");
  app.add_flag("--verify", verify, "run expensive internal exactness checks");

  CLI11_PARSE(app, argc, argv);
  std::vector<std::string> command = app.remaining();

  modlink::ReportFormat fmt =
      format == "json" ? modlink::ReportFormat::Json : modlink::ReportFormat::Text;

  try {
    std::ifstream in(session_path);
    if (!in) {
      std::cerr << "error: cannot open session file '" << session_path << "'\n";
      return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    modlink::SessionFile session = modlink::parse_session(buf.str());

    modlink::RunOptions opts;
    opts.ctx.seed = seed;
    opts.ctx.trials = trials;
    opts.verify = verify;

    modlink::CommandResult result = modlink::run_command(session, command, opts);
    std::cout << modlink::render_report(result, fmt);
    return result.exit_code;
  } catch (const modlink::Error& e) {
    if (fmt == modlink::ReportFormat::Json) {
      modlink::Json err;
      err["error"] = e.what();
      err["exit_code"] = 1;
      std::cout << err.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
