#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modlink/command.hpp"

#include "fixtures.hpp"

using namespace modlink;

namespace {

const char* NODAL = R"(
field 32003
ring R vars x y order grevlex mod [x*y]
ideal px over R gens [x]
ideal py over R gens [y]
ideal zero over R gens []
module M over R rel [[x]]
module N over R rel [[y]]
module F over R rel [[]]
)";

CommandResult run(const SessionFile& s, std::vector<std::string> args, int trials = 64) {
  RunOptions opts;
  opts.ctx.trials = trials;
  return run_command(s, args, opts);
}

}  // namespace

TEST_CASE("session parsing") {
  SUBCASE("declarations resolve in order") {
    SessionFile s = parse_session(NODAL);
    CHECK(s.prime == 32003);
    CHECK(s.rings.count("R") == 1);
    CHECK(s.modules.count("M") == 1);
    CHECK(s.module("M").gens() == 1);
    CHECK(s.declarations.size() == 7);
  }
  SUBCASE("reference to an undeclared ring carries the line number") {
    const char* bad = "field 32003\nmodule M over R rel [[x]]\n";
    try {
      parse_session(bad);
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
      CHECK(std::string(e.what()).find("unknown ring") != std::string::npos);
    }
  }
  SUBCASE("duplicate names are rejected") {
    const char* bad = "ring R vars x order grevlex\nring R vars y order grevlex\n";
    CHECK_THROWS_AS(parse_session(bad), Error);
  }
  SUBCASE("comments and blank lines are ignored") {
    SessionFile s = parse_session("# header\n\nring R vars x order grevlex # trailing\n");
    CHECK(s.rings.count("R") == 1);
  }
  SUBCASE("render round-trip reproduces the session") {
    SessionFile s = parse_session(NODAL);
    SessionFile t = parse_session(render_session(s));
    CHECK(t.equal_to(s));
    CHECK(render_session(t) == render_session(s));
  }
  SUBCASE("sheaf blocks round-trip") {
    SessionFile s = parse_session(fixtures::nodal_chain_session());
    SessionFile t = parse_session(render_session(s));
    CHECK(t.equal_to(s));
  }
}

TEST_CASE("ring and ideal commands") {
  SessionFile s = parse_session(NODAL);
  SUBCASE("gb") {
    CommandResult r = run(s, {"gb", "px"});
    CHECK(r.exit_code == 0);
    CHECK(r.result["groebner"][0] == "x");
  }
  SUBCASE("nf") {
    CommandResult r = run(s, {"nf", "px", "x^2 + y"});
    CHECK(r.result["normal_form"] == "y");
  }
  SUBCASE("colon") {
    CommandResult r = run(s, {"colon", "zero", "px"});
    CHECK(r.result["colon"][0] == "y");
  }
  SUBCASE("intersect") {
    CommandResult r = run(s, {"intersect", "px", "py"});
    CHECK(r.result["intersection"].empty());  // (x) ∩ (y) = (xy) = 0 in the nodal ring
  }
  SUBCASE("ideal-link") {
    CommandResult r = run(s, {"ideal-link", "px", "py", "zero"});
    CHECK(r.result["verified"] == true);
    CHECK(r.result["partner_of_first"][0] == "y");
  }
  SUBCASE("unknown command") {
    CHECK_THROWS_AS(run(s, {"frobnicate", "px"}), Error);
  }
  SUBCASE("arity mismatch") {
    CHECK_THROWS_AS(run(s, {"colon", "px"}), Error);
  }
}

TEST_CASE("module commands") {
  SessionFile s = parse_session(NODAL);
  SUBCASE("resolve") {
    RunOptions opts;
    opts.verify = true;
    CommandResult r = run_command(s, {"resolve", "M", "--length", "4"}, opts);
    CHECK(r.result["maps"][0] == "[[x]]");
    CHECK(r.result["maps"][1] == "[[y]]");
    CHECK(r.result["exact"] == true);
  }
  SUBCASE("betti") {
    CommandResult r = run(s, {"betti", "M"});
    CHECK(r.result["betti"][0] == 1);
    CHECK(r.result["betti"][1] == 1);
  }
  SUBCASE("transpose and lambda") {
    CommandResult r = run(s, {"lambda", "M"});
    CHECK(r.result["module"]["relations"] == "[[y]]");
    CommandResult f = run(s, {"lambda", "F"});
    CHECK(f.result["module"]["gens"] == 0);
    CHECK(f.result.contains("note"));
  }
  SUBCASE("stable-part") {
    CommandResult r = run(s, {"stable-part", "F"});
    CHECK(r.result["free_rank"] == 1);
  }
  SUBCASE("projective") {
    CHECK(run(s, {"projective", "F"}).result["projective"] == true);
    CHECK(run(s, {"projective", "M"}).result["projective"] == false);
  }
}

TEST_CASE("linkage commands and exit codes") {
  SessionFile s = parse_session(NODAL);
  SUBCASE("golden pair is linked with exit 0") {
    CommandResult r = run(s, {"link-pair", "M", "N"});
    CHECK(r.exit_code == 0);
    CHECK(r.result["verdict"] == "Linked");
    CHECK(r.result["evidence"][0]["iso"]["verdict"] == "Yes");
    CHECK(r.result["evidence"][1]["iso"]["verdict"] == "Yes");
  }
  SUBCASE("definitive negative still exits 0") {
    CommandResult r = run(s, {"link-module", "F"});
    CHECK(r.exit_code == 0);
    CHECK(r.result["verdict"] == "NotLinked");
  }
  SUBCASE("inconclusive exits 2") {
    // with no random trials the witness search cannot combine basis homs
    SessionFile s2 = parse_session(
        "field 32003\nring R vars x y order grevlex mod [x*y]\n"
        "module D over R rel [[x, 0],[0, x]]\n");
    CommandResult r = run(s2, {"link-module", "D"}, 0);
    CHECK(r.exit_code == 2);
    CHECK(r.result["verdict"] == "Inconclusive");
    // with the default budget the verdict becomes definitive
    CommandResult ok = run(s2, {"link-module", "D"});
    CHECK(ok.exit_code == 0);
    CHECK(ok.result["verdict"] == "Linked");
  }
  SUBCASE("ass membership") {
    CommandResult r = run(s, {"ass", "px", "F"});
    CHECK(r.result["member"] == true);
    CHECK(r.result["witness"][0] == "y");
    CHECK(r.result["primality"] == "verified");
  }
}

TEST_CASE("sheaf commands") {
  SessionFile s = parse_session(fixtures::nodal_chain_session());
  SUBCASE("validate") {
    CommandResult r = run(s, {"sheaf-validate", "F"});
    CHECK(r.result["verdict"] == "Yes");
  }
  SUBCASE("linked") {
    CommandResult r = run(s, {"sheaf-linked", "F"});
    CHECK(r.exit_code == 0);
    CHECK(r.result["verdict"] == "Yes");
    CHECK(r.result["chart_reports"][0]["chart"] == "C1");
    CHECK(r.result["chart_reports"][1]["chart"] == "C2");
  }
  SUBCASE("lambda") {
    CommandResult r = run(s, {"sheaf-lambda", "F"});
    CHECK(r.result["chart_reports"][0]["module"]["relations"] == "[[y1]]");
    CHECK(r.result["validation"]["verdict"] == "Yes");
  }
  SUBCASE("glue") {
    CommandResult r = run(s, {"sheaf-glue", "F"});
    CHECK(r.result["corank"][0] == 1);
    CHECK(r.result["corank"][1] == 1);
    CHECK(r.result["linked"]["verdict"] == "Yes");
  }
  SUBCASE("locally free") {
    SessionFile p = parse_session(fixtures::projective_line_session());
    CommandResult r = run(p, {"sheaf-locally-free", "O"});
    CHECK(r.result["verdict"] == "Yes");
    CHECK(r.result["rank"] == 1);
  }
  SUBCASE("linked subsheaf needs the witness pair") {
    SessionFile s2 = parse_session(
        std::string(fixtures::nodal_chain_session()) +
        "ideal p1 over R1 gens [x1]\n"
        "module S over R1 rel [[]]\n"
        "sheaf G\nchart C ring R1 module S\n");
    CommandResult r = run(s2, {"linked-subsheaf", "G", "C", "p1", "x1", "y1"});
    CHECK(r.result["found"] == true);
    CHECK(r.result["embedding"] == "[[y1]]");
  }
}

TEST_CASE("deterministic rendering") {
  SessionFile s = parse_session(NODAL);
  RunOptions opts;
  opts.ctx.seed = 0;
  std::vector<std::vector<std::string>> runs = {
      {"link-pair", "M", "N"}, {"gb", "px"}, {"resolve", "M", "--length", "3"}};
  for (const auto& args : runs) {
    std::string first = render_report(run_command(s, args, opts), ReportFormat::Json);
    std::string second = render_report(run_command(s, args, opts), ReportFormat::Json);
    CHECK(first == second);
  }
  SUBCASE("text and json renderings both carry the command echo") {
    CommandResult r = run_command(s, {"betti", "M"}, opts);
    CHECK(render_report(r, ReportFormat::Text).find("betti M") != std::string::npos);
    CHECK(render_report(r, ReportFormat::Json).find("\"betti M\"") != std::string::npos);
  }
}
