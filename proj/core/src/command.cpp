#include "modlink/command.hpp"

#include <sstream>

#include "modlink/error.hpp"

namespace modlink {

namespace {

std::string join_args(const std::vector<std::string>& args) {
  std::ostringstream os;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) os << " ";
    os << args[i];
  }
  return os.str();
}

Json polys_to_json(const std::vector<Polynomial>& ps) {
  Json a = Json::array();
  for (const auto& p : ps) a.push_back(p.str());
  return a;
}

int verdict_exit(LinkVerdict v) { return v == LinkVerdict::Inconclusive ? 2 : 0; }
int overall_exit(const std::string& overall) { return overall == "Inconclusive" ? 2 : 0; }

Json vec_to_json(const VecPoly& v) {
  Json a = Json::array();
  for (const auto& f : v) a.push_back(f.str());
  return a;
}

}  // namespace

CommandResult run_command(const SessionFile& session, const std::vector<std::string>& args,
                          const RunOptions& opts) {
  require(!args.empty(), "no command given");
  const std::string& cmd = args[0];
  auto want = [&](std::size_t n, const std::string& usage) {
    require(args.size() == n + 1, cmd + " expects " + usage);
  };

  CommandResult out;
  out.command = join_args(args);
  Json& j = out.result;

  if (cmd == "gb") {
    want(1, "<ideal>");
    const QuotIdeal& I = session.ideal(args[1]);
    j["groebner"] = polys_to_json(I.reduced_gens());
    j["ambient_groebner"] = polys_to_json(I.preimage().groebner());
  } else if (cmd == "nf") {
    want(2, "<ideal> <poly>");
    const QuotIdeal& I = session.ideal(args[1]);
    Polynomial f = I.ring()->ambient()->parse(args[2]);
    Ideal pre = I.preimage();
    j["normal_form"] = normal_form(f, pre.groebner()).str();
  } else if (cmd == "colon") {
    want(2, "<ideal> <ideal>");
    const QuotIdeal& I = session.ideal(args[1]);
    const QuotIdeal& J = session.ideal(args[2]);
    QuotColonResult r = quot_colon(I, J);
    j["colon"] = polys_to_json(r.ideal.reduced_gens());
    if (r.divided_by_zero) j["note"] = "colon by the zero ideal yields the unit ideal";
    if (r.ideal.is_unit()) j["unit"] = true;
  } else if (cmd == "intersect") {
    want(2, "<ideal> <ideal>");
    QuotIdeal meet = quot_intersection(session.ideal(args[1]), session.ideal(args[2]));
    j["intersection"] = polys_to_json(meet.reduced_gens());
  } else if (cmd == "resolve") {
    require(args.size() == 4 && args[2] == "--length", "resolve <module> --length <n>");
    const PresentedModule& M = session.module(args[1]);
    std::size_t n = static_cast<std::size_t>(std::stoul(args[3]));
    FreeResolution res = free_resolution(M, n);
    Json maps = Json::array();
    for (const auto& d : res.maps) maps.push_back(d.to_text());
    j["maps"] = maps;
    j["ranks"] = res.ranks;
    j["minimal"] = res.minimal_exact ? "exact" : "heuristic";
    if (opts.verify) j["exact"] = resolution_is_exact(res);
  } else if (cmd == "betti") {
    want(1, "<module>");
    BettiPair b = betti(session.module(args[1]));
    j["betti"] = Json::array({b.b0, b.b1});
    j["exact"] = b.exact;
  } else if (cmd == "dual") {
    want(1, "<module>");
    DualModule d = dual(session.module(args[1]));
    j["module"] = module_to_json(minimalize(d.module).module);
    j["generators_in_free"] = d.gens_in_free.to_text();
  } else if (cmd == "hom") {
    want(2, "<module> <module>");
    HomModule h = hom_module(session.module(args[1]), session.module(args[2]));
    j["module"] = module_to_json(minimalize(h.module).module);
    Json basis = Json::array();
    for (const auto& b : h.basis) basis.push_back(b.to_text());
    j["basis"] = basis;
    j["zero"] = h.module.is_zero();
  } else if (cmd == "transpose") {
    want(1, "<module>");
    PresentedModule tr = transpose(session.module(args[1]));
    j["module"] = module_to_json(tr);
    if (tr.is_zero()) j["note"] = "transpose vanishes; the module is projective";
  } else if (cmd == "lambda") {
    want(1, "<module>");
    const PresentedModule& M = session.module(args[1]);
    PresentedModule lam = lambda_op(M);
    j["module"] = module_to_json(lam);
    if (lam.is_zero())
      j["note"] = "lambda vanishes; free modules have vanishing transpose and lambda";
    if (opts.verify) j["sequence_exact"] = verify_lambda_sequence(M);
  } else if (cmd == "stable-part") {
    want(1, "<module>");
    StablePart sp = stable_part(session.module(args[1]));
    j["module"] = module_to_json(sp.module);
    j["free_rank"] = sp.free_rank;
  } else if (cmd == "link-pair") {
    want(2, "<module> <module>");
    LinkageReport r =
        is_linked_pair(session.module(args[1]), session.module(args[2]), opts.ctx);
    j = linkage_to_json(r);
    out.exit_code = verdict_exit(r.verdict);
  } else if (cmd == "link-module") {
    want(1, "<module>");
    LinkageReport r = is_linked_module(session.module(args[1]), opts.ctx);
    j = linkage_to_json(r);
    out.exit_code = verdict_exit(r.verdict);
  } else if (cmd == "projective") {
    want(1, "<module>");
    j["projective"] = is_projective(session.module(args[1]));
  } else if (cmd == "ideal-link") {
    want(3, "<I> <J> <x>");
    const QuotIdeal& I = session.ideal(args[1]);
    const QuotIdeal& J = session.ideal(args[2]);
    const QuotIdeal& x = session.ideal(args[3]);
    j["verified"] = verify_ideal_link(I, J, x);
    j["partner_of_first"] = polys_to_json(ideal_link_partner(I, x).reduced_gens());
    j["partner_of_second"] = polys_to_json(ideal_link_partner(J, x).reduced_gens());
  } else if (cmd == "ass") {
    want(2, "<prime-ideal> <module>");
    AssResult r = ass_member(session.ideal(args[1]), session.module(args[2]), opts.ctx);
    j["member"] = r.member;
    if (r.witness) j["witness"] = vec_to_json(*r.witness);
    j["primality"] = r.primality_verified ? "verified" : "user-asserted";
  } else if (cmd == "sheaf-validate") {
    want(1, "<sheaf>");
    SheafReport r = validate_glueing(session.sheaf(args[1]));
    j = sheaf_report_to_json(r);
  } else if (cmd == "sheaf-lambda") {
    want(1, "<sheaf>");
    GluedSheaf out_sheaf = sheaf_lambda(session.sheaf(args[1]), opts.ctx);
    Json charts = Json::array();
    for (const auto& c : out_sheaf.charts()) {
      Json item;
      item["chart"] = c.name;
      item["module"] = module_to_json(c.module);
      charts.push_back(item);
    }
    j["chart_reports"] = charts;
    Json trs = Json::array();
    for (const auto& t : out_sheaf.transitions()) {
      Json item;
      item["overlap"] = t.source + "|" + t.target;
      item["modmap"] = t.module_map.to_text();
      trs.push_back(item);
    }
    j["transitions"] = trs;
    j["validation"] = sheaf_report_to_json(validate_glueing(out_sheaf));
  } else if (cmd == "sheaf-linked") {
    want(1, "<sheaf>");
    SheafReport r = sheaf_is_linked(session.sheaf(args[1]), opts.ctx);
    j = sheaf_report_to_json(r);
    out.exit_code = overall_exit(r.overall);
  } else if (cmd == "sheaf-glue") {
    want(1, "<sheaf>");
    const GluedSheaf& S = session.sheaf(args[1]);
    GlueResult r = glue_linked(S.charts(), S.transitions(), opts.ctx);
    j["corank"] = Json::array({r.t, r.k});
    Json charts = Json::array();
    for (const auto& c : r.sheaf.charts()) {
      Json item;
      item["chart"] = c.name;
      item["module"] = module_to_json(c.module);
      charts.push_back(item);
    }
    j["chart_reports"] = charts;
    SheafReport linked = sheaf_is_linked(r.sheaf, opts.ctx);
    j["linked"] = sheaf_report_to_json(linked);
    out.exit_code = overall_exit(linked.overall);
  } else if (cmd == "sheaf-locally-free") {
    want(1, "<sheaf>");
    SheafReport r = sheaf_is_locally_free(session.sheaf(args[1]));
    j = sheaf_report_to_json(r);
  } else if (cmd == "linked-subsheaf") {
    want(5, "<sheaf> <chart> <prime-ideal> <f> <g>");
    const GluedSheaf& S = session.sheaf(args[1]);
    const Chart& c = S.chart(args[2]);
    const QuotIdeal& p = session.ideal(args[3]);
    ZeroDivisorWitness w{c.ring->ambient()->parse(args[4]), c.ring->ambient()->parse(args[5])};
    SubsheafReport r = sheaf_has_linked_subsheaf(S, args[2], p, w, opts.ctx);
    j["found"] = r.found;
    Json checks = Json::array();
    for (const auto& ch : r.checks) {
      Json item;
      item["name"] = ch.name;
      item["pass"] = ch.pass;
      checks.push_back(item);
    }
    j["checks"] = checks;
    if (r.submodule) {
      j["embedding"] = r.submodule->embedding.matrix().to_text();
      j["submodule_report"] = linkage_to_json(r.submodule->submodule_report);
    }
  } else {
    fail("unknown command '" + cmd + "'");
  }
  return out;
}

}  // namespace modlink
