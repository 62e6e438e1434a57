// Acceptance suite: runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Exits nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "modlink/command.hpp"

#include "fixtures.hpp"

using namespace modlink;
using fixtures::cyclic;
using fixtures::Rand;

namespace {

SearchContext ctx;  // seed 0, 64 trials

struct Criterion {
  int number;
  std::string title;
  std::function<bool(std::string&)> run;
};

// ---------------------------------------------------------------------------
// 1. Groebner soundness on random ideals, with normal-form laws

bool criterion_groebner(std::string& detail) {
  auto start = std::chrono::steady_clock::now();
  RingPtr R3 = fixtures::space();
  Rand rnd(20240501);
  int ideals = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Polynomial> gens;
    int ngens = 1 + static_cast<int>(rnd.next() % 3);
    for (int i = 0; i < ngens; ++i) gens.push_back(rnd.poly(R3, 4, 3));
    auto gb = buchberger(gens, R3);
    ++ideals;
    for (std::size_t i = 0; i < gb.size(); ++i)
      for (std::size_t j = i + 1; j < gb.size(); ++j)
        if (!normal_form(spolynomial(gb[i], gb[j]), gb).is_zero()) {
          detail = "an S-polynomial failed to reduce to zero";
          return false;
        }
    for (const auto& g : gens)
      if (!normal_form(g, gb).is_zero()) {
        detail = "a generator escaped its own basis";
        return false;
      }
  }
  // 1000 random triples: idempotence and k-linearity against a fixed basis
  std::vector<Polynomial> base_gens = {R3->parse("x*y - z^2"), R3->parse("x^2 - y*z")};
  auto gb = buchberger(base_gens, R3);
  for (int i = 0; i < 1000; ++i) {
    Polynomial f = rnd.poly(R3, 4, 3);
    Polynomial g = rnd.poly(R3, 4, 3);
    Fp a = static_cast<Fp>(rnd.next() % 32003);
    Fp b = static_cast<Fp>(rnd.next() % 32003);
    Polynomial nf = normal_form(f, gb);
    if (!(normal_form(nf, gb) == nf)) {
      detail = "normal form is not idempotent";
      return false;
    }
    if (!(normal_form(f.scaled(a) + g.scaled(b), gb) ==
          normal_form(f, gb).scaled(a) + normal_form(g, gb).scaled(b))) {
      detail = "normal form is not k-linear";
      return false;
    }
  }
  auto elapsed = std::chrono::duration_cast<std::chrono::seconds>(
      std::chrono::steady_clock::now() - start);
  std::ostringstream os;
  os << ideals << " ideals, 1000 triples in " << elapsed.count() << "s";
  detail = os.str();
  return elapsed.count() < 120;
}

// ---------------------------------------------------------------------------
// 2. Resolution exactness over the three fixture rings

bool criterion_resolutions(std::string& detail) {
  std::vector<PresentedModule> mods;
  QRingPtr P = fixtures::plane_free();
  QRingPtr R = fixtures::nodal();
  QRingPtr S = fixtures::coords3();
  mods.push_back(fixtures::module_of(P, "[[x, y]]"));
  mods.push_back(fixtures::module_of(P, "[[x],[y]]"));
  mods.push_back(cyclic(R, "x"));
  mods.push_back(cyclic(R, "y"));
  mods.push_back(direct_sum(cyclic(R, "x"), cyclic(R, "y")));
  mods.push_back(cyclic(S, "x"));
  mods.push_back(cyclic(S, "x*y"));
  for (const auto& M : mods) {
    FreeResolution res = free_resolution(M, 4);
    if (!resolution_is_exact(res)) {
      detail = "a length-4 resolution failed exactness";
      return false;
    }
  }
  FreeResolution nodal_res = free_resolution(cyclic(R, "x"), 4);
  std::vector<std::string> expect = {"[[x]]", "[[y]]", "[[x]]", "[[y]]"};
  for (std::size_t i = 0; i < 4; ++i)
    if (nodal_res.maps[i].to_text() != expect[i]) {
      detail = "nodal resolution is not [x],[y],[x],[y]";
      return false;
    }
  detail = "7 modules, length 4, exactness checked";
  return true;
}

// ---------------------------------------------------------------------------
// 3. Transpose canon: stable decomposition and presentation independence

bool criterion_transpose_canon(std::string& detail) {
  for (const auto& f : fixtures::graded_suite()) {
    StablePart sp = stable_part(f.module);
    PresentedModule rebuilt =
        direct_sum(sp.module, PresentedModule::free_module(f.module.ring(), sp.free_rank));
    if (!is_isomorphic(rebuilt, f.module, ctx).yes()) {
      detail = "stable decomposition failed for " + f.name;
      return false;
    }
    MinimalizeResult min = minimalize(f.module);
    ModuleMatrix padded =
        min.module.relations().block_diag(ModuleMatrix::identity(f.module.ring(), 1));
    std::optional<Degrees> pdeg;
    if (min.module.degrees()) {
      pdeg = *min.module.degrees();
      pdeg->push_back(0);
    }
    PresentedModule tr_min = transpose_presentation(min.module.relations(), min.module.degrees());
    PresentedModule tr_pad = transpose_presentation(padded, pdeg);
    if (!is_isomorphic(stable_part(tr_min).module, stable_part(tr_pad).module, ctx).yes()) {
      detail = "padded-presentation transpose diverged for " + f.name;
      return false;
    }
  }
  detail = "12 fixture modules";
  return true;
}

// ---------------------------------------------------------------------------
// 4. The golden pair over the nodal ring, via both routes

bool criterion_golden_pair(std::string& detail) {
  SessionFile s = parse_session(
      "field 32003\nring R vars x y order grevlex mod [x*y]\n"
      "ideal px over R gens [x]\nideal py over R gens [y]\nideal zero over R gens []\n"
      "module M over R rel [[x]]\nmodule N over R rel [[y]]\n");
  RunOptions opts;
  CommandResult pair = run_command(s, {"link-pair", "M", "N"}, opts);
  if (pair.exit_code != 0 || pair.result["verdict"] != "Linked") {
    detail = "link-pair did not return Linked";
    return false;
  }
  if (pair.result["evidence"][0]["iso"]["verdict"] != "Yes" ||
      pair.result["evidence"][1]["iso"]["verdict"] != "Yes") {
    detail = "one of the isomorphism verdicts is not Yes";
    return false;
  }
  QRingPtr R = s.ring("R");
  QuotIdeal px = s.ideal("px"), py = s.ideal("py"), zero = s.ideal("zero");
  if (!verify_ideal_link(px, py, zero)) {
    detail = "ideal route rejected the zero-ideal link";
    return false;
  }
  // the two routes agree exactly
  bool module_route = pair.result["verdict"] == "Linked";
  bool ideal_route = verify_ideal_link(px, py, zero);
  if (module_route != ideal_route) {
    detail = "module and ideal routes disagree";
    return false;
  }
  detail = "module route and colon-ideal route agree";
  return true;
}

// ---------------------------------------------------------------------------
// 5. No linked module over the PID

bool criterion_pid_negative(std::string& detail) {
  auto suite = fixtures::line_suite();
  if (suite.size() < 6) {
    detail = "fixture suite too small";
    return false;
  }
  int linked = 0;
  for (const auto& f : suite) {
    LinkageReport r = is_linked_module(f.module, ctx);
    if (r.verdict == LinkVerdict::Linked) ++linked;
    if (r.verdict != LinkVerdict::NotLinked) {
      detail = f.name + " was not definitively NotLinked";
      return false;
    }
  }
  std::ostringstream os;
  os << suite.size() << " modules over the line, zero Linked verdicts";
  detail = os.str();
  return linked == 0;
}

// ---------------------------------------------------------------------------
// 6. Locally-free equivalence: projective iff transpose vanishes iff free fixture

bool criterion_locally_free(std::string& detail) {
  auto all = fixtures::graded_suite();
  auto line = fixtures::line_suite();
  all.insert(all.end(), line.begin(), line.end());
  for (const auto& f : all) {
    bool proj = is_projective(f.module);
    PresentedModule tr = transpose(f.module);
    if (proj != f.free) {
      detail = "projectivity disagrees with the fixture flag for " + f.name;
      return false;
    }
    if (proj != tr.is_zero()) {
      detail = "transpose-vanishing disagrees with projectivity for " + f.name;
      return false;
    }
  }
  std::ostringstream os;
  os << all.size() << " fixtures classified";
  detail = os.str();
  return true;
}

// ---------------------------------------------------------------------------
// 7. Lambda commutes with localization up to stable parts

bool criterion_lambda_localization(std::string& detail) {
  QRingPtr R = fixtures::nodal();
  QRingPtr U = fixtures::line_free();
  QRingPtr P = fixtures::plane_free();
  const RingPtr& Pn = R->ambient();
  const RingPtr& Pu = U->ambient();
  const RingPtr& Pp = P->ambient();

  std::vector<std::pair<PresentedModule, Polynomial>> cases;
  cases.push_back({cyclic(R, "x"), Pn->parse("y")});
  cases.push_back({cyclic(R, "x"), Pn->parse("x")});
  cases.push_back({cyclic(R, "x"), Pn->one()});
  cases.push_back({cyclic(R, "y"), Pn->parse("x")});
  cases.push_back({direct_sum(cyclic(R, "x"), cyclic(R, "y")), Pn->parse("y")});
  cases.push_back({direct_sum(cyclic(R, "x"), PresentedModule::free_module(R, 1)),
                   Pn->parse("y")});
  cases.push_back({cyclic(U, "u"), Pu->parse("u")});
  cases.push_back({cyclic(U, "u^2"), Pu->parse("u")});
  cases.push_back({fixtures::module_of(P, "[[x],[y]]"), Pp->parse("x")});
  cases.push_back({fixtures::module_of(P, "[[x, y]]"), Pp->parse("y")});
  if (cases.size() != 10) {
    detail = "expected ten fixture pairs";
    return false;
  }
  for (std::size_t i = 0; i < cases.size(); ++i) {
    auto& [M, f] = cases[i];
    auto loc = localize_module(M, f);
    PresentedModule lhs = stable_part(lambda_op(loc.module)).module;
    PresentedModule rhs = stable_part(localize_module(lambda_op(M), loc.ring)).module;
    IsoVerdict v = is_isomorphic(lhs, rhs, ctx);
    if (!v.yes()) {
      detail = "pair " + std::to_string(i) + " verdict " + v.label();
      return false;
    }
  }
  detail = "10 pairs, all verdicts Yes";
  return true;
}

// ---------------------------------------------------------------------------
// 8. Sheaf glueing on the nodal chain and the projective line

bool criterion_sheaf_glueing(std::string& detail) {
  SessionFile s = parse_session(fixtures::nodal_chain_session());
  const GluedSheaf& F = s.sheaf("F");
  if (!validate_glueing(F).all_checks_pass()) {
    detail = "nodal chain failed validation";
    return false;
  }
  GlueResult g = glue_linked(F.charts(), F.transitions(), ctx);
  if (g.t != 1 || g.k != 1) {
    detail = "co-rank is not (1,1)";
    return false;
  }
  if (sheaf_is_linked(g.sheaf, ctx).overall != "Yes") {
    detail = "glued sheaf is not linked";
    return false;
  }
  for (std::size_t i = 0; i < g.sheaf.charts().size(); ++i) {
    if (!is_isomorphic(minimalize(g.sheaf.charts()[i].module).module, F.charts()[i].module,
                       ctx)
             .yes()) {
      detail = "restriction of the glued sheaf lost a chart";
      return false;
    }
  }
  SessionFile p = parse_session(fixtures::projective_line_session());
  SheafReport free_rep = sheaf_is_locally_free(p.sheaf("O"));
  if (free_rep.overall != "Yes" || free_rep.rank != 1) {
    detail = "trivial bundle is not locally free of rank 1";
    return false;
  }
  if (sheaf_is_linked(p.sheaf("O"), ctx).overall != "No") {
    detail = "trivial bundle wrongly linked";
    return false;
  }
  detail = "nodal chain glued at (1,1); trivial bundle free of rank 1, not linked";
  return true;
}

// ---------------------------------------------------------------------------
// 9. Associated primes and the linked subsheaf on the nodal chart

bool criterion_ass_subsheaf(std::string& detail) {
  QRingPtr R = fixtures::nodal();
  const RingPtr& P = R->ambient();
  PresentedModule ring_mod = PresentedModule::free_module(R, 1);
  QuotIdeal px(R, {P->parse("x")});
  AssResult a = ass_member(px, ring_mod, ctx);
  if (!a.member || !a.witness || !((*a.witness)[0] == P->parse("y"))) {
    detail = "ass_member missed the witness y";
    return false;
  }
  LinkedSubmodule sub = linked_submodule_from_prime(
      px, ring_mod, ZeroDivisorWitness{P->parse("x"), P->parse("y")}, ctx);
  if (sub.submodule_report.verdict != LinkVerdict::Linked) {
    detail = "embedded submodule is not linked";
    return false;
  }
  QuotIdeal pxy(R, {P->parse("x"), P->parse("y")});
  if (ass_member(pxy, ring_mod, ctx).member) {
    detail = "maximal ideal wrongly associated";
    return false;
  }
  detail = "witness y found; R/p embedding is linked; (x,y) rejected";
  return true;
}

// ---------------------------------------------------------------------------
// 10. Byte-identical json under a fixed seed

bool criterion_determinism(std::string& detail) {
  std::string nodal_text =
      "field 32003\nring R vars x y order grevlex mod [x*y]\n"
      "ideal px over R gens [x]\nideal py over R gens [y]\nideal zero over R gens []\n"
      "module M over R rel [[x]]\nmodule N over R rel [[y]]\nmodule F over R rel [[]]\n";
  std::vector<std::vector<std::string>> commands = {
      {"gb", "px"},
      {"nf", "px", "x^2 + y"},
      {"colon", "zero", "px"},
      {"intersect", "px", "py"},
      {"resolve", "M", "--length", "4"},
      {"betti", "M"},
      {"dual", "M"},
      {"hom", "M", "N"},
      {"transpose", "M"},
      {"lambda", "M"},
      {"stable-part", "F"},
      {"link-pair", "M", "N"},
      {"link-module", "M"},
      {"projective", "M"},
      {"ideal-link", "px", "py", "zero"},
      {"ass", "px", "F"},
  };
  RunOptions opts;
  opts.ctx.seed = 0;
  for (const auto& args : commands) {
    SessionFile s1 = parse_session(nodal_text);
    std::string first = render_report(run_command(s1, args, opts), ReportFormat::Json);
    SessionFile s2 = parse_session(nodal_text);
    std::string second = render_report(run_command(s2, args, opts), ReportFormat::Json);
    if (first != second) {
      detail = "output differs for '" + args[0] + "'";
      return false;
    }
  }
  // sheaf commands against the chain fixture
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"sheaf-validate", "F"}, {"sheaf-lambda", "F"}, {"sheaf-linked", "F"},
           {"sheaf-glue", "F"}, {"sheaf-locally-free", "F"}}) {
    SessionFile s1 = parse_session(fixtures::nodal_chain_session());
    std::string first = render_report(run_command(s1, args, opts), ReportFormat::Json);
    SessionFile s2 = parse_session(fixtures::nodal_chain_session());
    std::string second = render_report(run_command(s2, args, opts), ReportFormat::Json);
    if (first != second) {
      detail = "sheaf output differs for '" + args[0] + "'";
      return false;
    }
  }
  detail = "21 commands byte-identical across repeated runs";
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "Groebner soundness on 200 random ideals", criterion_groebner},
      {2, "resolution exactness and the nodal periodic resolution", criterion_resolutions},
      {3, "transpose canon under stabilization", criterion_transpose_canon},
      {4, "linkage golden pair by both routes", criterion_golden_pair},
      {5, "no linked modules over a PID", criterion_pid_negative},
      {6, "locally free iff transpose vanishes", criterion_locally_free},
      {7, "lambda-localization commutation", criterion_lambda_localization},
      {8, "sheaf glueing fixtures", criterion_sheaf_glueing},
      {9, "associated primes and linked subsheaves", criterion_ass_subsheaf},
      {10, "deterministic json output", criterion_determinism},
  };

  int failures = 0;
  for (auto& c : criteria) {
    std::string detail;
    bool pass = false;
    try {
      pass = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (pass ? "[PASS]" : "[FAIL]") << " criterion " << c.number << ": " << c.title;
    if (!detail.empty()) std::cout << " — " << detail;
    std::cout << std::endl;
    if (!pass) ++failures;
  }
  if (failures) std::cout << failures << " criterion(s) failed" << std::endl;
  return failures == 0 ? 0 : 1;
}
