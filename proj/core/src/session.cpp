#include "modlink/session.hpp"

#include <algorithm>
#include <sstream>

#include "modlink/error.hpp"

namespace modlink {

const QRingPtr& SessionFile::ring(const std::string& name) const {
  auto it = rings.find(name);
  require(it != rings.end(), "unknown ring '" + name + "'");
  return it->second;
}

const QuotIdeal& SessionFile::ideal(const std::string& name) const {
  auto it = ideals.find(name);
  require(it != ideals.end(), "unknown ideal '" + name + "'");
  return it->second;
}

const PresentedModule& SessionFile::module(const std::string& name) const {
  auto it = modules.find(name);
  require(it != modules.end(), "unknown module '" + name + "'");
  return it->second;
}

const GluedSheaf& SessionFile::sheaf(const std::string& name) const {
  auto it = sheaves.find(name);
  require(it != sheaves.end(), "unknown sheaf '" + name + "'");
  return it->second;
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// locate " kw " as a standalone word; npos when absent
std::size_t find_word(const std::string& s, const std::string& kw, std::size_t from = 0) {
  std::size_t at = from;
  while ((at = s.find(kw, at)) != std::string::npos) {
    bool left_ok = at == 0 || std::isspace(static_cast<unsigned char>(s[at - 1]));
    std::size_t end = at + kw.size();
    bool right_ok = end >= s.size() || std::isspace(static_cast<unsigned char>(s[end]));
    if (left_ok && right_ok) return at;
    ++at;
  }
  return std::string::npos;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[' || s[i] == '(') ++depth;
    if (s[i] == ']' || s[i] == ')') --depth;
    if (s[i] == sep && depth == 0) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  out.push_back(s.substr(start));
  return out;
}

// "[p1, p2, ...]" -> parts
std::vector<std::string> bracket_list(const std::string& text, const std::string& what) {
  std::string t = strip(text);
  require(t.size() >= 2 && t.front() == '[' && t.back() == ']',
          what + " must be a bracketed list");
  std::string inner = strip(t.substr(1, t.size() - 2));
  std::vector<std::string> parts;
  if (inner.empty()) return parts;
  for (auto& p : split_on(inner, ',')) parts.push_back(strip(p));
  return parts;
}

struct SheafBlock {
  std::string name;
  std::vector<SessionFile::ChartMeta> charts;
  struct Glue {
    std::string c1, c2;
    std::string loc1, loc2;
    std::vector<std::pair<std::string, std::string>> ringmap, inv;
    std::string modmap;
  };
  std::vector<Glue> glues;
};

std::vector<std::pair<std::string, std::string>> parse_arrow_list(const std::string& payload,
                                                                  const std::string& what) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto& item : split_on(strip(payload), ',')) {
    std::string it = strip(item);
    if (it.empty()) continue;
    std::size_t arrow = it.find("->");
    require(arrow != std::string::npos, what + ": expected var->poly");
    out.push_back({strip(it.substr(0, arrow)), strip(it.substr(arrow + 2))});
  }
  return out;
}

void finish_sheaf(SessionFile& s, const SheafBlock& blk) {
  require(!blk.charts.empty(), "sheaf '" + blk.name + "' has no charts");
  std::vector<Chart> charts;
  for (const auto& cm : blk.charts) {
    const QRingPtr& R = s.ring(cm.ring);
    const PresentedModule& M = s.module(cm.module);
    require(M.ring()->same_as(*R), "chart module '" + cm.module + "' is not over ring '" +
                                       cm.ring + "'");
    charts.push_back(Chart{cm.chart, R, M});
  }
  auto chart_of = [&](const std::string& n) -> const Chart& {
    for (const auto& c : charts)
      if (c.name == n) return c;
    fail("glue references unknown chart '" + n + "'");
  };

  std::vector<Transition> transitions;
  for (const auto& g : blk.glues) {
    const Chart& c1 = chart_of(g.c1);
    const Chart& c2 = chart_of(g.c2);
    Polynomial f1 = c1.ring->parse(g.loc1);
    Polynomial f2 = c2.ring->parse(g.loc2);
    LocalizedRing l1 = localize_ring(c1.ring, f1);
    LocalizedRing l2 = localize_ring(c2.ring, f2);

    auto images_from = [&](const std::vector<std::pair<std::string, std::string>>& list,
                           const QRingPtr& source_ring, const LocalizedRing& target) {
      std::vector<Polynomial> imgs(source_ring->ambient()->nvars(),
                                   target.presentation->ambient()->zero());
      std::vector<bool> seen(imgs.size(), false);
      for (const auto& [var, poly] : list) {
        auto idx = source_ring->ambient()->var_index(var);
        require(idx.has_value(), "glue map names unknown variable '" + var + "'");
        imgs[*idx] = target.presentation->parse(poly);
        seen[*idx] = true;
      }
      for (std::size_t v = 0; v < imgs.size(); ++v)
        require(seen[v], "glue map missing image of variable '" +
                             source_ring->ambient()->variables()[v] + "'");
      return imgs;
    };
    std::vector<Polynomial> fwd = images_from(g.ringmap, c1.ring, l2);
    std::vector<Polynomial> bwd = images_from(g.inv, c2.ring, l1);
    ModuleMatrix mm = ModuleMatrix::parse(l2.presentation, g.modmap);
    require(mm.rows() == c2.module.gens() && mm.cols() == c1.module.gens(),
            "glue modmap shape mismatch for " + g.c1 + "|" + g.c2);
    transitions.push_back(Transition{g.c1, g.c2, c1.ring->reduce(f1), c2.ring->reduce(f2),
                                     std::move(fwd), std::move(bwd), std::move(mm)});
  }
  s.sheaves.emplace(blk.name, GluedSheaf(std::move(charts), std::move(transitions)));
  s.sheaf_charts[blk.name] = blk.charts;
  s.declarations.push_back({"sheaf", blk.name});
}

}  // namespace

SessionFile parse_session(const std::string& text) {
  SessionFile s;
  bool field_set = false;
  std::optional<SheafBlock> open_sheaf;

  auto check_fresh = [&](const std::string& name) {
    bool taken = s.rings.count(name) || s.ideals.count(name) || s.modules.count(name) ||
                 s.sheaves.count(name) || (open_sheaf && open_sheaf->name == name);
    require(!taken, "name '" + name + "' already declared");
  };

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    try {
      std::string line = strip(raw);
      std::size_t hash = line.find('#');
      if (hash != std::string::npos) line = strip(line.substr(0, hash));
      if (line.empty()) continue;

      std::istringstream ls(line);
      std::string kw;
      ls >> kw;

      if (kw != "chart" && kw != "glue" && open_sheaf) {
        finish_sheaf(s, *open_sheaf);
        open_sheaf.reset();
      }

      if (kw == "field") {
        require(!field_set, "field declared twice");
        require(s.declarations.empty(), "field must come first");
        long long p = 0;
        require(static_cast<bool>(ls >> p), "field needs a prime");
        s.prime = static_cast<std::uint32_t>(p);
        PrimeField check(s.prime);  // validates primality
        field_set = true;
      } else if (kw == "ring") {
        std::string name;
        require(static_cast<bool>(ls >> name), "ring needs a name");
        check_fresh(name);
        std::size_t vars_at = find_word(line, "vars");
        std::size_t order_at = find_word(line, "order");
        require(vars_at != std::string::npos && order_at != std::string::npos,
                "ring needs vars and order");
        std::size_t weights_at = find_word(line, "weights");
        std::size_t mod_at = find_word(line, "mod");
        std::size_t vars_end = order_at;
        std::vector<std::string> vars = split_ws(
            line.substr(vars_at + 4, vars_end - vars_at - 4));
        require(!vars.empty(), "ring needs at least one variable");

        std::size_t order_end = weights_at != std::string::npos
                                    ? weights_at
                                    : (mod_at != std::string::npos ? mod_at : line.size());
        std::string order_word = strip(line.substr(order_at + 5, order_end - order_at - 5));
        OrderKind order;
        if (order_word == "grevlex")
          order = OrderKind::Grevlex;
        else if (order_word == "lex")
          order = OrderKind::Lex;
        else
          fail("unknown order '" + order_word + "'");

        std::vector<std::uint32_t> weights;
        if (weights_at != std::string::npos) {
          std::size_t wend = mod_at != std::string::npos ? mod_at : line.size();
          for (auto& w : split_ws(line.substr(weights_at + 7, wend - weights_at - 7)))
            weights.push_back(static_cast<std::uint32_t>(std::stoul(w)));
        }
        RingPtr amb = PolynomialRing::make(PrimeField(s.prime), vars, order, weights);
        std::vector<Polynomial> defining;
        if (mod_at != std::string::npos) {
          for (auto& g : bracket_list(line.substr(mod_at + 3), "mod"))
            defining.push_back(amb->parse(g));
        }
        s.rings.emplace(name, QuotientRing::make(amb, Ideal(amb, defining)));
        s.declarations.push_back({"ring", name});
      } else if (kw == "ideal") {
        std::string name, over_kw, ring_name;
        require(static_cast<bool>(ls >> name >> over_kw >> ring_name) && over_kw == "over",
                "ideal syntax: ideal <name> over <ring> gens [..]");
        check_fresh(name);
        const QRingPtr& R = s.ring(ring_name);
        std::size_t gens_at = find_word(line, "gens");
        require(gens_at != std::string::npos, "ideal needs gens [..]");
        std::vector<Polynomial> gens;
        for (auto& g : bracket_list(line.substr(gens_at + 4), "gens"))
          gens.push_back(R->ambient()->parse(g));
        s.ideals.emplace(name, QuotIdeal(R, gens));
        s.object_ring[name] = ring_name;
        s.declarations.push_back({"ideal", name});
      } else if (kw == "module") {
        std::string name, over_kw, ring_name;
        require(static_cast<bool>(ls >> name >> over_kw >> ring_name) && over_kw == "over",
                "module syntax: module <name> over <ring> rel <matrix> [degrees ..]");
        check_fresh(name);
        const QRingPtr& R = s.ring(ring_name);
        std::size_t rel_at = find_word(line, "rel");
        require(rel_at != std::string::npos, "module needs rel <matrix>");
        std::size_t deg_at = find_word(line, "degrees", rel_at);
        std::string mat_text = strip(line.substr(
            rel_at + 3, (deg_at == std::string::npos ? line.size() : deg_at) - rel_at - 3));
        ModuleMatrix rel = ModuleMatrix::parse(R, mat_text);
        std::optional<Degrees> degrees;
        if (deg_at != std::string::npos) {
          Degrees d;
          for (auto& w : split_ws(line.substr(deg_at + 7)))
            d.push_back(std::stoll(w));
          require(d.size() == rel.rows(), "one degree per generator");
          degrees = std::move(d);
        } else if (R->homogeneous()) {
          Degrees d(rel.rows(), 0);
          if (infer_col_degrees(rel, d)) degrees = std::move(d);
        }
        s.modules.emplace(name, PresentedModule(R, rel.rows(), rel, degrees));
        s.object_ring[name] = ring_name;
        s.declarations.push_back({"module", name});
      } else if (kw == "sheaf") {
        std::string name;
        require(static_cast<bool>(ls >> name), "sheaf needs a name");
        check_fresh(name);
        open_sheaf = SheafBlock{name, {}, {}};
      } else if (kw == "chart") {
        require(open_sheaf.has_value(), "chart outside a sheaf block");
        std::string cname, ring_kw, rname, module_kw, mname;
        require(static_cast<bool>(ls >> cname >> ring_kw >> rname >> module_kw >> mname) &&
                    ring_kw == "ring" && module_kw == "module",
                "chart syntax: chart <name> ring <ring> module <module>");
        open_sheaf->charts.push_back({cname, rname, mname});
      } else if (kw == "glue") {
        require(open_sheaf.has_value(), "glue outside a sheaf block");
        std::string c1, c2;
        require(static_cast<bool>(ls >> c1 >> c2), "glue needs two chart names");
        std::size_t loc_at = find_word(line, "loc");
        std::size_t rm_at = find_word(line, "ringmap");
        std::size_t inv_at = find_word(line, "inv");
        std::size_t mm_at = find_word(line, "modmap");
        require(loc_at != std::string::npos && rm_at != std::string::npos &&
                    inv_at != std::string::npos && mm_at != std::string::npos,
                "glue syntax: glue <c1> <c2> loc p|q ringmap .. inv .. modmap ..");
        require(loc_at < rm_at && rm_at < inv_at && inv_at < mm_at,
                "glue sections must appear in order loc, ringmap, inv, modmap");
        std::string loc_payload = strip(line.substr(loc_at + 3, rm_at - loc_at - 3));
        auto halves = split_on(loc_payload, '|');
        require(halves.size() == 2, "loc needs <poly>|<poly>");
        SheafBlock::Glue g;
        g.c1 = c1;
        g.c2 = c2;
        g.loc1 = strip(halves[0]);
        g.loc2 = strip(halves[1]);
        g.ringmap = parse_arrow_list(line.substr(rm_at + 7, inv_at - rm_at - 7), "ringmap");
        g.inv = parse_arrow_list(line.substr(inv_at + 3, mm_at - inv_at - 3), "inv");
        g.modmap = strip(line.substr(mm_at + 6));
        open_sheaf->glues.push_back(std::move(g));
      } else {
        fail("unknown declaration '" + kw + "'");
      }
    } catch (const Error& e) {
      fail("line " + std::to_string(lineno) + ": " + e.what());
    } catch (const std::exception& e) {
      fail("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (open_sheaf) finish_sheaf(s, *open_sheaf);
  return s;
}

namespace {

std::string render_poly_list(const std::vector<Polynomial>& ps) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) os << ", ";
    os << ps[i].str();
  }
  os << "]";
  return os.str();
}

}  // namespace

std::string render_session(const SessionFile& s) {
  std::ostringstream os;
  os << "field " << s.prime << "\n";
  for (const auto& [kind, name] : s.declarations) {
    if (kind == "ring") {
      const QRingPtr& R = s.rings.at(name);
      os << "ring " << name << " vars";
      for (const auto& v : R->ambient()->variables()) os << " " << v;
      os << " order " << (R->ambient()->order() == OrderKind::Lex ? "lex" : "grevlex");
      os << " weights";
      for (auto w : R->ambient()->weights()) os << " " << w;
      const auto& gens = R->defining().gens();
      if (!gens.empty()) os << " mod " << render_poly_list(gens);
      os << "\n";
    } else if (kind == "ideal") {
      const QuotIdeal& I = s.ideals.at(name);
      os << "ideal " << name << " over " << s.object_ring.at(name) << " gens "
         << render_poly_list(I.gens()) << "\n";
    } else if (kind == "module") {
      const PresentedModule& M = s.modules.at(name);
      os << "module " << name << " over " << s.object_ring.at(name) << " rel "
         << M.relations().to_text();
      if (M.degrees()) {
        os << " degrees";
        for (auto d : *M.degrees()) os << " " << d;
      }
      os << "\n";
    } else if (kind == "sheaf") {
      const GluedSheaf& F = s.sheaves.at(name);
      os << "sheaf " << name << "\n";
      for (const auto& cm : s.sheaf_charts.at(name))
        os << "chart " << cm.chart << " ring " << cm.ring << " module " << cm.module << "\n";
      for (const auto& t : F.transitions()) {
        const Chart& src = F.chart(t.source);
        const Chart& tgt = F.chart(t.target);
        os << "glue " << t.source << " " << t.target << " loc " << t.f_source.str() << "|"
           << t.f_target.str() << " ringmap ";
        for (std::size_t v = 0; v < t.ring_images.size(); ++v) {
          if (v) os << ", ";
          os << src.ring->ambient()->variables()[v] << "->" << t.ring_images[v].str();
        }
        os << " inv ";
        for (std::size_t v = 0; v < t.inverse_images.size(); ++v) {
          if (v) os << ", ";
          os << tgt.ring->ambient()->variables()[v] << "->" << t.inverse_images[v].str();
        }
        os << " modmap " << t.module_map.to_text() << "\n";
      }
    }
  }
  return os.str();
}

bool SessionFile::equal_to(const SessionFile& o) const {
  if (prime != o.prime || declarations != o.declarations) return false;
  for (const auto& [name, R] : rings) {
    auto it = o.rings.find(name);
    if (it == o.rings.end() || !R->same_as(*it->second)) return false;
  }
  for (const auto& [name, I] : ideals) {
    auto it = o.ideals.find(name);
    if (it == o.ideals.end() || I.gens().size() != it->second.gens().size()) return false;
    for (std::size_t i = 0; i < I.gens().size(); ++i)
      if (!(I.gens()[i] == it->second.gens()[i])) return false;
  }
  auto same_module = [](const PresentedModule& a, const PresentedModule& b) {
    if (a.gens() != b.gens() || a.degrees() != b.degrees()) return false;
    if (a.relations().cols() != b.relations().cols()) return false;
    for (std::size_t i = 0; i < a.gens(); ++i)
      for (std::size_t j = 0; j < a.relations().cols(); ++j)
        if (!(a.relations().entry(i, j) == b.relations().entry(i, j))) return false;
    return true;
  };
  for (const auto& [name, M] : modules) {
    auto it = o.modules.find(name);
    if (it == o.modules.end() || !same_module(M, it->second)) return false;
  }
  for (const auto& [name, F] : sheaves) {
    auto it = o.sheaves.find(name);
    if (it == o.sheaves.end()) return false;
    const GluedSheaf& G = it->second;
    if (F.charts().size() != G.charts().size() ||
        F.transitions().size() != G.transitions().size())
      return false;
    for (std::size_t i = 0; i < F.charts().size(); ++i) {
      if (F.charts()[i].name != G.charts()[i].name) return false;
      if (!same_module(F.charts()[i].module, G.charts()[i].module)) return false;
    }
    for (std::size_t i = 0; i < F.transitions().size(); ++i) {
      const Transition& a = F.transitions()[i];
      const Transition& b = G.transitions()[i];
      if (a.source != b.source || a.target != b.target) return false;
      if (!(a.f_source == b.f_source) || !(a.f_target == b.f_target)) return false;
    }
  }
  return true;
}

}  // namespace modlink
