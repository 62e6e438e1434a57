#include "modlink/sheaf.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "modlink/error.hpp"

namespace modlink {

GluedSheaf::GluedSheaf(std::vector<Chart> charts, std::vector<Transition> transitions)
    : charts_(std::move(charts)), transitions_(std::move(transitions)) {
  require(!charts_.empty(), "sheaf needs at least one chart");
  for (std::size_t i = 0; i < charts_.size(); ++i) {
    require(charts_[i].module.ring()->same_as(*charts_[i].ring),
            "chart module over a different ring");
    for (std::size_t j = i + 1; j < charts_.size(); ++j)
      require(charts_[i].name != charts_[j].name, "chart names must be unique");
  }
  for (const auto& t : transitions_) {
    require(t.source != t.target, "transition needs two distinct charts");
    chart_index(t.source);
    chart_index(t.target);
  }
  for (std::size_t i = 0; i < transitions_.size(); ++i)
    for (std::size_t j = i + 1; j < transitions_.size(); ++j) {
      bool same = (transitions_[i].source == transitions_[j].source &&
                   transitions_[i].target == transitions_[j].target) ||
                  (transitions_[i].source == transitions_[j].target &&
                   transitions_[i].target == transitions_[j].source);
      require(!same, "duplicate transition for one chart pair");
    }
}

std::size_t GluedSheaf::chart_index(const std::string& name) const {
  for (std::size_t i = 0; i < charts_.size(); ++i)
    if (charts_[i].name == name) return i;
  fail("unknown chart '" + name + "'");
}

const Chart& GluedSheaf::chart(const std::string& name) const {
  return charts_[chart_index(name)];
}

std::optional<std::size_t> GluedSheaf::find_transition(const std::string& a,
                                                       const std::string& b) const {
  for (std::size_t i = 0; i < transitions_.size(); ++i) {
    const auto& t = transitions_[i];
    if ((t.source == a && t.target == b) || (t.source == b && t.target == a)) return i;
  }
  return std::nullopt;
}

bool GluedSheaf::connected() const {
  std::vector<bool> seen(charts_.size(), false);
  std::queue<std::size_t> bfs;
  bfs.push(0);
  seen[0] = true;
  while (!bfs.empty()) {
    std::size_t at = bfs.front();
    bfs.pop();
    for (const auto& t : transitions_) {
      std::size_t a = chart_index(t.source), b = chart_index(t.target);
      if (a == at && !seen[b]) { seen[b] = true; bfs.push(b); }
      if (b == at && !seen[a]) { seen[a] = true; bfs.push(a); }
    }
  }
  for (bool s : seen)
    if (!s) return false;
  return true;
}

bool SheafReport::all_checks_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

// z with z·f ≡ 1, via a lift of 1 into (f) + defining
std::optional<Polynomial> invert_in(const QRingPtr& R, const Polynomial& f) {
  VecPoly target{R->ambient()->one()};
  auto x = qmodule_lift(R, {VecPoly{R->reduce(f)}}, 1, target);
  if (!x) return std::nullopt;
  return (*x)[0];
}

// inclusion of the base quotient ring into a localization, entrywise
ModuleMatrix lift_matrix(const ModuleMatrix& A, const LocalizedRing& L) {
  ModuleMatrix out(L.presentation, A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) out.set_entry(i, j, L.lift(A.entry(i, j)));
  return out;
}

ModuleMatrix map_matrix(const RingMap& phi, const ModuleMatrix& A) {
  ModuleMatrix out(phi.to(), A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) out.set_entry(i, j, phi.apply(A.entry(i, j)));
  return out;
}

// everything needed to move from one localized chart to another, oriented
// `from -> to`; matrices live over to_loc.presentation
struct DirectedOverlap {
  LocalizedRing from_loc, to_loc;
  RingMap base_map;  // from-chart ambient -> to localization
  ModuleMatrix modmap;
};

RingMap make_full_map(const LocalizedRing& src, const QRingPtr& tgt_pres,
                      const std::vector<Polynomial>& base_images) {
  const RingPtr& A = src.presentation->ambient();
  RingMap base(src.base->ambient(), tgt_pres, base_images);
  Polynomial f_img = base.apply(src.element);
  auto inv = invert_in(tgt_pres, f_img);
  require(inv.has_value(), "localized element is not invertible across the overlap");
  std::vector<Polynomial> images = base.images();
  images.push_back(*inv);
  require(images.size() == A->nvars(), "ring map arity mismatch");
  return RingMap(A, tgt_pres, images);
}

// inverse of a bijective module matrix over its own localization
ModuleMatrix invert_module_map(const QRingPtr& L, const ModuleMatrix& T,
                               const ModuleMatrix& target_relations) {
  std::size_t r_t = T.rows(), r_s = T.cols();
  std::vector<VecPoly> span = T.columns();
  for (auto& c : target_relations.columns()) span.push_back(c);
  ModuleMatrix X(L, r_s, r_t);
  for (std::size_t m = 0; m < r_t; ++m) {
    VecPoly e = vp_zero(L->ambient(), r_t);
    e[m] = L->ambient()->one();
    auto x = qmodule_lift(L, span, r_t, e);
    require(x.has_value(), "transition module map is not surjective; cannot invert");
    for (std::size_t i = 0; i < r_s; ++i) X.set_entry(i, m, (*x)[i]);
  }
  return X;
}

DirectedOverlap directed_overlap(const GluedSheaf& S, const Transition& t, bool forward) {
  const Chart& src = S.chart(forward ? t.source : t.target);
  const Chart& tgt = S.chart(forward ? t.target : t.source);
  LocalizedRing src_loc = localize_ring(src.ring, forward ? t.f_source : t.f_target);
  LocalizedRing tgt_loc = localize_ring(tgt.ring, forward ? t.f_target : t.f_source);

  const std::vector<Polynomial>& imgs = forward ? t.ring_images : t.inverse_images;
  RingMap base(src.ring->ambient(), tgt_loc.presentation, imgs);

  if (forward) {
    return DirectedOverlap{std::move(src_loc), std::move(tgt_loc), std::move(base),
                           t.module_map};
  }
  // reverse: invert the module matrix on the declared side, then carry it
  // across the declared inverse ring map
  const Chart& dtgt = S.chart(t.target);
  LocalizedRing l_t = localize_ring(dtgt.ring, t.f_target);
  ModuleMatrix A_t = lift_matrix(dtgt.module.relations(), l_t);
  ModuleMatrix X = invert_module_map(l_t.presentation, t.module_map, A_t);
  RingMap back = make_full_map(l_t, tgt_loc.presentation, t.inverse_images);
  ModuleMatrix modmap = map_matrix(back, X);
  return DirectedOverlap{std::move(src_loc), std::move(tgt_loc), std::move(base),
                         std::move(modmap)};
}

// numerator form of an element of a localization: multiply out the inverse
// variable against the localized element and drop to the base ring
Polynomial clear_inverse_var(const LocalizedRing& L, const Polynomial& q_in) {
  const RingPtr& A = L.presentation->ambient();
  Polynomial q = L.presentation->reduce(q_in);
  std::size_t tvar = A->nvars() - 1;
  std::uint32_t d = 0;
  for (const auto& term : q.terms()) d = std::max(d, term.mono[tvar]);
  Polynomial f_up = L.lift(L.element);
  Polynomial acc = A->zero();
  for (const auto& term : q.terms()) {
    Monomial m = term.mono;
    std::uint32_t e = m[tvar];
    m[tvar] = 0;
    Polynomial piece = A->monomial(term.coeff, m);
    for (std::uint32_t i = 0; i + e < d; ++i) piece = piece * f_up;
    acc = acc + piece;
  }
  const RingPtr& B = L.base->ambient();
  Polynomial out = B->zero();
  for (const auto& term : acc.terms()) {
    require(term.mono[tvar] == 0, "inverse variable failed to clear");
    Monomial m = Monomial::one(B->nvars());
    for (std::size_t v = 0; v < B->nvars(); ++v) m[v] = term.mono[v];
    out = out + B->monomial(term.coeff, m);
  }
  return L.base->reduce(out);
}

struct TripleCheck {
  bool pass = true;
  std::string detail;
};

// cocycle over the common localization, in the coordinates of chart c
TripleCheck check_triple(const GluedSheaf& S, std::size_t ia, std::size_t ib, std::size_t ic) {
  const Chart& A = S.charts()[ia];
  const Chart& B = S.charts()[ib];
  const Chart& C = S.charts()[ic];
  auto t_ab = S.find_transition(A.name, B.name);
  auto t_bc = S.find_transition(B.name, C.name);
  auto t_ac = S.find_transition(A.name, C.name);
  TripleCheck out;

  DirectedOverlap ab = directed_overlap(S, S.transitions()[*t_ab],
                                        S.transitions()[*t_ab].source == A.name);
  DirectedOverlap bc = directed_overlap(S, S.transitions()[*t_bc],
                                        S.transitions()[*t_bc].source == B.name);
  DirectedOverlap ac = directed_overlap(S, S.transitions()[*t_ac],
                                        S.transitions()[*t_ac].source == A.name);

  // invert f(ac), f(bc) and the numerator of the b-side overlap element
  Polynomial f1 = ac.to_loc.element;
  Polynomial f2 = bc.to_loc.element;
  Polynomial g_ab_in_c = bc.base_map.apply(ab.to_loc.element);
  Polynomial w = clear_inverse_var(bc.to_loc, g_ab_in_c);
  Polynomial h = C.ring->reduce(f1 * f2 * w);
  if (h.is_zero()) {
    out.detail = "empty triple overlap";
    return out;
  }
  LocalizedRing big = localize_ring(C.ring, h);

  auto embed_loc = [&](const LocalizedRing& loc) {
    std::vector<Polynomial> imgs;
    const RingPtr& amb = big.presentation->ambient();
    for (std::size_t v = 0; v < C.ring->ambient()->nvars(); ++v) imgs.push_back(amb->var(v));
    auto inv = invert_in(big.presentation, big.lift(loc.element));
    require(inv.has_value(), "common localization misses an inverse");
    imgs.push_back(*inv);
    return RingMap(loc.presentation->ambient(), big.presentation, imgs);
  };
  RingMap from_ac = embed_loc(ac.to_loc);
  RingMap from_bc = embed_loc(bc.to_loc);

  // chart-b elements through bc into the big ring
  std::vector<Polynomial> chi_imgs;
  for (const auto& img : bc.base_map.images()) chi_imgs.push_back(from_bc.apply(img));
  RingMap chi_b(B.ring->ambient(), big.presentation, chi_imgs);

  std::vector<Polynomial> ab_imgs = chi_imgs;
  Polynomial g_img = chi_b.apply(ab.to_loc.element);
  auto g_inv = invert_in(big.presentation, g_img);
  if (!g_inv) {
    out.pass = false;
    out.detail = "b-side overlap element not invertible on the triple overlap";
    return out;
  }
  ab_imgs.push_back(*g_inv);
  RingMap from_ab(ab.to_loc.presentation->ambient(), big.presentation, ab_imgs);

  for (std::size_t v = 0; v < A.ring->ambient()->nvars(); ++v) {
    Polynomial direct = from_ac.apply(ac.base_map.images()[v]);
    Polynomial composed = from_ab.apply(ab.base_map.images()[v]);
    if (!(direct == composed)) {
      out.pass = false;
      out.detail = "ring maps disagree on variable " + A.ring->ambient()->variables()[v];
      return out;
    }
  }

  // module cocycle: T_bc ∘ T_ab = T_ac into the c-chart module
  ModuleMatrix T1 = map_matrix(from_ab, ab.modmap);
  ModuleMatrix T2 = map_matrix(from_bc, bc.modmap);
  ModuleMatrix D = map_matrix(from_ac, ac.modmap);
  ModuleMatrix composed = T2.times(T1);
  ModuleMatrix A_c(big.presentation, C.module.gens(), C.module.relations().cols());
  for (std::size_t i = 0; i < A_c.rows(); ++i)
    for (std::size_t j = 0; j < A_c.cols(); ++j)
      A_c.set_entry(i, j, big.lift(C.module.relations().entry(i, j)));
  auto rel_cols = A_c.columns();
  for (std::size_t j = 0; j < composed.cols(); ++j) {
    VecPoly diff = vp_sub(composed.column(j), D.column(j));
    for (auto& f : diff) f = big.presentation->reduce(f);
    if (vp_is_zero(diff)) continue;
    if (!qmodule_member(big.presentation, rel_cols, C.module.gens(), diff)) {
      out.pass = false;
      out.detail = "module maps fail the cocycle identity";
      return out;
    }
  }
  return out;
}

// localized source module carried through the ring map, i.e. the transported
// sections the module map acts on
PresentedModule transported_module(const DirectedOverlap& ov, const PresentedModule& src) {
  ModuleMatrix rel = map_matrix(ov.base_map, src.relations());
  return PresentedModule(ov.to_loc.presentation, src.gens(), rel, std::nullopt);
}

}  // namespace

SheafReport validate_glueing(const GluedSheaf& S) {
  SheafReport rep;
  rep.checks.push_back({"connected overlap graph", S.connected(), ""});

  for (const auto& t : S.transitions()) {
    std::string tag = "overlap " + t.source + "|" + t.target;
    try {
      const Chart& src = S.chart(t.source);
      const Chart& tgt = S.chart(t.target);
      LocalizedRing sl = localize_ring(src.ring, t.f_source);
      LocalizedRing tl = localize_ring(tgt.ring, t.f_target);

      RingMap fwd = make_full_map(sl, tl.presentation, t.ring_images);
      bool ok = true;
      std::string why;
      for (const auto& d : sl.presentation->defining().gens())
        if (!fwd.apply(d).is_zero()) { ok = false; why = "forward map breaks a relation"; }
      rep.checks.push_back({tag + ": ring map well-defined", ok, why});

      RingMap bwd = make_full_map(tl, sl.presentation, t.inverse_images);
      ok = true;
      why.clear();
      for (const auto& d : tl.presentation->defining().gens())
        if (!bwd.apply(d).is_zero()) { ok = false; why = "inverse map breaks a relation"; }
      rep.checks.push_back({tag + ": inverse map well-defined", ok, why});

      ok = true;
      why.clear();
      for (std::size_t v = 0; v < sl.presentation->ambient()->nvars(); ++v) {
        Polynomial roundtrip = bwd.apply(fwd.apply(sl.presentation->ambient()->var(v)));
        if (!(roundtrip == sl.presentation->reduce(sl.presentation->ambient()->var(v)))) {
          ok = false;
          why = "round trip fails on " + sl.presentation->ambient()->variables()[v];
        }
      }
      for (std::size_t v = 0; v < tl.presentation->ambient()->nvars(); ++v) {
        Polynomial roundtrip = fwd.apply(bwd.apply(tl.presentation->ambient()->var(v)));
        if (!(roundtrip == tl.presentation->reduce(tl.presentation->ambient()->var(v)))) {
          ok = false;
          why = "round trip fails on " + tl.presentation->ambient()->variables()[v];
        }
      }
      rep.checks.push_back({tag + ": maps are mutually inverse", ok, why});

      DirectedOverlap ov = directed_overlap(S, t, true);
      PresentedModule src_mod = transported_module(ov, src.module);
      PresentedModule tgt_mod = localize_module(tgt.module, tl);
      ModuleHom h(src_mod, tgt_mod, t.module_map);
      bool wd = h.well_defined();
      rep.checks.push_back({tag + ": module map well-defined", wd, ""});
      if (wd) {
        bool bij = cokernel(h).is_zero() && kernel(h).module.is_zero();
        rep.checks.push_back({tag + ": module map bijective", bij, ""});
      }
    } catch (const Error& e) {
      rep.checks.push_back({tag, false, e.what()});
    }
  }

  for (std::size_t a = 0; a < S.charts().size(); ++a)
    for (std::size_t b = a + 1; b < S.charts().size(); ++b)
      for (std::size_t c = b + 1; c < S.charts().size(); ++c) {
        const std::string &na = S.charts()[a].name, &nb = S.charts()[b].name,
                          &nc = S.charts()[c].name;
        if (!S.find_transition(na, nb) || !S.find_transition(nb, nc) ||
            !S.find_transition(na, nc))
          continue;
        std::string tag = "cocycle " + na + "|" + nb + "|" + nc;
        try {
          TripleCheck tc = check_triple(S, a, b, c);
          rep.checks.push_back({tag, tc.pass, tc.detail});
        } catch (const Error& e) {
          rep.checks.push_back({tag, false, e.what()});
        }
      }

  rep.overall = rep.all_checks_pass() ? "Yes" : "No";
  return rep;
}

PresentedModule restrict_chart(const GluedSheaf& S, const std::string& chart,
                               const Polynomial& f) {
  const Chart& c = S.chart(chart);
  return localize_module(c.module, f).module;
}

namespace {

struct ChartOperator {
  PresentedModule out;  // minimalized chart image
  ModuleMatrix mu;      // raw -> out
  ModuleMatrix nu;      // out -> raw
  ModuleMatrix a_min;   // minimal presentation of the chart module
  ModuleMatrix t_min;   // chart module -> minimal module
  ModuleMatrix s_min;   // minimal module -> chart module
};

ChartOperator chart_lambda(const Chart& c) {
  MinimalizeResult min = minimalize(c.module);
  DualModule star = dual(min.module);
  PresentedModule raw(c.ring, min.module.gens(), star.gens_in_free, std::nullopt);
  MinimalizeResult m2 = minimalize(raw);
  return ChartOperator{m2.module, m2.to_min, m2.from_min, min.module.relations(),
                       min.to_min, min.from_min};
}

ChartOperator chart_transpose(const Chart& c) {
  MinimalizeResult min = minimalize(c.module);
  PresentedModule raw(c.ring, min.module.relations().cols(),
                      min.module.relations().transposed(), std::nullopt);
  MinimalizeResult m2 = minimalize(raw);
  return ChartOperator{m2.module, m2.to_min, m2.from_min, min.module.relations(),
                       min.to_min, min.from_min};
}

GluedSheaf sheaf_operator(const GluedSheaf& S, bool lambda, const SearchContext& ctx) {
  std::vector<ChartOperator> ops;
  std::vector<Chart> new_charts;
  for (const auto& c : S.charts()) {
    ChartOperator op = lambda ? chart_lambda(c) : chart_transpose(c);
    new_charts.push_back(Chart{c.name, c.ring, op.out});
    ops.push_back(std::move(op));
  }

  std::vector<Transition> new_transitions;
  for (const auto& t : S.transitions()) {
    std::size_t si = S.chart_index(t.source);
    std::size_t ti = S.chart_index(t.target);
    const ChartOperator& A = ops[si];
    const ChartOperator& B = ops[ti];
    DirectedOverlap ov = directed_overlap(S, t, true);
    const QRingPtr& L = ov.to_loc.presentation;

    // transition restricted to the minimal presentations
    ModuleMatrix Tmin = lift_matrix(B.t_min, ov.to_loc)
                            .times(t.module_map)
                            .times(map_matrix(ov.base_map, A.s_min));
    ModuleMatrix As_psi = map_matrix(ov.base_map, A.a_min);
    ModuleMatrix At_loc = lift_matrix(B.a_min, ov.to_loc);
    ModuleMatrix X = invert_module_map(L, Tmin, At_loc);  // minimal target -> source

    ModuleMatrix tau_raw(L, 0, 0);
    if (lambda) {
      tau_raw = X.transposed();  // induced map on the dualized generator spaces
    } else {
      // lift X to the relation spaces: As_psi · X1 = X · At_loc
      ModuleMatrix rhs = X.times(At_loc);
      auto as_cols = As_psi.columns();
      ModuleMatrix X1(L, As_psi.cols(), rhs.cols());
      for (std::size_t m = 0; m < rhs.cols(); ++m) {
        auto x = qmodule_lift(L, as_cols, As_psi.rows(), rhs.column(m));
        require(x.has_value(),
                "transition does not lift to relations on overlap " + t.source + "|" + t.target);
        for (std::size_t i = 0; i < As_psi.cols(); ++i) X1.set_entry(i, m, (*x)[i]);
      }
      tau_raw = X1.transposed();
    }

    ModuleMatrix tau = lift_matrix(B.mu, ov.to_loc)
                           .times(tau_raw)
                           .times(map_matrix(ov.base_map, A.nu));

    // the induced map must stay an isomorphism of the localized charts; on
    // overlaps where relations die the chain-map lift is only canonical up
    // to stable equivalence, so a failed candidate falls back to a seeded
    // witness search before the data is declared inconsistent
    PresentedModule src_new(L, A.out.gens(), map_matrix(ov.base_map, A.out.relations()),
                            std::nullopt);
    PresentedModule tgt_new = localize_module(B.out, ov.to_loc);
    ModuleHom h(src_new, tgt_new, tau);
    bool good = h.well_defined() && cokernel(h).is_zero() && kernel(h).module.is_zero();
    if (!good) {
      IsoVerdict v = is_isomorphic(src_new, tgt_new, ctx);
      require(v.yes(), "induced transition fails on overlap " + t.source + "|" + t.target +
                           " (inconsistent input data)");
      tau = v.fwd->matrix();
    }

    new_transitions.push_back(Transition{t.source, t.target, t.f_source, t.f_target,
                                         t.ring_images, t.inverse_images, std::move(tau)});
  }
  return GluedSheaf(std::move(new_charts), std::move(new_transitions));
}

}  // namespace

GluedSheaf sheaf_lambda(const GluedSheaf& S, const SearchContext& ctx) {
  return sheaf_operator(S, true, ctx);
}
GluedSheaf sheaf_transpose(const GluedSheaf& S, const SearchContext& ctx) {
  return sheaf_operator(S, false, ctx);
}

SheafReport sheaf_is_linked(const GluedSheaf& S, const SearchContext& ctx) {
  SheafReport validation = validate_glueing(S);
  require(validation.all_checks_pass(), "sheaf_is_linked: glueing does not validate");

  SheafReport rep;
  bool any_not = false, any_unknown = false;
  for (const auto& c : S.charts()) {
    LinkageReport lr = is_linked_module(c.module, ctx);
    if (lr.verdict == LinkVerdict::NotLinked) any_not = true;
    if (lr.verdict == LinkVerdict::Inconclusive) any_unknown = true;
    rep.chart_verdicts.push_back({c.name, link_verdict_label(lr.verdict), std::move(lr)});
  }
  rep.overall = any_not ? "No" : (any_unknown ? "Inconclusive" : "Yes");
  return rep;
}

GlueResult glue_linked(const std::vector<Chart>& charts,
                       const std::vector<Transition>& transitions, const SearchContext& ctx) {
  GluedSheaf input(charts, transitions);
  require(input.connected(), "glueing requires a connected overlap graph");
  SheafReport validation = validate_glueing(input);
  require(validation.all_checks_pass(), "glueing data does not validate");

  std::vector<MinimalizeResult> mins;
  std::size_t t_rank = 0;
  for (const auto& c : charts) {
    LinkageReport lr = is_linked_module(c.module, ctx);
    require(lr.verdict == LinkVerdict::Linked, "chart not linked: " + c.name);
    mins.push_back(minimalize(c.module));
    t_rank = std::max(t_rank, mins.back().module.gens());
  }
  std::size_t k_rank = 0;
  for (const auto& m : mins) {
    std::size_t pad = t_rank - m.module.gens();
    k_rank = std::max(k_rank, m.module.relations().cols() + pad);
  }

  std::vector<Chart> padded;
  for (std::size_t i = 0; i < charts.size(); ++i) {
    const QRingPtr& R = charts[i].ring;
    std::size_t s = t_rank - mins[i].module.gens();
    ModuleMatrix rel = mins[i].module.relations().block_diag(ModuleMatrix::identity(R, s));
    std::size_t extra = k_rank - rel.cols();
    rel = rel.hcat(ModuleMatrix(R, rel.rows(), extra));
    std::optional<Degrees> deg = mins[i].module.degrees();
    if (deg) deg->insert(deg->end(), s, 0);
    PresentedModule padded_mod(R, t_rank, rel, deg);
    padded.push_back(Chart{charts[i].name, R, std::move(padded_mod)});
  }

  std::vector<Transition> new_transitions;
  for (const auto& t : transitions) {
    std::size_t si = input.chart_index(t.source);
    std::size_t ti = input.chart_index(t.target);
    DirectedOverlap ov = directed_overlap(input, t, true);
    ModuleMatrix Tmin = lift_matrix(mins[ti].to_min, ov.to_loc)
                            .times(t.module_map)
                            .times(map_matrix(ov.base_map, mins[si].from_min));
    // pad with zero blocks; the added generators are zero in the modules
    ModuleMatrix padded_map(ov.to_loc.presentation, t_rank, t_rank);
    for (std::size_t i = 0; i < Tmin.rows(); ++i)
      for (std::size_t j = 0; j < Tmin.cols(); ++j) padded_map.set_entry(i, j, Tmin.entry(i, j));
    new_transitions.push_back(Transition{t.source, t.target, t.f_source, t.f_target,
                                         t.ring_images, t.inverse_images,
                                         std::move(padded_map)});
  }

  GluedSheaf out(std::move(padded), std::move(new_transitions));
  SheafReport out_validation = validate_glueing(out);
  require(out_validation.all_checks_pass(), "padded sheaf failed validation");
  out_validation.corank = {t_rank, k_rank};
  return GlueResult{std::move(out), t_rank, k_rank, std::move(out_validation)};
}

SheafReport sheaf_is_locally_free(const GluedSheaf& S) {
  SheafReport rep;
  bool all_free = true;
  std::optional<std::size_t> rank;
  bool rank_conflict = false;
  for (const auto& c : S.charts()) {
    bool proj = is_projective(c.module);
    rep.chart_verdicts.push_back({c.name, proj ? "locally free" : "not locally free",
                                  std::nullopt});
    if (!proj) {
      all_free = false;
      continue;
    }
    std::size_t r = minimalize(c.module).module.gens();
    if (rank && *rank != r) rank_conflict = true;
    if (!rank) rank = r;
  }
  if (all_free && rank_conflict)
    fail("locally free with disagreeing chart ranks: transition data is corrupt");
  rep.overall = all_free ? "Yes" : "No";
  if (all_free) rep.rank = rank;
  return rep;
}

SubsheafReport sheaf_has_linked_subsheaf(const GluedSheaf& S, const std::string& chart,
                                         const QuotIdeal& p, const ZeroDivisorWitness& w,
                                         const SearchContext& ctx) {
  const Chart& c = S.chart(chart);
  SubsheafReport rep;
  require(verify_zero_divisor_pair(c.ring, w), "domain certificate invalid");
  rep.checks.push_back({"zero-divisor certificate", true, ""});

  PresentedModule ring_mod = PresentedModule::free_module(c.ring, 1);
  AssResult in_ring = ass_member(p, ring_mod, ctx);
  rep.checks.push_back({"p associated to the chart ring", in_ring.member, ""});
  AssResult in_mod = ass_member(p, c.module, ctx);
  rep.checks.push_back({"p associated to the chart module", in_mod.member, ""});
  if (!in_ring.member || !in_mod.member) return rep;

  LinkedSubmodule sub = linked_submodule_from_prime(p, c.module, w, ctx);
  rep.found = true;
  rep.submodule = std::move(sub);
  return rep;
}

}  // namespace modlink
