#include "modlink/linkage.hpp"

#include <random>

#include "modlink/error.hpp"

namespace modlink {

std::string tri_label(Tri t) {
  switch (t) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    default: return "unknown";
  }
}

std::string link_verdict_label(LinkVerdict v) {
  switch (v) {
    case LinkVerdict::Linked: return "Linked";
    case LinkVerdict::NotLinked: return "NotLinked";
    default: return "Inconclusive";
  }
}

namespace {

std::optional<Degrees> negate(const std::optional<Degrees>& d) {
  if (!d) return std::nullopt;
  Degrees out = *d;
  for (auto& x : out) x = -x;
  return out;
}

}  // namespace

PresentedModule transpose_presentation(const ModuleMatrix& A,
                                       const std::optional<Degrees>& row_degrees) {
  const QRingPtr& R = A.ring();
  std::optional<Degrees> gen_deg;
  if (row_degrees && R->homogeneous()) {
    auto cd = infer_col_degrees(A, *row_degrees);
    gen_deg = negate(cd);
  }
  return PresentedModule(R, A.cols(), A.transposed(), gen_deg);
}

PresentedModule transpose(const PresentedModule& M) {
  MinimalizeResult min = minimalize(M);
  PresentedModule raw = transpose_presentation(min.module.relations(), min.module.degrees());
  return minimalize(raw).module;
}

PresentedModule lambda_op(const PresentedModule& M) {
  MinimalizeResult min = minimalize(M);
  DualModule star = dual(min.module);
  // coker(M* ↪ F0*): generators are those of F0*, relations the dual gens
  PresentedModule raw(M.ring(), min.module.gens(), star.gens_in_free,
                      negate(min.module.degrees()));
  return minimalize(raw).module;
}

bool verify_lambda_sequence(const PresentedModule& M) {
  MinimalizeResult min = minimalize(M);
  DualModule star = dual(min.module);
  PresentedModule lambda_raw(M.ring(), min.module.gens(), star.gens_in_free,
                             negate(min.module.degrees()));
  const ModuleMatrix& A = min.module.relations();
  PresentedModule f1_dual = PresentedModule::free_module(M.ring(), A.cols());
  ModuleHom into_free(lambda_raw, f1_dual, A.transposed());
  if (!into_free.well_defined()) return false;
  return kernel(into_free).module.is_zero();
}

StablePart stable_part(const PresentedModule& M) {
  std::size_t b0 = minimalize(M).module.gens();
  PresentedModule twice = transpose(transpose(M));
  std::size_t b0s = twice.gens();
  require(b0 >= b0s, "stable part produced negative free rank");
  return StablePart{std::move(twice), b0 - b0s};
}

Tri is_stable(const PresentedModule& M, const SearchContext& ctx) {
  StablePart sp = stable_part(M);
  if (sp.free_rank != 0) return Tri::False;
  IsoVerdict v = is_isomorphic(M, sp.module, ctx);
  if (v.yes()) return Tri::True;
  return Tri::Unknown;
}

bool is_projective(const PresentedModule& M) { return transpose(M).is_zero(); }

LinkageReport is_linked_pair(const PresentedModule& M, const PresentedModule& N,
                             const SearchContext& ctx) {
  require(M.ring()->same_as(*N.ring()), "linkage pair over different rings");
  PresentedModule lm = lambda_op(M);
  PresentedModule ln = lambda_op(N);
  IsoVerdict v1 = is_isomorphic(lm, N, ctx);
  IsoVerdict v2 = is_isomorphic(ln, M, ctx);

  LinkageReport rep;
  rep.evidence.push_back({"lambda(first) iso second", v1.label(), v1});
  rep.evidence.push_back({"lambda(second) iso first", v2.label(), v2});
  // stable comparison is informative when the plain verdict is not definite
  if (!v1.yes() || !v2.yes()) {
    IsoVerdict s1 = is_isomorphic(stable_part(lm).module, stable_part(N).module, ctx);
    IsoVerdict s2 = is_isomorphic(stable_part(ln).module, stable_part(M).module, ctx);
    rep.evidence.push_back({"stable parts: lambda(first) iso second", s1.label(), s1});
    rep.evidence.push_back({"stable parts: lambda(second) iso first", s2.label(), s2});
  }
  rep.partner_first = std::move(lm);
  rep.partner_second = std::move(ln);

  if (v1.yes() && v2.yes())
    rep.verdict = LinkVerdict::Linked;
  else if (v1.no() || v2.no())
    rep.verdict = LinkVerdict::NotLinked;
  else
    rep.verdict = LinkVerdict::Inconclusive;
  return rep;
}

LinkageReport is_linked_module(const PresentedModule& M, const SearchContext& ctx) {
  LinkageReport rep;
  Tri stable = is_stable(M, ctx);
  bool torsionless = is_torsionless(M);
  rep.evidence.push_back({"stable", tri_label(stable), std::nullopt});
  rep.evidence.push_back({"torsionless (syzygy)", torsionless ? "true" : "false", std::nullopt});

  PresentedModule twice = lambda_op(lambda_op(M));
  IsoVerdict cross = is_isomorphic(twice, M, ctx);
  rep.evidence.push_back({"lambda(lambda(M)) iso M", cross.label(), cross});
  rep.partner_first = lambda_op(M);

  if (stable == Tri::False || !torsionless)
    rep.verdict = LinkVerdict::NotLinked;
  else if (stable == Tri::True && torsionless)
    rep.verdict = LinkVerdict::Linked;
  else
    rep.verdict = LinkVerdict::Inconclusive;
  return rep;
}

QuotIdeal ideal_link_partner(const QuotIdeal& I, const QuotIdeal& x) {
  require(I.ring()->same_as(*x.ring()), "ideal linkage over different rings");
  require(I.contains_ideal(x), "linkage ideal x must be contained in I");
  return quot_colon(x, I).ideal;
}

bool verify_ideal_link(const QuotIdeal& I, const QuotIdeal& J, const QuotIdeal& x) {
  QuotIdeal xj = quot_colon(x, J).ideal;
  QuotIdeal xi = quot_colon(x, I).ideal;
  return xj.same_ideal(I) && xi.same_ideal(J);
}

bool verify_zero_divisor_pair(const QRingPtr& R, const ZeroDivisorWitness& w) {
  Polynomial f = R->reduce(w.f);
  Polynomial g = R->reduce(w.g);
  if (f.is_zero() || g.is_zero()) return false;
  return R->is_zero_elt(f * g);
}

namespace {

// annihilator of an element of M given by coordinates w
QuotIdeal annihilator(const QRingPtr& R, const VecPoly& w, const ModuleMatrix& relations) {
  std::vector<VecPoly> stacked;
  stacked.push_back(w);
  for (auto& c : relations.columns()) stacked.push_back(c);
  std::vector<VecPoly> syz = qmodule_syzygies(R, stacked, w.size());
  std::vector<Polynomial> gens;
  for (const auto& s : syz)
    if (!s[0].is_zero()) gens.push_back(s[0]);
  return QuotIdeal(R, gens);
}

// structural primality: the reduced preimage basis consists of variables
bool variable_generated(const QuotIdeal& p) {
  Ideal pre = p.preimage();
  const auto& gb = pre.groebner();
  if (gb.empty()) return false;
  for (const auto& g : gb) {
    if (g.nterms() != 1) return false;
    const Monomial& m = g.lead_mono();
    std::size_t total = 0;
    for (std::size_t i = 0; i < m.nvars(); ++i) total += m[i];
    if (total != 1) return false;
  }
  return true;
}

}  // namespace

AssResult ass_member(const QuotIdeal& p, const PresentedModule& M, const SearchContext& ctx) {
  const QRingPtr& R = M.ring();
  require(p.ring()->same_as(*R), "prime over a different ring");
  require(!p.is_unit(), "ass_member: unit ideal is not prime");

  AssResult out;
  out.primality_verified = variable_generated(p);

  PresentedModule quotient = PresentedModule::cyclic(p);
  HomModule H = hom_module(quotient, M);
  if (H.module.is_zero()) return out;

  auto check = [&](const VecPoly& w) -> bool {
    if (vp_is_zero(w)) return false;
    QuotIdeal ann = annihilator(R, w, M.relations());
    return ann.same_ideal(p);
  };

  for (const auto& h : H.basis) {
    VecPoly w = h.column(0);
    for (auto& f : w) f = R->reduce(f);
    if (check(w)) {
      out.member = true;
      out.witness = w;
      return out;
    }
  }
  // random combinations of the basis homs
  std::mt19937_64 rng(ctx.seed);
  std::uint32_t prime = R->ambient()->field().modulus();
  for (int t = 0; t < ctx.trials; ++t) {
    VecPoly w = vp_zero(R->ambient(), M.gens());
    for (const auto& h : H.basis) {
      Fp cfac = static_cast<Fp>(rng() % prime);
      if (cfac == 0) continue;
      VecPoly col = h.column(0);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = w[i] + col[i].scaled(cfac);
    }
    for (auto& f : w) f = R->reduce(f);
    if (check(w)) {
      out.member = true;
      out.witness = w;
      return out;
    }
  }
  return out;
}

LinkedSubmodule linked_submodule_from_prime(const QuotIdeal& p, const PresentedModule& M,
                                            const std::optional<ZeroDivisorWitness>& witness,
                                            const SearchContext& ctx) {
  const QRingPtr& R = M.ring();
  bool verified = false;
  if (witness) {
    require(verify_zero_divisor_pair(R, *witness),
            "linked submodule: zero-divisor certificate invalid (ring may be a domain)");
    verified = true;
  }

  PresentedModule ring_as_module = PresentedModule::free_module(R, 1);
  AssResult in_ring = ass_member(p, ring_as_module, ctx);
  require(in_ring.member, "linked submodule: p is not an associated prime of the ring");

  AssResult in_m = ass_member(p, M, ctx);
  require(in_m.member, "linked submodule: p is not an associated prime of M");

  PresentedModule quotient = PresentedModule::cyclic(p);
  ModuleMatrix emb(R, M.gens(), 1);
  for (std::size_t i = 0; i < M.gens(); ++i) emb.set_entry(i, 0, (*in_m.witness)[i]);
  ModuleHom h(quotient, M, emb);
  require(h.well_defined(), "linked submodule: witness does not define a hom");
  require(kernel(h).module.is_zero(), "linked submodule: witness embedding is not injective");

  LinkageReport rep = is_linked_module(quotient, ctx);
  return LinkedSubmodule{std::move(h), std::move(rep), verified};
}

MaximalLinkedReport maximal_linked_among(const std::vector<ModuleHom>& candidates,
                                         const SearchContext& ctx) {
  MaximalLinkedReport rep;
  if (candidates.empty()) {
    rep.note = "no candidates";
    return rep;
  }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    LinkageReport lr = is_linked_module(candidates[i].source(), ctx);
    if (lr.verdict == LinkVerdict::Linked) rep.linked.push_back(i);
  }
  if (rep.linked.empty()) {
    rep.note = "no linked candidates";
    return rep;
  }

  const QRingPtr& R = candidates.front().target().ring();
  auto image_contained = [&](std::size_t a, std::size_t b) {
    // image of candidate a inside image of candidate b, as submodules of M
    const ModuleHom& ha = candidates[a];
    const ModuleHom& hb = candidates[b];
    std::vector<VecPoly> span = hb.matrix().columns();
    for (auto& c : hb.target().relations().columns()) span.push_back(c);
    for (std::size_t j = 0; j < ha.matrix().cols(); ++j)
      if (!qmodule_member(R, span, ha.target().gens(), ha.matrix().column(j))) return false;
    return true;
  };

  for (std::size_t idx : rep.linked) {
    bool is_max = true;
    for (std::size_t other : rep.linked) {
      if (other == idx) continue;
      if (image_contained(idx, other) && !image_contained(other, idx)) {
        is_max = false;
        break;
      }
    }
    if (is_max) rep.maximal.push_back(idx);
  }

  for (std::size_t a = 0; a < rep.maximal.size(); ++a)
    for (std::size_t b = a + 1; b < rep.maximal.size(); ++b) {
      std::size_t ia = rep.maximal[a], ib = rep.maximal[b];
      Tri st = is_stable(direct_sum(candidates[ia].source(), candidates[ib].source()), ctx);
      rep.pair_stability.push_back({ia, ib, st});
    }
  return rep;
}

}  // namespace modlink
