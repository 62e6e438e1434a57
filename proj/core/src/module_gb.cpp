#include "modlink/module_gb.hpp"

#include <algorithm>
#include <set>

#include "modlink/error.hpp"

namespace modlink {

VecPoly vp_zero(const RingPtr& ring, std::size_t rank) {
  return VecPoly(rank, ring->zero());
}

bool vp_is_zero(const VecPoly& v) {
  for (const auto& f : v)
    if (!f.is_zero()) return false;
  return true;
}

VecPoly vp_add(const VecPoly& a, const VecPoly& b) {
  require(a.size() == b.size(), "vector rank mismatch");
  VecPoly r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

VecPoly vp_sub(const VecPoly& a, const VecPoly& b) {
  require(a.size() == b.size(), "vector rank mismatch");
  VecPoly r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
  return r;
}

VecPoly vp_scale(const VecPoly& a, Fp c) {
  VecPoly r = a;
  for (auto& f : r) f = f.scaled(c);
  return r;
}

VecPoly vp_times_term(const VecPoly& a, Fp c, const Monomial& m) {
  VecPoly r = a;
  for (auto& f : r) f = f.times_term(c, m);
  return r;
}

bool vp_equal(const VecPoly& a, const VecPoly& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

std::optional<VpLead> vp_lead(const VecPoly& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) {
      const Term& t = v[i].lead();
      return VpLead{i, t.coeff, t.mono};
    }
  }
  return std::nullopt;
}

namespace {

struct Entry {
  VecPoly vec;
  VpLead lead;
  VecPoly rep;  // combination of the input generators; empty when untracked
};

struct PairKey {
  std::int64_t degree;
  std::size_t i, j;
  bool operator<(const PairKey& o) const {
    if (degree != o.degree) return degree < o.degree;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

struct Completion {
  std::vector<Entry> basis;
  std::vector<VecPoly> syzygies;  // in P^{ngens}
};

// divide v by the current basis; returns remainder, accumulates quotients
// (quotients[k] is the polynomial multiplier of basis[k]) when tracking
VecPoly divide(const VecPoly& v, const std::vector<Entry>& G, const RingPtr& ring,
               std::vector<Polynomial>* quotients) {
  VecPoly rem = vp_zero(ring, v.size());
  VecPoly h = v;
  while (true) {
    auto lead = vp_lead(h);
    if (!lead) break;
    bool reduced = false;
    for (std::size_t k = 0; k < G.size(); ++k) {
      const auto& g = G[k];
      if (g.lead.comp != lead->comp) continue;
      if (!g.lead.mono.divides(lead->mono)) continue;
      Fp c = ring->field().div(lead->coeff, g.lead.coeff);
      Monomial m = g.lead.mono.divide_into(lead->mono);
      h = vp_sub(h, vp_times_term(g.vec, c, m));
      if (quotients) (*quotients)[k] = (*quotients)[k] + ring->monomial(c, m);
      reduced = true;
      break;
    }
    if (!reduced) {
      Polynomial lt = ring->monomial(lead->coeff, lead->mono);
      rem[lead->comp] = rem[lead->comp] + lt;
      h[lead->comp] = h[lead->comp] - lt;
    }
  }
  return rem;
}

// Buchberger completion. In syzygy mode every input generator enters the
// basis verbatim, no pair is skipped, and each zero reduction is recorded;
// with the Schreyer order this yields generators of the syzygy module.
Completion complete(const std::vector<VecPoly>& gens, const RingPtr& ring, std::size_t rank,
                    bool track, bool want_syzygies) {
  Completion out;
  std::set<PairKey> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto basis_unit_rep = [&](std::size_t i) {
    VecPoly rep = vp_zero(ring, gens.size());
    rep[i] = ring->one();
    return rep;
  };

  auto push_pairs = [&](std::size_t idx) {
    for (std::size_t k = 0; k < idx; ++k) {
      if (out.basis[k].lead.comp != out.basis[idx].lead.comp) continue;
      Monomial l = Monomial::lcm(out.basis[k].lead.mono, out.basis[idx].lead.mono);
      queue.insert(PairKey{ring->degree(l), k, idx});
      pending.insert({k, idx});
    }
  };

  for (std::size_t i = 0; i < gens.size(); ++i) {
    require(gens[i].size() == rank, "generator rank mismatch");
    if (vp_is_zero(gens[i])) {
      if (want_syzygies) out.syzygies.push_back(basis_unit_rep(i));
      continue;
    }
    Entry e{gens[i], *vp_lead(gens[i]), track ? basis_unit_rep(i) : VecPoly{}};
    out.basis.push_back(std::move(e));
    push_pairs(out.basis.size() - 1);
  }

  while (!queue.empty()) {
    PairKey p = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({p.i, p.j});

    const Entry& a = out.basis[p.i];
    const Entry& b = out.basis[p.j];
    Monomial l = Monomial::lcm(a.lead.mono, b.lead.mono);

    if (!want_syzygies) {
      // the product criterion is only sound for ideals (rank one)
      if (rank == 1 && Monomial::coprime(a.lead.mono, b.lead.mono)) continue;
      bool skip = false;
      for (std::size_t k = 0; k < out.basis.size() && !skip; ++k) {
        if (k == p.i || k == p.j) continue;
        if (out.basis[k].lead.comp != a.lead.comp) continue;
        if (!out.basis[k].lead.mono.divides(l)) continue;
        auto k1 = std::minmax(p.i, k);
        auto k2 = std::minmax(p.j, k);
        if (!pending.count({k1.first, k1.second}) && !pending.count({k2.first, k2.second}))
          skip = true;
      }
      if (skip) continue;
    }

    Fp ca = ring->field().inv(a.lead.coeff);
    Fp cb = ring->field().inv(b.lead.coeff);
    Monomial ma = a.lead.mono.divide_into(l);
    Monomial mb = b.lead.mono.divide_into(l);

    VecPoly s = vp_sub(vp_times_term(a.vec, ca, ma), vp_times_term(b.vec, cb, mb));
    std::vector<Polynomial> quot;
    if (track) quot.assign(out.basis.size(), ring->zero());
    VecPoly r = divide(s, out.basis, ring, track ? &quot : nullptr);

    VecPoly rep;
    if (track) {
      rep = vp_sub(vp_times_term(a.rep, ca, ma), vp_times_term(b.rep, cb, mb));
      for (std::size_t k = 0; k < quot.size(); ++k) {
        if (quot[k].is_zero()) continue;
        VecPoly scaled = out.basis[k].rep;
        Polynomial q = quot[k];
        for (auto& coord : scaled) coord = coord * q;
        rep = vp_sub(rep, scaled);
      }
    }

    if (vp_is_zero(r)) {
      if (want_syzygies) out.syzygies.push_back(std::move(rep));
      continue;
    }
    VpLead rl = *vp_lead(r);
    out.basis.push_back(Entry{std::move(r), rl, std::move(rep)});
    push_pairs(out.basis.size() - 1);
  }
  return out;
}

bool vp_lead_less(const VecPoly& a, const VecPoly& b, const RingPtr& ring) {
  auto la = vp_lead(a);
  auto lb = vp_lead(b);
  if (la->comp != lb->comp) return la->comp > lb->comp;  // lower slot is larger
  return ring->mono_cmp(la->mono, lb->mono) < 0;
}

std::vector<VecPoly> reduce_module_basis(std::vector<Entry> G, const RingPtr& ring,
                                         std::size_t rank) {
  std::vector<VecPoly> kept;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j || G[j].lead.comp != G[i].lead.comp) continue;
      if (!G[j].lead.mono.divides(G[i].lead.mono)) continue;
      if (G[i].lead.mono == G[j].lead.mono && i < j) continue;
      redundant = true;
      break;
    }
    if (!redundant) kept.push_back(G[i].vec);
  }
  std::vector<VecPoly> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<Entry> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(Entry{kept[j], *vp_lead(kept[j]), {}});
    VecPoly r = divide(kept[i], others, ring, nullptr);
    if (vp_is_zero(r)) continue;
    out.push_back(vp_scale(r, ring->field().inv(vp_lead(r)->coeff)));
  }
  std::sort(out.begin(), out.end(),
            [&](const VecPoly& a, const VecPoly& b) { return vp_lead_less(a, b, ring); });
  return out;
}

}  // namespace

std::vector<VecPoly> module_groebner(const std::vector<VecPoly>& gens, const RingPtr& ring,
                                     std::size_t rank) {
  Completion c = complete(gens, ring, rank, false, false);
  return reduce_module_basis(std::move(c.basis), ring, rank);
}

VecPoly module_normal_form(const VecPoly& v, const std::vector<VecPoly>& G,
                           const RingPtr& ring) {
  std::vector<Entry> entries;
  for (const auto& g : G) {
    if (vp_is_zero(g)) continue;
    entries.push_back(Entry{g, *vp_lead(g), {}});
  }
  return divide(v, entries, ring, nullptr);
}

std::vector<VecPoly> module_syzygies(const std::vector<VecPoly>& gens, const RingPtr& ring,
                                     std::size_t rank) {
  Completion c = complete(gens, ring, rank, true, true);
  return c.syzygies;
}

std::optional<std::vector<Polynomial>> module_lift(const std::vector<VecPoly>& gens,
                                                   const VecPoly& target, const RingPtr& ring,
                                                   std::size_t rank) {
  Completion c = complete(gens, ring, rank, true, false);
  std::vector<Polynomial> quot(c.basis.size(), ring->zero());
  VecPoly r = divide(target, c.basis, ring, &quot);
  if (!vp_is_zero(r)) return std::nullopt;
  std::vector<Polynomial> x(gens.size(), ring->zero());
  for (std::size_t k = 0; k < c.basis.size(); ++k) {
    if (quot[k].is_zero()) continue;
    for (std::size_t i = 0; i < gens.size(); ++i)
      x[i] = x[i] + quot[k] * c.basis[k].rep[i];
  }
  return x;
}

// --- quotient-ring wrappers -------------------------------------------------

std::vector<VecPoly> defining_block(const QRingPtr& R, std::size_t rank) {
  std::vector<VecPoly> block;
  const RingPtr& P = R->ambient();
  for (std::size_t s = 0; s < rank; ++s) {
    for (const auto& g : R->defining().groebner()) {
      VecPoly v = vp_zero(P, rank);
      v[s] = g;
      block.push_back(std::move(v));
    }
  }
  return block;
}

namespace {

std::vector<VecPoly> with_block(const QRingPtr& R, const std::vector<VecPoly>& gens,
                                std::size_t rank) {
  std::vector<VecPoly> all = gens;
  auto block = defining_block(R, rank);
  all.insert(all.end(), block.begin(), block.end());
  return all;
}

bool vanishes_in_quotient(const QRingPtr& R, const VecPoly& v) {
  for (const auto& f : v)
    if (!R->is_zero_elt(f)) return false;
  return true;
}

VecPoly reduce_entries(const QRingPtr& R, const VecPoly& v) {
  VecPoly out = v;
  for (auto& f : out) f = R->reduce(f);
  return out;
}

}  // namespace

std::vector<VecPoly> qmodule_reduced_basis(const QRingPtr& R, const std::vector<VecPoly>& gens,
                                           std::size_t rank) {
  std::vector<VecPoly> gb = module_groebner(with_block(R, gens, rank), R->ambient(), rank);
  std::vector<VecPoly> out;
  for (auto& v : gb) {
    if (vanishes_in_quotient(R, v)) continue;
    out.push_back(reduce_entries(R, v));
  }
  return out;
}

std::vector<VecPoly> qmodule_syzygies(const QRingPtr& R, const std::vector<VecPoly>& gens,
                                      std::size_t rank) {
  const RingPtr& P = R->ambient();
  std::vector<VecPoly> all = with_block(R, gens, rank);
  std::vector<VecPoly> syz = module_syzygies(all, P, rank);
  // project onto the generator coordinates and canonicalize over R
  std::vector<VecPoly> projected;
  for (const auto& s : syz) {
    VecPoly head(s.begin(), s.begin() + gens.size());
    head = reduce_entries(R, head);
    if (!vp_is_zero(head)) projected.push_back(std::move(head));
  }
  return qmodule_reduced_basis(R, projected, gens.size());
}

bool qmodule_member(const QRingPtr& R, const std::vector<VecPoly>& gens, std::size_t rank,
                    const VecPoly& v) {
  std::vector<VecPoly> gb = module_groebner(with_block(R, gens, rank), R->ambient(), rank);
  return vp_is_zero(module_normal_form(v, gb, R->ambient()));
}

std::optional<std::vector<Polynomial>> qmodule_lift(const QRingPtr& R,
                                                    const std::vector<VecPoly>& gens,
                                                    std::size_t rank, const VecPoly& v) {
  auto x = module_lift(with_block(R, gens, rank), v, R->ambient(), rank);
  if (!x) return std::nullopt;
  std::vector<Polynomial> head(x->begin(), x->begin() + gens.size());
  for (auto& f : head) f = R->reduce(f);
  return head;
}

}  // namespace modlink
