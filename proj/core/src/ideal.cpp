#include "modlink/ideal.hpp"

#include <algorithm>
#include <set>

#include "modlink/error.hpp"

namespace modlink {

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G) {
  const RingPtr& R = f.ring();
  require(R != nullptr, "polynomial without a ring");
  for (const auto& g : G) check_same_ring(f, g);

  Polynomial rem = R->zero();
  Polynomial h = f;
  while (!h.is_zero()) {
    bool reduced = false;
    for (const auto& g : G) {
      if (g.is_zero()) continue;
      if (g.lead_mono().divides(h.lead_mono())) {
        Fp c = R->field().div(h.lead_coeff(), g.lead_coeff());
        Monomial m = g.lead_mono().divide_into(h.lead_mono());
        h = h - g.times_term(c, m);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      // move the lead term to the remainder
      rem = rem + R->monomial(h.lead_coeff(), h.lead_mono());
      h = h - R->monomial(h.lead_coeff(), h.lead_mono());
    }
  }
  return rem;
}

Polynomial spolynomial(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f, g);
  const auto& R = f.ring();
  Monomial l = Monomial::lcm(f.lead_mono(), g.lead_mono());
  Polynomial a = f.times_term(R->field().inv(f.lead_coeff()), f.lead_mono().divide_into(l));
  Polynomial b = g.times_term(R->field().inv(g.lead_coeff()), g.lead_mono().divide_into(l));
  return a - b;
}

namespace {

struct Pair {
  std::int64_t lcm_degree;
  std::size_t i, j;  // i < j
  bool operator<(const Pair& o) const {
    if (lcm_degree != o.lcm_degree) return lcm_degree < o.lcm_degree;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

std::vector<Polynomial> reduce_basis(std::vector<Polynomial> G, const RingPtr& ring) {
  // drop elements whose lead term is divisible by another's
  std::vector<Polynomial> kept;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size(); ++j) {
      if (i == j) continue;
      if (!G[j].lead_mono().divides(G[i].lead_mono())) continue;
      if (G[i].lead_mono() == G[j].lead_mono() && i < j) continue;  // keep one copy
      redundant = true;
      break;
    }
    if (!redundant) kept.push_back(G[i]);
  }
  // tail-reduce each against the others, make monic
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != i) others.push_back(kept[j]);
    Polynomial r = normal_form(kept[i], others);
    if (!r.is_zero()) out.push_back(r.monic());
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ring->mono_cmp(a.lead_mono(), b.lead_mono()) < 0;
  });
  return out;
}

}  // namespace

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  require(ring != nullptr && ring->nvars() > 0, "buchberger needs a nonempty ring");
  std::vector<Polynomial> G;
  std::set<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;  // mirrors queue for the chain criterion

  auto add_elem = [&](const Polynomial& h) {
    std::size_t idx = G.size();
    G.push_back(h.monic());
    for (std::size_t k = 0; k < idx; ++k) {
      Monomial l = Monomial::lcm(G[k].lead_mono(), G[idx].lead_mono());
      queue.insert(Pair{ring->degree(l), k, idx});
      pending.insert({k, idx});
    }
  };

  for (const auto& f : gens) {
    check_same_ring(f, gens.front());
    require(f.ring()->same_as(*ring), "generator from a different ring");
    Polynomial r = normal_form(f, G);
    if (!r.is_zero()) add_elem(r);
  }

  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({p.i, p.j});

    const Monomial& li = G[p.i].lead_mono();
    const Monomial& lj = G[p.j].lead_mono();
    if (Monomial::coprime(li, lj)) continue;  // Buchberger's first criterion
    // chain criterion: some k with LT(k) | lcm(i,j) and both pairs already handled
    Monomial l = Monomial::lcm(li, lj);
    bool skip = false;
    for (std::size_t k = 0; k < G.size() && !skip; ++k) {
      if (k == p.i || k == p.j) continue;
      if (!G[k].lead_mono().divides(l)) continue;
      auto key1 = std::minmax(p.i, k);
      auto key2 = std::minmax(p.j, k);
      if (!pending.count({key1.first, key1.second}) && !pending.count({key2.first, key2.second}))
        skip = true;
    }
    if (skip) continue;

    Polynomial r = normal_form(spolynomial(G[p.i], G[p.j]), G);
    if (!r.is_zero()) add_elem(r);
  }

  return reduce_basis(std::move(G), ring);
}

std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g) {
  check_same_ring(f, g);
  require(!g.is_zero(), "exact division by zero");
  const auto& R = f.ring();
  Polynomial q = R->zero();
  Polynomial h = f;
  while (!h.is_zero()) {
    if (!g.lead_mono().divides(h.lead_mono())) return std::nullopt;
    Fp c = R->field().div(h.lead_coeff(), g.lead_coeff());
    Monomial m = g.lead_mono().divide_into(h.lead_mono());
    q = q + R->monomial(c, m);
    h = h - g.times_term(c, m);
  }
  return q;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
  require(ring_ != nullptr, "ideal needs a ring");
  for (const auto& g : gens_) require(g.ring()->same_as(*ring_), "generator from a different ring");
}

const std::vector<Polynomial>& Ideal::groebner() const {
  if (!gb_) gb_ = buchberger(gens_, ring_);
  return *gb_;
}

bool Ideal::contains(const Polynomial& f) const {
  return normal_form(f, groebner()).is_zero();
}

bool Ideal::is_zero() const { return groebner().empty(); }

bool Ideal::is_unit() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

bool Ideal::same_ideal(const Ideal& o) const {
  require(ring_->same_as(*o.ring_), "ideals from different rings");
  const auto& a = groebner();
  const auto& b = o.groebner();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

namespace {

// map f coefficient-wise through variable images (all in the target ring)
Polynomial map_through(const Polynomial& f, const RingPtr& target,
                       const std::vector<Polynomial>& images) {
  Polynomial acc = target->zero();
  for (const auto& t : f.terms()) {
    Polynomial m = target->constant(static_cast<long long>(t.coeff));
    for (std::size_t i = 0; i < t.mono.nvars(); ++i)
      for (std::uint32_t e = 0; e < t.mono[i]; ++e) m = m * images[i];
    acc = acc + m;
  }
  return acc;
}

}  // namespace

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& eliminate_vars) {
  const RingPtr& R = I.ring();
  if (eliminate_vars.empty()) return I;
  for (auto v : eliminate_vars) require(v < R->nvars(), "eliminate: bad variable index");

  // lex ring with the eliminated block first
  std::vector<std::size_t> perm;  // position in new ring -> original index
  std::vector<bool> elim(R->nvars(), false);
  for (auto v : eliminate_vars) elim[v] = true;
  for (std::size_t v = 0; v < R->nvars(); ++v)
    if (elim[v]) perm.push_back(v);
  std::size_t nelim = perm.size();
  for (std::size_t v = 0; v < R->nvars(); ++v)
    if (!elim[v]) perm.push_back(v);

  std::vector<std::string> names;
  std::vector<std::uint32_t> weights;
  for (auto v : perm) {
    names.push_back(R->variables()[v]);
    weights.push_back(R->weights()[v]);
  }
  RingPtr E = PolynomialRing::make(R->field(), names, OrderKind::Lex, weights);

  std::vector<Polynomial> fwd_imgs(R->nvars(), E->zero());
  for (std::size_t pos = 0; pos < perm.size(); ++pos) fwd_imgs[perm[pos]] = E->var(pos);
  std::vector<Polynomial> back_imgs(E->nvars(), R->zero());
  for (std::size_t pos = 0; pos < perm.size(); ++pos) back_imgs[pos] = R->var(perm[pos]);

  std::vector<Polynomial> moved;
  for (const auto& g : I.gens()) moved.push_back(map_through(g, E, fwd_imgs));
  std::vector<Polynomial> gb = buchberger(moved, E);

  std::vector<Polynomial> kept;
  for (const auto& g : gb) {
    bool uses_elim = false;
    for (const auto& t : g.terms())
      for (std::size_t pos = 0; pos < nelim && !uses_elim; ++pos)
        if (t.mono[pos] > 0) uses_elim = true;
    if (!uses_elim) kept.push_back(map_through(g, R, back_imgs));
  }
  return Ideal(R, kept);
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  const RingPtr& R = I.ring();
  require(R->same_as(*J.ring()), "intersection needs a common ring");
  if (I.gens().empty() || J.gens().empty()) return Ideal(R, {});

  // fresh auxiliary variable
  std::string aux = "t";
  while (R->var_index(aux).has_value()) aux += "t";
  std::vector<std::string> names = {aux};
  std::vector<std::uint32_t> weights = {1};
  for (std::size_t v = 0; v < R->nvars(); ++v) {
    names.push_back(R->variables()[v]);
    weights.push_back(R->weights()[v]);
  }
  RingPtr E = PolynomialRing::make(R->field(), names, OrderKind::Lex, weights);

  std::vector<Polynomial> up_imgs(R->nvars(), E->zero());
  for (std::size_t v = 0; v < R->nvars(); ++v) up_imgs[v] = E->var(v + 1);
  std::vector<Polynomial> down_imgs(E->nvars(), R->zero());
  down_imgs[0] = R->zero();  // t never survives elimination
  for (std::size_t v = 0; v < R->nvars(); ++v) down_imgs[v + 1] = R->var(v);

  Polynomial t = E->var(0);
  Polynomial one_minus_t = E->one() - t;
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(t * map_through(g, E, up_imgs));
  for (const auto& g : J.gens()) gens.push_back(one_minus_t * map_through(g, E, up_imgs));

  std::vector<Polynomial> gb = buchberger(gens, E);
  std::vector<Polynomial> kept;
  for (const auto& g : gb) {
    bool uses_t = false;
    for (const auto& term : g.terms())
      if (term.mono[0] > 0) uses_t = true;
    if (!uses_t) kept.push_back(map_through(g, R, down_imgs));
  }

  Ideal result(R, kept);
  for (const auto& g : kept)
    require(I.contains(g) && J.contains(g), "intersection generator fails membership");
  return result;
}

ColonResult ideal_colon(const Ideal& I, const Ideal& J) {
  const RingPtr& R = I.ring();
  require(R->same_as(*J.ring()), "colon needs a common ring");

  std::vector<Polynomial> nonzero;
  for (const auto& g : J.gens())
    if (!g.is_zero()) nonzero.push_back(g);
  if (nonzero.empty()) {
    return ColonResult{Ideal(R, {R->one()}), true};
  }

  std::optional<Ideal> acc;
  for (const auto& g : nonzero) {
    Ideal meet = ideal_intersection(I, Ideal(R, {g}));
    std::vector<Polynomial> quot;
    for (const auto& h : meet.gens()) {
      auto q = divide_exact(h, g);
      require(q.has_value(), "colon: non-exact division");
      quot.push_back(*q);
    }
    Ideal part(R, buchberger(quot, R));
    acc = acc ? ideal_intersection(*acc, part) : part;
  }
  return ColonResult{Ideal(R, acc->groebner()), false};
}

}  // namespace modlink
