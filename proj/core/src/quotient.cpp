#include "modlink/quotient.hpp"

#include <algorithm>

#include "modlink/error.hpp"

namespace modlink {

QRingPtr QuotientRing::make(RingPtr ambient, Ideal defining) {
  require(ambient != nullptr, "quotient needs an ambient ring");
  require(defining.ring()->same_as(*ambient), "defining ideal lives in another ring");
  const auto& gb = defining.groebner();  // forces computation
  require(!defining.is_unit(), "zero ring not supported");
  bool homog = true;
  for (const auto& g : gb)
    if (!g.is_homogeneous()) homog = false;
  return QRingPtr(new QuotientRing(std::move(ambient), Ideal(defining.ring(), gb), homog));
}

QRingPtr QuotientRing::free(RingPtr ambient) {
  return make(ambient, Ideal(ambient, {}));
}

Polynomial QuotientRing::reduce(const Polynomial& f) const {
  require(f.ring()->same_as(*ambient_), "element from a different ring");
  return normal_form(f, defining_.groebner());
}

bool QuotientRing::same_as(const QuotientRing& o) const {
  if (this == &o) return true;
  return ambient_->same_as(*o.ambient_) && defining_.same_ideal(o.defining_);
}

Polynomial LocalizedRing::lift(const Polynomial& f) const {
  const RingPtr& A = presentation->ambient();
  std::vector<Polynomial> imgs;
  for (std::size_t v = 0; v < base->ambient()->nvars(); ++v) imgs.push_back(A->var(v));
  RingMap incl(base->ambient(), presentation, imgs);
  return incl.apply(f);
}

LocalizedRing localize_ring(const QRingPtr& R, const Polynomial& f) {
  Polynomial fr = R->reduce(f);
  require(!fr.is_zero(), "localizing at zero yields the zero ring");

  const RingPtr& A = R->ambient();
  std::string tname = "t";
  while (A->var_index(tname).has_value()) tname += "t";

  std::vector<std::string> names = A->variables();
  names.push_back(tname);
  std::vector<std::uint32_t> weights = A->weights();
  weights.push_back(1);
  RingPtr E = PolynomialRing::make(A->field(), names, A->order(), weights);

  std::vector<Polynomial> up(A->nvars(), E->zero());
  for (std::size_t v = 0; v < A->nvars(); ++v) up[v] = E->var(v);

  auto raise = [&](const Polynomial& g) {
    Polynomial acc = E->zero();
    for (const auto& t : g.terms()) {
      Monomial m = Monomial::one(E->nvars());
      for (std::size_t v = 0; v < A->nvars(); ++v) m[v] = t.mono[v];
      acc = acc + E->monomial(t.coeff, m);
    }
    return acc;
  };

  std::vector<Polynomial> gens;
  for (const auto& g : R->defining().gens()) gens.push_back(raise(g));
  Polynomial t = E->var(E->nvars() - 1);
  gens.push_back(t * raise(fr) - E->one());

  QRingPtr pres = QuotientRing::make(E, Ideal(E, gens));
  return LocalizedRing{R, fr, pres, tname};
}

RingMap::RingMap(RingPtr from, QRingPtr to, std::vector<Polynomial> images)
    : from_(std::move(from)), to_(std::move(to)), images_(std::move(images)) {
  require(images_.size() == from_->nvars(), "one image per variable");
  for (auto& img : images_) img = to_->reduce(img);
}

Polynomial RingMap::apply(const Polynomial& f) const {
  require(f.ring()->same_as(*from_), "ring map applied to foreign element");
  const RingPtr& A = to_->ambient();
  Polynomial acc = A->zero();
  for (const auto& t : f.terms()) {
    Polynomial m = A->constant(static_cast<long long>(t.coeff));
    for (std::size_t v = 0; v < from_->nvars(); ++v) {
      // exponentiation by repeated squaring on the image
      std::uint32_t e = t.mono[v];
      Polynomial base = images_[v];
      while (e) {
        if (e & 1) m = to_->reduce(m * base);
        e >>= 1;
        if (e) base = to_->reduce(base * base);
      }
    }
    acc = acc + m;
  }
  return to_->reduce(acc);
}

QuotIdeal::QuotIdeal(QRingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), gens_(std::move(gens)) {
  require(ring_ != nullptr, "ideal needs a ring");
  for (auto& g : gens_) g = ring_->reduce(g);
}

Ideal QuotIdeal::preimage() const {
  std::vector<Polynomial> gens = gens_;
  for (const auto& d : ring_->defining().gens()) gens.push_back(d);
  return Ideal(ring_->ambient(), gens);
}

std::vector<Polynomial> QuotIdeal::reduced_gens() const {
  Ideal pre = preimage();
  std::vector<Polynomial> out;
  for (const auto& g : pre.groebner())
    if (!ring_->is_zero_elt(g)) out.push_back(g);
  return out;
}

bool QuotIdeal::contains(const Polynomial& f) const {
  return preimage().contains(ring_->reduce(f));
}

bool QuotIdeal::contains_ideal(const QuotIdeal& other) const {
  for (const auto& g : other.gens())
    if (!contains(g)) return false;
  return true;
}

bool QuotIdeal::is_zero() const { return reduced_gens().empty(); }

bool QuotIdeal::is_unit() const { return preimage().is_unit(); }

bool QuotIdeal::same_ideal(const QuotIdeal& o) const {
  require(ring_->same_as(*o.ring_), "ideals from different rings");
  return preimage().same_ideal(o.preimage());
}

QuotColonResult quot_colon(const QuotIdeal& I, const QuotIdeal& J) {
  require(I.ring()->same_as(*J.ring()), "colon needs a common ring");
  bool all_zero = true;
  for (const auto& g : J.gens())
    if (!g.is_zero()) all_zero = false;
  if (all_zero)
    return QuotColonResult{QuotIdeal(I.ring(), {I.ring()->ambient()->one()}), true};
  ColonResult r = ideal_colon(I.preimage(), Ideal(I.ring()->ambient(), J.gens()));
  return QuotColonResult{QuotIdeal(I.ring(), r.ideal.gens()), false};
}

QuotIdeal quot_intersection(const QuotIdeal& I, const QuotIdeal& J) {
  require(I.ring()->same_as(*J.ring()), "intersection needs a common ring");
  Ideal meet = ideal_intersection(I.preimage(), J.preimage());
  return QuotIdeal(I.ring(), meet.gens());
}

}  // namespace modlink
