#ifndef MODLINK_IDEAL_HPP
#define MODLINK_IDEAL_HPP

#include <optional>
#include <vector>

#include "modlink/polynomial.hpp"

namespace modlink {

/// Remainder of f under multivariate division by G: no term of the result is
/// divisible by any lead term of G. Divisor selection is first-match in list
/// order, so the result is deterministic for a fixed G.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G);

/// The unique monic reduced Groebner basis of the ideal generated by `gens`,
/// sorted ascending by lead monomial. Normal selection strategy with the
/// coprime and chain criteria.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens, const RingPtr& ring);

Polynomial spolynomial(const Polynomial& f, const Polynomial& g);

/// Exact division f / g; nullopt when g does not divide f.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

/// Ideal of a polynomial ring; the reduced Groebner basis is computed on
/// first use and cached.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  const std::vector<Polynomial>& groebner() const;

  bool contains(const Polynomial& f) const;
  bool is_zero() const;
  bool is_unit() const;
  bool same_ideal(const Ideal& o) const;  // reduced GB identity

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  mutable std::optional<std::vector<Polynomial>> gb_;
};

/// Generators of I ∩ k[vars outside `eliminate_vars`], via a lex ring with
/// the eliminated block first. Returned in the original ring.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& eliminate_vars);

/// I ∩ J by elimination of an auxiliary variable from t·I + (1−t)·J.
/// Generators of the result are membership-checked against both inputs.
Ideal ideal_intersection(const Ideal& I, const Ideal& J);

struct ColonResult {
  Ideal ideal;
  bool divided_by_zero = false;  // J = (0): result is the unit ideal
};

/// I : J = {r | rJ ⊆ I}, as the intersection over generators g of
/// (I ∩ (g)) / g.
ColonResult ideal_colon(const Ideal& I, const Ideal& J);

}  // namespace modlink

#endif
