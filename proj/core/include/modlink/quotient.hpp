#ifndef MODLINK_QUOTIENT_HPP
#define MODLINK_QUOTIENT_HPP

#include <memory>
#include <string>
#include <vector>

#include "modlink/ideal.hpp"

namespace modlink {

class QuotientRing;
using QRingPtr = std::shared_ptr<const QuotientRing>;

/// Ambient polynomial ring modulo a defining ideal held as a reduced
/// Groebner basis; ring elements are stored as normal forms. The zero ring
/// is rejected.
class QuotientRing : public std::enable_shared_from_this<QuotientRing> {
 public:
  static QRingPtr make(RingPtr ambient, Ideal defining);
  /// Free polynomial ring viewed as a quotient by (0).
  static QRingPtr free(RingPtr ambient);

  const RingPtr& ambient() const { return ambient_; }
  const Ideal& defining() const { return defining_; }
  bool homogeneous() const { return homogeneous_; }

  Polynomial reduce(const Polynomial& f) const;
  bool is_zero_elt(const Polynomial& f) const { return reduce(f).is_zero(); }
  Polynomial parse(std::string_view text) const { return reduce(ambient_->parse(text)); }

  bool same_as(const QuotientRing& o) const;

 private:
  QuotientRing(RingPtr ambient, Ideal defining, bool homogeneous)
      : ambient_(std::move(ambient)), defining_(std::move(defining)), homogeneous_(homogeneous) {}

  RingPtr ambient_;
  Ideal defining_;
  bool homogeneous_;
};

/// Restriction to the basic open D(f): base with one fresh inverse variable
/// adjoined and the relation t·f − 1. The grading is dropped.
struct LocalizedRing {
  QRingPtr base;
  Polynomial element;       // reduced, nonzero in base
  QRingPtr presentation;    // base vars plus the inverse variable
  std::string inverse_var;

  /// image of a base-ring element in the presentation
  Polynomial lift(const Polynomial& f) const;
};

LocalizedRing localize_ring(const QRingPtr& R, const Polynomial& f);

/// k-algebra map determined by variable images; composes parse-side rings
/// with quotient targets by reducing after substitution.
class RingMap {
 public:
  RingMap(RingPtr from, QRingPtr to, std::vector<Polynomial> images);

  const RingPtr& from() const { return from_; }
  const QRingPtr& to() const { return to_; }
  const std::vector<Polynomial>& images() const { return images_; }

  Polynomial apply(const Polynomial& f) const;

 private:
  RingPtr from_;
  QRingPtr to_;
  std::vector<Polynomial> images_;  // one per from-variable, reduced in `to`
};

/// Ideal of a quotient ring, kept as ambient generators; computations run on
/// the preimage (generators plus the defining ideal).
class QuotIdeal {
 public:
  QuotIdeal(QRingPtr ring, std::vector<Polynomial> gens);

  const QRingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }  // reduced forms

  Ideal preimage() const;  // over the ambient ring, generators + defining
  /// reduced GB of the preimage with the defining-ideal elements dropped;
  /// canonical generators of the ideal inside the quotient
  std::vector<Polynomial> reduced_gens() const;

  bool contains(const Polynomial& f) const;
  bool contains_ideal(const QuotIdeal& other) const;
  bool is_zero() const;
  bool is_unit() const;
  bool same_ideal(const QuotIdeal& o) const;

 private:
  QRingPtr ring_;
  std::vector<Polynomial> gens_;
};

struct QuotColonResult {
  QuotIdeal ideal;
  bool divided_by_zero = false;
};

QuotColonResult quot_colon(const QuotIdeal& I, const QuotIdeal& J);
QuotIdeal quot_intersection(const QuotIdeal& I, const QuotIdeal& J);

}  // namespace modlink

#endif
