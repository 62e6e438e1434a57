#ifndef MODLINK_POLYNOMIAL_HPP
#define MODLINK_POLYNOMIAL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "modlink/monomial.hpp"
#include "modlink/prime_field.hpp"

namespace modlink {

class PolynomialRing;
class Polynomial;
using RingPtr = std::shared_ptr<const PolynomialRing>;

enum class OrderKind { Grevlex, Lex };

struct Term {
  Fp coeff;  // nonzero
  Monomial mono;
};

/// k[x_1..x_n] over a prime field with a fixed monomial order and positive
/// grading weights. Immutable; shared by every element created from it.
class PolynomialRing : public std::enable_shared_from_this<PolynomialRing> {
 public:
  static RingPtr make(PrimeField field, std::vector<std::string> variables,
                      OrderKind order = OrderKind::Grevlex,
                      std::vector<std::uint32_t> weights = {});

  const PrimeField& field() const { return field_; }
  const std::vector<std::string>& variables() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  OrderKind order() const { return order_; }
  const std::vector<std::uint32_t>& weights() const { return weights_; }

  // index of a variable name, or nullopt
  std::optional<std::size_t> var_index(std::string_view name) const;

  std::int64_t degree(const Monomial& m) const { return m.weighted_degree(weights_); }

  // -1, 0, +1 with the ring's order; grevlex compares weighted degree first
  int mono_cmp(const Monomial& a, const Monomial& b) const;

  bool same_as(const PolynomialRing& o) const;

  Polynomial zero() const;
  Polynomial one() const;
  Polynomial constant(long long c) const;
  Polynomial var(std::size_t i) const;
  Polynomial monomial(Fp c, Monomial m) const;

  /// Parses the text grammar: integer coefficients, `*`, `^`, `+`, `-`,
  /// variables by name; whitespace insignificant.
  Polynomial parse(std::string_view text) const;

  std::string to_string(const Polynomial& f) const;
  std::string mono_to_string(const Monomial& m) const;

 private:
  PolynomialRing(PrimeField field, std::vector<std::string> vars, OrderKind order,
                 std::vector<std::uint32_t> weights);

  PrimeField field_;
  std::vector<std::string> vars_;
  OrderKind order_;
  std::vector<std::uint32_t> weights_;
};

/// Terms sorted strictly descending in the ring's order; empty list is zero.
class Polynomial {
 public:
  Polynomial() = default;  // placeholder only; has no ring
  Polynomial(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t nterms() const { return terms_.size(); }

  const Term& lead() const;
  Fp lead_coeff() const { return lead().coeff; }
  const Monomial& lead_mono() const { return lead().mono; }

  bool is_constant() const;           // zero or a single degree-0 term
  std::optional<Fp> constant_value() const;  // value when is_constant()

  // homogeneous under the ring's weights; zero counts as homogeneous
  bool is_homogeneous() const;
  std::int64_t degree() const;  // of the lead term; -1 for zero

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(Fp c) const;
  Polynomial times_term(Fp c, const Monomial& m) const;
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

// total order on polynomials (by term lists), used for deterministic sorting
int poly_cmp(const Polynomial& a, const Polynomial& b);

void check_same_ring(const Polynomial& a, const Polynomial& b);

}  // namespace modlink

#endif
