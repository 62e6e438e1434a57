#ifndef MODLINK_MONOMIAL_HPP
#define MODLINK_MONOMIAL_HPP

#include <cstdint>
#include <vector>

#include "modlink/error.hpp"

namespace modlink {

/// Exponent vector; the ambient ring fixes length and grading weights.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exps) : e_(std::move(exps)) {}

  static Monomial one(std::size_t nvars) {
    return Monomial(std::vector<std::uint32_t>(nvars, 0));
  }

  std::size_t nvars() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) { return e_[i]; }
  const std::vector<std::uint32_t>& exps() const { return e_; }

  bool is_one() const {
    for (auto x : e_)
      if (x) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  // o / this, requires divisibility
  Monomial divide_into(const Monomial& o) const {
    Monomial r = o;
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] -= e_[i];
    return r;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (b.e_[i] > r.e_[i]) r.e_[i] = b.e_[i];
    return r;
  }

  static bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.e_.size(); ++i)
      if (a.e_[i] && b.e_[i]) return false;
    return true;
  }

  std::int64_t weighted_degree(const std::vector<std::uint32_t>& weights) const {
    std::int64_t d = 0;
    for (std::size_t i = 0; i < e_.size(); ++i)
      d += std::int64_t(e_[i]) * weights[i];
    return d;
  }

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return e_ != o.e_; }

 private:
  std::vector<std::uint32_t> e_;
};

}  // namespace modlink

#endif
