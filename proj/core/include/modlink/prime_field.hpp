#ifndef MODLINK_PRIME_FIELD_HPP
#define MODLINK_PRIME_FIELD_HPP

#include <cstdint>

#include "modlink/error.hpp"

namespace modlink {

// Field element, always reduced into [0, p).
using Fp = std::uint32_t;

/// Arithmetic of F_p for a prime p < 2^31. Default modulus 32003.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p = 32003) : p_(p) {
    require(is_prime(p), "field modulus must be prime");
  }

  std::uint32_t modulus() const { return p_; }

  Fp from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Fp>(r);
  }

  Fp add(Fp a, Fp b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    if (s >= p_) s -= p_;
    return static_cast<Fp>(s);
  }

  Fp sub(Fp a, Fp b) const { return a >= b ? a - b : static_cast<Fp>(a + p_ - b); }

  Fp neg(Fp a) const { return a == 0 ? 0 : p_ - a; }

  Fp mul(Fp a, Fp b) const {
    return static_cast<Fp>((std::uint64_t(a) * b) % p_);
  }

  Fp pow(Fp a, std::uint64_t e) const {
    Fp r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  Fp inv(Fp a) const {
    require(a != 0, "division by zero in prime field");
    // Fermat: a^(p-2)
    return pow(a, p_ - 2);
  }

  Fp div(Fp a, Fp b) const { return mul(a, inv(b)); }

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

  static bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  std::uint32_t p_;
};

}  // namespace modlink

#endif
