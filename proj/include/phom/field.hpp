#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "phom/errors.hpp"

namespace phom {

using Coefficient = std::uint32_t;

inline constexpr bool is_prime(std::uint32_t n) noexcept {
  if (n < 2)
    return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

/// Arithmetic in Z/p for a prime p. Coefficients are kept reduced in [0, p).
class FieldSpec {
public:
  constexpr FieldSpec() = default;

  explicit FieldSpec(std::uint32_t characteristic) : p_(characteristic) {
    if (!is_prime(p_))
      throw InvalidArgument("field characteristic " + std::to_string(p_) + " is not prime");
    if (p_ > (1u << 16))
      throw InvalidArgument("field characteristic must be at most 65536");
  }

  constexpr std::uint32_t characteristic() const noexcept { return p_; }

  constexpr Coefficient add(Coefficient a, Coefficient b) const noexcept { return (a + b) % p_; }
  constexpr Coefficient neg(Coefficient a) const noexcept { return a ? p_ - a : 0; }
  constexpr Coefficient mul(Coefficient a, Coefficient b) const noexcept {
    return static_cast<Coefficient>(std::uint64_t{a} * b % p_);
  }

  /// a^(p-2); `a` must be nonzero.
  constexpr Coefficient inv(Coefficient a) const noexcept {
    Coefficient result = 1;
    Coefficient base = a % p_;
    for (std::uint32_t e = p_ - 2; e; e >>= 1) {
      if (e & 1u)
        result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }

  /// (-1)^i reduced mod p.
  constexpr Coefficient sign(std::size_t i) const noexcept { return i % 2 ? neg(1 % p_) : 1 % p_; }

  friend constexpr bool operator==(FieldSpec, FieldSpec) = default;

private:
  std::uint32_t p_ = 2;
};

} // namespace phom
