#pragma once

#include <cstdint>

namespace zeroprod::detail {

__extension__ typedef unsigned __int128 u128;

// (a * b) mod m without overflow
inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

}  // namespace zeroprod::detail
