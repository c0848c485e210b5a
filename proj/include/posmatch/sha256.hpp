#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace posmatch {

using Sha256Digest = std::array<std::uint8_t, 32>;

// Digest of the concatenation of the given byte ranges.
Sha256Digest sha256(std::initializer_list<std::span<const std::uint8_t>> parts);

}  // namespace posmatch
