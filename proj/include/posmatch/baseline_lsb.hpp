#pragma once

#include <cstddef>
#include <cstdint>

#include "posmatch/bitstream.hpp"
#include "posmatch/image.hpp"

namespace posmatch {

/// Classical +/-1 LSB replacement for one sample:
///   odd  sample, bit 0 -> v - 1
///   even sample, bit 1 -> v + 1
///   parity already equal -> unchanged
constexpr std::uint8_t embed_bit(std::uint8_t value, std::uint8_t bit) noexcept {
  const std::uint8_t lsb = value & 1u;
  if (lsb == bit) return value;
  return lsb == 1 ? static_cast<std::uint8_t>(value - 1) : static_cast<std::uint8_t>(value + 1);
}

/// Writes bits along the global scan order into a copy of the image.
/// Throws InsufficientCapacity when bits exceed 3 * width * height.
RasterImage embed_lsb(const RasterImage& image, const BitStream& bits);

/// LSBs of the first bit_count samples in scan order. Throws IndexOutOfRange.
BitStream extract_lsb(const RasterImage& image, std::size_t bit_count);

}  // namespace posmatch
