#pragma once

#include <span>
#include <string>

#include "posmatch/bitstream.hpp"
#include "posmatch/image.hpp"

namespace posmatch {

/// LSBs at the given positions, in list order. Throws IndexOutOfRange.
BitStream read_bits(const RasterImage& image, std::span<const GlobalIndex> positions);

/// Reads the LSBs at the positions and decodes them as 7-bit ASCII.
/// Nothing ties the positions to this particular image: a different cover
/// yields different text, not an error.
/// Throws IndexOutOfRange or BitCountNotMultipleOfSeven.
std::string extract_message(const RasterImage& image, std::span<const GlobalIndex> positions);

}  // namespace posmatch
