#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "posmatch/bitstream.hpp"
#include "posmatch/image.hpp"

namespace posmatch {

/// Strictly increasing global indices, one per secret bit.
using PositionList = std::vector<GlobalIndex>;

struct MatchOptions {
  // Appended to the message before encoding; must be 7-bit ASCII.
  std::optional<std::string> bind_image_name;
};

/// Message as it will actually be matched: message followed by the bound name.
std::string bound_message(std::string_view message, const MatchOptions& options);

/// First-fit forward scan. For each bit the cursor advances to the next
/// sample whose LSB equals it; that index is recorded and the cursor moves
/// past it. The image is only read.
/// Throws InsufficientCapacity when the scan runs off the end of the image.
PositionList match_bits(const RasterImage& image, const BitStream& bits);

/// Encodes message (plus any bound name) and matches it.
/// Throws NonAsciiCharacter or InsufficientCapacity.
PositionList match_positions(const RasterImage& image, std::string_view message,
                             const MatchOptions& options = {});

/// Number of leading bits of `bits` the scan can place before running out.
std::size_t matchable_prefix(const RasterImage& image, const BitStream& bits);

/// True iff the positions are strictly increasing, in range, equal in count
/// to the bits, and the LSB at each position equals its bit.
bool verify_positions(const RasterImage& image, std::span<const GlobalIndex> positions,
                      const BitStream& bits);

}  // namespace posmatch
