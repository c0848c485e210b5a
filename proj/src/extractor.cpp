#include "posmatch/extractor.hpp"

#include "posmatch/errors.hpp"

namespace posmatch {

BitStream read_bits(const RasterImage& image, std::span<const GlobalIndex> positions) {
  BitStream bits;
  for (auto p : positions) bits.push_back(lsb_at(image, p));
  return bits;
}

std::string extract_message(const RasterImage& image, std::span<const GlobalIndex> positions) {
  if (positions.size() % kBitsPerChar != 0) throw BitCountNotMultipleOfSeven(positions.size());
  return decode_bits(read_bits(image, positions));
}

}  // namespace posmatch
