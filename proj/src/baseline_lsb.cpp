#include "posmatch/baseline_lsb.hpp"

#include "posmatch/errors.hpp"

namespace posmatch {

RasterImage embed_lsb(const RasterImage& image, const BitStream& bits) {
  const auto capacity = image.sample_count();
  if (bits.size() > capacity) throw InsufficientCapacity(static_cast<std::size_t>(capacity), bits.size());
  RasterImage stego = image;
  const auto n = stego.pixel_count();
  for (std::size_t k = 0; k < bits.size(); ++k) {
    auto plane = stego.plane(kScanOrder[k / n]);
    auto& sample = plane[k % n];
    sample = embed_bit(sample, bits[k]);
  }
  return stego;
}

BitStream extract_lsb(const RasterImage& image, std::size_t bit_count) {
  const auto capacity = image.sample_count();
  if (bit_count > capacity) throw IndexOutOfRange(bit_count, capacity);
  BitStream bits;
  const auto n = image.pixel_count();
  for (std::size_t k = 0; k < bit_count; ++k) bits.push_back(image.plane(kScanOrder[k / n])[k % n] & 1u);
  return bits;
}

}  // namespace posmatch
