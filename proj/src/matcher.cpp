#include "posmatch/matcher.hpp"

#include "posmatch/errors.hpp"

namespace posmatch {
namespace {

// Walks the planes directly in scan order so the scan stays linear.
class LsbCursor {
 public:
  explicit LsbCursor(const RasterImage& image) : image_(image) {}

  // Advances to the next index whose LSB equals bit. Returns 0 if none.
  GlobalIndex seek(std::uint8_t bit) {
    const auto n = image_.pixel_count();
    while (next_ <= image_.sample_count()) {
      const auto zero_based = next_ - 1;
      const auto plane = image_.plane(kScanOrder[zero_based / n]);
      const auto index = next_++;
      if ((plane[zero_based % n] & 1u) == bit) return index;
    }
    return 0;
  }

 private:
  const RasterImage& image_;
  GlobalIndex next_ = 1;
};

}  // namespace

std::string bound_message(std::string_view message, const MatchOptions& options) {
  std::string out(message);
  if (options.bind_image_name) out += *options.bind_image_name;
  return out;
}

PositionList match_bits(const RasterImage& image, const BitStream& bits) {
  PositionList positions;
  positions.reserve(bits.size());
  LsbCursor cursor(image);
  for (auto bit : bits) {
    const auto index = cursor.seek(bit);
    if (index == 0) throw InsufficientCapacity(positions.size(), bits.size());
    positions.push_back(index);
  }
  return positions;
}

PositionList match_positions(const RasterImage& image, std::string_view message,
                             const MatchOptions& options) {
  return match_bits(image, encode_text(bound_message(message, options)));
}

std::size_t matchable_prefix(const RasterImage& image, const BitStream& bits) {
  LsbCursor cursor(image);
  std::size_t matched = 0;
  for (auto bit : bits) {
    if (cursor.seek(bit) == 0) break;
    ++matched;
  }
  return matched;
}

bool verify_positions(const RasterImage& image, std::span<const GlobalIndex> positions,
                      const BitStream& bits) {
  if (positions.size() != bits.size()) return false;
  GlobalIndex previous = 0;
  for (std::size_t k = 0; k < positions.size(); ++k) {
    const auto p = positions[k];
    if (p <= previous || p > image.sample_count()) return false;
    if (lsb_at(image, p) != bits[k]) return false;
    previous = p;
  }
  return true;
}

}  // namespace posmatch
