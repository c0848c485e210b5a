#include "posmatch/image.hpp"

#include "posmatch/errors.hpp"

namespace posmatch {

char channel_letter(Channel c) noexcept {
  switch (c) {
    case Channel::Red:
      return 'R';
    case Channel::Green:
      return 'G';
    case Channel::Blue:
      return 'B';
  }
  return '?';
}

RasterImage::RasterImage(std::uint32_t width, std::uint32_t height) : width_(width), height_(height) {
  if (width == 0 || height == 0) throw MalformedImage("zero dimension");
  for (auto& p : planes_) p.assign(pixel_count(), 0);
}

RasterImage RasterImage::from_interleaved_rgb(std::uint32_t width, std::uint32_t height,
                                              std::span<const std::uint8_t> rgb) {
  RasterImage img(width, height);
  if (rgb.size() != img.sample_count())
    throw MalformedImage("expected " + std::to_string(img.sample_count()) + " RGB bytes, got " +
                         std::to_string(rgb.size()));
  const auto n = img.pixel_count();
  for (std::uint64_t i = 0; i < n; ++i) {
    img.planes_[0][i] = rgb[3 * i];
    img.planes_[1][i] = rgb[3 * i + 1];
    img.planes_[2][i] = rgb[3 * i + 2];
  }
  return img;
}

std::vector<std::uint8_t> RasterImage::interleaved_rgb() const {
  std::vector<std::uint8_t> out(sample_count());
  const auto n = pixel_count();
  for (std::uint64_t i = 0; i < n; ++i) {
    out[3 * i] = planes_[0][i];
    out[3 * i + 1] = planes_[1][i];
    out[3 * i + 2] = planes_[2][i];
  }
  return out;
}

SampleLocation index_to_location(GlobalIndex index, const RasterImage& image) {
  const auto max = image.sample_count();
  if (index < 1 || index > max) throw IndexOutOfRange(index, max);
  const auto n = image.pixel_count();
  const auto zero_based = index - 1;
  const auto plane = zero_based / n;
  const auto offset = zero_based % n;
  return {kScanOrder[plane], static_cast<std::uint32_t>(offset / image.width()),
          static_cast<std::uint32_t>(offset % image.width())};
}

GlobalIndex location_to_index(const SampleLocation& loc, const RasterImage& image) {
  std::uint64_t plane = 0;
  while (kScanOrder[plane] != loc.channel) ++plane;
  return plane * image.pixel_count() + std::uint64_t{loc.row} * image.width() + loc.col + 1;
}

std::uint8_t sample_at(const RasterImage& image, GlobalIndex index) {
  const auto loc = index_to_location(index, image);
  return image.sample(loc.channel, loc.row, loc.col);
}

std::uint8_t lsb_at(const RasterImage& image, GlobalIndex index) { return sample_at(image, index) & 1u; }

}  // namespace posmatch
