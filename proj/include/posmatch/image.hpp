#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace posmatch {

enum class Channel : std::uint8_t { Red = 0, Green = 1, Blue = 2 };

/// The frozen global scan order: green plane, then red, then blue.
inline constexpr std::array<Channel, 3> kScanOrder = {Channel::Green, Channel::Red, Channel::Blue};

char channel_letter(Channel c) noexcept;

/// 1-based position over the channel-ordered sample space.
using GlobalIndex = std::uint64_t;

struct SampleLocation {
  Channel channel;
  std::uint32_t row;
  std::uint32_t col;

  friend bool operator==(const SampleLocation&, const SampleLocation&) = default;
};

/// 8-bit RGB raster stored as three row-major planes.
class RasterImage {
 public:
  RasterImage() = default;
  // All samples zero. Throws MalformedImage on a zero dimension.
  RasterImage(std::uint32_t width, std::uint32_t height);

  // From interleaved RGB bytes (width * height * 3).
  static RasterImage from_interleaved_rgb(std::uint32_t width, std::uint32_t height,
                                          std::span<const std::uint8_t> rgb);

  std::uint32_t width() const noexcept { return width_; }
  std::uint32_t height() const noexcept { return height_; }
  std::uint64_t pixel_count() const noexcept { return std::uint64_t{width_} * height_; }
  std::uint64_t sample_count() const noexcept { return 3 * pixel_count(); }

  std::uint8_t sample(Channel c, std::uint32_t row, std::uint32_t col) const {
    return planes_[static_cast<std::size_t>(c)][std::size_t{row} * width_ + col];
  }
  void set_sample(Channel c, std::uint32_t row, std::uint32_t col, std::uint8_t value) {
    planes_[static_cast<std::size_t>(c)][std::size_t{row} * width_ + col] = value;
  }

  std::span<const std::uint8_t> plane(Channel c) const noexcept {
    return planes_[static_cast<std::size_t>(c)];
  }
  std::span<std::uint8_t> plane(Channel c) noexcept { return planes_[static_cast<std::size_t>(c)]; }

  std::vector<std::uint8_t> interleaved_rgb() const;

  friend bool operator==(const RasterImage&, const RasterImage&) = default;

 private:
  std::uint32_t width_ = 0;
  std::uint32_t height_ = 0;
  std::array<std::vector<std::uint8_t>, 3> planes_;
};

// Throws IndexOutOfRange unless 1 <= index <= 3 * width * height.
SampleLocation index_to_location(GlobalIndex index, const RasterImage& image);
GlobalIndex location_to_index(const SampleLocation& loc, const RasterImage& image);

/// Sample value at the given position, following the scan order.
std::uint8_t sample_at(const RasterImage& image, GlobalIndex index);
std::uint8_t lsb_at(const RasterImage& image, GlobalIndex index);

enum class ImageFormat { Ppm, Png, Bmp };

ImageFormat detect_format(std::span<const std::uint8_t> data);
bool png_supported() noexcept;

RasterImage load_image(std::span<const std::uint8_t> data, ImageFormat format);
RasterImage load_image(std::span<const std::uint8_t> data);
RasterImage load_image_file(const std::filesystem::path& path);

/// Binary P6 with a canonical "P6\n<w> <h>\n255\n" header.
std::vector<std::uint8_t> encode_ppm(const RasterImage& image);
void save_ppm(const RasterImage& image, const std::filesystem::path& path);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> data);

}  // namespace posmatch
