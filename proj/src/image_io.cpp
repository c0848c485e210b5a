#include <cctype>
#include <cstring>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>

#include "posmatch/errors.hpp"
#include "posmatch/image.hpp"

#ifdef POSMATCH_HAVE_PNG
#include <png.h>
#endif

namespace posmatch {
namespace {

constexpr std::uint64_t kMaxDimension = std::uint64_t{1} << 30;

// Whitespace- and comment-aware reader for the ASCII part of a netpbm header.
class PnmHeaderReader {
 public:
  explicit PnmHeaderReader(std::span<const std::uint8_t> data) : data_(data) {}

  std::uint64_t next_number(const char* what) {
    skip_whitespace_and_comments();
    if (pos_ >= data_.size()) throw MalformedImage(std::string("header truncated before ") + what);
    if (!std::isdigit(data_[pos_])) throw MalformedImage(std::string("expected digits for ") + what);
    std::uint64_t value = 0;
    while (pos_ < data_.size() && std::isdigit(data_[pos_])) {
      value = value * 10 + (data_[pos_] - '0');
      if (value > kMaxDimension) throw MalformedImage(std::string(what) + " too large");
      ++pos_;
    }
    return value;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  std::size_t raster_offset() {
    if (pos_ >= data_.size() || !std::isspace(data_[pos_]))
      throw MalformedImage("missing whitespace after maxval");
    return pos_ + 1;
  }

  void skip(std::size_t n) { pos_ += n; }

 private:
  void skip_whitespace_and_comments() {
    while (pos_ < data_.size()) {
      if (std::isspace(data_[pos_])) {
        ++pos_;
      } else if (data_[pos_] == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n' && data_[pos_] != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

RasterImage decode_pnm(std::span<const std::uint8_t> data) {
  if (data.size() < 2 || data[0] != 'P') throw MalformedImage("missing netpbm magic");
  const char kind = static_cast<char>(data[1]);
  if (kind != '6' && kind != '5') {
    throw UnsupportedFormat(std::string("netpbm variant P") + kind + " (only binary P6/P5)");
  }
  PnmHeaderReader reader(data);
  reader.skip(2);
  const auto width = reader.next_number("width");
  const auto height = reader.next_number("height");
  const auto maxval = reader.next_number("maxval");
  if (width == 0 || height == 0) throw MalformedImage("zero dimension");
  if (maxval == 0 || maxval > 65535) throw MalformedImage("maxval out of range");
  if (maxval != 255) throw UnsupportedBitDepth("maxval " + std::to_string(maxval) + " (need 255)");
  const auto offset = reader.raster_offset();

  const std::uint64_t channels = kind == '6' ? 3 : 1;
  const std::uint64_t expected = width * height * channels;
  const std::uint64_t available = data.size() - offset;
  if (available < expected)
    throw MalformedImage("raster truncated: expected " + std::to_string(expected) + " bytes, got " +
                         std::to_string(available));
  if (available > expected) throw MalformedImage("trailing data after raster");

  const auto raster = data.subspan(offset, expected);
  const auto w = static_cast<std::uint32_t>(width);
  const auto h = static_cast<std::uint32_t>(height);
  if (channels == 3) return RasterImage::from_interleaved_rgb(w, h, raster);

  RasterImage img(w, h);
  for (auto c : kScanOrder) std::copy(raster.begin(), raster.end(), img.plane(c).begin());
  return img;
}

std::uint32_t read_le32(std::span<const std::uint8_t> d, std::size_t at) {
  return std::uint32_t{d[at]} | std::uint32_t{d[at + 1]} << 8 | std::uint32_t{d[at + 2]} << 16 |
         std::uint32_t{d[at + 3]} << 24;
}

std::uint16_t read_le16(std::span<const std::uint8_t> d, std::size_t at) {
  return static_cast<std::uint16_t>(d[at] | d[at + 1] << 8);
}

// Uncompressed 24/32-bit BMP with a BITMAPINFOHEADER or later.
RasterImage decode_bmp(std::span<const std::uint8_t> data) {
  if (data.size() < 54 || data[0] != 'B' || data[1] != 'M') throw MalformedImage("bad BMP header");
  const auto pixel_offset = read_le32(data, 10);
  const auto dib_size = read_le32(data, 14);
  if (dib_size < 40) throw UnsupportedFormat("BMP core header");
  const auto raw_width = static_cast<std::int32_t>(read_le32(data, 18));
  const auto raw_height = static_cast<std::int32_t>(read_le32(data, 22));
  const auto planes = read_le16(data, 26);
  const auto bpp = read_le16(data, 28);
  const auto compression = read_le32(data, 30);
  if (planes != 1) throw MalformedImage("BMP plane count must be 1");
  if (bpp <= 8) throw UnsupportedFormat("palette BMP");
  if (bpp != 24 && bpp != 32) throw UnsupportedBitDepth(std::to_string(bpp) + "-bit BMP");
  if (compression != 0) throw UnsupportedFormat("compressed BMP");
  if (raw_width <= 0 || raw_height == 0 || raw_height == std::numeric_limits<std::int32_t>::min())
    throw MalformedImage("bad BMP dimensions");

  const bool top_down = raw_height < 0;
  const std::uint64_t width = static_cast<std::uint64_t>(raw_width);
  const std::uint64_t height = static_cast<std::uint64_t>(top_down ? -std::int64_t{raw_height} : raw_height);
  if (width > kMaxDimension || height > kMaxDimension) throw MalformedImage("BMP too large");
  const std::uint64_t bytes_per_pixel = bpp / 8;
  const std::uint64_t stride = (width * bytes_per_pixel + 3) & ~std::uint64_t{3};
  if (pixel_offset > data.size() || data.size() - pixel_offset < stride * height)
    throw MalformedImage("BMP pixel array truncated");

  RasterImage img(static_cast<std::uint32_t>(width), static_cast<std::uint32_t>(height));
  for (std::uint64_t y = 0; y < height; ++y) {
    const auto src_row = top_down ? y : height - 1 - y;
    const auto* row = data.data() + pixel_offset + src_row * stride;
    for (std::uint64_t x = 0; x < width; ++x) {
      const auto* px = row + x * bytes_per_pixel;
      const auto r = static_cast<std::uint32_t>(y);
      const auto c = static_cast<std::uint32_t>(x);
      img.set_sample(Channel::Blue, r, c, px[0]);
      img.set_sample(Channel::Green, r, c, px[1]);
      img.set_sample(Channel::Red, r, c, px[2]);
    }
  }
  return img;
}

#ifdef POSMATCH_HAVE_PNG
RasterImage decode_png(std::span<const std::uint8_t> data) {
  png_image png{};
  png.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_memory(&png, data.data(), data.size()))
    throw MalformedImage(std::string("PNG: ") + png.message);
  if (png.format & PNG_FORMAT_FLAG_LINEAR) {
    png_image_free(&png);
    throw UnsupportedBitDepth("16-bit PNG");
  }
  if (png.format & PNG_FORMAT_FLAG_ALPHA) {
    png_image_free(&png);
    throw UnsupportedFormat("PNG with alpha channel");
  }
  const auto width = png.width;
  const auto height = png.height;
  png.format = PNG_FORMAT_RGB;
  std::vector<std::uint8_t> rgb(PNG_IMAGE_SIZE(png));
  if (!png_image_finish_read(&png, nullptr, rgb.data(), 0, nullptr)) {
    std::string msg = png.message;
    png_image_free(&png);
    throw MalformedImage("PNG: " + msg);
  }
  return RasterImage::from_interleaved_rgb(width, height, rgb);
}
#endif

}  // namespace

bool png_supported() noexcept {
#ifdef POSMATCH_HAVE_PNG
  return true;
#else
  return false;
#endif
}

ImageFormat detect_format(std::span<const std::uint8_t> data) {
  static constexpr std::uint8_t kPngMagic[] = {0x89, 'P', 'N', 'G', 0x0d, 0x0a, 0x1a, 0x0a};
  if (data.size() >= 2 && data[0] == 'P' && data[1] >= '1' && data[1] <= '7') return ImageFormat::Ppm;
  if (data.size() >= 2 && data[0] == 'B' && data[1] == 'M') return ImageFormat::Bmp;
  if (data.size() >= sizeof kPngMagic && std::memcmp(data.data(), kPngMagic, sizeof kPngMagic) == 0)
    return ImageFormat::Png;
  throw UnsupportedFormat("unrecognized signature");
}

RasterImage load_image(std::span<const std::uint8_t> data, ImageFormat format) {
  switch (format) {
    case ImageFormat::Ppm:
      return decode_pnm(data);
    case ImageFormat::Bmp:
      return decode_bmp(data);
    case ImageFormat::Png:
#ifdef POSMATCH_HAVE_PNG
      return decode_png(data);
#else
      throw UnsupportedFormat("PNG support not compiled in");
#endif
  }
  throw UnsupportedFormat("unknown format");
}

RasterImage load_image(std::span<const std::uint8_t> data) { return load_image(data, detect_format(data)); }

RasterImage load_image_file(const std::filesystem::path& path) { return load_image(read_file_bytes(path)); }

std::vector<std::uint8_t> encode_ppm(const RasterImage& image) {
  const auto header =
      "P6\n" + std::to_string(image.width()) + " " + std::to_string(image.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  const auto rgb = image.interleaved_rgb();
  out.insert(out.end(), rgb.begin(), rgb.end());
  return out;
}

void save_ppm(const RasterImage& image, const std::filesystem::path& path) {
  write_file_bytes(path, encode_ppm(image));
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot create " + path.string());
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace posmatch
