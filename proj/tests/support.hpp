#pragma once

#include <unistd.h>

#include <cstdint>
#include <optional>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "posmatch/posmatch.hpp"

namespace posmatch::testing {

inline RasterImage random_image(std::mt19937_64& rng, std::uint32_t width, std::uint32_t height) {
  std::vector<std::uint8_t> rgb(std::size_t{width} * height * 3);
  for (auto& b : rgb) b = static_cast<std::uint8_t>(rng());
  return RasterImage::from_interleaved_rgb(width, height, rgb);
}

inline std::string random_ascii(std::mt19937_64& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> ch(0, 127);
  std::string s(len(rng), '\0');
  for (auto& c : s) c = static_cast<char>(ch(rng));
  return s;
}

inline BitStream random_bits(std::mt19937_64& rng, std::size_t n) {
  BitStream bits;
  for (std::size_t i = 0; i < n; ++i) bits.push_back(rng() & 1u);
  return bits;
}

// Sample lookup straight from interleaved RGB bytes: index k (1-based) names
// plane (k-1)/N in G,R,B order at row-major offset (k-1)%N.
inline int oracle_sample(const std::vector<std::uint8_t>& rgb, std::uint64_t pixels, std::uint64_t k) {
  static constexpr int kRgbOffsetForPlane[3] = {1, 0, 2};
  const auto plane = (k - 1) / pixels;
  const auto offset = (k - 1) % pixels;
  return rgb[3 * offset + kRgbOffsetForPlane[plane]];
}

// Brute-force first fit: for every bit, try each later index in turn.
// Returns an empty optional when the image runs out.
inline std::optional<std::vector<std::uint64_t>> oracle_first_fit(const RasterImage& image, const BitStream& bits) {
  const auto rgb = image.interleaved_rgb();
  const auto pixels = std::uint64_t{image.width()} * image.height();
  const auto total = 3 * pixels;
  std::vector<std::uint64_t> out;
  std::uint64_t previous = 0;
  for (auto bit : bits) {
    std::uint64_t found = 0;
    for (std::uint64_t k = previous + 1; k <= total; ++k) {
      if ((oracle_sample(rgb, pixels, k) % 2) == bit) {
        found = k;
        break;
      }
    }
    if (found == 0) return std::nullopt;
    out.push_back(found);
    previous = found;
  }
  return out;
}

// Squared-difference mean computed with nested loops over rows, columns and
// interleaved channels.
inline double oracle_mse(const RasterImage& a, const RasterImage& b) {
  const auto ra = a.interleaved_rgb();
  const auto rb = b.interleaved_rgb();
  long double sum = 0;
  for (std::uint32_t y = 0; y < a.height(); ++y) {
    for (std::uint32_t x = 0; x < a.width(); ++x) {
      for (int c = 0; c < 3; ++c) {
        const auto i = (std::size_t{y} * a.width() + x) * 3 + c;
        const long double d = static_cast<long double>(ra[i]) - rb[i];
        sum += d * d;
      }
    }
  }
  return static_cast<double>(sum / (3.0L * a.width() * a.height()));
}

class TempDir {
 public:
  TempDir() {
    auto base = std::filesystem::temp_directory_path();
    std::random_device rd;
    for (;;) {
      path_ = base / ("posmatch-test-" + std::to_string(::getpid()) + "-" + std::to_string(rd()));
      if (std::filesystem::create_directory(path_)) break;
    }
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline std::vector<std::uint8_t> from_hex(const std::string& hex) {
  std::vector<std::uint8_t> out;
  for (std::size_t i = 0; i + 1 < hex.size(); i += 2)
    out.push_back(static_cast<std::uint8_t>(std::stoi(hex.substr(i, 2), nullptr, 16)));
  return out;
}

}  // namespace posmatch::testing
