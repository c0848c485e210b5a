#include "posmatch/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "posmatch/errors.hpp"

namespace posmatch {
namespace {

void require_same_dims(const RasterImage& a, const RasterImage& b) {
  if (a.width() != b.width() || a.height() != b.height())
    throw DimensionMismatch(a.width(), a.height(), b.width(), b.height());
}

// Exact integer sum of squared differences; fits comfortably in 64 bits for
// any image whose sample count fits in 48 bits.
std::uint64_t squared_error(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t d = std::int64_t{a[i]} - b[i];
    sum += static_cast<std::uint64_t>(d * d);
  }
  return sum;
}

}  // namespace

double mse(const RasterImage& a, const RasterImage& b) {
  require_same_dims(a, b);
  std::uint64_t sum = 0;
  for (auto c : kScanOrder) sum += squared_error(a.plane(c), b.plane(c));
  return static_cast<double>(sum) / static_cast<double>(a.sample_count());
}

double mse(const RasterImage& a, const RasterImage& b, Channel channel) {
  require_same_dims(a, b);
  return static_cast<double>(squared_error(a.plane(channel), b.plane(channel))) /
         static_cast<double>(a.pixel_count());
}

double psnr_from_mse(double mse_value) {
  if (mse_value == 0.0) return std::numeric_limits<double>::infinity();
  return 20.0 * std::log10(255.0 / std::sqrt(mse_value));
}

double psnr(const RasterImage& a, const RasterImage& b) { return psnr_from_mse(mse(a, b)); }

double psnr(const RasterImage& a, const RasterImage& b, Channel channel) {
  return psnr_from_mse(mse(a, b, channel));
}

Histogram histogram(const RasterImage& image, Channel channel) {
  Histogram h{};
  for (auto v : image.plane(channel)) ++h[v];
  return h;
}

std::uint64_t truncate_significant(std::uint64_t value, int digits) {
  std::uint64_t limit = 1;
  for (int i = 0; i < digits; ++i) limit *= 10;
  std::uint64_t scale = 1;
  while (value / scale >= limit) scale *= 10;
  return value / scale * scale;
}

CapacityEstimate estimate_capacity(std::uint64_t width, std::uint64_t height) {
  if (width == 0 || height == 0) throw std::invalid_argument("dimensions must be positive");
  CapacityEstimate e;
  e.total_samples = 3 * width * height;
  e.estimated_match_bits = e.total_samples / 4;
  e.estimated_characters = e.estimated_match_bits / 7;
  e.rounded_match_bits = truncate_significant(e.estimated_match_bits, 2);
  e.rounded_characters = truncate_significant(e.rounded_match_bits / 7, 2);
  return e;
}

}  // namespace posmatch
