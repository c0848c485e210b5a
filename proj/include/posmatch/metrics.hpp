#pragma once

#include <array>
#include <cstdint>

#include "posmatch/image.hpp"

namespace posmatch {

/// Mean squared error over all 3 * M * N samples. Throws DimensionMismatch.
double mse(const RasterImage& a, const RasterImage& b);
/// Mean squared error over one plane (M * N samples).
double mse(const RasterImage& a, const RasterImage& b, Channel channel);

/// 20 * log10(255 / sqrt(mse)); +infinity when the inputs are identical.
double psnr_from_mse(double mse_value);
double psnr(const RasterImage& a, const RasterImage& b);
double psnr(const RasterImage& a, const RasterImage& b, Channel channel);

using Histogram = std::array<std::uint64_t, 256>;

Histogram histogram(const RasterImage& image, Channel channel);

/// Capacity heuristic: roughly one sample in four yields a usable match.
struct CapacityEstimate {
  std::uint64_t total_samples = 0;
  std::uint64_t estimated_match_bits = 0;
  std::uint64_t estimated_characters = 0;
  // The same figures as a report would round them: bits truncated to two
  // significant figures, characters derived from those rounded bits.
  std::uint64_t rounded_match_bits = 0;
  std::uint64_t rounded_characters = 0;

  friend bool operator==(const CapacityEstimate&, const CapacityEstimate&) = default;
};

/// Requires width, height >= 1 (throws std::invalid_argument otherwise).
CapacityEstimate estimate_capacity(std::uint64_t width, std::uint64_t height);

/// Keeps the leading `digits` significant decimal digits, zeroing the rest.
std::uint64_t truncate_significant(std::uint64_t value, int digits);

}  // namespace posmatch
