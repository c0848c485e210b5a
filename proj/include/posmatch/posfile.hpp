#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "posmatch/image.hpp"
#include "posmatch/matcher.hpp"

namespace posmatch {

// SPM1 layout, all integers big-endian:
//
//   offset  size  field
//        0     4  magic "SPM1"
//        4     1  version (1)
//        5     4  width
//        9     4  height
//       13     1  channel order (0 = G,R,B)
//       14     2  bound image name length
//       16     4  position count (multiple of 7)
//       20    16  salt
//       36    16  key verifier = SHA-256(salt || key)[0..16)
//       52   4*n  positions, XORed with SHA-256(salt || key || counter_be32) blocks
//
// The verifier gates decoding; the keystream only hides the positions. There
// is no authentication of the header or payload.
namespace spm1 {
inline constexpr std::array<std::uint8_t, 4> kMagic = {'S', 'P', 'M', '1'};
inline constexpr std::uint8_t kVersion = 1;
inline constexpr std::uint8_t kChannelOrderGRB = 0;
inline constexpr std::size_t kSaltSize = 16;
inline constexpr std::size_t kVerifierSize = 16;
inline constexpr std::size_t kSaltOffset = 20;
inline constexpr std::size_t kVerifierOffset = 36;
inline constexpr std::size_t kHeaderSize = 52;
inline constexpr std::size_t kPositionSize = 4;
}  // namespace spm1

class SecretKey {
 public:
  // Throws std::invalid_argument on an empty key.
  explicit SecretKey(std::vector<std::uint8_t> bytes);
  static SecretKey from_passphrase(std::string_view passphrase);

  std::span<const std::uint8_t> bytes() const noexcept { return bytes_; }

 private:
  std::vector<std::uint8_t> bytes_;
};

/// Source of salt bytes.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual void fill(std::span<std::uint8_t> out) = 0;
};

/// Operating-system entropy via std::random_device.
class SystemRandom final : public RandomSource {
 public:
  void fill(std::span<std::uint8_t> out) override;
};

/// Deterministic SplitMix64 stream; each 64-bit output is emitted
/// least-significant byte first.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::uint64_t seed) : state_(seed) {}
  void fill(std::span<std::uint8_t> out) override;
  std::uint64_t next();

 private:
  std::uint64_t state_;
};

struct PositionFileContents {
  PositionList positions;
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint16_t name_length = 0;

  friend bool operator==(const PositionFileContents&, const PositionFileContents&) = default;
};

/// Throws PositionOutOfRange for a position outside [1, 3*width*height],
/// std::invalid_argument for a non-increasing list or a name length longer
/// than the message, and MalformedPositionFile when the count is not a
/// multiple of 7 or the dimensions cannot be indexed with 32 bits.
std::vector<std::uint8_t> seal_positions(std::span<const GlobalIndex> positions, const SecretKey& key,
                                         std::uint32_t width, std::uint32_t height,
                                         std::uint16_t name_length, RandomSource& random);

/// Structural header checks, then the key gate, then payload decoding and
/// validation. Throws MalformedPositionFile or WrongKey; under a wrong key the
/// payload is never decoded.
PositionFileContents open_positions(std::span<const std::uint8_t> data, const SecretKey& key);

/// Header fields readable without a key.
struct PositionFileHeader {
  std::uint8_t version = 0;
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  std::uint8_t channel_order = 0;
  std::uint16_t name_length = 0;
  std::uint32_t position_count = 0;
};

PositionFileHeader read_header(std::span<const std::uint8_t> data);

}  // namespace posmatch
