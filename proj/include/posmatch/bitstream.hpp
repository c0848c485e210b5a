#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace posmatch {

/// Number of bits each character occupies in a secret message.
inline constexpr std::size_t kBitsPerChar = 7;

/// Ordered sequence of binary digits. Every element is 0 or 1; the
/// multiple-of-seven length rule is enforced where text is decoded, since
/// raw LSB reads may produce arbitrary lengths.
class BitStream {
 public:
  BitStream() = default;
  BitStream(std::initializer_list<std::uint8_t> bits);

  // Throws InvalidBit if any element is not 0 or 1.
  static BitStream from_bits(std::span<const std::uint8_t> bits);
  // Parses a string of '0'/'1'; whitespace is skipped.
  static BitStream from_string(std::string_view digits);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  auto begin() const noexcept { return bits_.begin(); }
  auto end() const noexcept { return bits_.end(); }

  void push_back(bool bit) { bits_.push_back(bit ? 1 : 0); }
  void append(const BitStream& other);

  std::string to_string() const;

  friend bool operator==(const BitStream&, const BitStream&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// 7-bit ASCII, most-significant bit first per character.
/// Throws NonAsciiCharacter for any byte above 127.
BitStream encode_text(std::string_view text);

/// Inverse of encode_text. Throws BitCountNotMultipleOfSeven.
std::string decode_bits(const BitStream& bits);

}  // namespace posmatch
