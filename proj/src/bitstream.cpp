#include "posmatch/bitstream.hpp"

#include <cctype>

#include "posmatch/errors.hpp"

namespace posmatch {

BitStream::BitStream(std::initializer_list<std::uint8_t> bits)
    : BitStream(from_bits(std::span<const std::uint8_t>(bits.begin(), bits.size()))) {}

BitStream BitStream::from_bits(std::span<const std::uint8_t> bits) {
  BitStream out;
  out.bits_.reserve(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) throw InvalidBit(i);
    out.bits_.push_back(bits[i]);
  }
  return out;
}

BitStream BitStream::from_string(std::string_view digits) {
  BitStream out;
  std::size_t index = 0;
  for (char c : digits) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c != '0' && c != '1') throw InvalidBit(index);
    out.bits_.push_back(static_cast<std::uint8_t>(c - '0'));
    ++index;
  }
  return out;
}

void BitStream::append(const BitStream& other) {
  bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

std::string BitStream::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(static_cast<char>('0' + b));
  return s;
}

BitStream encode_text(std::string_view text) {
  BitStream out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const auto code = static_cast<unsigned char>(text[i]);
    if (code > 127) throw NonAsciiCharacter(i);
    for (int shift = kBitsPerChar - 1; shift >= 0; --shift) out.push_back((code >> shift) & 1u);
  }
  return out;
}

std::string decode_bits(const BitStream& bits) {
  if (bits.size() % kBitsPerChar != 0) throw BitCountNotMultipleOfSeven(bits.size());
  std::string text;
  text.reserve(bits.size() / kBitsPerChar);
  for (std::size_t i = 0; i < bits.size(); i += kBitsPerChar) {
    unsigned code = 0;
    for (std::size_t j = 0; j < kBitsPerChar; ++j) code = (code << 1) | bits[i + j];
    text.push_back(static_cast<char>(code));
  }
  return text;
}

}  // namespace posmatch
