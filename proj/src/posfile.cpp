#include "posmatch/posfile.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "posmatch/errors.hpp"
#include "posmatch/sha256.hpp"

namespace posmatch {
namespace {

void put_be(std::vector<std::uint8_t>& out, std::uint64_t value, int bytes) {
  for (int i = bytes - 1; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
}

std::uint64_t get_be(std::span<const std::uint8_t> in, std::size_t at, int bytes) {
  std::uint64_t value = 0;
  for (int i = 0; i < bytes; ++i) value = (value << 8) | in[at + i];
  return value;
}

std::array<std::uint8_t, spm1::kVerifierSize> key_verifier(std::span<const std::uint8_t> salt,
                                                           const SecretKey& key) {
  const auto digest = sha256({salt, key.bytes()});
  std::array<std::uint8_t, spm1::kVerifierSize> out{};
  std::copy_n(digest.begin(), out.size(), out.begin());
  return out;
}

// XORs data in place with SHA-256(salt || key || counter) blocks.
void apply_keystream(std::span<std::uint8_t> data, std::span<const std::uint8_t> salt, const SecretKey& key) {
  std::uint32_t counter = 0;
  for (std::size_t off = 0; off < data.size(); off += 32, ++counter) {
    const std::array<std::uint8_t, 4> ctr = {
        static_cast<std::uint8_t>(counter >> 24), static_cast<std::uint8_t>(counter >> 16),
        static_cast<std::uint8_t>(counter >> 8), static_cast<std::uint8_t>(counter)};
    const auto block = sha256({salt, key.bytes(), ctr});
    const auto n = std::min<std::size_t>(32, data.size() - off);
    for (std::size_t i = 0; i < n; ++i) data[off + i] ^= block[i];
  }
}

std::uint64_t max_index(std::uint32_t width, std::uint32_t height) {
  return 3 * std::uint64_t{width} * height;
}

}  // namespace

SecretKey::SecretKey(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {
  if (bytes_.empty()) throw std::invalid_argument("secret key must not be empty");
}

SecretKey SecretKey::from_passphrase(std::string_view passphrase) {
  return SecretKey(std::vector<std::uint8_t>(passphrase.begin(), passphrase.end()));
}

void SystemRandom::fill(std::span<std::uint8_t> out) {
  std::random_device rd;
  for (auto& b : out) b = static_cast<std::uint8_t>(rd());
}

std::uint64_t SeededRandom::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

void SeededRandom::fill(std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < out.size(); i += 8) {
    const auto word = next();
    for (std::size_t j = 0; j < 8 && i + j < out.size(); ++j)
      out[i + j] = static_cast<std::uint8_t>(word >> (8 * j));
  }
}

std::vector<std::uint8_t> seal_positions(std::span<const GlobalIndex> positions, const SecretKey& key,
                                         std::uint32_t width, std::uint32_t height,
                                         std::uint16_t name_length, RandomSource& random) {
  const auto max = max_index(width, height);
  if (max > 0xFFFFFFFFull) throw MalformedPositionFile("image too large for 32-bit positions");
  if (positions.size() % kBitsPerChar != 0)
    throw MalformedPositionFile("position count " + std::to_string(positions.size()) +
                                " is not a multiple of 7");
  if (positions.size() > 0xFFFFFFFFull) throw MalformedPositionFile("too many positions");
  GlobalIndex previous = 0;
  for (auto p : positions) {
    if (p < 1 || p > max) throw PositionOutOfRange(p, max);
    if (p <= previous) throw std::invalid_argument("positions must be strictly increasing");
    previous = p;
  }
  if (name_length > positions.size() / kBitsPerChar)
    throw std::invalid_argument("bound name longer than the message");

  std::vector<std::uint8_t> out(spm1::kMagic.begin(), spm1::kMagic.end());
  out.reserve(spm1::kHeaderSize + positions.size() * spm1::kPositionSize);
  out.push_back(spm1::kVersion);
  put_be(out, width, 4);
  put_be(out, height, 4);
  out.push_back(spm1::kChannelOrderGRB);
  put_be(out, name_length, 2);
  put_be(out, positions.size(), 4);

  std::array<std::uint8_t, spm1::kSaltSize> salt{};
  random.fill(salt);
  out.insert(out.end(), salt.begin(), salt.end());
  const auto verifier = key_verifier(salt, key);
  out.insert(out.end(), verifier.begin(), verifier.end());

  for (auto p : positions) put_be(out, p, 4);
  apply_keystream(std::span(out).subspan(spm1::kHeaderSize), salt, key);
  return out;
}

PositionFileHeader read_header(std::span<const std::uint8_t> data) {
  if (data.size() < spm1::kMagic.size() || !std::equal(spm1::kMagic.begin(), spm1::kMagic.end(), data.begin()))
    throw MalformedPositionFile("bad magic");
  if (data.size() < spm1::kHeaderSize) throw MalformedPositionFile("header truncated");
  PositionFileHeader h;
  h.version = data[4];
  if (h.version != spm1::kVersion) throw MalformedPositionFile("unsupported version " + std::to_string(h.version));
  h.width = static_cast<std::uint32_t>(get_be(data, 5, 4));
  h.height = static_cast<std::uint32_t>(get_be(data, 9, 4));
  h.channel_order = data[13];
  if (h.channel_order != spm1::kChannelOrderGRB)
    throw MalformedPositionFile("unknown channel order " + std::to_string(h.channel_order));
  h.name_length = static_cast<std::uint16_t>(get_be(data, 14, 2));
  h.position_count = static_cast<std::uint32_t>(get_be(data, 16, 4));
  if (h.position_count % kBitsPerChar != 0) throw MalformedPositionFile("position count not a multiple of 7");
  const auto expected = spm1::kHeaderSize + std::uint64_t{h.position_count} * spm1::kPositionSize;
  if (data.size() < expected) throw MalformedPositionFile("payload truncated");
  if (data.size() > expected) throw MalformedPositionFile("trailing bytes after payload");
  return h;
}

PositionFileContents open_positions(std::span<const std::uint8_t> data, const SecretKey& key) {
  const auto header = read_header(data);
  const auto salt = data.subspan(spm1::kSaltOffset, spm1::kSaltSize);
  const auto stored = data.subspan(spm1::kVerifierOffset, spm1::kVerifierSize);
  const auto expected = key_verifier(salt, key);
  if (!std::equal(expected.begin(), expected.end(), stored.begin())) throw WrongKey();

  std::vector<std::uint8_t> payload(data.begin() + spm1::kHeaderSize, data.end());
  apply_keystream(payload, salt, key);

  PositionFileContents contents;
  contents.width = header.width;
  contents.height = header.height;
  contents.name_length = header.name_length;
  contents.positions.reserve(header.position_count);
  const auto max = max_index(header.width, header.height);
  GlobalIndex previous = 0;
  for (std::size_t i = 0; i < header.position_count; ++i) {
    const auto p = get_be(payload, i * spm1::kPositionSize, 4);
    if (p <= previous) throw MalformedPositionFile("positions not strictly increasing at entry " + std::to_string(i));
    if (p > max) throw MalformedPositionFile("position " + std::to_string(p) + " exceeds " + std::to_string(max));
    contents.positions.push_back(p);
    previous = p;
  }
  if (header.name_length > header.position_count / kBitsPerChar)
    throw MalformedPositionFile("bound name longer than the message");
  return contents;
}

}  // namespace posmatch
