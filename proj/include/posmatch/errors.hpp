#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace posmatch {

// Base for every error raised by the library. Each subclass carries the
// structured fields a caller needs to build its own diagnostics.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonAsciiCharacter : public Error {
 public:
  explicit NonAsciiCharacter(std::size_t index)
      : Error("non-ASCII character at index " + std::to_string(index)), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class BitCountNotMultipleOfSeven : public Error {
 public:
  explicit BitCountNotMultipleOfSeven(std::size_t length)
      : Error("bit count " + std::to_string(length) + " is not a multiple of 7"), length_(length) {}
  std::size_t length() const noexcept { return length_; }

 private:
  std::size_t length_;
};

class InvalidBit : public Error {
 public:
  explicit InvalidBit(std::size_t index)
      : Error("element " + std::to_string(index) + " is not a binary digit"), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class MalformedImage : public Error {
 public:
  explicit MalformedImage(const std::string& detail) : Error("malformed image: " + detail) {}
};

class UnsupportedFormat : public Error {
 public:
  explicit UnsupportedFormat(const std::string& detail) : Error("unsupported image format: " + detail) {}
};

class UnsupportedBitDepth : public Error {
 public:
  explicit UnsupportedBitDepth(const std::string& detail) : Error("unsupported bit depth: " + detail) {}
};

class IndexOutOfRange : public Error {
 public:
  IndexOutOfRange(std::uint64_t index, std::uint64_t max)
      : Error("index " + std::to_string(index) + " outside [1, " + std::to_string(max) + "]"),
        index_(index),
        max_(max) {}
  std::uint64_t index() const noexcept { return index_; }
  std::uint64_t max() const noexcept { return max_; }

 private:
  std::uint64_t index_;
  std::uint64_t max_;
};

class InsufficientCapacity : public Error {
 public:
  InsufficientCapacity(std::size_t bits_matched, std::size_t bits_required)
      : Error("insufficient capacity: matched " + std::to_string(bits_matched) + " of " +
              std::to_string(bits_required) + " bits"),
        bits_matched_(bits_matched),
        bits_required_(bits_required) {}
  std::size_t bits_matched() const noexcept { return bits_matched_; }
  std::size_t bits_required() const noexcept { return bits_required_; }

 private:
  std::size_t bits_matched_;
  std::size_t bits_required_;
};

class PositionOutOfRange : public Error {
 public:
  PositionOutOfRange(std::uint64_t position, std::uint64_t max)
      : Error("position " + std::to_string(position) + " outside [1, " + std::to_string(max) + "]"),
        position_(position),
        max_(max) {}
  std::uint64_t position() const noexcept { return position_; }
  std::uint64_t max() const noexcept { return max_; }

 private:
  std::uint64_t position_;
  std::uint64_t max_;
};

class WrongKey : public Error {
 public:
  WrongKey() : Error("wrong secret key") {}
};

class MalformedPositionFile : public Error {
 public:
  explicit MalformedPositionFile(const std::string& detail)
      : Error("malformed position file: " + detail) {}
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::uint32_t aw, std::uint32_t ah, std::uint32_t bw, std::uint32_t bh)
      : Error("dimension mismatch: " + std::to_string(aw) + "x" + std::to_string(ah) + " vs " +
              std::to_string(bw) + "x" + std::to_string(bh)) {}
};

}  // namespace posmatch
