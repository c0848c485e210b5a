#include <doctest.h>

#include <random>

#include "../support.hpp"

using namespace posmatch;

namespace {

// 4x1 image whose green plane is [154, 77, 2, 255]; red and blue all zero.
RasterImage four_sample_cover() {
  RasterImage img(4, 1);
  const std::uint8_t green[] = {154, 77, 2, 255};
  std::copy(std::begin(green), std::end(green), img.plane(Channel::Green).begin());
  return img;
}

}  // namespace

TEST_CASE("first fit on a four-sample green plane") {
  const auto img = four_sample_cover();
  // LSBs are 0,1,0,1: bit 1 lands on index 2, bit 0 on index 3.
  const auto oracle = testing::oracle_first_fit(img, BitStream{1, 0});
  REQUIRE(oracle);
  CHECK(*oracle == std::vector<std::uint64_t>{2, 3});
  CHECK(match_bits(img, BitStream{1, 0}) == PositionList{2, 3});
  CHECK(verify_positions(img, PositionList{2, 3}, BitStream{1, 0}));
  CHECK_FALSE(verify_positions(img, PositionList{2, 3}, BitStream{0, 1}));
}

TEST_CASE("repeated bits never reuse an index") {
  const auto img = four_sample_cover();
  CHECK(match_bits(img, BitStream{1, 1}) == PositionList{2, 4});
  CHECK(match_bits(img, BitStream{0, 0, 0}) == PositionList{1, 3, 5});
}

TEST_CASE("empty message gives an empty list") {
  const auto img = four_sample_cover();
  CHECK(match_positions(img, "").empty());
}

TEST_CASE("all-even cover cannot match a 1 bit") {
  const RasterImage even(8, 8);
  try {
    match_positions(even, "A");  // 1000001
    FAIL("expected InsufficientCapacity");
  } catch (const InsufficientCapacity& e) {
    CHECK(e.bits_matched() == 0);
    CHECK(e.bits_required() == 7);
  }
}

TEST_CASE("capacity failure reports progress") {
  const auto img = four_sample_cover();  // 12 samples: LSBs 0101 then eight zeros
  try {
    match_bits(img, BitStream{1, 1, 1});
    FAIL("expected InsufficientCapacity");
  } catch (const InsufficientCapacity& e) {
    CHECK(e.bits_matched() == 2);
    CHECK(e.bits_required() == 3);
  }
  CHECK(matchable_prefix(img, BitStream{1, 1, 1}) == 2);
}

TEST_CASE("non-ASCII message or bound name is rejected") {
  const auto img = four_sample_cover();
  CHECK_THROWS_AS(match_positions(img, "\xff"), NonAsciiCharacter);
  CHECK_THROWS_AS(match_positions(img, "", MatchOptions{"\x90"}), NonAsciiCharacter);
}

TEST_CASE("HelloWorld on a 64x64 cover yields 70 positions") {
  std::mt19937_64 rng(64);
  const auto img = testing::random_image(rng, 64, 64);
  const auto positions = match_positions(img, "HelloWorld");
  CHECK(positions.size() == 70);
  CHECK(verify_positions(img, positions, encode_text("HelloWorld")));
}

TEST_CASE("bound name is appended before encoding") {
  std::mt19937_64 rng(3);
  const auto img = testing::random_image(rng, 32, 32);
  const MatchOptions options{std::string("Lena")};
  CHECK(bound_message("HelloWorld", options) == "HelloWorldLena");
  const auto positions = match_positions(img, "HelloWorld", options);
  CHECK(positions.size() == 14 * 7);
  CHECK(verify_positions(img, positions, encode_text("HelloWorldLena")));
}

TEST_CASE("scan continues from green into red and blue") {
  RasterImage img(2, 2);  // every LSB 0 except the first blue sample
  img.set_sample(Channel::Blue, 0, 0, 1);
  CHECK(match_bits(img, BitStream{0, 1}) == PositionList{1, 9});
}

TEST_CASE("verify_positions rejects malformed lists") {
  const auto img = four_sample_cover();
  CHECK_FALSE(verify_positions(img, PositionList{2, 2}, BitStream{1, 1}));
  CHECK_FALSE(verify_positions(img, PositionList{4, 2}, BitStream{1, 1}));
  CHECK_FALSE(verify_positions(img, PositionList{2, 13}, BitStream{1, 0}));
  CHECK_FALSE(verify_positions(img, PositionList{0}, BitStream{0}));
  CHECK_FALSE(verify_positions(img, PositionList{2}, BitStream{1, 0}));
}

TEST_CASE("properties against the brute-force scanner") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const auto w = static_cast<std::uint32_t>(1 + rng() % 8);
    const auto h = static_cast<std::uint32_t>(1 + rng() % 8);
    const auto img = testing::random_image(rng, w, h);
    const auto snapshot = img;
    const auto bits = testing::random_bits(rng, rng() % (2 * img.sample_count() / 3 + 1));
    const auto oracle = testing::oracle_first_fit(img, bits);
    if (!oracle) {
      CHECK_THROWS_AS(match_bits(img, bits), InsufficientCapacity);
      continue;
    }
    const auto positions = match_bits(img, bits);
    CHECK(positions == *oracle);
    CHECK(verify_positions(img, positions, bits));
    CHECK(img == snapshot);
  }
}
