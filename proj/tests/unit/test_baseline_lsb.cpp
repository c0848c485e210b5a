#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "../support.hpp"

using namespace posmatch;

TEST_CASE("the three replacement cases") {
  CHECK(embed_bit(155, 0) == 154);
  CHECK(embed_bit(154, 0) == 154);
  CHECK(embed_bit(154, 1) == 155);
  CHECK(embed_bit(155, 1) == 155);
}

TEST_CASE("boundary samples never wrap") {
  CHECK(embed_bit(0, 1) == 1);
  CHECK(embed_bit(0, 0) == 0);
  CHECK(embed_bit(255, 0) == 254);
  CHECK(embed_bit(255, 1) == 255);
  for (int v = 0; v < 256; ++v)
    for (std::uint8_t bit : {0, 1}) {
      const auto out = embed_bit(static_cast<std::uint8_t>(v), bit);
      CHECK((out & 1) == bit);
      CHECK(std::abs(int{out} - v) <= 1);
    }
}

TEST_CASE("embedding zero bits is the identity") {
  std::mt19937_64 rng(1);
  const auto img = testing::random_image(rng, 8, 8);
  const auto stego = embed_lsb(img, BitStream{});
  CHECK(stego == img);
  CHECK(mse(img, stego) == 0.0);
}

TEST_CASE("extract_lsb reads parity in scan order") {
  RasterImage img(4, 1);
  const std::uint8_t green[] = {154, 77, 2, 255};
  std::copy(std::begin(green), std::end(green), img.plane(Channel::Green).begin());
  CHECK(extract_lsb(img, 4).to_string() == "0101");
  CHECK(extract_lsb(img, 0).empty());
  CHECK_THROWS_AS(extract_lsb(img, 13), IndexOutOfRange);
}

TEST_CASE("capacity is every sample") {
  const RasterImage img(2, 2);
  std::mt19937_64 rng(2);
  CHECK_NOTHROW(embed_lsb(img, testing::random_bits(rng, 12)));
  CHECK_THROWS_AS(embed_lsb(img, testing::random_bits(rng, 13)), InsufficientCapacity);
}

TEST_CASE("embed properties on random covers") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const auto img = testing::random_image(rng, static_cast<std::uint32_t>(1 + rng() % 20),
                                           static_cast<std::uint32_t>(1 + rng() % 20));
    const auto bits = testing::random_bits(rng, rng() % (img.sample_count() + 1));
    const auto stego = embed_lsb(img, bits);
    CHECK(extract_lsb(stego, bits.size()) == bits);
    for (GlobalIndex k = 1; k <= img.sample_count(); ++k) {
      const int before = sample_at(img, k);
      const int after = sample_at(stego, k);
      if (k > bits.size()) {
        CHECK(before == after);
      } else {
        CHECK(std::abs(before - after) <= 1);
      }
    }
    CHECK(mse(img, stego) <= static_cast<double>(bits.size()) / static_cast<double>(img.sample_count()));
  }
}
