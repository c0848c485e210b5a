#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <string>
#include <vector>

#include "posmatch/posmatch.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace posmatch;

namespace {

std::span<const std::uint8_t> as_span(const std::string& s) {
  return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

py::bytes to_bytes(std::span<const std::uint8_t> data) {
  return {reinterpret_cast<const char*>(data.data()), data.size()};
}

Channel parse_channel(const std::string& name) {
  if (name == "R") return Channel::Red;
  if (name == "G") return Channel::Green;
  if (name == "B") return Channel::Blue;
  throw py::value_error("channel must be 'R', 'G' or 'B'");
}

SecretKey make_key(const py::object& key) {
  if (py::isinstance<py::bytes>(key)) {
    const auto raw = key.cast<std::string>();
    return SecretKey(std::vector<std::uint8_t>(raw.begin(), raw.end()));
  }
  return SecretKey::from_passphrase(key.cast<std::string>());
}

BitStream make_bits(const std::vector<int>& bits) {
  BitStream out;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0 && bits[i] != 1) throw InvalidBit(i);
    out.push_back(bits[i] == 1);
  }
  return out;
}

std::vector<int> from_bits(const BitStream& bits) { return {bits.begin(), bits.end()}; }

}  // namespace

PYBIND11_MODULE(_posmatch, m) {
  m.doc() = "Position-matching steganography core";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<NonAsciiCharacter>(m, "NonAsciiCharacter", error);
  py::register_exception<BitCountNotMultipleOfSeven>(m, "BitCountNotMultipleOfSeven", error);
  py::register_exception<InvalidBit>(m, "InvalidBit", error);
  py::register_exception<MalformedImage>(m, "MalformedImage", error);
  py::register_exception<UnsupportedFormat>(m, "UnsupportedFormat", error);
  py::register_exception<UnsupportedBitDepth>(m, "UnsupportedBitDepth", error);
  py::register_exception<IndexOutOfRange>(m, "IndexOutOfRange", error);
  py::register_exception<InsufficientCapacity>(m, "InsufficientCapacity", error);
  py::register_exception<PositionOutOfRange>(m, "PositionOutOfRange", error);
  py::register_exception<WrongKey>(m, "WrongKey", error);
  py::register_exception<MalformedPositionFile>(m, "MalformedPositionFile", error);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", error);

  py::class_<RasterImage>(m, "RasterImage")
      .def(py::init<std::uint32_t, std::uint32_t>(), py::arg("width"), py::arg("height"))
      .def_static(
          "from_rgb",
          [](std::uint32_t w, std::uint32_t h, const std::string& rgb) {
            return RasterImage::from_interleaved_rgb(w, h, as_span(rgb));
          },
          py::arg("width"), py::arg("height"), py::arg("rgb"))
      .def_property_readonly("width", &RasterImage::width)
      .def_property_readonly("height", &RasterImage::height)
      .def_property_readonly("sample_count", &RasterImage::sample_count)
      .def("to_rgb", [](const RasterImage& img) { return to_bytes(img.interleaved_rgb()); })
      .def("plane", [](const RasterImage& img, const std::string& c) { return to_bytes(img.plane(parse_channel(c))); })
      .def("__eq__", [](const RasterImage& a, const RasterImage& b) { return a == b; });

  m.def("encode_text", [](const std::string& text) { return from_bits(encode_text(text)); }, py::arg("text"));
  m.def("decode_bits", [](const std::vector<int>& bits) { return decode_bits(make_bits(bits)); }, py::arg("bits"));

  m.def("load_image", [](const py::bytes& data) { return load_image(as_span(std::string(data))); }, py::arg("data"));
  m.def("load_image_file", &load_image_file, py::arg("path"));
  m.def("encode_ppm", [](const RasterImage& img) { return to_bytes(encode_ppm(img)); }, py::arg("image"));
  m.def("lsb_at", &lsb_at, py::arg("image"), py::arg("index"));
  m.def(
      "index_to_location",
      [](GlobalIndex index, const RasterImage& img) {
        const auto loc = index_to_location(index, img);
        return py::make_tuple(std::string(1, channel_letter(loc.channel)), loc.row, loc.col);
      },
      py::arg("index"), py::arg("image"));

  m.def(
      "match_positions",
      [](const RasterImage& img, const std::string& message, std::optional<std::string> bind_name) {
        return match_positions(img, message, MatchOptions{std::move(bind_name)});
      },
      py::arg("image"), py::arg("message"), py::arg("bind_name") = py::none());
  m.def(
      "verify_positions",
      [](const RasterImage& img, const std::vector<GlobalIndex>& positions, const std::vector<int>& bits) {
        return verify_positions(img, positions, make_bits(bits));
      },
      py::arg("image"), py::arg("positions"), py::arg("bits"));
  m.def(
      "extract_message",
      [](const RasterImage& img, const std::vector<GlobalIndex>& positions) { return extract_message(img, positions); },
      py::arg("image"), py::arg("positions"));

  m.def(
      "seal_positions",
      [](const std::vector<GlobalIndex>& positions, const py::object& key, std::uint32_t width,
         std::uint32_t height, std::uint16_t name_length, std::optional<std::uint64_t> seed) {
        const auto k = make_key(key);
        std::vector<std::uint8_t> sealed;
        if (seed) {
          SeededRandom random(*seed);
          sealed = seal_positions(positions, k, width, height, name_length, random);
        } else {
          SystemRandom random;
          sealed = seal_positions(positions, k, width, height, name_length, random);
        }
        return to_bytes(sealed);
      },
      py::arg("positions"), py::arg("key"), py::arg("width"), py::arg("height"), py::arg("name_length") = 0,
      py::arg("seed") = py::none());
  m.def(
      "open_positions",
      [](const py::bytes& data, const py::object& key) {
        const auto c = open_positions(as_span(std::string(data)), make_key(key));
        py::dict d;
        d["positions"] = c.positions;
        d["width"] = c.width;
        d["height"] = c.height;
        d["name_length"] = c.name_length;
        return d;
      },
      py::arg("data"), py::arg("key"));

  m.def(
      "embed_lsb", [](const RasterImage& img, const std::vector<int>& bits) { return embed_lsb(img, make_bits(bits)); },
      py::arg("image"), py::arg("bits"));
  m.def(
      "extract_lsb", [](const RasterImage& img, std::size_t n) { return from_bits(extract_lsb(img, n)); },
      py::arg("image"), py::arg("bit_count"));

  m.def("mse", py::overload_cast<const RasterImage&, const RasterImage&>(&mse), py::arg("a"), py::arg("b"));
  m.def("psnr", py::overload_cast<const RasterImage&, const RasterImage&>(&psnr), py::arg("a"), py::arg("b"));
  m.def(
      "histogram",
      [](const RasterImage& img, const std::string& c) {
        const auto h = histogram(img, parse_channel(c));
        return std::vector<std::uint64_t>(h.begin(), h.end());
      },
      py::arg("image"), py::arg("channel"));

  py::class_<CapacityEstimate>(m, "CapacityEstimate")
      .def_readonly("total_samples", &CapacityEstimate::total_samples)
      .def_readonly("estimated_match_bits", &CapacityEstimate::estimated_match_bits)
      .def_readonly("estimated_characters", &CapacityEstimate::estimated_characters)
      .def_readonly("rounded_match_bits", &CapacityEstimate::rounded_match_bits)
      .def_readonly("rounded_characters", &CapacityEstimate::rounded_characters);
  m.def("estimate_capacity", &estimate_capacity, py::arg("width"), py::arg("height"));

#ifdef VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
