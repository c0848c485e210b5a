#include "posmatch/cli.hpp"

#include <termios.h>
#include <unistd.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <string>

#include "posmatch/posmatch.hpp"

namespace posmatch::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

std::string format_percent(double numerator, double denominator) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", denominator > 0 ? 100.0 * numerator / denominator : 0.0);
  return buf;
}

// Reads a line from the controlling terminal with echo disabled.
std::optional<std::string> prompt_for_key() {
  std::FILE* tty = std::fopen("/dev/tty", "r+");
  if (tty == nullptr) return std::nullopt;
  const int fd = fileno(tty);
  termios saved{};
  const bool have_termios = tcgetattr(fd, &saved) == 0;
  if (have_termios) {
    termios silent = saved;
    silent.c_lflag &= ~static_cast<tcflag_t>(ECHO);
    tcsetattr(fd, TCSAFLUSH, &silent);
  }
  std::fputs("secret key: ", tty);
  std::fflush(tty);
  std::string key;
  for (int c = std::fgetc(tty); c != EOF && c != '\n'; c = std::fgetc(tty)) key.push_back(static_cast<char>(c));
  if (have_termios) tcsetattr(fd, TCSAFLUSH, &saved);
  std::fputs("\n", tty);
  std::fclose(tty);
  return key;
}

struct KeyArgs {
  std::optional<std::string> insecure;
};

void add_key_options(CLI::App* cmd, KeyArgs& args) {
  cmd->add_option("--key-insecure", args.insecure,
                  std::string("Secret key on the command line (visible in the process list); otherwise ") +
                      kKeyEnvVar + " or an interactive prompt is used");
}

SecretKey resolve_key(const KeyArgs& args) {
  std::optional<std::string> key = args.insecure;
  if (!key) {
    if (const char* env = std::getenv(kKeyEnvVar)) key = env;
  }
  if (!key) key = prompt_for_key();
  if (!key) throw UsageError(std::string("no secret key: set ") + kKeyEnvVar + " or pass --key-insecure");
  if (key->empty()) throw UsageError("secret key must not be empty");
  return SecretKey::from_passphrase(*key);
}

struct MessageArgs {
  std::optional<std::string> inline_text;
  std::optional<std::string> file;
};

void add_message_options(CLI::App* cmd, MessageArgs& args) {
  auto* text = cmd->add_option("-m,--message", args.inline_text, "Secret message text");
  auto* file = cmd->add_option("--message-file", args.file, "Read the secret message from a file")
                   ->check(CLI::ExistingFile);
  text->excludes(file);
  file->excludes(text);
}

std::string resolve_message(const MessageArgs& args) {
  if (args.inline_text) return *args.inline_text;
  if (args.file) {
    const auto bytes = read_file_bytes(*args.file);
    return {bytes.begin(), bytes.end()};
  }
  throw UsageError("one of --message or --message-file is required");
}

std::unique_ptr<RandomSource> make_random(const std::optional<std::uint64_t>& seed) {
  if (seed) return std::make_unique<SeededRandom>(*seed);
  return std::make_unique<SystemRandom>();
}

// ---- hide ----------------------------------------------------------------

struct HideArgs {
  std::string cover;
  MessageArgs message;
  std::string out;
  bool bind_cover_name = false;
  std::optional<std::string> bound_name;
  std::optional<std::uint64_t> seed;
  KeyArgs key;
};

int cmd_hide(const HideArgs& a, std::ostream& out, std::ostream&) {
  const auto image = load_image_file(a.cover);
  const auto message = resolve_message(a.message);
  MatchOptions options;
  if (a.bound_name) {
    options.bind_image_name = *a.bound_name;
  } else if (a.bind_cover_name) {
    options.bind_image_name = std::filesystem::path(a.cover).stem().string();
  }
  const auto name_length = options.bind_image_name ? options.bind_image_name->size() : 0;
  if (name_length > 0xFFFF) throw UsageError("bound name longer than 65535 characters");
  // Validate the name on its own so the reported index points into it.
  if (options.bind_image_name) encode_text(*options.bind_image_name);

  const auto positions = match_positions(image, message, options);
  const auto key = resolve_key(a.key);
  auto random = make_random(a.seed);
  const auto sealed = seal_positions(positions, key, image.width(), image.height(),
                                     static_cast<std::uint16_t>(name_length), *random);
  write_file_bytes(a.out, sealed);

  const auto estimate = estimate_capacity(image.width(), image.height());
  const auto last = positions.empty() ? GlobalIndex{0} : positions.back();
  out << "positions: " << positions.size() << "\n";
  out << "scan reached sample " << last << " of " << image.sample_count() << " ("
      << format_percent(static_cast<double>(last), static_cast<double>(image.sample_count())) << ")\n";
  out << "estimated capacity: " << estimate.estimated_match_bits << " bits ("
      << format_percent(static_cast<double>(positions.size()), static_cast<double>(estimate.estimated_match_bits))
      << " used)\n";
  if (options.bind_image_name) out << "bound name: " << *options.bind_image_name << "\n";
  out << "wrote " << a.out << " (" << sealed.size() << " bytes); cover left untouched\n";
  return kOk;
}

// ---- reveal --------------------------------------------------------------

struct RevealArgs {
  std::string cover;
  std::string posfile;
  KeyArgs key;
};

int cmd_reveal(const RevealArgs& a, std::ostream& out, std::ostream& err) {
  const auto image = load_image_file(a.cover);
  const auto data = read_file_bytes(a.posfile);
  const auto header = read_header(data);
  const auto key = resolve_key(a.key);
  const auto contents = open_positions(data, key);
  if (header.width != image.width() || header.height != image.height()) {
    err << "warning: position file was made for a " << header.width << "x" << header.height
        << " cover, this cover is " << image.width() << "x" << image.height() << "\n";
  }
  std::string text;
  try {
    text = extract_message(image, contents.positions);
  } catch (const IndexOutOfRange& e) {
    throw MalformedPositionFile(std::string("position beyond this cover: ") + e.what());
  }
  const auto split = text.size() - contents.name_length;
  out << text.substr(0, split) << "\n";
  if (contents.name_length > 0) err << "bound name: " << text.substr(split) << "\n";
  return kOk;
}

// ---- inspect -------------------------------------------------------------

struct InspectArgs {
  std::string posfile;
  KeyArgs key;
};

int cmd_inspect(const InspectArgs& a, std::ostream& out, std::ostream&) {
  const auto data = read_file_bytes(a.posfile);
  const auto header = read_header(data);
  const auto key = resolve_key(a.key);
  const auto contents = open_positions(data, key);
  out << "version: " << int{header.version} << "\n";
  out << "dimensions: " << header.width << "x" << header.height << "\n";
  out << "channel order: G,R,B\n";
  out << "bound name length: " << header.name_length << "\n";
  out << "positions: " << contents.positions.size() << "\n";
  for (auto p : contents.positions) out << p << "\n";
  return kOk;
}

// ---- analyze -------------------------------------------------------------

struct AnalyzeArgs {
  std::string image_a;
  std::string image_b;
  std::string format = "text";
  bool dump_histograms = false;
};

std::size_t differing_bins(const Histogram& a, const Histogram& b) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += a[i] != b[i];
  return n;
}

std::string join_bins(const Histogram& h) {
  std::string s;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(h[i]);
  }
  return s;
}

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream&) {
  const auto img_a = load_image_file(a.image_a);
  const auto img_b = load_image_file(a.image_b);
  const double overall_mse = mse(img_a, img_b);
  const bool kv = a.format == "kv";

  auto line = [&](const std::string& key, const std::string& label, const std::string& value) {
    if (kv) {
      out << key << "=" << value << "\n";
    } else {
      out << label << ": " << value << "\n";
    }
  };

  line("width", "width", std::to_string(img_a.width()));
  line("height", "height", std::to_string(img_a.height()));
  line("mse", "MSE", format_number(overall_mse));
  line("psnr", "PSNR (dB)", format_number(psnr_from_mse(overall_mse)));
  bool all_identical = true;
  for (auto c : {Channel::Red, Channel::Green, Channel::Blue}) {
    const std::string ch(1, channel_letter(c));
    const double channel_mse = mse(img_a, img_b, c);
    line("mse." + ch, "MSE[" + ch + "]", format_number(channel_mse));
    line("psnr." + ch, "PSNR[" + ch + "] (dB)", format_number(psnr_from_mse(channel_mse)));
    const auto ha = histogram(img_a, c);
    const auto hb = histogram(img_b, c);
    const auto diff = differing_bins(ha, hb);
    all_identical = all_identical && diff == 0;
    line("histogram." + ch, "histogram[" + ch + "]",
         diff == 0 ? "identical" : "differs in " + std::to_string(diff) + " bins");
    if (a.dump_histograms) {
      line("histogram." + ch + ".a", "histogram[" + ch + "] A", join_bins(ha));
      line("histogram." + ch + ".b", "histogram[" + ch + "] B", join_bins(hb));
    }
  }
  line("histograms_identical", "histograms", kv ? (all_identical ? "true" : "false")
                                                : (all_identical ? "identical" : "different"));
  return kOk;
}

// ---- capacity ------------------------------------------------------------

struct CapacityArgs {
  std::uint64_t width = 0;
  std::uint64_t height = 0;
  std::optional<std::string> image;
  std::uint64_t seed = 0;
};

int cmd_capacity(const CapacityArgs& a, std::ostream& out, std::ostream&) {
  if (a.width == 0 || a.height == 0) throw UsageError("width and height must be positive");
  const auto e = estimate_capacity(a.width, a.height);
  out << "total samples: " << e.total_samples << "\n";
  out << "estimated bits (exact): " << e.estimated_match_bits << "\n";
  out << "estimated bits (rounded): " << e.rounded_match_bits << "\n";
  out << "estimated characters (exact): " << e.estimated_characters << "\n";
  out << "estimated characters (rounded): " << e.rounded_characters << "\n";
  if (a.image) {
    const auto image = load_image_file(*a.image);
    // Empirical figure: how many bits of a random stream the scan can place.
    std::mt19937_64 rng(a.seed);
    BitStream bits;
    for (std::uint64_t i = 0; i < image.sample_count(); ++i) bits.push_back(rng() & 1u);
    const auto matched = matchable_prefix(image, bits);
    out << "measured bits on " << *a.image << " (random stream, seed " << a.seed << "): " << matched << "\n";
    out << "measured characters: " << matched / kBitsPerChar << "\n";
  }
  return kOk;
}

// ---- baseline ------------------------------------------------------------

struct BaselineEmbedArgs {
  std::string cover;
  MessageArgs message;
  std::string out;
};

int cmd_baseline_embed(const BaselineEmbedArgs& a, std::ostream& out, std::ostream&) {
  const auto cover = load_image_file(a.cover);
  const auto message = resolve_message(a.message);
  const auto bits = encode_text(message);
  const auto stego = embed_lsb(cover, bits);
  save_ppm(stego, a.out);
  const double m = mse(cover, stego);
  out << "embedded " << bits.size() << " bits (" << message.size() << " characters)\n";
  out << "MSE: " << format_number(m) << "\n";
  out << "PSNR (dB): " << format_number(psnr_from_mse(m)) << "\n";
  out << "wrote " << a.out << "\n";
  return kOk;
}

struct BaselineRevealArgs {
  std::string image;
  std::size_t chars = 0;
};

int cmd_baseline_reveal(const BaselineRevealArgs& a, std::ostream& out, std::ostream&) {
  const auto image = load_image_file(a.image);
  const auto bit_count = a.chars * kBitsPerChar;
  if (bit_count > image.sample_count()) throw UsageError("image holds fewer than that many characters");
  out << decode_bits(extract_lsb(image, bit_count)) << "\n";
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Position-matching steganography: hide a message by recording where an image's LSBs "
               "already spell it, without modifying the image."};
  app.name("posmatch");
  app.require_subcommand(1);

  HideArgs hide;
  auto* hide_cmd = app.add_subcommand("hide", "Match a message against a cover and write a sealed position file");
  hide_cmd->add_option("-c,--cover", hide.cover, "Cover image (PPM P6/P5, BMP, PNG)")->required()->check(CLI::ExistingFile);
  add_message_options(hide_cmd, hide.message);
  hide_cmd->add_option("-o,--out", hide.out, "Output position file")->required();
  hide_cmd->add_flag("--bind-name", hide.bind_cover_name, "Append the cover file's stem to the message");
  hide_cmd->add_option("--name", hide.bound_name, "Append this name to the message instead of the cover stem");
  hide_cmd->add_option("--seed", hide.seed, "Deterministic salt seed (reproducible output)");
  add_key_options(hide_cmd, hide.key);

  RevealArgs reveal;
  auto* reveal_cmd = app.add_subcommand("reveal", "Recover a message from a cover and its position file");
  reveal_cmd->add_option("-c,--cover", reveal.cover, "Cover image")->required()->check(CLI::ExistingFile);
  reveal_cmd->add_option("-p,--posfile", reveal.posfile, "Position file")->required()->check(CLI::ExistingFile);
  add_key_options(reveal_cmd, reveal.key);

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Compare two images: MSE, PSNR, histograms");
  analyze_cmd->add_option("image_a", analyze.image_a)->required()->check(CLI::ExistingFile);
  analyze_cmd->add_option("image_b", analyze.image_b)->required()->check(CLI::ExistingFile);
  analyze_cmd->add_option("--format", analyze.format, "Report format")->check(CLI::IsMember({"text", "kv"}));
  analyze_cmd->add_flag("--histograms", analyze.dump_histograms, "Include the 256-bin histograms");

  CapacityArgs capacity;
  auto* capacity_cmd = app.add_subcommand("capacity", "Capacity estimate for an image size");
  capacity_cmd->add_option("width", capacity.width)->required();
  capacity_cmd->add_option("height", capacity.height)->required();
  capacity_cmd->add_option("--image", capacity.image, "Also measure a concrete image")->check(CLI::ExistingFile);
  capacity_cmd->add_option("--seed", capacity.seed, "Seed for the measurement bit stream");

  BaselineEmbedArgs bembed;
  auto* bembed_cmd = app.add_subcommand("baseline-embed", "Classical LSB replacement (modifies a copy of the cover)");
  bembed_cmd->add_option("-c,--cover", bembed.cover, "Cover image")->required()->check(CLI::ExistingFile);
  add_message_options(bembed_cmd, bembed.message);
  bembed_cmd->add_option("-o,--out", bembed.out, "Output stego PPM")->required();

  BaselineRevealArgs breveal;
  auto* breveal_cmd = app.add_subcommand("baseline-reveal", "Read a classical LSB message back");
  breveal_cmd->add_option("-i,--image", breveal.image, "Stego image")->required()->check(CLI::ExistingFile);
  breveal_cmd->add_option("-n,--chars", breveal.chars, "Number of characters to read")->required();

  InspectArgs inspect;
  auto* inspect_cmd = app.add_subcommand("inspect", "Dump a position file's header and positions (needs the key)");
  inspect_cmd->add_option("posfile", inspect.posfile)->required()->check(CLI::ExistingFile);
  add_key_options(inspect_cmd, inspect.key);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*hide_cmd) return cmd_hide(hide, out, err);
    if (*reveal_cmd) return cmd_reveal(reveal, out, err);
    if (*analyze_cmd) return cmd_analyze(analyze, out, err);
    if (*capacity_cmd) return cmd_capacity(capacity, out, err);
    if (*bembed_cmd) return cmd_baseline_embed(bembed, out, err);
    if (*breveal_cmd) return cmd_baseline_reveal(breveal, out, err);
    if (*inspect_cmd) return cmd_inspect(inspect, out, err);
  } catch (const InsufficientCapacity& e) {
    err << "error: " << e.what() << "\n";
    return kInsufficientCapacity;
  } catch (const NonAsciiCharacter& e) {
    err << "error: " << e.what() << "\n";
    return kNonAscii;
  } catch (const MalformedImage& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedImage;
  } catch (const UnsupportedFormat& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedImage;
  } catch (const UnsupportedBitDepth& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedImage;
  } catch (const WrongKey&) {
    err << "wrong secret key\n";
    return kWrongKey;
  } catch (const MalformedPositionFile& e) {
    err << "error: " << e.what() << "\n";
    return kMalformedPositionFile;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kDimensionMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace posmatch::cli
