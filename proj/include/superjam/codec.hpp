#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "superjam/constellation.hpp"

namespace superjam {

/// Row-major interleaved byte image with 1 or 3 channels.
struct Image {
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t channels = 1;
  std::vector<std::uint8_t> pixels;

  /// Zero-filled image; throws std::invalid_argument for channels not in {1, 3}.
  static Image blank(std::size_t width, std::size_t height, std::size_t channels);
  std::size_t sample_count() const noexcept { return width * height * channels; }
  /// Throws std::invalid_argument if the pixel count does not match the shape.
  void validate() const;

  friend bool operator==(const Image&, const Image&) = default;
};

struct ImageShape {
  std::size_t width;
  std::size_t height;
  std::size_t channels;
};

enum class CodecMode { raw, block_mean };

/// Reference bit-slicing codec. Raw mode emits four labels per byte; block
/// mode first averages k x k blocks per channel.
struct CodecSpec {
  CodecMode mode = CodecMode::raw;
  std::size_t block = 1;

  static CodecSpec raw() { return {}; }
  static CodecSpec block_mean(std::size_t k);

  /// Complex symbols produced for the given shape.
  std::size_t symbol_count(ImageShape shape) const;
  /// L / (H * W * C), i.e. real channel samples over twice the real source samples.
  double compression_ratio(ImageShape shape) const;
};

/// Throws std::invalid_argument if the block size does not divide the image.
SymbolSeq encode(const Image& img, const CodecSpec& spec);

/// Throws std::invalid_argument if the label count does not match the shape.
Image decode(std::span<const std::uint8_t> labels, ImageShape shape, const CodecSpec& spec);

// Binary PGM (P5, 1 channel) and PPM (P6, 3 channels), maxval 255.
Image read_pnm(const std::filesystem::path& path);
std::vector<std::uint8_t> encode_pnm(const Image& img);
Image decode_pnm(std::span<const std::uint8_t> bytes);

}  // namespace superjam
