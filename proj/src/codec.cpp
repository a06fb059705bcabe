#include "superjam/codec.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace superjam {
namespace {

void check_divisible(ImageShape shape, std::size_t k) {
  if (k == 0 || shape.width % k != 0 || shape.height % k != 0) {
    throw std::invalid_argument("block size " + std::to_string(k) + " does not divide " +
                                std::to_string(shape.width) + "x" +
                                std::to_string(shape.height));
  }
}

// Per-channel k x k block means, rounded half up, row-major block order.
std::vector<std::uint8_t> block_means(const Image& img, std::size_t k) {
  const std::size_t bw = img.width / k;
  const std::size_t bh = img.height / k;
  const std::size_t c = img.channels;
  std::vector<std::uint8_t> out(bw * bh * c);
  for (std::size_t by = 0; by < bh; ++by) {
    for (std::size_t bx = 0; bx < bw; ++bx) {
      for (std::size_t ch = 0; ch < c; ++ch) {
        std::size_t sum = 0;
        for (std::size_t y = by * k; y < (by + 1) * k; ++y) {
          for (std::size_t x = bx * k; x < (bx + 1) * k; ++x) {
            sum += img.pixels[(y * img.width + x) * c + ch];
          }
        }
        const std::size_t n = k * k;
        out[(by * bw + bx) * c + ch] = static_cast<std::uint8_t>((2 * sum + n) / (2 * n));
      }
    }
  }
  return out;
}

}  // namespace

Image Image::blank(std::size_t width, std::size_t height, std::size_t channels) {
  if (channels != 1 && channels != 3) throw std::invalid_argument("channels must be 1 or 3");
  return {width, height, channels, std::vector<std::uint8_t>(width * height * channels)};
}

void Image::validate() const {
  if (channels != 1 && channels != 3) throw std::invalid_argument("channels must be 1 or 3");
  if (pixels.size() != sample_count()) throw std::invalid_argument("pixel count mismatch");
}

CodecSpec CodecSpec::block_mean(std::size_t k) {
  if (k == 0) throw std::invalid_argument("block size must be positive");
  return {k == 1 ? CodecMode::raw : CodecMode::block_mean, k};
}

std::size_t CodecSpec::symbol_count(ImageShape shape) const {
  if (mode == CodecMode::raw) return 4 * shape.width * shape.height * shape.channels;
  check_divisible(shape, block);
  return 4 * (shape.width / block) * (shape.height / block) * shape.channels;
}

double CodecSpec::compression_ratio(ImageShape shape) const {
  return static_cast<double>(symbol_count(shape)) /
         static_cast<double>(shape.width * shape.height * shape.channels);
}

SymbolSeq encode(const Image& img, const CodecSpec& spec) {
  img.validate();
  std::vector<std::uint8_t> bytes;
  if (spec.mode == CodecMode::raw) {
    bytes = img.pixels;
  } else {
    check_divisible({img.width, img.height, img.channels}, spec.block);
    bytes = block_means(img, spec.block);
  }
  std::vector<std::uint8_t> labels;
  labels.reserve(4 * bytes.size());
  for (std::uint8_t b : bytes) {
    for (int shift = 6; shift >= 0; shift -= 2) {
      labels.push_back(static_cast<std::uint8_t>((b >> shift) & 3));
    }
  }
  return SymbolSeq::from_labels(std::move(labels));
}

Image decode(std::span<const std::uint8_t> labels, ImageShape shape, const CodecSpec& spec) {
  const std::size_t expected = spec.symbol_count(shape);
  if (labels.size() != expected) {
    throw std::invalid_argument("label count " + std::to_string(labels.size()) +
                                " does not match expected " + std::to_string(expected));
  }
  std::vector<std::uint8_t> bytes(labels.size() / 4);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    unsigned b = 0;
    for (std::size_t j = 0; j < 4; ++j) b = (b << 2) | (labels[4 * i + j] & 3u);
    bytes[i] = static_cast<std::uint8_t>(b);
  }
  Image out = Image::blank(shape.width, shape.height, shape.channels);
  if (spec.mode == CodecMode::raw) {
    out.pixels = std::move(bytes);
    return out;
  }
  const std::size_t k = spec.block;
  const std::size_t bw = shape.width / k;
  const std::size_t c = shape.channels;
  for (std::size_t y = 0; y < shape.height; ++y) {
    for (std::size_t x = 0; x < shape.width; ++x) {
      for (std::size_t ch = 0; ch < c; ++ch) {
        out.pixels[(y * shape.width + x) * c + ch] = bytes[((y / k) * bw + x / k) * c + ch];
      }
    }
  }
  return out;
}

}  // namespace superjam
