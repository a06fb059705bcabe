#include <cctype>
#include <fstream>
#include <iterator>
#include <stdexcept>
#include <string>

#include "superjam/codec.hpp"

namespace superjam {
namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::string token() {
    skip_space_and_comments();
    std::string out;
    while (pos_ < bytes_.size() && !std::isspace(bytes_[pos_])) {
      out.push_back(static_cast<char>(bytes_[pos_++]));
    }
    if (out.empty()) throw std::runtime_error("truncated PNM header");
    return out;
  }

  std::size_t number() {
    const std::string t = token();
    for (char ch : t) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw std::runtime_error("bad PNM header field '" + t + "'");
      }
    }
    return std::stoul(t);
  }

  // Exactly one whitespace byte separates the header from the raster.
  std::size_t raster_offset() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw std::runtime_error("truncated PNM header");
    }
    return pos_ + 1;
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

Image decode_pnm(std::span<const std::uint8_t> bytes) {
  HeaderReader reader(bytes);
  const std::string magic = reader.token();
  std::size_t channels = 0;
  if (magic == "P5") {
    channels = 1;
  } else if (magic == "P6") {
    channels = 3;
  } else {
    throw std::runtime_error("unsupported image format '" + magic + "' (need P5 or P6)");
  }
  const std::size_t width = reader.number();
  const std::size_t height = reader.number();
  const std::size_t maxval = reader.number();
  if (maxval != 255) throw std::runtime_error("only maxval 255 is supported");
  if (width == 0 || height == 0) throw std::runtime_error("empty image");
  const std::size_t offset = reader.raster_offset();
  const std::size_t n = width * height * channels;
  if (bytes.size() < offset + n) throw std::runtime_error("truncated PNM raster");
  Image img = Image::blank(width, height, channels);
  std::copy_n(bytes.begin() + static_cast<std::ptrdiff_t>(offset), n, img.pixels.begin());
  return img;
}

Image read_pnm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open image " + path.string());
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
  return decode_pnm(bytes);
}

std::vector<std::uint8_t> encode_pnm(const Image& img) {
  img.validate();
  const std::string header = std::string(img.channels == 1 ? "P5" : "P6") + "\n" +
                             std::to_string(img.width) + " " + std::to_string(img.height) +
                             "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.pixels.begin(), img.pixels.end());
  return out;
}

}  // namespace superjam
