#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "superjam/codec.hpp"
#include "superjam/jamming_codebook.hpp"

namespace superjam::testing {

inline Image random_image(std::mt19937_64& gen, std::size_t w, std::size_t h,
                          std::size_t channels = 1) {
  Image img = Image::blank(w, h, channels);
  std::uniform_int_distribution<int> byte(0, 255);
  for (auto& p : img.pixels) p = static_cast<std::uint8_t>(byte(gen));
  return img;
}

inline KnowledgeBase small_kb(std::size_t items = 3) {
  KnowledgeBase kb;
  for (std::size_t i = 0; i < items; ++i) {
    std::vector<std::uint8_t> payload(64);
    for (std::size_t j = 0; j < payload.size(); ++j) {
      payload[j] = static_cast<std::uint8_t>(31 * i + 7 * j + 1);
    }
    kb.add("private_" + std::to_string(i), std::move(payload));
  }
  return kb;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void spit(const std::filesystem::path& p, const std::string& bytes) {
  std::ofstream out(p, std::ios::binary);
  out << bytes;
}

struct CommandResult {
  int exit_code;
  std::string out;
};

/// Runs a shell command, capturing standard output.
inline CommandResult run(const std::string& command) {
  std::string out;
  FILE* pipe = ::popen((command + " 2>/dev/null").c_str(), "r");
  if (pipe == nullptr) return {-1, {}};
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

/// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("superjam_" + name + "_" +
                                                       std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace superjam::testing
