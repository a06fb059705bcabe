#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "superjam/constellation.hpp"

namespace superjam {

using Digest = std::array<std::uint8_t, 32>;

std::string to_hex(const Digest& digest);

/// Private database shared by transmitter and legitimate receiver. Items are
/// kept in canonical (lexicographic id) order regardless of insertion order.
class KnowledgeBase {
 public:
  /// Throws std::invalid_argument on a duplicate id.
  void add(std::string id, std::vector<std::uint8_t> payload);

  /// Every regular file in dir is one item: id = file name, payload = bytes.
  static KnowledgeBase from_directory(const std::filesystem::path& dir);

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const std::map<std::string, std::vector<std::uint8_t>>& items() const noexcept {
    return items_;
  }

  /// SHA-256 over the length-prefixed (id, payload) pairs in canonical order.
  Digest digest() const;

 private:
  std::map<std::string, std::vector<std::uint8_t>> items_;
};

/// Expands SHA-256(payload) through HMAC-SHA256 in counter mode into 2L bits
/// and maps consecutive bit pairs (most significant first) to 4-QAM labels.
/// Throws std::invalid_argument for an empty payload or L == 0.
SymbolSeq derive_inner_sequence(std::span<const std::uint8_t> payload, std::size_t length);

class CodewordIndex {
 public:
  explicit CodewordIndex(std::size_t i) : i_(i) {}
  std::size_t value() const noexcept { return i_; }
  friend bool operator==(CodewordIndex, CodewordIndex) = default;

 private:
  std::size_t i_;
};

class Codebook {
 public:
  Codebook(std::size_t length, Digest kb_digest, std::vector<SymbolSeq> entries,
           std::vector<std::string> ids);

  std::size_t sequence_length() const noexcept { return length_; }
  const Digest& kb_digest() const noexcept { return kb_digest_; }
  std::size_t size() const noexcept { return entries_.size(); }
  /// Throws std::out_of_range for an invalid index.
  const SymbolSeq& lookup(CodewordIndex i) const;
  const std::string& id(CodewordIndex i) const;

 private:
  std::size_t length_;
  Digest kb_digest_;
  std::vector<SymbolSeq> entries_;
  std::vector<std::string> ids_;
};

/// Entry i is derive_inner_sequence of the i-th item in canonical order.
Codebook build_codebook(const KnowledgeBase& kb, std::size_t length);

/// Uniform over [0, codebook.size()), deterministic in seed.
CodewordIndex pick_index(const Codebook& codebook, std::uint64_t seed);

}  // namespace superjam
