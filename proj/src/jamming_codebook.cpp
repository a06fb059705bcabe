#include "superjam/jamming_codebook.hpp"

#include <sodium.h>

#include <fstream>
#include <iterator>
#include <stdexcept>

#include "superjam/rng.hpp"

namespace superjam {
namespace {

void ensure_sodium() {
  static const bool ok = sodium_init() >= 0;
  if (!ok) throw std::runtime_error("libsodium initialisation failed");
}

void append_u64_le(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

}  // namespace

std::string to_hex(const Digest& digest) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(64);
  for (auto b : digest) {
    out.push_back(kHex[b >> 4]);
    out.push_back(kHex[b & 15]);
  }
  return out;
}

void KnowledgeBase::add(std::string id, std::vector<std::uint8_t> payload) {
  auto [it, inserted] = items_.emplace(std::move(id), std::move(payload));
  if (!inserted) throw std::invalid_argument("duplicate knowledge-base id '" + it->first + "'");
}

KnowledgeBase KnowledgeBase::from_directory(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw std::runtime_error("knowledge base directory not found: " + dir.string());
  }
  KnowledgeBase kb;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::ifstream in(entry.path(), std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + entry.path().string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    kb.add(entry.path().filename().string(), std::move(bytes));
  }
  return kb;
}

Digest KnowledgeBase::digest() const {
  ensure_sodium();
  crypto_hash_sha256_state st;
  crypto_hash_sha256_init(&st);
  for (const auto& [id, payload] : items_) {
    std::vector<std::uint8_t> header;
    append_u64_le(header, id.size());
    crypto_hash_sha256_update(&st, header.data(), header.size());
    crypto_hash_sha256_update(&st, reinterpret_cast<const unsigned char*>(id.data()), id.size());
    header.clear();
    append_u64_le(header, payload.size());
    crypto_hash_sha256_update(&st, header.data(), header.size());
    crypto_hash_sha256_update(&st, payload.data(), payload.size());
  }
  Digest out{};
  crypto_hash_sha256_final(&st, out.data());
  return out;
}

SymbolSeq derive_inner_sequence(std::span<const std::uint8_t> payload, std::size_t length) {
  if (payload.empty()) throw std::invalid_argument("jamming payload must not be empty");
  if (length == 0) throw std::invalid_argument("sequence length must be at least 1");
  ensure_sodium();

  Digest key{};
  crypto_hash_sha256(key.data(), payload.data(), payload.size());

  std::vector<std::uint8_t> labels;
  labels.reserve(length);
  std::array<std::uint8_t, crypto_auth_hmacsha256_BYTES> block{};
  for (std::uint64_t counter = 0; labels.size() < length; ++counter) {
    std::array<std::uint8_t, 8> msg{};
    for (int i = 0; i < 8; ++i) msg[i] = static_cast<std::uint8_t>(counter >> (8 * (7 - i)));
    crypto_auth_hmacsha256(block.data(), msg.data(), msg.size(), key.data());
    for (std::uint8_t byte : block) {
      for (int shift = 6; shift >= 0 && labels.size() < length; shift -= 2) {
        labels.push_back(static_cast<std::uint8_t>((byte >> shift) & 3));
      }
    }
  }
  return SymbolSeq::from_labels(std::move(labels));
}

Codebook::Codebook(std::size_t length, Digest kb_digest, std::vector<SymbolSeq> entries,
                   std::vector<std::string> ids)
    : length_(length), kb_digest_(kb_digest), entries_(std::move(entries)), ids_(std::move(ids)) {
  if (entries_.empty()) throw std::invalid_argument("codebook must not be empty");
  if (ids_.size() != entries_.size()) throw std::invalid_argument("codebook id count mismatch");
  for (const auto& e : entries_) {
    if (e.size() != length_) throw std::invalid_argument("codebook entry length mismatch");
  }
}

const SymbolSeq& Codebook::lookup(CodewordIndex i) const {
  if (i.value() >= entries_.size()) throw std::out_of_range("codeword index out of range");
  return entries_[i.value()];
}

const std::string& Codebook::id(CodewordIndex i) const {
  if (i.value() >= ids_.size()) throw std::out_of_range("codeword index out of range");
  return ids_[i.value()];
}

Codebook build_codebook(const KnowledgeBase& kb, std::size_t length) {
  if (kb.empty()) throw std::invalid_argument("knowledge base is empty");
  std::vector<SymbolSeq> entries;
  std::vector<std::string> ids;
  entries.reserve(kb.size());
  for (const auto& [id, payload] : kb.items()) {
    entries.push_back(derive_inner_sequence(payload, length));
    ids.push_back(id);
  }
  return Codebook(length, kb.digest(), std::move(entries), std::move(ids));
}

CodewordIndex pick_index(const Codebook& codebook, std::uint64_t seed) {
  const std::uint64_t bits = rng::bits64(seed, rng::streams::codeword_pick, 0);
  return CodewordIndex(static_cast<std::size_t>(rng::bounded(bits, codebook.size())));
}

}  // namespace superjam
