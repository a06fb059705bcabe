#include <doctest.h>

#include <cmath>
#include <complex>
#include <filesystem>
#include <random>

#include "superjam/codec.hpp"
#include "superjam/jamming_codebook.hpp"
#include "support.hpp"

using namespace superjam;

namespace {

double normalized_correlation(const SymbolSeq& a, const SymbolSeq& b) {
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a.points[i] * std::conj(b.points[i]);
  return std::abs(acc) / static_cast<double>(a.size());
}

std::vector<std::uint8_t> bytes_of(const std::string& s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("derive_inner_sequence is deterministic and unit power") {
  const auto payload = bytes_of("private image payload");
  const SymbolSeq a = derive_inner_sequence(payload, 1000);
  const SymbolSeq b = derive_inner_sequence(payload, 1000);
  CHECK(a.labels == b.labels);
  CHECK(a.size() == 1000);
  double power = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.points[i] == outer_point(OuterLabel(a.labels[i])));
    power += std::norm(a.points[i]);
  }
  CHECK(power / 1000 == doctest::Approx(1.0));
  // Shorter derivations are prefixes of longer ones.
  const SymbolSeq c = derive_inner_sequence(payload, 37);
  CHECK(std::equal(c.labels.begin(), c.labels.end(), a.labels.begin()));
}

TEST_CASE("derive_inner_sequence rejects bad input") {
  CHECK_THROWS_AS(derive_inner_sequence({}, 10), std::invalid_argument);
  CHECK_THROWS_AS(derive_inner_sequence(bytes_of("x"), 0), std::invalid_argument);
}

TEST_CASE("one-byte payload change decorrelates the label stream") {
  // Labels of unrelated streams agree with probability 1/4, so the mismatch
  // count is Binomial(L, 3/4).
  std::mt19937_64 gen(4);
  const std::size_t L = 4096;
  const double mean = 0.75 * L;
  const double sd = std::sqrt(L * 0.75 * 0.25);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::uint8_t> p(32);
    for (auto& b : p) b = static_cast<std::uint8_t>(gen());
    auto q = p;
    q[gen() % q.size()] ^= static_cast<std::uint8_t>(1u << (gen() % 8));
    const auto a = derive_inner_sequence(p, L);
    const auto b = derive_inner_sequence(q, L);
    std::size_t diff = 0;
    for (std::size_t i = 0; i < L; ++i) diff += a.labels[i] != b.labels[i];
    CHECK(std::abs(double(diff) - mean) <= 3 * sd);
  }
}

TEST_CASE("label frequencies are uniform at L = 1e5") {
  const std::size_t L = 100'000;
  const auto s = derive_inner_sequence(bytes_of("frequency test"), L);
  std::size_t count[4] = {};
  for (auto l : s.labels) ++count[l];
  const double sd = std::sqrt(L * 0.25 * 0.75);
  for (auto c : count) CHECK(std::abs(double(c) - L / 4.0) <= 3 * sd);
}

TEST_CASE("build_codebook orders entries canonically") {
  KnowledgeBase kb;
  kb.add("zeta", bytes_of("z"));
  kb.add("alpha", bytes_of("a"));
  kb.add("mid", bytes_of("m"));
  const Codebook cb = build_codebook(kb, 64);
  REQUIRE(cb.size() == 3);
  CHECK(cb.id(CodewordIndex(0)) == "alpha");
  CHECK(cb.id(CodewordIndex(1)) == "mid");
  CHECK(cb.id(CodewordIndex(2)) == "zeta");
  CHECK(cb.lookup(CodewordIndex(0)).labels == derive_inner_sequence(bytes_of("a"), 64).labels);
  CHECK_THROWS_AS(cb.lookup(CodewordIndex(3)), std::out_of_range);

  KnowledgeBase reordered;
  reordered.add("mid", bytes_of("m"));
  reordered.add("zeta", bytes_of("z"));
  reordered.add("alpha", bytes_of("a"));
  const Codebook cb2 = build_codebook(reordered, 64);
  CHECK(cb2.kb_digest() == cb.kb_digest());
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(cb2.lookup(CodewordIndex(i)).labels == cb.lookup(CodewordIndex(i)).labels);
  }
}

TEST_CASE("knowledge base digest binds content") {
  KnowledgeBase a, b, c;
  a.add("x", bytes_of("payload"));
  b.add("x", bytes_of("payloae"));
  c.add("y", bytes_of("payload"));
  CHECK(a.digest() != b.digest());
  CHECK(a.digest() != c.digest());
  CHECK(to_hex(a.digest()).size() == 64);
  CHECK_THROWS_AS(a.add("x", bytes_of("dup")), std::invalid_argument);
  CHECK_THROWS_AS(build_codebook(KnowledgeBase{}, 4), std::invalid_argument);
}

TEST_CASE("codebook entries are uncorrelated at L = 1e5") {
  const Codebook cb = build_codebook(testing::small_kb(2), 100'000);
  CHECK(normalized_correlation(cb.lookup(CodewordIndex(0)), cb.lookup(CodewordIndex(1))) < 0.02);
}

TEST_CASE("jamming sequences are uncorrelated with codec outputs of a 100-image corpus") {
  std::mt19937_64 gen(100);
  const std::size_t side = 128;
  const std::size_t L = CodecSpec::raw().symbol_count({side, side, 1});
  const Codebook cb = build_codebook(testing::small_kb(3), L);
  for (int k = 0; k < 100; ++k) {
    const SymbolSeq outer = encode(testing::random_image(gen, side, side), CodecSpec::raw());
    for (std::size_t e = 0; e < cb.size(); ++e) {
      CHECK(normalized_correlation(outer, cb.lookup(CodewordIndex(e))) < 0.02);
    }
  }
}

TEST_CASE("pick_index") {
  const Codebook one = build_codebook(testing::small_kb(1), 8);
  CHECK(pick_index(one, 12345).value() == 0);

  const Codebook four = build_codebook(testing::small_kb(4), 8);
  CHECK(pick_index(four, 77) == pick_index(four, 77));
  const std::size_t draws = 100'000;
  std::size_t count[4] = {};
  for (std::uint64_t s = 0; s < draws; ++s) ++count[pick_index(four, s).value()];
  const double sd = std::sqrt(draws * 0.25 * 0.75);
  for (auto c : count) CHECK(std::abs(double(c) - draws / 4.0) <= 3 * sd);
}

TEST_CASE("knowledge base from a directory") {
  const auto dir = testing::scratch_dir("kb");
  testing::spit(dir / "b.bin", "second");
  testing::spit(dir / "a.bin", "first");
  std::filesystem::create_directory(dir / "subdir");
  const KnowledgeBase kb = KnowledgeBase::from_directory(dir);
  REQUIRE(kb.size() == 2);
  CHECK(kb.items().begin()->first == "a.bin");
  CHECK(kb.items().begin()->second == bytes_of("first"));
  std::filesystem::remove_all(dir);
  CHECK_THROWS(KnowledgeBase::from_directory(dir));
}
