#include "mpga/genome.hpp"

#include <bit>
#include <stdexcept>

#include "mpga/simd.hpp"

namespace mpga {

namespace {

void check_position(std::size_t pos, std::size_t n) {
  if (pos == 0 || pos > n) {
    throw std::out_of_range("genome position " + std::to_string(pos) + " outside [1, " +
                            std::to_string(n) + "]");
  }
}

}  // namespace

Genome::Genome(std::size_t n) : n_(n), words_(words_for(n), 0) {}

Genome Genome::from_string(std::string_view bits) {
  Genome g(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    const char c = bits[i];
    if (c != '0' && c != '1') {
      throw std::invalid_argument("genome string may contain only '0' and '1'");
    }
    if (c == '1') g.set(i + 1, true);
  }
  return g;
}

Genome Genome::ones(std::size_t n) {
  Genome g(n);
  for (auto& w : g.words_) w = ~std::uint64_t{0};
  g.clear_padding();
  return g;
}

Genome Genome::random(std::size_t n, Rng& rng) {
  Genome g(n);
  for (auto& w : g.words_) w = rng();
  g.clear_padding();
  return g;
}

bool Genome::get(std::size_t pos) const {
  check_position(pos, n_);
  const std::size_t i = pos - 1;
  return (words_[i >> 6] >> (i & 63)) & 1u;
}

void Genome::set(std::size_t pos, bool value) {
  check_position(pos, n_);
  const std::size_t i = pos - 1;
  const std::uint64_t bit = std::uint64_t{1} << (i & 63);
  if (value) {
    words_[i >> 6] |= bit;
  } else {
    words_[i >> 6] &= ~bit;
  }
}

void Genome::flip(std::size_t pos) {
  check_position(pos, n_);
  const std::size_t i = pos - 1;
  words_[i >> 6] ^= std::uint64_t{1} << (i & 63);
}

void Genome::complement() {
  for (auto& w : words_) w = ~w;
  clear_padding();
}

void Genome::clear_padding() {
  const std::size_t tail = n_ & 63;
  if (tail != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
}

std::string Genome::to_string() const {
  std::string s(n_, '0');
  for (std::size_t i = 0; i < n_; ++i) {
    if ((words_[i >> 6] >> (i & 63)) & 1u) s[i] = '1';
  }
  return s;
}

std::size_t leading_ones(const Genome& x) {
  const auto words = x.words();
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (words[k] != ~std::uint64_t{0}) {
      return k * 64 + static_cast<std::size_t>(std::countr_one(words[k]));
    }
  }
  return x.size();
}

std::size_t hamming(const Genome& x, const Genome& y) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("hamming: genome lengths differ");
  }
  return static_cast<std::size_t>(
      simd::active().xor_popcount(x.words().data(), y.words().data(), x.word_count()));
}

std::size_t hamming_from(const Genome& x, const Genome& y, std::size_t from) {
  if (x.size() != y.size()) {
    throw std::invalid_argument("hamming_from: genome lengths differ");
  }
  if (from == 0 || from > x.size() + 1) {
    throw std::out_of_range("hamming_from: start position out of range");
  }
  const std::size_t skip = from - 1;
  const std::size_t first_word = skip >> 6;
  if (first_word >= x.word_count()) return 0;
  const auto a = x.words();
  const auto b = y.words();
  const std::uint64_t head_mask = ~std::uint64_t{0} << (skip & 63);
  std::size_t total =
      static_cast<std::size_t>(std::popcount((a[first_word] ^ b[first_word]) & head_mask));
  const std::size_t rest = x.word_count() - first_word - 1;
  if (rest > 0) {
    total += static_cast<std::size_t>(simd::active().xor_popcount(
        a.data() + first_word + 1, b.data() + first_word + 1, rest));
  }
  return total;
}

Genome suffix(const Genome& x, std::size_t from) {
  if (from == 0 || from > x.size() + 1) {
    throw std::out_of_range("suffix: start position out of range");
  }
  const std::size_t skip = from - 1;
  Genome out(x.size() - skip);
  const auto src = x.words();
  auto dst = out.words();
  const std::size_t word_shift = skip >> 6;
  const unsigned bit_shift = static_cast<unsigned>(skip & 63);
  for (std::size_t k = 0; k < dst.size(); ++k) {
    const std::size_t s = k + word_shift;
    std::uint64_t w = src[s] >> bit_shift;
    if (bit_shift != 0 && s + 1 < src.size()) {
      w |= src[s + 1] << (64 - bit_shift);
    }
    dst[k] = w;
  }
  out.clear_padding();
  return out;
}

}  // namespace mpga
