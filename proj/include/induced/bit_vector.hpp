#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace induced {

/// Fixed-length bit table. Bits past size() in the last word are kept clear.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept {
    return i < size_ && ((words_[i >> 6] >> (i & 63)) & 1u);
  }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Index of the first set bit at or after `from`.
  std::optional<std::size_t> find_next(std::size_t from) const noexcept {
    if (from >= size_) return std::nullopt;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) {
        const std::size_t i = (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
        return i < size_ ? std::optional(i) : std::nullopt;
      }
      if (++wi == words_.size()) return std::nullopt;
      w = words_[wi];
    }
  }

  std::optional<std::size_t> find_last() const noexcept {
    for (std::size_t wi = words_.size(); wi-- > 0;)
      if (words_[wi]) return (wi << 6) + 63 - static_cast<std::size_t>(std::countl_zero(words_[wi]));
    return std::nullopt;
  }

  std::span<std::uint64_t> words() noexcept { return words_; }
  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// dst |= src << shift, where dst holds dst_bits bits. Bits that would land past dst_bits are dropped.
inline void or_shifted(std::span<std::uint64_t> dst, std::size_t dst_bits, std::span<const std::uint64_t> src,
                       std::size_t shift) noexcept {
  const std::size_t word_shift = shift >> 6;
  const unsigned bit_shift = static_cast<unsigned>(shift & 63);
  const std::size_t dst_words = (dst_bits + 63) / 64;
  if (word_shift >= dst_words) return;
  const std::size_t n = std::min(src.size(), dst_words - word_shift);
  std::uint64_t* d = dst.data() + word_shift;
  const std::uint64_t* s = src.data();
  if (bit_shift == 0) {
    for (std::size_t i = 0; i < n; ++i) d[i] |= s[i];
  } else {
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      d[i] |= (s[i] << bit_shift) | carry;
      carry = s[i] >> (64 - bit_shift);
    }
    if (word_shift + n < dst_words) d[n] |= carry;
  }
  if (dst_bits & 63) dst[dst_words - 1] &= (std::uint64_t{1} << (dst_bits & 63)) - 1;
}

}  // namespace induced
