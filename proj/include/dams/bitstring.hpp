#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dams {

/// Fixed-length binary genome, bit-packed into 64-bit words.
/// The length is set at construction and never changes.
class BitString {
 public:
  BitString() = default;
  explicit BitString(int length);

  /// Builds from a string of '0'/'1' characters, e.g. "0110".
  static BitString parse(std::string_view bits);

  int length() const { return length_; }

  bool test(int i) const {
    return (words_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1u;
  }

  void set(int i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    auto& word = words_[static_cast<std::size_t>(i) >> 6];
    if (value) {
      word |= mask;
    } else {
      word &= ~mask;
    }
  }

  void flip(int i) { words_[static_cast<std::size_t>(i) >> 6] ^= std::uint64_t{1} << (i & 63); }

  /// Number of 1-bits.
  int count_ones() const;

  std::string to_string() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const BitString&) const = default;

 private:
  int length_ = 0;
  std::vector<std::uint64_t> words_;  // unused high bits are always zero
};

/// Number of positions where a and b differ. Lengths must match.
int hamming_distance(const BitString& a, const BitString& b);

}  // namespace dams
