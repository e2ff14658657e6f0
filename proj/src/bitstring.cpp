#include "dams/bitstring.hpp"

#include <bit>
#include <stdexcept>

namespace dams {

BitString::BitString(int length) : length_(length) {
  if (length < 0) {
    throw std::invalid_argument("BitString: negative length");
  }
  words_.assign((static_cast<std::size_t>(length) + 63) / 64, 0);
}

BitString BitString::parse(std::string_view bits) {
  BitString out(static_cast<int>(bits.size()));
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out.set(static_cast<int>(i), true);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("BitString::parse: characters must be '0' or '1'");
    }
  }
  return out;
}

int BitString::count_ones() const {
  int total = 0;
  for (std::uint64_t w : words_) {
    total += std::popcount(w);
  }
  return total;
}

std::string BitString::to_string() const {
  std::string out(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if (test(i)) {
      out[static_cast<std::size_t>(i)] = '1';
    }
  }
  return out;
}

int hamming_distance(const BitString& a, const BitString& b) {
  if (a.length() != b.length()) {
    throw std::invalid_argument("hamming_distance: length mismatch");
  }
  int total = 0;
  const auto& wa = a.words();
  const auto& wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) {
    total += std::popcount(wa[i] ^ wb[i]);
  }
  return total;
}

}  // namespace dams
