#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "flipdec/error.hpp"

namespace flipdec {

/// Packed GF(2) row vector with a fixed logical length.
///
/// Bits are stored LSB-first inside 64-bit limbs; unused tail bits are kept
/// zero so weight/compare can work limb-wise. Words up to 256 bits live
/// inline, longer ones spill to the heap (none of the stock code families
/// need that, but the type does not care).
class BitWord {
 public:
  BitWord() = default;

  explicit BitWord(std::size_t length) : len_(length) { init_storage(); }

  BitWord(std::initializer_list<int> bits) : len_(bits.size()) {
    init_storage();
    std::size_t i = 0;
    for (int b : bits) set(i++, b != 0);
  }

  /// Parses a string of '0'/'1' characters.
  static BitWord from_string(const std::string& s) {
    BitWord w(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1') {
        w.set(i, true);
      } else if (s[i] != '0') {
        throw InvalidArgument("BitWord::from_string: bad character at position " +
                              std::to_string(i));
      }
    }
    return w;
  }

  BitWord(const BitWord& o) : len_(o.len_), heap_(o.heap_) {
    std::memcpy(inline_, o.inline_, sizeof(inline_));
  }
  BitWord(BitWord&&) noexcept = default;
  BitWord& operator=(const BitWord& o) {
    len_ = o.len_;
    heap_ = o.heap_;
    std::memcpy(inline_, o.inline_, sizeof(inline_));
    return *this;
  }
  BitWord& operator=(BitWord&&) noexcept = default;

  std::size_t size() const { return len_; }
  std::size_t limb_count() const { return (len_ + 63) / 64; }

  std::span<std::uint64_t> limbs() {
    return {heap_.empty() ? inline_ : heap_.data(), limb_count()};
  }
  std::span<const std::uint64_t> limbs() const {
    return {heap_.empty() ? inline_ : heap_.data(), limb_count()};
  }

  bool get(std::size_t i) const { return (limbs()[i >> 6] >> (i & 63)) & 1u; }

  void set(std::size_t i, bool v) {
    std::uint64_t& w = limbs()[i >> 6];
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    w = v ? (w | m) : (w & ~m);
  }

  void flip(std::size_t i) { limbs()[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  void clear() {
    for (auto& w : limbs()) w = 0;
  }

  bool all_zero() const {
    for (auto w : limbs())
      if (w) return false;
    return true;
  }

  std::size_t weight() const {
    std::size_t c = 0;
    for (auto w : limbs()) c += std::popcount(w);
    return c;
  }

  BitWord& operator^=(const BitWord& o) {
    if (o.len_ != len_) throw InvalidArgument("BitWord xor: length mismatch");
    auto a = limbs();
    auto b = o.limbs();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] ^= b[i];
    return *this;
  }

  friend BitWord operator^(BitWord a, const BitWord& b) {
    a ^= b;
    return a;
  }

  friend bool operator==(const BitWord& a, const BitWord& b) {
    if (a.len_ != b.len_) return false;
    auto x = a.limbs();
    auto y = b.limbs();
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != y[i]) return false;
    return true;
  }

  /// Bits [0, count) as a new word.
  BitWord prefix(std::size_t count) const {
    BitWord out(count);
    auto src = limbs();
    auto dst = out.limbs();
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = src[i];
    out.mask_tail();
    return out;
  }

  std::string to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

 private:
  void init_storage() {
    if (limb_count() > kInlineLimbs) heap_.assign(limb_count(), 0);
  }
  void mask_tail() {
    if (len_ & 63) limbs().back() &= (std::uint64_t{1} << (len_ & 63)) - 1;
  }

  static constexpr std::size_t kInlineLimbs = 4;
  std::size_t len_ = 0;
  std::uint64_t inline_[kInlineLimbs] = {0, 0, 0, 0};
  std::vector<std::uint64_t> heap_;
};

inline std::size_t hamming_distance(const BitWord& a, const BitWord& b) {
  if (a.size() != b.size()) throw InvalidArgument("hamming_distance: length mismatch");
  auto x = a.limbs();
  auto y = b.limbs();
  std::size_t c = 0;
  for (std::size_t i = 0; i < x.size(); ++i) c += std::popcount(x[i] ^ y[i]);
  return c;
}

}  // namespace flipdec
