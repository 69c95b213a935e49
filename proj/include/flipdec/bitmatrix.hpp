#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "flipdec/bitword.hpp"

namespace flipdec {

/// Dense GF(2) matrix, rows packed into 64-bit limbs.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), limbs_per_row_((cols + 63) / 64),
        data_(rows * limbs_per_row_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (row(r)[c >> 6] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    std::uint64_t& w = row(r)[c >> 6];
    const std::uint64_t m = std::uint64_t{1} << (c & 63);
    w = v ? (w | m) : (w & ~m);
  }

  std::span<std::uint64_t> row(std::size_t r) {
    return {data_.data() + r * limbs_per_row_, limbs_per_row_};
  }
  std::span<const std::uint64_t> row(std::size_t r) const {
    return {data_.data() + r * limbs_per_row_, limbs_per_row_};
  }

  BitWord row_word(std::size_t r) const {
    BitWord w(cols_);
    auto dst = w.limbs();
    auto src = row(r);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] = src[i];
    return w;
  }

  void xor_row_into(std::size_t r, BitWord& acc) const {
    auto dst = acc.limbs();
    auto src = row(r);
    for (std::size_t i = 0; i < src.size(); ++i) dst[i] ^= src[i];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    auto ra = row(a);
    auto rb = row(b);
    for (std::size_t i = 0; i < ra.size(); ++i) std::swap(ra[i], rb[i]);
  }

  void xor_rows(std::size_t dst, std::size_t src) {
    auto d = row(dst);
    auto s = row(src);
    for (std::size_t i = 0; i < d.size(); ++i) d[i] ^= s[i];
  }

  void swap_cols(std::size_t a, std::size_t b);

  friend bool operator==(const BitMatrix& x, const BitMatrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t limbs_per_row_ = 0;
  std::vector<std::uint64_t> data_;
};

/// v * H^T over GF(2); result has H.rows() bits. All-zero exactly when v is
/// orthogonal to every row of H.
BitWord syndrome(const BitMatrix& H, const BitWord& v);

/// Same, writing into a preallocated output word (hot-path form).
void syndrome_into(const BitMatrix& H, const BitWord& v, BitWord& out);

struct SystematicForm {
  BitMatrix matrix;                    // [I_k | P]
  std::vector<std::size_t> col_perm;   // col_perm[j] = original column now at j
};

/// Row-reduces G to [I_k | P], permuting columns only when a pivot is not
/// available in place (leftmost independent column wins). Throws if G is
/// rank deficient, naming the failing pivot row.
SystematicForm to_systematic(const BitMatrix& G);

/// H = [P^T | I_{n-k}] companion of G_sys = [I_k | P]. Throws if G_sys is not
/// in systematic form. For n == k the result has zero rows.
BitMatrix parity_from_systematic(const BitMatrix& G_sys);

}  // namespace flipdec
