#include "flipdec/bitmatrix.hpp"

#include <bit>
#include <numeric>
#include <string>

#include "flipdec/error.hpp"

namespace flipdec {

void BitMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) {
    const bool va = get(r, a);
    const bool vb = get(r, b);
    set(r, a, vb);
    set(r, b, va);
  }
}

BitWord syndrome(const BitMatrix& H, const BitWord& v) {
  BitWord out(H.rows());
  syndrome_into(H, v, out);
  return out;
}

void syndrome_into(const BitMatrix& H, const BitWord& v, BitWord& out) {
  if (v.size() != H.cols())
    throw InvalidArgument("syndrome: vector length " + std::to_string(v.size()) +
                          " does not match H cols " + std::to_string(H.cols()));
  out.clear();
  const auto vl = v.limbs();
  for (std::size_t r = 0; r < H.rows(); ++r) {
    const auto hr = H.row(r);
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < hr.size(); ++i) acc ^= hr[i] & vl[i];
    if (std::popcount(acc) & 1u) out.set(r, true);
  }
}

SystematicForm to_systematic(const BitMatrix& G) {
  const std::size_t k = G.rows();
  const std::size_t n = G.cols();
  SystematicForm out;
  out.matrix = G;
  out.col_perm.resize(n);
  std::iota(out.col_perm.begin(), out.col_perm.end(), std::size_t{0});
  BitMatrix& M = out.matrix;

  for (std::size_t r = 0; r < k; ++r) {
    // leftmost column (at index >= r) with a 1 in some row >= r
    std::size_t pc = n, pr = 0;
    for (std::size_t c = r; c < n && pc == n; ++c) {
      for (std::size_t rr = r; rr < k; ++rr) {
        if (M.get(rr, c)) {
          pc = c;
          pr = rr;
          break;
        }
      }
    }
    if (pc == n)
      throw InvalidArgument("to_systematic: rank deficient, no pivot for row " +
                            std::to_string(r));
    M.swap_rows(r, pr);
    if (pc != r) {
      M.swap_cols(r, pc);
      std::swap(out.col_perm[r], out.col_perm[pc]);
    }
    for (std::size_t rr = 0; rr < k; ++rr)
      if (rr != r && M.get(rr, r)) M.xor_rows(rr, r);
  }
  return out;
}

BitMatrix parity_from_systematic(const BitMatrix& G_sys) {
  const std::size_t k = G_sys.rows();
  const std::size_t n = G_sys.cols();
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      if (G_sys.get(r, c) != (r == c))
        throw InvalidArgument("parity_from_systematic: input is not [I | P]");

  BitMatrix H(n - k, n);
  for (std::size_t r = 0; r < n - k; ++r) {
    for (std::size_t c = 0; c < k; ++c) H.set(r, c, G_sys.get(c, k + r));
    H.set(r, k + r, true);
  }
  return H;
}

}  // namespace flipdec
