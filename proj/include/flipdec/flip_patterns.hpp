#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "flipdec/bitword.hpp"

namespace flipdec {

/// Ordered set of candidate flip vectors for a least-reliable-bit window.
/// Every pattern's support lies within the first `d + epsilon` positions of
/// the CSI-sorted word; `patterns` zero-pads them to length n.
struct FlipPatternSet {
  std::size_t d = 0;        // window core = d_min - 1
  std::size_t epsilon = 0;  // extension length (0 for the plain set)
  std::size_t n = 0;
  std::vector<BitWord> patterns;
  std::vector<std::vector<std::uint32_t>> supports;  // same order as patterns
};

/// Plain flip set: pattern i (1 <= i <= 2^d - 1) is the binary expansion of i
/// over the first d positions, least significant bit first.
FlipPatternSet build_phi(std::size_t d_min, std::size_t n);

/// Extended flip set over a window of d + epsilon positions: all patterns of
/// Hamming weight 1..d, ordered by ascending weight and, within a weight, by
/// ascending lexicographic support.
FlipPatternSet build_phi_e(std::size_t d_min, std::size_t epsilon, std::size_t n);

/// Ascending stable sort of the CSI magnitudes. Returns the sorted values and
/// the permutation: perm[i] is the original index of the i-th smallest value
/// (ties keep the lower original index first).
std::pair<std::vector<double>, std::vector<std::size_t>> sort_csi(
    const std::vector<double>& h);

}  // namespace flipdec
