#include "flipdec/flip_patterns.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "flipdec/error.hpp"

namespace flipdec {

namespace {

constexpr std::size_t kMaxPatterns = std::size_t{1} << 26;

BitWord pattern_from_support(const std::vector<std::uint32_t>& sup, std::size_t n) {
  BitWord w(n);
  for (auto j : sup) w.set(j, true);
  return w;
}

}  // namespace

FlipPatternSet build_phi(std::size_t d_min, std::size_t n) {
  if (d_min < 2) throw InvalidArgument("build_phi: d_min must be >= 2");
  if (d_min > n + 1) throw InvalidArgument("build_phi: d_min exceeds n + 1");
  const std::size_t d = d_min - 1;
  if (d >= 26) throw LimitRefusal("build_phi: window of " + std::to_string(d) +
                                  " bits yields too many patterns");
  FlipPatternSet set;
  set.d = d;
  set.n = n;
  const std::size_t count = (std::size_t{1} << d) - 1;
  set.patterns.reserve(count);
  set.supports.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) {
    std::vector<std::uint32_t> sup;
    for (std::size_t j = 0; j < d; ++j)
      if ((i >> j) & 1u) sup.push_back(static_cast<std::uint32_t>(j));
    set.patterns.push_back(pattern_from_support(sup, n));
    set.supports.push_back(std::move(sup));
  }
  return set;
}

FlipPatternSet build_phi_e(std::size_t d_min, std::size_t epsilon, std::size_t n) {
  if (d_min < 2) throw InvalidArgument("build_phi_e: d_min must be >= 2");
  const std::size_t d = d_min - 1;
  const std::size_t window = d + epsilon;
  if (window > n) throw InvalidArgument("build_phi_e: window d+epsilon exceeds n");

  std::size_t count = 0;
  {
    // sum_{w=1..d} C(window, w), refusing absurd sizes
    double c = 1.0;
    for (std::size_t w = 1; w <= d; ++w) {
      c = c * static_cast<double>(window - w + 1) / static_cast<double>(w);
      count += static_cast<std::size_t>(c);
      if (count > kMaxPatterns)
        throw LimitRefusal("build_phi_e: pattern set too large");
    }
  }

  FlipPatternSet set;
  set.d = d;
  set.epsilon = epsilon;
  set.n = n;
  set.patterns.reserve(count);
  set.supports.reserve(count);
  for (std::size_t w = 1; w <= d; ++w) {
    // lexicographically ascending supports of weight w over [0, window)
    std::vector<std::uint32_t> sup(w);
    std::iota(sup.begin(), sup.end(), 0u);
    while (true) {
      set.patterns.push_back(pattern_from_support(sup, n));
      set.supports.push_back(sup);
      // next combination
      std::size_t i = w;
      while (i > 0 && sup[i - 1] == window - w + (i - 1)) --i;
      if (i == 0) break;
      ++sup[i - 1];
      for (std::size_t j = i; j < w; ++j) sup[j] = sup[j - 1] + 1;
    }
  }
  return set;
}

std::pair<std::vector<double>, std::vector<std::size_t>> sort_csi(
    const std::vector<double>& h) {
  std::vector<std::size_t> perm(h.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return h[a] < h[b]; });
  std::vector<double> sorted(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) sorted[i] = h[perm[i]];
  return {std::move(sorted), std::move(perm)};
}

}  // namespace flipdec
